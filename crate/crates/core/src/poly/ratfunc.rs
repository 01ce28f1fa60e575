use std::fmt;

use num_rational::BigRational;

use super::field::{rat, Field};
use super::upoly::{QPoly, UPoly};

/// A rational function `num/den` in one variable over `Q`, kept reduced with
/// a monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: UPoly::one(&rat(0)) };
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        let l = den.lead().expect("nonzero").clone();
        if !l.is_one() {
            let inv = l.inverse();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn poly(p: QPoly) -> RatFunc {
        RatFunc { num: p, den: UPoly::one(&rat(0)) }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&QPoly> {
        self.den.is_constant().then_some(&self.num)
    }
}

impl Field for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::poly(UPoly::zero(&rat(0)))
    }
    fn one_like(&self) -> Self {
        RatFunc::poly(UPoly::one(&rat(0)))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        RatFunc::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negate())
    }
    fn times(&self, o: &Self) -> Self {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn negate(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }
    fn from_rational(&self, q: &BigRational) -> Self {
        RatFunc::poly(UPoly::constant(q.clone()))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num.display_in("x"))
        } else {
            write!(f, "({})/({})", self.num.display_in("x"), self.den.display_in("x"))
        }
    }
}
