use std::fmt;
use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use num_traits::Zero;

use super::field::{rat, Field};
use super::upoly::{QPoly, UPoly};

/// `Q[t]/(m)` for a monic irreducible `m`.
#[derive(Debug, PartialEq)]
pub struct NumberField {
    modulus: QPoly,
}

impl NumberField {
    /// The caller guarantees irreducibility; it is not re-checked.
    pub fn new(modulus: &QPoly) -> Arc<NumberField> {
        assert!(modulus.degree().is_some_and(|d| d >= 1), "modulus must be nonconstant");
        Arc::new(NumberField { modulus: modulus.monic() })
    }

    /// `Q` presented as `Q[t]/(t)`.
    pub fn rationals() -> Arc<NumberField> {
        static Q: OnceLock<Arc<NumberField>> = OnceLock::new();
        Arc::clone(Q.get_or_init(|| NumberField::new(&UPoly::var(&rat(0)))))
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg0()
    }

    pub fn generator(self: &Arc<Self>) -> NfElem {
        NfElem::from_poly(self, &UPoly::var(&rat(0)))
    }

    pub fn zero(self: &Arc<Self>) -> NfElem {
        NfElem { field: Arc::clone(self), rep: UPoly::zero(&rat(0)) }
    }

    pub fn from_rational(self: &Arc<Self>, q: &BigRational) -> NfElem {
        NfElem::from_poly(self, &UPoly::constant(q.clone()))
    }
}

/// An element of a [`NumberField`], stored as its reduced representative.
#[derive(Clone, Debug)]
pub struct NfElem {
    field: Arc<NumberField>,
    rep: QPoly,
}

impl PartialEq for NfElem {
    fn eq(&self, o: &Self) -> bool {
        self.rep == o.rep && (Arc::ptr_eq(&self.field, &o.field) || self.field == o.field)
    }
}

impl NfElem {
    pub fn from_poly(field: &Arc<NumberField>, p: &QPoly) -> NfElem {
        NfElem { field: Arc::clone(field), rep: p.rem(&field.modulus) }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn rep(&self) -> &QPoly {
        &self.rep
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self.rep.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.rep.coeffs()[0].clone()),
            _ => None,
        }
    }

    /// Image under the nontrivial automorphism `t -> -m1 - t` of a quadratic
    /// field `t^2 + m1 t + m0`.
    pub fn quadratic_conjugate(&self) -> NfElem {
        assert_eq!(self.field.degree(), 2, "conjugation needs a quadratic field");
        let m1 = self.field.modulus.coeff(1);
        let image = UPoly::new(vec![-m1, rat(-1)], &rat(0));
        NfElem::from_poly(&self.field, &self.rep.compose(&image))
    }
}

impl Field for NfElem {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.from_rational(&rat(1))
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        NfElem { field: Arc::clone(&self.field), rep: self.rep.add(&o.rep) }
    }
    fn minus(&self, o: &Self) -> Self {
        NfElem { field: Arc::clone(&self.field), rep: self.rep.sub(&o.rep) }
    }
    fn times(&self, o: &Self) -> Self {
        NfElem::from_poly(&self.field, &self.rep.mul(&o.rep))
    }
    fn negate(&self) -> Self {
        NfElem { field: Arc::clone(&self.field), rep: self.rep.neg() }
    }
    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let (g, s, _) = self.rep.xgcd(&self.field.modulus);
        assert!(g.degree() == Some(0), "modulus is not irreducible");
        NfElem::from_poly(&self.field, &s)
    }
    fn from_rational(&self, q: &BigRational) -> Self {
        self.field.from_rational(q)
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_rational() {
            Some(q) => write!(f, "{q}"),
            None => f.write_str(&self.rep.display_in("t")),
        }
    }
}
