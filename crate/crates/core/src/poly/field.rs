use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact field arithmetic. Elements carry whatever context they need (a
/// number field element knows its modulus), so constants are produced from
/// an existing element with the `*_like` constructors.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Panics on zero.
    fn inverse(&self) -> Self;
    fn from_rational(&self, q: &BigRational) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn divide(&self, o: &Self) -> Self {
        self.times(&o.inverse())
    }

    fn from_int(&self, k: i64) -> Self {
        self.from_rational(&BigRational::from_integer(BigInt::from(k)))
    }

    fn power(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }
}

impl Field for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_rational(&self, q: &BigRational) -> Self {
        q.clone()
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Solves `A x = b` over a field. Returns one solution, or `None` if the
/// system is inconsistent.
pub fn solve_linear<F: Field>(a: &[Vec<F>], b: &[F], zero: &F) -> Option<Vec<F>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].inverse();
        for v in m[row].iter_mut() {
            *v = v.times(&inv);
        }
        for i in 0..rows {
            if i != row && !m[i][col].is_zero() {
                let k = m[i][col].clone();
                for j in 0..=cols {
                    let t = m[row][j].times(&k);
                    m[i][j] = m[i][j].minus(&t);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![zero.zero_like(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}
