//! Common zeros in `P^2` of finitely many forms over `Q` with finitely many
//! common zeros.
//!
//! After a unimodular change of coordinates that puts every form in general
//! position with respect to `y` and keeps the common zeros off `z = 0`, the
//! `x`-coordinates of the zeros are roots of the gcd of the pairwise
//! resultants in `y`. Each irreducible factor `m` of that gcd defines a
//! number field `Q[t]/(m)` in which the `y`-coordinate is the unique root of
//! the gcd of the specialized forms. When a factor carries two zeros with
//! the same `x`, another change is tried.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use super::factor::irreducible_factors;
use super::field::{rat, Field};
use super::form::{Poly3, QForm};
use super::numfield::{NfElem, NumberField};
use super::upoly::{interpolate, QPoly, UPoly};

/// Points with larger residue fields are refused.
pub const MAX_FIELD_DEGREE: usize = 12;
pub const ATTEMPTS: u64 = 40;

pub type IMat3 = [[i64; 3]; 3];

pub const IDENTITY: IMat3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("the forms have infinitely many common zeros")]
    NotFinite,
    #[error("a common zero needs a residue field of degree {0} > 12")]
    FieldTooLarge(usize),
    #[error("no coordinate change separated the common zeros")]
    NoGoodProjection,
}

/// A point of `P^2` with coordinates in a number field, scaled so that its
/// last nonzero coordinate is 1. A field of degree `d > 1` stands for the
/// `d` conjugate points.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjPoint {
    pub coords: [NfElem; 3],
}

impl ProjPoint {
    pub fn new(coords: [NfElem; 3]) -> ProjPoint {
        let k = (0..3).rev().find(|&i| !coords[i].is_zero()).expect("not all coordinates zero");
        let inv = coords[k].inverse();
        let mut c = coords.map(|v| v.times(&inv));
        // points with rational coordinates live in the shared copy of Q
        if c.iter().all(|v| v.to_rational().is_some()) {
            let q = NumberField::rationals();
            c = c.map(|v| q.from_rational(&v.to_rational().unwrap()));
        }
        ProjPoint { coords: c }
    }

    pub fn rational(p: [BigRational; 3]) -> ProjPoint {
        let q = NumberField::rationals();
        ProjPoint::new(p.map(|v| q.from_rational(&v)))
    }

    pub fn field(&self) -> &Arc<NumberField> {
        self.coords[0].field()
    }

    pub fn degree(&self) -> usize {
        self.field().degree()
    }

    pub fn to_rational(&self) -> Option<[BigRational; 3]> {
        let v: Vec<BigRational> = self.coords.iter().filter_map(NfElem::to_rational).collect();
        (v.len() == 3).then(|| [v[0].clone(), v[1].clone(), v[2].clone()])
    }

    /// The index of the coordinate normalized to 1.
    pub fn chart(&self) -> usize {
        (0..3).rev().find(|&i| !self.coords[i].is_zero()).unwrap()
    }

    pub fn map(&self, m: &IMat3) -> ProjPoint {
        let z = self.coords[0].zero_like();
        let c: [NfElem; 3] = std::array::from_fn(|i| {
            (0..3).fold(z.clone(), |acc, j| acc.plus(&self.coords[j].times(&z.from_int(m[i][j]))))
        });
        ProjPoint::new(c)
    }

    pub fn quadratic_conjugate(&self) -> ProjPoint {
        ProjPoint::new(self.coords.clone().map(|c| c.quadratic_conjugate()))
    }

    /// The defining polynomial of the residue field, as text in `t`; `None`
    /// for rational points.
    pub fn field_label(&self) -> Option<String> {
        (self.degree() > 1).then(|| self.field().modulus().display_in("t"))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.coords[0], self.coords[1], self.coords[2])?;
        if let Some(m) = self.field_label() {
            write!(f, " with {m} = 0")?;
        }
        Ok(())
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ProjPoint", 3)?;
        st.serialize_field("coordinates", &self.coords.iter().map(ToString::to_string).collect::<Vec<_>>())?;
        st.serialize_field("field_degree", &self.degree())?;
        st.serialize_field("field", &self.field_label())?;
        st.end()
    }
}

/// The common zeros together with the coordinate change that separated them.
#[derive(Clone, Debug)]
pub struct ZeroSet {
    pub points: Vec<ProjPoint>,
    pub change: IMat3,
}

impl ZeroSet {
    /// Number of geometric points.
    pub fn count(&self) -> usize {
        self.points.iter().map(ProjPoint::degree).sum()
    }
}

pub fn to_rational_matrix(m: &IMat3) -> [[BigRational; 3]; 3] {
    m.map(|r| r.map(rat))
}

pub fn det3(m: &IMat3) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// A random matrix in `SL_3(Z)` (up to a sign-permutation), built from
/// elementary moves with small multipliers.
pub fn random_unimodular(rng: &mut impl Rng) -> IMat3 {
    let mut m = IDENTITY;
    for _ in 0..6 {
        let i = rng.gen_range(0..3);
        let mut j = rng.gen_range(0..3);
        while j == i {
            j = rng.gen_range(0..3);
        }
        let k: i64 = rng.gen_range(-2..=2);
        for c in 0..3 {
            m[i][c] += k * m[j][c];
        }
    }
    let perm = rng.gen_range(0..6);
    let order = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]][perm];
    let mut out = [[0; 3]; 3];
    for (r, &src) in order.iter().enumerate() {
        out[r] = m[src];
    }
    out
}

/// The change used on attempt `k`: the identity first, then seeded random
/// unimodular matrices.
pub fn attempt_change(k: u64) -> IMat3 {
    if k == 0 {
        return IDENTITY;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + k);
    random_unimodular(&mut rng)
}

pub fn common_zeros(forms: &[QForm]) -> Result<ZeroSet, SolveError> {
    let forms: Vec<&QForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    if forms.len() < 2 {
        return Err(SolveError::NotFinite);
    }
    for attempt in 0..ATTEMPTS {
        let g = attempt_change(attempt);
        match try_change(&forms, &g)? {
            Some(points) => {
                let mut points: Vec<ProjPoint> = points.iter().map(|p| p.map(&g)).collect();
                points.sort_by_key(|p| (p.degree(), p.to_string()));
                return Ok(ZeroSet { points, change: g });
            }
            None => continue,
        }
    }
    Err(SolveError::NoGoodProjection)
}

/// `Ok(None)` means the change was not generic enough.
fn try_change(forms: &[&QForm], g: &IMat3) -> Result<Option<Vec<ProjPoint>>, SolveError> {
    let m = to_rational_matrix(g);
    let moved: Vec<QForm> = forms.iter().map(|f| f.compose_linear(&m)).collect();
    let degs: Vec<u32> = moved.iter().map(|f| f.degree().unwrap()).collect();
    if moved.iter().zip(&degs).any(|(f, &d)| f.coeff(&[0, d, 0]).is_zero()) {
        return Ok(None);
    }
    let affine: Vec<QForm> = moved.iter().map(|f| f.set_var(2, &rat(1))).collect();

    let mut r: Option<QPoly> = None;
    for a in 0..affine.len() {
        for b in a + 1..affine.len() {
            let res = resultant_y(&affine[a], &affine[b], degs[a] * degs[b]);
            if !res.is_zero() {
                r = gcd_opt(r, res);
            }
        }
    }
    if r.is_none() && degs.iter().all(|&d| d == degs[0]) && affine.len() > 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc0b1);
        for _ in 0..4 {
            let c1 = combination(&affine, &mut rng);
            let c2 = combination(&affine, &mut rng);
            let res = resultant_y(&c1, &c2, degs[0] * degs[0]);
            if !res.is_zero() {
                r = Some(res);
                break;
            }
        }
    }
    let Some(r) = r else { return Err(SolveError::NotFinite) };
    // common zeros on z = 0, read in the chart x = 1
    let at_infinity =
        moved.iter().map(|f| f.set_var(2, &rat(0)).set_var(0, &rat(1)).to_univariate(1)).fold(None, gcd_opt);
    if at_infinity.is_some_and(|h: QPoly| !h.is_constant()) {
        return Ok(None);
    }
    if r.is_constant() {
        return Ok(Some(vec![]));
    }

    let mut points = Vec::new();
    for mfac in irreducible_factors(&r) {
        let d = mfac.deg0();
        if d > MAX_FIELD_DEGREE {
            return Err(SolveError::FieldTooLarge(d));
        }
        let k = NumberField::new(&mfac);
        let t = k.generator();
        let mut h: Option<UPoly<NfElem>> = None;
        for f in &affine {
            let u = specialize_x(f, &t);
            h = Some(match h {
                None => u.monic(),
                Some(h) => h.gcd(&u),
            });
        }
        // tangential intersections leave repeated factors
        let h = h.unwrap().squarefree_part();
        match h.degree() {
            None => unreachable!("forms are nonzero in y"),
            Some(0) => {}
            Some(1) => {
                let y = h.coeff(0).negate();
                points.push(ProjPoint::new([t.clone(), y, k.from_rational(&rat(1))]));
            }
            Some(_) => return Ok(None),
        }
    }
    Ok(Some(points))
}

fn gcd_opt(acc: Option<QPoly>, p: QPoly) -> Option<QPoly> {
    Some(match acc {
        None => p.monic(),
        Some(a) => a.gcd(&p),
    })
}

fn combination(fs: &[QForm], rng: &mut ChaCha8Rng) -> QForm {
    fs.iter().fold(Poly3::zero(&rat(0)), |acc, f| acc.add(&f.scale(&rat(rng.gen_range(1..=9)))))
}

/// `f(t, y)` as a polynomial in `y` over the number field of `t`.
fn specialize_x(f: &QForm, t: &NfElem) -> UPoly<NfElem> {
    let coeffs: Vec<NfElem> = f
        .coefficients_in(1)
        .iter()
        .map(|c| {
            let cx = c.to_univariate(0);
            NfElem::from_poly(t.field(), &cx)
        })
        .collect();
    UPoly::new(coeffs, &t.zero_like())
}

/// `Res_y(f, g)` as a polynomial in `x`, by evaluation and interpolation.
/// Both inputs must have a constant leading coefficient in `y`.
fn resultant_y(f: &QForm, g: &QForm, degree_bound: u32) -> QPoly {
    let n = degree_bound as i64 + 1;
    let xs: Vec<BigRational> = (0..n).map(|i| rat(if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 })).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|x| {
            let fa = f.set_var(0, x).to_univariate(1);
            let ga = g.set_var(0, x).to_univariate(1);
            fa.resultant(&ga)
        })
        .collect();
    interpolate(&xs, &ys, &rat(0))
}
