//! Binary forms of degree 8, their root multiplicities, and GIT stability
//! for `SL_2`. Roots are never located; only factor degrees and
//! multiplicities enter the decisions.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::poly::parse::{parse_form, ParseError};
use crate::poly::{factor, rat, Field, Poly3, QForm, QPoly, UPoly};
use crate::quartic::{MinimalOrbit, StabilityClass};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OctavicError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("the zero form has no roots")]
    ZeroForm,
    #[error("the substitution is not invertible")]
    Singular,
}

/// `Σ a_i x^i y^(8-i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryOctavic {
    coefficients: [BigRational; 9],
}

impl BinaryOctavic {
    pub fn new(coefficients: [BigRational; 9]) -> Result<BinaryOctavic, OctavicError> {
        if coefficients.iter().all(Field::is_zero) {
            return Err(OctavicError::ZeroForm);
        }
        Ok(BinaryOctavic { coefficients })
    }

    pub fn from_i64(a: [i64; 9]) -> Result<BinaryOctavic, OctavicError> {
        BinaryOctavic::new(a.map(rat))
    }

    fn from_form(f: &QForm) -> Result<BinaryOctavic, OctavicError> {
        BinaryOctavic::new(std::array::from_fn(|i| f.coeff(&[i as u32, 8 - i as u32, 0])))
    }

    pub fn coefficients(&self) -> &[BigRational; 9] {
        &self.coefficients
    }

    pub fn form(&self) -> QForm {
        let zero = rat(0);
        let terms = (0..9).map(|i| ([i as u32, 8 - i as u32, 0], self.coefficients[i].clone()));
        Poly3::from_terms(terms, &zero)
    }

    /// `f(a x + b y, c x + d y)`.
    pub fn substitute(&self, [a, b, c, d]: [i64; 4]) -> Result<BinaryOctavic, OctavicError> {
        if a * d - b * c == 0 {
            return Err(OctavicError::Singular);
        }
        let m = [[rat(a), rat(b), rat(0)], [rat(c), rat(d), rat(0)], [rat(0), rat(0), rat(1)]];
        BinaryOctavic::from_form(&self.form().compose_linear(&m))
    }

    pub fn swap(&self) -> BinaryOctavic {
        let mut a = self.coefficients.clone();
        a.reverse();
        BinaryOctavic { coefficients: a }
    }

    /// `f(x, 1)`.
    pub fn dehomogenize(&self) -> QPoly {
        UPoly::new(self.coefficients.to_vec(), &rat(0))
    }
}

pub fn parse_octavic(text: &str) -> Result<BinaryOctavic, OctavicError> {
    BinaryOctavic::from_form(&parse_form(text, &['x', 'y'], 8)?)
}

impl FromStr for BinaryOctavic {
    type Err = OctavicError;
    fn from_str(s: &str) -> Result<Self, OctavicError> {
        parse_octavic(s)
    }
}

impl fmt::Display for BinaryOctavic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.form().fmt(f)
    }
}

/// An irreducible factor over `Q`, homogenized; `y` stands for the root at
/// infinity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootFactor {
    pub factor: String,
    pub multiplicity: u32,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootMultiplicities {
    pub factors: Vec<RootFactor>,
}

impl RootMultiplicities {
    /// Multiplicity of every geometric root, in decreasing order.
    pub fn profile(&self) -> Vec<u32> {
        let mut p: Vec<u32> =
            self.factors.iter().flat_map(|r| std::iter::repeat_n(r.multiplicity, r.degree as usize)).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    pub fn total(&self) -> u32 {
        self.factors.iter().map(|r| r.multiplicity * r.degree).sum()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.factors.iter().map(|r| r.multiplicity).max().unwrap_or(0)
    }
}

fn homogenize(p: &QPoly) -> String {
    let d = p.deg0() as u32;
    let zero = rat(0);
    let terms = p.coeffs().iter().enumerate().map(|(k, c)| ([k as u32, d - k as u32, 0], c.clone()));
    Poly3::from_terms(terms, &zero).to_string()
}

pub fn multiplicities(f: &BinaryOctavic) -> RootMultiplicities {
    let p = f.dehomogenize();
    let at_infinity = 8 - p.deg0() as u32;
    let mut factors: Vec<RootFactor> = factor(&p)
        .factors
        .iter()
        .map(|(q, m)| RootFactor { factor: homogenize(q), multiplicity: *m as u32, degree: q.deg0() as u32 })
        .collect();
    if at_infinity > 0 {
        factors.push(RootFactor { factor: "y".into(), multiplicity: at_infinity, degree: 1 });
    }
    factors.sort_by(|a, b| b.multiplicity.cmp(&a.multiplicity).then(a.degree.cmp(&b.degree)));
    RootMultiplicities { factors }
}

/// Singularities of the branch curve `w^2 = p8` on the quadric cone over a
/// root of multiplicity `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConeSingularity {
    Node,
    Cusp,
    Tacnode,
    Higher,
}

impl ConeSingularity {
    fn of_multiplicity(m: u32) -> Option<ConeSingularity> {
        match m {
            0 | 1 => None,
            2 => Some(ConeSingularity::Node),
            3 => Some(ConeSingularity::Cusp),
            4 => Some(ConeSingularity::Tacnode),
            _ => Some(ConeSingularity::Higher),
        }
    }
}

impl fmt::Display for ConeSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConeSingularity::Node => "node",
            ConeSingularity::Cusp => "cusp",
            ConeSingularity::Tacnode => "tacnode",
            ConeSingularity::Higher => "higher",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConeReport {
    pub root: RootFactor,
    #[serde(rename = "type")]
    pub kind: ConeSingularity,
}

/// One report per multiple root factor; a factor of degree `d` stands for
/// `d` conjugate singular points.
pub fn cone_curve_singularities(f: &BinaryOctavic) -> Vec<ConeReport> {
    multiplicities(f)
        .factors
        .into_iter()
        .filter_map(|r| ConeSingularity::of_multiplicity(r.multiplicity).map(|kind| ConeReport { root: r, kind }))
        .collect()
}

/// Same fields as the quartic verdict, with roots as witnesses.
#[derive(Clone, Debug, Serialize)]
pub struct OctavicVerdict {
    pub class: StabilityClass,
    pub minimal_orbit: Option<MinimalOrbit>,
    pub orbit_limit: Option<String>,
    pub witnesses: Vec<ConeReport>,
    pub profile: Vec<u32>,
}

impl fmt::Display for OctavicVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.class)?;
        if let Some(m) = self.minimal_orbit {
            write!(f, ", minimal orbit: {m}")?;
        }
        Ok(())
    }
}

/// Stable iff every root has multiplicity at most 3, strictly semistable iff
/// the largest multiplicity is 4.
pub fn octavic_stability(f: &BinaryOctavic) -> OctavicVerdict {
    let mults = multiplicities(f);
    let profile = mults.profile();
    let class = match mults.max_multiplicity() {
        0..=3 => StabilityClass::Stable,
        4 => StabilityClass::StrictlySemistable,
        _ => StabilityClass::Unstable,
    };
    let minimal_orbit = (profile == [4, 4]).then_some(MinimalOrbit::TwoQuadruplePoints);
    OctavicVerdict { class, minimal_orbit, orbit_limit: None, witnesses: cone_curve_singularities(f), profile }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> BinaryOctavic {
        parse_octavic(s).unwrap()
    }

    #[test]
    fn parsing() {
        let f = o("x^8 + y^8");
        assert_eq!(f.coefficients()[0], rat(1));
        assert_eq!(f.coefficients()[8], rat(1));
        assert!(parse_octavic("x^8 + z^8").is_err());
        assert!(parse_octavic("x^7*y + x").is_err());
        assert_eq!(BinaryOctavic::from_i64([0; 9]), Err(OctavicError::ZeroForm));
    }

    #[test]
    fn simple_roots() {
        let m = multiplicities(&o("x^8 + y^8"));
        assert_eq!(m.profile(), vec![1; 8]);
        assert_eq!(m.factors.len(), 1);
        assert_eq!(m.factors[0].factor, "x^8 + y^8");
    }

    #[test]
    fn roots_at_zero_and_infinity() {
        let m = multiplicities(&o("x^5*y^3"));
        assert_eq!(m.profile(), vec![5, 3]);
        assert_eq!(m.factors[0].factor, "x");
        assert_eq!(m.factors[1].factor, "y");
        assert_eq!(multiplicities(&o("x^4*y^4")).profile(), vec![4, 4]);
    }

    #[test]
    fn verdicts() {
        assert_eq!(octavic_stability(&o("x^8 + y^8")).class, StabilityClass::Stable);
        let v = octavic_stability(&o("x^4*y^4"));
        assert_eq!(v.class, StabilityClass::StrictlySemistable);
        assert_eq!(v.minimal_orbit, Some(MinimalOrbit::TwoQuadruplePoints));
        assert_eq!(octavic_stability(&o("x^5*y^3")).class, StabilityClass::Unstable);
        let v = octavic_stability(&o("x^4*(x^4 + y^4)"));
        assert_eq!(v.class, StabilityClass::StrictlySemistable);
        assert_eq!(v.minimal_orbit, None);
        // conjugate quadruple roots still form the minimal orbit
        let v = octavic_stability(&o("(x^2 + y^2)^4"));
        assert_eq!(v.minimal_orbit, Some(MinimalOrbit::TwoQuadruplePoints));
    }

    #[test]
    fn cone_singularities() {
        assert!(cone_curve_singularities(&o("x^8 + y^8")).is_empty());
        let r = cone_curve_singularities(&o("(x - y)^2*(x^6 + y^6)"));
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].kind, ConeSingularity::Node);
        let r = cone_curve_singularities(&o("(x - 2*y)^4*(x + 3*y)^4"));
        assert_eq!(r.iter().map(|c| c.kind).collect::<Vec<_>>(), vec![ConeSingularity::Tacnode; 2]);
    }

    #[test]
    fn substitution() {
        let f = o("x^4*y^4");
        assert_eq!(f.substitute([1, 1, 0, 1]).unwrap().to_string(), o("(x + y)^4*y^4").to_string());
        assert_eq!(f.substitute([1, 2, 2, 4]), Err(OctavicError::Singular));
        assert_eq!(o("x^5*y^3").swap(), o("x^3*y^5"));
    }
}
