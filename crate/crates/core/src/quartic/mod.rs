//! Plane quartic curves over `Q`: singular points, their local types, and
//! GIT stability for the action of `SL_3`.

mod local;
mod stability;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use thiserror::Error;

use crate::poly::form::Exp;
use crate::poly::parse::{parse_form, ParseError};
use crate::poly::solve::{to_rational_matrix, IMat3, SolveError};
use crate::poly::{Field, QForm};
use crate::strata::SingularType;

pub use local::{classify_singularity, LocalModel, SingularityKind, SingularityReport};
pub use stability::{
    git_stability, is_double_conic, is_reduced, multiple_components, singular_points, singular_type, DoubleConic,
    MinimalOrbit, StabilityClass, StabilityVerdict, ORBIT_LIMIT_V0,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuarticError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("the quartic is not reduced (it has a repeated component)")]
    NotReduced,
    #[error("the point is not on the curve")]
    NotOnCurve,
    #[error("the point is a smooth point of the curve")]
    NotSingular,
    #[error("singular type is only defined for stable quartics (verdict: {0})")]
    NotStable(StabilityClass),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// A nonzero ternary form of degree 4 with rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticForm {
    poly: QForm,
}

impl QuarticForm {
    pub fn new(poly: QForm) -> Result<QuarticForm, QuarticError> {
        if poly.is_zero() {
            return Err(ParseError::ZeroForm.into());
        }
        match poly.homogeneous_degree() {
            None => Err(ParseError::NotHomogeneous.into()),
            Some(4) => Ok(QuarticForm { poly }),
            Some(d) => Err(ParseError::WrongDegree { expected: 4, found: d }.into()),
        }
    }

    pub fn poly(&self) -> &QForm {
        &self.poly
    }

    pub fn coefficient(&self, e: &Exp) -> BigRational {
        self.poly.coeff(e)
    }

    /// `f(g v)` for an invertible integer matrix `g`.
    pub fn transform(&self, g: &IMat3) -> QuarticForm {
        QuarticForm { poly: self.poly.compose_linear(&to_rational_matrix(g)) }
    }

    pub fn scale(&self, k: &BigRational) -> QuarticForm {
        assert!(!Field::is_zero(k), "scaling a form by zero");
        QuarticForm { poly: self.poly.scale(k) }
    }
}

pub fn parse_quartic(text: &str) -> Result<QuarticForm, ParseError> {
    Ok(QuarticForm { poly: parse_form(text, &['x', 'y', 'z'], 4)? })
}

impl FromStr for QuarticForm {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_quartic(s)
    }
}

impl fmt::Display for QuarticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Counts nodes and cusps of a list of reports, each point weighted by the
/// degree of its residue field.
pub(crate) fn count_type(reports: &[SingularityReport]) -> SingularType {
    let mut t = SingularType::new(0, 0);
    for r in reports {
        let d = r.point.degree() as u32;
        match r.kind {
            SingularityKind::Node => t.n += d,
            SingularityKind::Cusp => t.c += d,
            _ => {}
        }
    }
    t
}
