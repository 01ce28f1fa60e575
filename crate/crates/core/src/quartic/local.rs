use std::fmt;

use serde::Serialize;

use crate::poly::solve::ProjPoint;
use crate::poly::{Field, NfElem, Poly3};

use super::{QuarticError, QuarticForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SingularityKind {
    /// `A1`
    #[serde(rename = "node")]
    Node,
    /// `A2`
    #[serde(rename = "cusp")]
    Cusp,
    /// `A3`, or a double point whose weighted 4-jet is a nonzero square
    #[serde(rename = "tacnode")]
    Tacnode,
    /// double point with weighted 4-jet `y^2`
    #[serde(rename = "higher_A")]
    HigherA,
    #[serde(rename = "triple_or_worse")]
    TripleOrWorse,
    /// a point on a multiple component
    #[serde(rename = "non_isolated")]
    NonIsolated,
}

impl fmt::Display for SingularityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SingularityKind::Node => "node",
            SingularityKind::Cusp => "cusp",
            SingularityKind::Tacnode => "tacnode",
            SingularityKind::HigherA => "higher_A",
            SingularityKind::TripleOrWorse => "triple_or_worse",
            SingularityKind::NonIsolated => "non_isolated",
        })
    }
}

/// The curve near one of its points: `expansion(x, y) = f(M (x, y, 1))`,
/// where the columns of `M` are the two coordinate vectors other than the
/// chart coordinate, followed by the point itself.
#[derive(Clone, Debug)]
pub struct LocalModel {
    pub center: ProjPoint,
    pub expansion: Poly3<NfElem>,
}

impl LocalModel {
    pub fn at(f: &QuarticForm, p: &ProjPoint) -> LocalModel {
        let k = p.chart();
        let zero = p.coords[0].zero_like();
        let one = zero.one_like();
        let others = other_indices(k);
        let m: [[NfElem; 3]; 3] = std::array::from_fn(|r| {
            [
                if r == others[0] { one.clone() } else { zero.clone() },
                if r == others[1] { one.clone() } else { zero.clone() },
                p.coords[r].clone(),
            ]
        });
        let fk = f.poly().map(&zero, |c| zero.from_rational(c));
        let expansion = fk.compose_linear(&m).set_var(2, &one);
        LocalModel { center: p.clone(), expansion }
    }

    pub fn multiplicity(&self) -> u32 {
        self.expansion.min_degree().unwrap_or(0)
    }

    /// The line `a x + b y = 0` of the chart as a projective line.
    pub fn chart_line(&self, a: &NfElem, b: &NfElem) -> [NfElem; 3] {
        let p = &self.center;
        let k = p.chart();
        let [i, j] = other_indices(k);
        let mut l: [NfElem; 3] = std::array::from_fn(|_| a.zero_like());
        l[i] = a.clone();
        l[j] = b.clone();
        l[k] = a.times(&p.coords[i]).plus(&b.times(&p.coords[j])).negate();
        l
    }
}

fn other_indices(k: usize) -> [usize; 2] {
    match k {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    }
}

/// Local type of a singular point.
#[derive(Clone, Debug, Serialize)]
pub struct SingularityReport {
    pub point: ProjPoint,
    pub multiplicity: u32,
    #[serde(rename = "type")]
    pub kind: SingularityKind,
    /// For tacnodes and worse double points: whether the weighted 4-jet is
    /// not a perfect square.
    pub admissible: Option<bool>,
    /// `(a21, a40)` of the normalized jet `y^2 + a30 x^3 + a21 x^2 y + a40 x^4`,
    /// present for double points with a double tangent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_four: Option<[String; 2]>,
    /// The tangent line, for double points with a double tangent.
    #[serde(skip)]
    pub tangent: Option<[NfElem; 3]>,
}

impl fmt::Display for SingularityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.kind, self.point)?;
        match self.admissible {
            Some(true) if self.kind == SingularityKind::Tacnode => write!(f, " (admissible)"),
            Some(false) if self.kind == SingularityKind::Tacnode => write!(f, " (inadmissible)"),
            _ => Ok(()),
        }?;
        if self.multiplicity > 2 {
            write!(f, " of multiplicity {}", self.multiplicity)?;
        }
        Ok(())
    }
}

/// Classifies a singular point from its local expansion.
pub fn classify_singularity(f: &QuarticForm, p: &ProjPoint) -> Result<SingularityReport, QuarticError> {
    classify_local(&LocalModel::at(f, p))
}

pub(crate) fn classify_local(model: &LocalModel) -> Result<SingularityReport, QuarticError> {
    let g = &model.expansion;
    if !g.coeff(&[0, 0, 0]).is_zero() {
        return Err(QuarticError::NotOnCurve);
    }
    let mu = model.multiplicity();
    if mu <= 1 {
        return Err(QuarticError::NotSingular);
    }
    let mut report = SingularityReport {
        point: model.center.clone(),
        multiplicity: mu,
        kind: SingularityKind::TripleOrWorse,
        admissible: None,
        weight_four: None,
        tangent: None,
    };
    if mu >= 3 {
        return Ok(report);
    }
    let a20 = g.coeff(&[2, 0, 0]);
    let a11 = g.coeff(&[1, 1, 0]);
    let a02 = g.coeff(&[0, 2, 0]);
    let four = a20.from_int(4);
    let disc = a11.times(&a11).minus(&four.times(&a20).times(&a02));
    if !disc.is_zero() {
        report.kind = SingularityKind::Node;
        return Ok(report);
    }

    // double tangent: move it to y = 0
    let zero = a20.zero_like();
    let one = zero.one_like();
    let (h, tangent) = if !a02.is_zero() {
        let c = a11.divide(&a02.times(&zero.from_int(2)));
        // y_old = y - c x
        let m = [
            [one.clone(), zero.clone(), zero.clone()],
            [c.negate(), one.clone(), zero.clone()],
            [zero.clone(), zero.clone(), one.clone()],
        ];
        (g.compose_linear(&m), model.chart_line(&c, &one))
    } else {
        let m = [
            [zero.clone(), one.clone(), zero.clone()],
            [one.clone(), zero.clone(), zero.clone()],
            [zero.clone(), zero.clone(), one.clone()],
        ];
        (g.compose_linear(&m), model.chart_line(&one, &zero))
    };
    let lead = h.coeff(&[0, 2, 0]);
    let h = h.scale(&lead.inverse());
    report.tangent = Some(tangent);

    if !h.coeff(&[3, 0, 0]).is_zero() {
        report.kind = SingularityKind::Cusp;
        return Ok(report);
    }
    let a21 = h.coeff(&[2, 1, 0]);
    let a40 = h.coeff(&[4, 0, 0]);
    report.weight_four = Some([a21.to_string(), a40.to_string()]);
    let d = a21.times(&a21).minus(&four.times(&a40));
    if a21.is_zero() && a40.is_zero() {
        report.kind = SingularityKind::HigherA;
        report.admissible = Some(false);
    } else {
        report.kind = SingularityKind::Tacnode;
        report.admissible = Some(!d.is_zero());
    }
    Ok(report)
}
