//! What a stability verdict says about the associated K3 surface: the
//! singularities of the cover, its Picard lattice, the elliptic fibration in
//! the generic one-node and one-cusp cases, and where the point lands in the
//! compactified moduli space. This is a dictionary lookup; no surface is
//! constructed.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::octavic::{ConeSingularity, OctavicVerdict};
use crate::quartic::{count_type, MinimalOrbit, SingularityKind, StabilityClass, StabilityVerdict};
use crate::strata::{picard_rank, verify_row, SingularType, StrataError, StratumReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("a stable verdict needs its singular type")]
    MissingType,
    #[error("type {given} does not match the verdict's singular points {found}")]
    TypeMismatch { given: SingularType, found: SingularType },
    #[error("a singular type was given for a {0} verdict")]
    UnexpectedType(StabilityClass),
    #[error("unstable input has no moduli location")]
    Unstable,
    #[error("fibration data is only tabulated for types (1,0) and (0,1), not {0}")]
    Untabulated(SingularType),
    #[error(transparent)]
    Strata(#[from] StrataError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InputKind {
    Quartic,
    Octavic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuliLocation {
    InteriorSmooth,
    Stratum(SingularType),
    MirrorStratum,
    BoundaryCusp,
    PointV0BlownUp,
}

impl fmt::Display for ModuliLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuliLocation::InteriorSmooth => f.write_str("interior_smooth"),
            ModuliLocation::Stratum(t) => write!(f, "D_{{{},{}}}", t.n, t.c),
            ModuliLocation::MirrorStratum => f.write_str("D_h"),
            ModuliLocation::BoundaryCusp => f.write_str("boundary_cusp"),
            ModuliLocation::PointV0BlownUp => f.write_str("point_v0_blown_up"),
        }
    }
}

impl Serialize for ModuliLocation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DegenerationType {
    #[serde(rename = "Type I")]
    TypeI,
    #[serde(rename = "Type II")]
    TypeII,
    #[serde(rename = "significant_limit")]
    SignificantLimit,
}

impl fmt::Display for DegenerationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegenerationType::TypeI => "Type I",
            DegenerationType::TypeII => "Type II",
            DegenerationType::SignificantLimit => "significant_limit",
        })
    }
}

/// Tabulated rows come with the full verified report; other stable types
/// only carry the rank formula.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum PicardData {
    Tabulated(StratumReport),
    Formula {
        #[serde(rename = "type")]
        singular_type: SingularType,
        picard_rank: usize,
    },
}

impl PicardData {
    pub fn rank(&self) -> usize {
        match self {
            PicardData::Tabulated(r) => r.picard_rank,
            PicardData::Formula { picard_rank, .. } => *picard_rank,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FiberType {
    #[serde(rename = "III")]
    III,
    #[serde(rename = "I0*")]
    I0Star,
}

impl FiberType {
    pub fn euler_number(self) -> u32 {
        match self {
            FiberType::III => 3,
            FiberType::I0Star => 6,
        }
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiberType::III => "III",
            FiberType::I0Star => "I0*",
        })
    }
}

/// Singular fibers of the elliptic fibration in the generic case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberSummary {
    pub fibers: Vec<(FiberType, u32)>,
    pub euler_sum: u32,
    /// `24 - euler_sum`, carried by fibers not in the list.
    pub residual_euler: u32,
}

impl fmt::Display for FiberSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.fibers.iter().map(|(t, k)| format!("{k}x{t}")).collect();
        write!(f, "{} (Euler sum {})", parts.join(" + "), self.euler_sum)
    }
}

pub fn fibration_fibers(t: SingularType) -> Result<FiberSummary, CoverError> {
    let fibers = match (t.n, t.c) {
        (1, 0) => vec![(FiberType::III, 8)],
        (0, 1) => vec![(FiberType::III, 6), (FiberType::I0Star, 1)],
        _ => return Err(CoverError::Untabulated(t)),
    };
    let euler_sum: u32 = fibers.iter().map(|(f, k)| f.euler_number() * k).sum();
    assert!(euler_sum <= 24);
    Ok(FiberSummary { fibers, euler_sum, residual_euler: 24 - euler_sum })
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverReport {
    pub input_kind: InputKind,
    pub cover_singularities: Vec<String>,
    pub picard: Option<PicardData>,
    pub fibration_note: Option<FiberSummary>,
    pub moduli_location: ModuliLocation,
    pub degeneration_type: Option<DegenerationType>,
}

impl fmt::Display for CoverReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sing = if self.cover_singularities.is_empty() {
            "none".to_string()
        } else {
            self.cover_singularities.join(" + ")
        };
        write!(f, "cover singularities: {sing}; location: {}", self.moduli_location)?;
        if let Some(p) = &self.picard {
            match p {
                PicardData::Tabulated(r) => write!(f, "; Pic = {} (rank {})", r.picard_expr, r.picard_rank)?,
                PicardData::Formula { picard_rank, .. } => write!(f, "; Pic rank {picard_rank}")?,
            }
        }
        if let Some(d) = self.degeneration_type {
            write!(f, "; {d}")?;
        }
        if let Some(n) = &self.fibration_note {
            write!(f, "; fibers: {n}")?;
        }
        Ok(())
    }
}

fn repeat_label(out: &mut Vec<String>, label: &str, k: u32) {
    out.extend(std::iter::repeat_n(label.to_string(), k as usize));
}

fn picard_data(t: SingularType) -> Result<PicardData, CoverError> {
    match verify_row(t) {
        Ok(r) => Ok(PicardData::Tabulated(r)),
        Err(StrataError::NotTabulated(_)) => {
            Ok(PicardData::Formula { singular_type: t, picard_rank: picard_rank(t)? })
        }
        Err(e) => Err(e.into()),
    }
}

/// Nodes of the quartic give `A3` points on the cover, cusps give `E6`.
/// Admissible tacnodes give elliptic `E~7` points.
pub fn cover_report_quartic(v: &StabilityVerdict, t: Option<SingularType>) -> Result<CoverReport, CoverError> {
    let found = count_type(&v.witnesses);
    let mut sing = Vec::new();
    repeat_label(&mut sing, "A3", found.n);
    repeat_label(&mut sing, "E6", found.c);
    let mut report = CoverReport {
        input_kind: InputKind::Quartic,
        cover_singularities: sing,
        picard: None,
        fibration_note: None,
        moduli_location: ModuliLocation::InteriorSmooth,
        degeneration_type: None,
    };
    match v.class {
        StabilityClass::Unstable => Err(CoverError::Unstable),
        StabilityClass::Stable => {
            let t = t.ok_or(CoverError::MissingType)?;
            if t != found {
                return Err(CoverError::TypeMismatch { given: t, found });
            }
            report.picard = Some(picard_data(t)?);
            report.fibration_note = fibration_fibers(t).ok();
            if t != SingularType::new(0, 0) {
                report.moduli_location = ModuliLocation::Stratum(t);
            }
            report.degeneration_type = Some(DegenerationType::TypeI);
            Ok(report)
        }
        StabilityClass::StrictlySemistable => {
            if t.is_some() {
                return Err(CoverError::UnexpectedType(v.class));
            }
            let significant = v.orbit_limit.is_some() || v.minimal_orbit == Some(MinimalOrbit::DoubleConic);
            if significant {
                report.moduli_location = ModuliLocation::PointV0BlownUp;
                report.degeneration_type = Some(DegenerationType::SignificantLimit);
            } else {
                let tacnodes: usize = v
                    .witnesses
                    .iter()
                    .filter(|w| w.kind == SingularityKind::Tacnode)
                    .map(|w| w.point.degree())
                    .sum();
                repeat_label(&mut report.cover_singularities, "E~7", tacnodes as u32);
                report.moduli_location = ModuliLocation::BoundaryCusp;
                report.degeneration_type = Some(DegenerationType::TypeII);
            }
            Ok(report)
        }
    }
}

/// A root of multiplicity `m <= 4` gives an `A_{m-1}` point on the double
/// cover of the cone.
pub fn cover_report_octavic(v: &OctavicVerdict) -> Result<CoverReport, CoverError> {
    let mut sing = Vec::new();
    for w in &v.witnesses {
        let label = match w.kind {
            ConeSingularity::Node => "A1",
            ConeSingularity::Cusp => "A2",
            ConeSingularity::Tacnode => "A3",
            ConeSingularity::Higher => return Err(CoverError::Unstable),
        };
        repeat_label(&mut sing, label, w.root.degree);
    }
    let (location, degeneration) = match v.class {
        StabilityClass::Unstable => return Err(CoverError::Unstable),
        StabilityClass::Stable => (ModuliLocation::MirrorStratum, None),
        StabilityClass::StrictlySemistable => (ModuliLocation::BoundaryCusp, Some(DegenerationType::TypeII)),
    };
    Ok(CoverReport {
        input_kind: InputKind::Octavic,
        cover_singularities: sing,
        picard: None,
        fibration_note: None,
        moduli_location: location,
        degeneration_type: degeneration,
    })
}
