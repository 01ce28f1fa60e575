//! Picard lattices of the K3 covers attached to stable quartics of singular
//! type `(n, c)` (`n` nodes, `c` cusps).
//!
//! The table of named lattices is stored as text and every row is checked
//! against its Gram matrix whenever it is used.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::lattice::matrix::ivec;
use crate::lattice::{
    invariants, invariants_equal, orthogonal_complement, signature, InvariantComparison, Lattice, LatticeError,
    LatticeInvariants, Signature,
};
use crate::named::{catalog, make, Atom, LatticeExpr};

/// Rank of the K3 lattice.
pub const K3_RANK: usize = 22;
/// Largest possible Picard number of a complex K3 surface.
pub const MAX_PICARD_RANK: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SingularType {
    pub n: u32,
    pub c: u32,
}

impl SingularType {
    pub const fn new(n: u32, c: u32) -> Self {
        SingularType { n, c }
    }

    /// Arithmetic genus bound `3 - n - c` of the normalization of an
    /// irreducible quartic of this type.
    pub fn genus(&self) -> i64 {
        3 - self.n as i64 - self.c as i64
    }
}

impl fmt::Display for SingularType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.c)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrataError {
    #[error("type {0} not realized by a K3: Picard rank {1} exceeds 20")]
    NotRealized(SingularType, usize),
    #[error("type {0} has c > 4, so the discriminant length would be negative")]
    TooManyCusps(SingularType),
    #[error("type {0} is not tabulated")]
    NotTabulated(SingularType),
    #[error("row {row}: {what}")]
    VerificationFailed { row: SingularType, what: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// `8 + 2n + 4c`.
pub fn picard_rank(t: SingularType) -> Result<usize, StrataError> {
    let r = 8 + 2 * t.n as usize + 4 * t.c as usize;
    if r > MAX_PICARD_RANK {
        return Err(StrataError::NotRealized(t, r));
    }
    Ok(r)
}

/// `8 - 2c`, the unique solution of `ρ + ℓ = 22 - 2(3-n-c)` and
/// `ρ - ℓ = 2(n + 3c)` with `ρ = 8 + 2n + 4c`.
pub fn ell_formula(t: SingularType) -> Result<usize, StrataError> {
    if t.c > 4 {
        return Err(StrataError::TooManyCusps(t));
    }
    Ok(8 - 2 * t.c as usize)
}

/// Rank, discriminant length and parity of the Picard lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NikulinInvariants {
    pub rank: usize,
    pub ell: usize,
    pub delta: u8,
}

/// Invariants `(r, a, δ)` of the Picard lattice, read off from the fixed
/// locus of the covering involution: a curve of genus `g` plus `k` smooth
/// rational curves gives `r = 11 + k - g` and `a = 11 - k - g`.
///
/// For an irreducible quartic (`n + c <= 3`) the fixed curve has genus
/// `3 - n - c` and `k = n + 3c`, which reproduces `(8+2n+4c, 8-2c)`.
/// Four general lines (type `(6,0)`) give `g = 0`, `k = 9`. Other reducible
/// types are not tabulated.
pub fn nikulin_invariants(t: SingularType) -> Result<NikulinInvariants, StrataError> {
    let (g, k) = fixed_locus(t)?;
    let rank = 11 + k - g;
    let ell = 11 - k - g;
    if rank > MAX_PICARD_RANK {
        return Err(StrataError::NotRealized(t, rank));
    }
    Ok(NikulinInvariants { rank, ell, delta: 1 })
}

/// Genus of the non-rational fixed curve and the number of fixed rational
/// curves.
pub fn fixed_locus(t: SingularType) -> Result<(usize, usize), StrataError> {
    if t.c > 4 {
        return Err(StrataError::TooManyCusps(t));
    }
    if t.n + t.c <= 3 {
        picard_rank(t)?;
        return Ok(((3 - t.n - t.c) as usize, (t.n + 3 * t.c) as usize));
    }
    if t == SingularType::new(6, 0) {
        return Ok((0, 9));
    }
    Err(StrataError::NotTabulated(t))
}

/// `(n, c, Picard lattice)`; the last row is the four-line configuration.
pub const TABLE: [(u32, u32, &str); 11] = [
    (0, 0, "<2> + A1^7"),
    (1, 0, "U + A1^8"),
    (2, 0, "U + A1^6 + D4"),
    (3, 0, "U + A1^6 + D6"),
    (1, 1, "U + A1^2 + D4 + D6"),
    (1, 2, "U + A1^2 + D6 + E8"),
    (2, 1, "U + A1^2 + D4 + D8"),
    (0, 1, "U + A1^4 + D6"),
    (0, 2, "U + A1^2 + D4 + E8"),
    (0, 3, "U + A1^2 + E8^2"),
    (6, 0, "U + A1^2 + E8^2"),
];

/// `A1^{2n} + D4^c`, the part of the Picard lattice inside the
/// anti-invariant lattice.
pub fn anti_invariant_part(t: SingularType) -> LatticeExpr {
    LatticeExpr::new(vec![(Atom::A(1), 2 * t.n as usize), (Atom::D(4), t.c as usize)])
        .expect("A1 and D4 are valid atoms")
}

/// One verified row of the table.
#[derive(Clone, Debug, Serialize)]
pub struct StratumReport {
    #[serde(rename = "type")]
    pub singular_type: SingularType,
    pub picard_rank: usize,
    pub ell: usize,
    pub delta: u8,
    pub signature: Signature,
    pub picard_expr: LatticeExpr,
    pub anti_invariant_expr: LatticeExpr,
    pub transcendental_rank: usize,
}

/// Flat row used by the `strata --json` output.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TableRow {
    pub n: u32,
    pub c: u32,
    pub rank: usize,
    pub ell: usize,
    pub delta: u8,
    pub picard: String,
    pub anti_invariant: String,
}

impl StratumReport {
    pub fn row(&self) -> TableRow {
        TableRow {
            n: self.singular_type.n,
            c: self.singular_type.c,
            rank: self.picard_rank,
            ell: self.ell,
            delta: self.delta,
            picard: self.picard_expr.to_string(),
            anti_invariant: self.anti_invariant_expr.to_string(),
        }
    }
}

fn lookup(t: SingularType) -> Result<LatticeExpr, StrataError> {
    let (_, _, text) =
        TABLE.iter().find(|(n, c, _)| *n == t.n && *c == t.c).ok_or(StrataError::NotTabulated(t))?;
    LatticeExpr::parse(text).map_err(|e| StrataError::VerificationFailed { row: t, what: e.to_string() })
}

/// Recomputes the invariants of a row from its Gram matrix and compares them
/// with [`nikulin_invariants`].
pub fn verify_row(t: SingularType) -> Result<StratumReport, StrataError> {
    let expr = lookup(t)?;
    let expected = nikulin_invariants(t)?;
    let lattice = make(&expr);
    let inv = invariants(&lattice)?;
    let fail = |what: String| StrataError::VerificationFailed { row: t, what };
    if inv.rank != expected.rank {
        return Err(fail(format!("rank {} != {}", inv.rank, expected.rank)));
    }
    if inv.signature != Signature::new(1, inv.rank - 1, 0) {
        return Err(fail(format!("signature {} is not hyperbolic", inv.signature)));
    }
    if inv.ell != expected.ell {
        return Err(fail(format!("ell {} != {}", inv.ell, expected.ell)));
    }
    if inv.delta != Some(expected.delta) {
        return Err(fail(format!("delta {:?} != {}", inv.delta, expected.delta)));
    }
    let anti = anti_invariant_part(t);
    if anti.rank() + 8 != inv.rank {
        return Err(fail(format!("anti-invariant rank {} + 8 != {}", anti.rank(), inv.rank)));
    }
    Ok(StratumReport {
        singular_type: t,
        picard_rank: inv.rank,
        ell: inv.ell,
        delta: expected.delta,
        signature: inv.signature,
        picard_expr: expr,
        anti_invariant_expr: anti,
        transcendental_rank: K3_RANK - inv.rank,
    })
}

/// The tabulated Picard lattice of type `t`, after verification.
pub fn picard_lattice(t: SingularType) -> Result<LatticeExpr, StrataError> {
    verify_row(t).map(|r| r.picard_expr)
}

/// All eleven rows, each verified.
pub fn full_table() -> Result<Vec<StratumReport>, StrataError> {
    TABLE.iter().map(|&(n, c, _)| verify_row(SingularType::new(n, c))).collect()
}

/// `U^3 + E8^2`.
pub fn k3_lattice() -> Lattice {
    catalog("U^3 + E8^2")
}

/// Outcome of the check that type `(6,0)` has transcendental lattice
/// `<2>^2` and the same Picard lattice as type `(0,3)`.
#[derive(Clone, Debug, Serialize)]
pub struct VinbergCheck {
    pub picard: LatticeInvariants,
    pub picard_vs_type_0_3: InvariantComparison,
    /// Complement in the K3 lattice of an embedded `<2>^2` against the
    /// tabulated Picard lattice.
    pub complement_vs_picard: InvariantComparison,
    pub transcendental: LatticeInvariants,
    pub transcendental_vs_2_2: InvariantComparison,
}

impl VinbergCheck {
    pub fn passed(&self) -> bool {
        self.picard.rank == 20
            && self.picard.ell == 2
            && self.picard_vs_type_0_3.agree()
            && self.complement_vs_picard.agree()
            && self.transcendental_vs_2_2.agree()
    }
}

pub fn vinberg_check() -> Result<VinbergCheck, StrataError> {
    let six = make(&picard_lattice(SingularType::new(6, 0))?);
    let three = make(&picard_lattice(SingularType::new(0, 3))?);
    let picard = invariants(&six)?;
    let picard_vs_type_0_3 = invariants_equal(&six, &three)?;

    // <2>^2 spanned by e_i + f_i in the first two copies of U
    let host = k3_lattice();
    let mut t1 = ivec(&[1, 1]);
    t1.resize(22, BigInt::from(0));
    let mut t2 = ivec(&[0, 0, 1, 1]);
    t2.resize(22, BigInt::from(0));
    let pic = orthogonal_complement(&host, &[t1, t2])?;
    let complement_vs_picard = invariants_equal(&pic.lattice, &six)?;
    let tr = orthogonal_complement(&host, &pic.basis)?;
    let transcendental = invariants(&tr.lattice)?;
    debug_assert_eq!(signature(&tr.lattice), Signature::new(2, 0, 0));
    let transcendental_vs_2_2 = invariants_equal(&tr.lattice, &catalog("<2>^2"))?;
    Ok(VinbergCheck { picard, picard_vs_type_0_3, complement_vs_picard, transcendental, transcendental_vs_2_2 })
}
