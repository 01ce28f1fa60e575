//! Root enumeration for definite lattices by short-vector search.
//!
//! The positive form `Q` (the Gram matrix, negated if negative definite) is
//! completed to squares, `Q(x) = Σ q_ii (x_i + Σ_{j>i} q_ij x_j)^2`, entirely
//! over the rationals. Coordinates are fixed from the last to the first and
//! each admissible range is walked outward from its centre, so every bound
//! test is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::matrix::RatMatrix;
use super::{signature, Lattice, LatticeError};

pub const MAX_ROOT_RANK: usize = 24;
/// Lattices with `|det| > 2^MAX_ROOT_DET_BITS` are refused.
pub const MAX_ROOT_DET_BITS: u64 = 30;

/// All vectors of norm -2 (or +2 for a positive definite lattice), sorted
/// lexicographically.
pub fn roots(a: &Lattice) -> Result<Vec<Vec<BigInt>>, LatticeError> {
    let n = a.rank();
    if n > MAX_ROOT_RANK {
        return Err(LatticeError::TooLarge(format!("rank {n} exceeds {MAX_ROOT_RANK}")));
    }
    let det = a.det();
    if det.is_zero() {
        return Err(LatticeError::Degenerate);
    }
    if det.abs() > BigInt::from(1u64 << MAX_ROOT_DET_BITS) {
        return Err(LatticeError::TooLarge(format!("|det| = {} exceeds 2^{MAX_ROOT_DET_BITS}", det.abs())));
    }
    let sig = signature(a);
    if !sig.is_definite() {
        return Err(LatticeError::NotDefinite(sig));
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let gram = if sig.negative > 0 { a.gram().scale(&BigInt::from(-1)) } else { a.gram().clone() };
    let q = completed_squares(&gram.to_rational());
    let two = BigRational::from_integer(BigInt::from(2));

    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    search(&q, n - 1, &two, &mut x, &mut out);
    out.sort();
    Ok(out.into_iter().map(|v| v.into_iter().map(BigInt::from).collect()).collect())
}

fn completed_squares(a: &RatMatrix) -> RatMatrix {
    let n = a.rows();
    let mut q = a.clone();
    for i in 0..n {
        for j in i + 1..n {
            q[(j, i)] = q[(i, j)].clone();
            q[(i, j)] = &q[(i, j)] / &q[(i, i)];
        }
        for k in i + 1..n {
            for l in k..n {
                let v = &q[(k, i)] * &q[(i, l)];
                q[(k, l)] -= v;
            }
        }
    }
    q
}

fn search(q: &RatMatrix, level: usize, remaining: &BigRational, x: &mut [i64], out: &mut Vec<Vec<i64>>) {
    let n = x.len();
    let centre: BigRational = (level + 1..n)
        .map(|j| &q[(level, j)] * BigRational::from_integer(x[j].into()))
        .sum();
    let qii = &q[(level, level)];
    let cost = |k: i64| -> BigRational {
        let t = BigRational::from_integer(k.into()) + &centre;
        qii * &t * &t
    };
    let start = (-&centre).round().to_integer().to_i64().expect("coordinate fits in i64");
    let mut visit = |k: i64, x: &mut [i64]| -> bool {
        let c = cost(k);
        if &c > remaining {
            return false;
        }
        x[level] = k;
        let rest = remaining - c;
        if level == 0 {
            if rest.is_zero() {
                out.push(x.to_vec());
            }
        } else {
            search(q, level - 1, &rest, x, out);
        }
        true
    };
    if !visit(start, x) {
        x[level] = 0;
        return;
    }
    let mut k = start + 1;
    while visit(k, x) {
        k += 1;
    }
    let mut k = start - 1;
    while visit(k, x) {
        k -= 1;
    }
    x[level] = 0;
}
