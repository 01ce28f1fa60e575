//! Integer lattices presented by Gram matrices.
//!
//! A [`Lattice`] is an even symmetric Gram matrix. Invariants (signature,
//! discriminant group, roots) are computed exactly; nothing on a decision
//! path uses floating point.

pub mod matrix;
mod roots;
mod serde_json_repr;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

pub use matrix::{hermite_normal_form, integer_kernel, smith_normal_form, IntMatrix, SmithForm};
pub use roots::{roots, MAX_ROOT_DET_BITS, MAX_ROOT_RANK};
pub use serde_json_repr::LatticeJson;

/// Largest discriminant group enumerated when computing the parity invariant.
pub const MAX_DISCRIMINANT_ORDER: u64 = 1 << 16;

/// Largest power tried when certifying the order of an isometry.
pub const MAX_ISOMETRY_ORDER: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("Gram matrix is not square and symmetric")]
    NotSymmetric,
    #[error("Gram matrix has odd diagonal entry at index {0}; only even lattices are supported")]
    NotEven(usize),
    #[error("lattice is degenerate (det = 0)")]
    Degenerate,
    #[error("rescaling factor must be nonzero")]
    ZeroScale,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("lattice is not definite (signature {0})")]
    NotDefinite(Signature),
    #[error("root enumeration refused: {0}")]
    TooLarge(String),
    #[error("discriminant group of order {0} is too large to enumerate")]
    DeltaNotComputed(BigInt),
    #[error("invalid lattice JSON: {0}")]
    Json(String),
}

/// Sylvester inertia counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Signature { positive, negative, zero }
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    pub fn is_definite(&self) -> bool {
        self.zero == 0 && (self.positive == 0 || self.negative == 0)
    }

    pub fn is_indefinite(&self) -> bool {
        self.positive > 0 && self.negative > 0
    }
}

impl std::ops::Add for Signature {
    type Output = Signature;
    fn add(self, o: Signature) -> Signature {
        Signature::new(self.positive + o.positive, self.negative + o.negative, self.zero + o.zero)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero == 0 {
            write!(f, "({},{})", self.positive, self.negative)
        } else {
            write!(f, "({},{},{})", self.positive, self.negative, self.zero)
        }
    }
}

/// An even integral lattice given by its Gram matrix in a fixed basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: IntMatrix,
    label: Option<String>,
}

impl Lattice {
    pub fn new(gram: IntMatrix) -> Result<Self, LatticeError> {
        if !gram.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        if let Some(i) = (0..gram.rows()).find(|&i| gram[(i, i)].is_odd()) {
            return Err(LatticeError::NotEven(i));
        }
        Ok(Lattice { gram, label: None })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self, LatticeError> {
        Self::new(IntMatrix::from_i64_rows(rows))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn det(&self) -> BigInt {
        self.gram.det()
    }

    pub fn is_degenerate(&self) -> bool {
        self.det().is_zero()
    }

    /// `(u, v)` for coordinate vectors in this basis.
    pub fn pair(&self, u: &[BigInt], v: &[BigInt]) -> BigInt {
        self.gram.bilinear(u, v)
    }

    pub fn norm(&self, v: &[BigInt]) -> BigInt {
        self.pair(v, v)
    }

    fn require_nondegenerate(&self) -> Result<(), LatticeError> {
        if self.is_degenerate() {
            Err(LatticeError::Degenerate)
        } else {
            Ok(())
        }
    }

    fn check_vector(&self, v: &[BigInt]) -> Result<(), LatticeError> {
        if v.len() != self.rank() {
            return Err(LatticeError::DimensionMismatch { expected: self.rank(), got: v.len() });
        }
        Ok(())
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice").field("label", &self.label).field("gram", &self.gram).finish()
    }
}

/// Orthogonal direct sum; the Gram matrix is block diagonal.
pub fn direct_sum(a: &Lattice, b: &Lattice) -> Lattice {
    let label = match (&a.label, &b.label) {
        (Some(x), Some(y)) => Some(format!("{x} + {y}")),
        _ => None,
    };
    Lattice { gram: a.gram.block_diag(&b.gram), label }
}

/// `L(n)`: the Gram matrix multiplied by `n`.
pub fn rescale(a: &Lattice, n: i64) -> Result<Lattice, LatticeError> {
    if n == 0 {
        return Err(LatticeError::ZeroScale);
    }
    let label = a.label.as_ref().map(|l| format!("({l})({n})"));
    Ok(Lattice { gram: a.gram.scale(&BigInt::from(n)), label })
}

/// Exact congruence diagonalization over the rationals.
///
/// Symmetric row/column elimination; a zero pivot with a nonzero entry in
/// its row is repaired by the substitution `x_k -> x_k + x_j` first.
pub fn signature(a: &Lattice) -> Signature {
    let n = a.rank();
    let mut m = a.gram.to_rational();
    let mut sig = Signature::new(0, 0, 0);
    for k in 0..n {
        if m[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[(j, j)].is_zero()) {
                sym_swap(&mut m, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) {
                // x_k -> x_k + x_j: new (k,k) entry is 2 m[k][j] != 0
                for c in 0..n {
                    let v = m[(j, c)].clone();
                    m[(k, c)] += v;
                }
                for r in 0..n {
                    let v = m[(r, j)].clone();
                    m[(r, k)] += v;
                }
            }
        }
        let p = m[(k, k)].clone();
        if p.is_zero() {
            sig.zero += 1;
            continue;
        }
        if p.is_positive() {
            sig.positive += 1;
        } else {
            sig.negative += 1;
        }
        for i in k + 1..n {
            if m[(i, k)].is_zero() {
                continue;
            }
            let f = &m[(i, k)] / &p;
            for c in k..n {
                let v = &f * &m[(k, c)];
                m[(i, c)] -= v;
            }
            for r in k..n {
                let v = &f * &m[(r, k)];
                m[(r, i)] -= v;
            }
        }
    }
    sig
}

fn sym_swap(m: &mut matrix::RatMatrix, a: usize, b: usize) {
    let n = m.rows();
    for c in 0..n {
        let t = m[(a, c)].clone();
        m[(a, c)] = m[(b, c)].clone();
        m[(b, c)] = t;
    }
    for r in 0..n {
        let t = m[(r, a)].clone();
        m[(r, a)] = m[(r, b)].clone();
        m[(r, b)] = t;
    }
}

/// Discriminant group `L^* / L` together with its quadratic form values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscriminantData {
    /// Nontrivial invariant factors `d_1 | d_2 | ...`, each > 1.
    #[serde(serialize_with = "serde_json_repr::ser_bigints")]
    pub invariant_factors: Vec<BigInt>,
    /// Minimal number of generators.
    pub ell: usize,
    /// Generators as dual-lattice vectors in the lattice basis.
    #[serde(serialize_with = "serde_json_repr::ser_rational_rows")]
    pub generators: Vec<Vec<BigRational>>,
    /// `q(g) = (g, g)` reduced into `[0, 2)`, one per generator.
    #[serde(serialize_with = "serde_json_repr::ser_rationals")]
    pub form_values: Vec<BigRational>,
    pub two_elementary: bool,
    /// Parity invariant: 0 iff every form value on the whole group is
    /// integral. Only defined for 2-elementary groups.
    pub delta: Option<u8>,
}

impl DiscriminantData {
    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }
}

/// Reduces a rational into `[0, 2)`.
pub fn mod_two(q: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let k = (q / &two).floor();
    q - k * two
}

/// Discriminant group via the Smith form of the Gram matrix.
///
/// If `U G V = D`, the columns of `V` scaled by `1/d_i` generate `L^*/L`.
/// The parity invariant is decided by enumerating the full group (refused
/// above [`MAX_DISCRIMINANT_ORDER`] elements).
pub fn discriminant_data(a: &Lattice) -> Result<DiscriminantData, LatticeError> {
    a.require_nondegenerate()?;
    let snf = smith_normal_form(&a.gram);
    let diag = snf.diagonal();
    let mut factors = Vec::new();
    let mut generators = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        factors.push(d.clone());
        let col = snf.v.column(i);
        generators.push(
            col.into_iter().map(|x| BigRational::new(x, d.clone())).collect::<Vec<_>>(),
        );
    }
    let gram = a.gram.to_rational();
    let form = |g: &[BigRational]| -> BigRational {
        let gg = gram.mul_vec(g);
        g.iter().zip(&gg).map(|(x, y)| x * y).sum()
    };
    let form_values: Vec<BigRational> = generators.iter().map(|g| mod_two(&form(g))).collect();
    let two_elementary = factors.iter().all(|d| *d == BigInt::from(2));
    let delta = if two_elementary {
        let order: BigInt = factors.iter().product();
        if order > BigInt::from(MAX_DISCRIMINANT_ORDER) {
            return Err(LatticeError::DeltaNotComputed(order));
        }
        Some(parity_by_enumeration(a.rank(), &generators, &factors, &form))
    } else {
        None
    };
    Ok(DiscriminantData {
        ell: factors.len(),
        invariant_factors: factors,
        generators,
        form_values,
        two_elementary,
        delta,
    })
}

fn parity_by_enumeration(
    dim: usize,
    generators: &[Vec<BigRational>],
    factors: &[BigInt],
    form: &dyn Fn(&[BigRational]) -> BigRational,
) -> u8 {
    let orders: Vec<u64> = factors.iter().map(|d| d.to_u64().expect("small factor")).collect();
    let mut digits = vec![0u64; orders.len()];
    loop {
        let mut x = vec![BigRational::zero(); dim];
        for (g, &c) in generators.iter().zip(&digits) {
            if c == 0 {
                continue;
            }
            let c = BigRational::from_integer(BigInt::from(c));
            for (xi, gi) in x.iter_mut().zip(g) {
                *xi += &c * gi;
            }
        }
        if !form(&x).is_integer() {
            return 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == digits.len() {
                return 0;
            }
            digits[i] += 1;
            if digits[i] < orders[i] {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Result of [`saturate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Saturation {
    /// Basis (HNF rows) of `span_Q(sub) ∩ host`.
    pub basis: Vec<Vec<BigInt>>,
    /// Index of the lattice spanned by `sub` inside the saturation.
    pub index: BigInt,
}

/// Primitive closure of the span of `sub` inside the host lattice.
pub fn saturate(host: &Lattice, sub: &[Vec<BigInt>]) -> Result<Saturation, LatticeError> {
    for v in sub {
        host.check_vector(v)?;
    }
    if sub.is_empty() {
        return Ok(Saturation { basis: vec![], index: BigInt::one() });
    }
    let m = IntMatrix::from_rows(sub.to_vec());
    let snf = smith_normal_form(&m);
    let nonzero: Vec<BigInt> = snf.diagonal().into_iter().filter(|d| !d.is_zero()).collect();
    let rank = nonzero.len();
    // rows of D V^{-1} span the row space; rows of V^{-1} span its saturation
    let rows: Vec<Vec<BigInt>> = (0..rank).map(|i| snf.v_inv.row(i).to_vec()).collect();
    let basis = hermite_normal_form(&IntMatrix::from_rows(rows)).to_rows();
    Ok(Saturation { basis, index: nonzero.iter().product() })
}

/// Sublattice spanned by the given basis vectors, with the restricted form.
pub fn sublattice(host: &Lattice, basis: &[Vec<BigInt>]) -> Result<Lattice, LatticeError> {
    for v in basis {
        host.check_vector(v)?;
    }
    let k = basis.len();
    let mut g = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            g[(i, j)] = host.pair(&basis[i], &basis[j]);
        }
    }
    Lattice::new(g)
}

/// Orthogonal complement with its basis in host coordinates.
#[derive(Clone, Debug)]
pub struct Complement {
    pub lattice: Lattice,
    pub basis: Vec<Vec<BigInt>>,
}

/// `sub^⊥` inside `host`, computed as the integer kernel of the pairing map.
///
/// The kernel basis is primitive in the host by construction. The returned
/// lattice may be degenerate (e.g. the complement of an isotropic vector
/// contains that vector); check [`Lattice::is_degenerate`].
pub fn orthogonal_complement(host: &Lattice, sub: &[Vec<BigInt>]) -> Result<Complement, LatticeError> {
    for v in sub {
        host.check_vector(v)?;
    }
    if sub.is_empty() {
        let basis = (0..host.rank()).map(|i| IntMatrix::identity(host.rank()).row(i).to_vec()).collect();
        return Ok(Complement { lattice: host.clone(), basis });
    }
    let pairing = &IntMatrix::from_rows(sub.to_vec()) * &host.gram;
    let kernel = integer_kernel(&pairing);
    let basis = kernel.to_rows();
    let lattice = sublattice(host, &basis)?;
    Ok(Complement { lattice, basis })
}

/// Order of an isometry, if certified within [`MAX_ISOMETRY_ORDER`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IsometryOrder {
    Finite(u32),
    Unknown,
}

/// An integer matrix acting on coordinate column vectors: the `i`-th column
/// is the image of the `i`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    pub matrix: IntMatrix,
    pub order: IsometryOrder,
}

impl Isometry {
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(v)
    }
}

/// Outcome of [`is_isometry`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsometryVerdict {
    pub preserves_form: bool,
    pub order: IsometryOrder,
}

/// Checks `J^T G J = G` and certifies the order by iterating powers.
pub fn is_isometry(a: &Lattice, j: &IntMatrix) -> Result<IsometryVerdict, LatticeError> {
    if !j.is_square() || j.rows() != a.rank() {
        return Err(LatticeError::DimensionMismatch { expected: a.rank(), got: j.rows() });
    }
    let preserves_form = &(&j.transpose() * &a.gram) * j == a.gram;
    let id = IntMatrix::identity(j.rows());
    let mut power = j.clone();
    let mut order = IsometryOrder::Unknown;
    for k in 1..=MAX_ISOMETRY_ORDER {
        if power == id {
            order = IsometryOrder::Finite(k);
            break;
        }
        power = &power * j;
    }
    Ok(IsometryVerdict { preserves_form, order })
}

/// Sublattice fixed by `j`: the integer kernel of `j - I`.
pub fn fixed_sublattice(j: &IntMatrix) -> Vec<Vec<BigInt>> {
    integer_kernel(&j.sub(&IntMatrix::identity(j.rows()))).to_rows()
}

/// Everything [`invariants_equal`] compares.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeInvariants {
    pub rank: usize,
    pub signature: Signature,
    #[serde(serialize_with = "serde_json_repr::ser_bigints")]
    pub invariant_factors: Vec<BigInt>,
    pub ell: usize,
    pub delta: Option<u8>,
    #[serde(serialize_with = "serde_json_repr::ser_bigint")]
    pub det: BigInt,
}

pub fn invariants(a: &Lattice) -> Result<LatticeInvariants, LatticeError> {
    let disc = discriminant_data(a)?;
    Ok(LatticeInvariants {
        rank: a.rank(),
        signature: signature(a),
        ell: disc.ell,
        invariant_factors: disc.invariant_factors,
        delta: disc.delta,
        det: a.det(),
    })
}

/// Verdict of [`invariants_equal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantComparison {
    /// Invariants agree and both lattices are even, indefinite and
    /// 2-elementary, where rank, signature, `ell` and `delta` determine the
    /// isometry class.
    Isometric,
    /// Invariants agree but no classification theorem certifies isometry.
    InvariantsAgree,
    Different,
}

impl InvariantComparison {
    pub fn agree(self) -> bool {
        !matches!(self, InvariantComparison::Different)
    }
}

impl fmt::Display for InvariantComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvariantComparison::Isometric => "isometric",
            InvariantComparison::InvariantsAgree => "invariants agree (isometry not certified)",
            InvariantComparison::Different => "different",
        })
    }
}

pub fn invariants_equal(a: &Lattice, b: &Lattice) -> Result<InvariantComparison, LatticeError> {
    let ia = invariants(a)?;
    let ib = invariants(b)?;
    let same = ia.rank == ib.rank
        && ia.signature == ib.signature
        && ia.invariant_factors == ib.invariant_factors
        && ia.delta == ib.delta;
    if !same {
        return Ok(InvariantComparison::Different);
    }
    let two_el = ia.delta.is_some() && ib.delta.is_some();
    if two_el && ia.signature.is_indefinite() {
        Ok(InvariantComparison::Isometric)
    } else {
        Ok(InvariantComparison::InvariantsAgree)
    }
}
