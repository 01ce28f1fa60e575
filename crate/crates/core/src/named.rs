//! Catalog of named lattices, the order-four isometry on the anti-invariant
//! lattice, and the two classes of its roots.
//!
//! Root lattices are negative definite (diagonal −2). Fixed bases:
//!
//! * `A_n`: simple roots of the chain, consecutive roots pairing to 1.
//! * `D_n`: the roots `e_1−e_2, …, e_{n−1}−e_n, e_{n−1}+e_n` of the
//!   coordinate model, negated.
//! * `E_6, E_7, E_8`: simple roots in Bourbaki order (node 2 attached to
//!   node 4, the chain 1-3-4-5-6-7-8).
//! * `U = [[0,1],[1,0]]`, `U(2) = [[0,2],[2,0]]`, `<n> = (n)`.
//!
//! The anti-invariant lattice is `<2>^2 + D4^3` in exactly this basis, the
//! two `<2>` generators first.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::lattice::matrix::{ivec, RatMatrix};
use crate::lattice::{
    direct_sum, fixed_sublattice, invariants, is_isometry, orthogonal_complement, saturate, signature,
    sublattice, IntMatrix, Isometry, IsometryOrder, Lattice, LatticeError, LatticeInvariants, Signature,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid atom {0}")]
    InvalidAtom(String),
}

/// One summand of a lattice expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    U,
    /// `U(2)`
    U2,
    A(u32),
    D(u32),
    E(u32),
    /// Rank one lattice `<n>`.
    Rank1(i64),
}

impl Atom {
    fn validate(self) -> Result<Atom, ExprError> {
        let ok = match self {
            Atom::U | Atom::U2 => true,
            Atom::A(n) => n >= 1,
            Atom::D(n) => n >= 2,
            Atom::E(n) => (6..=8).contains(&n),
            Atom::Rank1(n) => n != 0 && n % 2 == 0,
        };
        if ok {
            Ok(self)
        } else {
            Err(ExprError::InvalidAtom(self.to_string()))
        }
    }

    pub fn gram(self) -> IntMatrix {
        match self {
            Atom::U => IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]),
            Atom::U2 => IntMatrix::from_i64_rows(&[vec![0, 2], vec![2, 0]]),
            Atom::Rank1(n) => IntMatrix::from_i64_rows(&[vec![n]]),
            Atom::A(n) => {
                let edges: Vec<(usize, usize)> = (1..n as usize).map(|i| (i - 1, i)).collect();
                dynkin_gram(n as usize, &edges)
            }
            Atom::D(n) => {
                let n = n as usize;
                let mut edges: Vec<(usize, usize)> = (1..n - 1).map(|i| (i - 1, i)).collect();
                if n >= 3 {
                    edges.push((n - 3, n - 1));
                }
                dynkin_gram(n, &edges)
            }
            Atom::E(n) => {
                let all = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
                let n = n as usize;
                let edges: Vec<(usize, usize)> =
                    all.iter().copied().filter(|&(a, b)| a < n && b < n).collect();
                dynkin_gram(n, &edges)
            }
        }
    }

    pub fn lattice(self) -> Lattice {
        Lattice::new(self.gram()).expect("catalog atoms are even and symmetric").with_label(self.to_string())
    }
}

fn dynkin_gram(n: usize, edges: &[(usize, usize)]) -> IntMatrix {
    let mut g = IntMatrix::zeros(n, n);
    for i in 0..n {
        g[(i, i)] = BigInt::from(-2);
    }
    for &(a, b) in edges {
        g[(a, b)] = BigInt::one();
        g[(b, a)] = BigInt::one();
    }
    g
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::U => write!(f, "U"),
            Atom::U2 => write!(f, "U(2)"),
            Atom::A(n) => write!(f, "A{n}"),
            Atom::D(n) => write!(f, "D{n}"),
            Atom::E(n) => write!(f, "E{n}"),
            Atom::Rank1(n) => write!(f, "<{n}>"),
        }
    }
}

/// A formal orthogonal sum of catalog atoms with multiplicities, e.g.
/// `U + A1^8` or `<2>^2 + D4^3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LatticeExpr {
    terms: Vec<(Atom, usize)>,
}

impl LatticeExpr {
    pub fn new(terms: Vec<(Atom, usize)>) -> Result<Self, ExprError> {
        for (a, _) in &terms {
            a.validate()?;
        }
        Ok(LatticeExpr { terms: terms.into_iter().filter(|(_, k)| *k > 0).collect() })
    }

    pub fn empty() -> Self {
        LatticeExpr::default()
    }

    pub fn terms(&self) -> &[(Atom, usize)] {
        &self.terms
    }

    pub fn rank(&self) -> usize {
        self.terms.iter().map(|(a, k)| a.gram().rows() * k).sum()
    }

    pub fn parse(text: &str) -> Result<Self, ExprError> {
        ExprParser { s: text.as_bytes(), pos: 0 }.parse()
    }
}

impl FromStr for LatticeExpr {
    type Err = ExprError;
    fn from_str(s: &str) -> Result<Self, ExprError> {
        LatticeExpr::parse(s)
    }
}

impl fmt::Display for LatticeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (a, k)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *k == 1 {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}^{k}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for LatticeExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct ExprParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<u64, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("number out of range"))
    }

    fn parse(mut self) -> Result<LatticeExpr, ExprError> {
        let mut terms = Vec::new();
        if self.peek() == Some(b'0') {
            self.pos += 1;
            if self.peek().is_some() {
                return self.err("trailing input after 0");
            }
            return Ok(LatticeExpr::empty());
        }
        loop {
            let at = self.pos;
            let atom = self.atom()?;
            atom.validate().map_err(|_| ExprError::Syntax { pos: at, msg: format!("invalid atom {atom}") })?;
            let mult = if self.eat(b'^') { self.uint()? as usize } else { 1 };
            terms.push((atom, mult));
            match self.peek() {
                None => break,
                Some(b'+') => self.pos += 1,
                Some(c) => return self.err(format!("unexpected character {:?}", c as char)),
            }
        }
        LatticeExpr::new(terms)
    }

    fn atom(&mut self) -> Result<Atom, ExprError> {
        match self.peek() {
            Some(b'U') => {
                self.pos += 1;
                if self.eat(b'(') {
                    let n = self.uint()?;
                    if !self.eat(b')') {
                        return self.err("expected ')'");
                    }
                    return match n {
                        1 => Ok(Atom::U),
                        2 => Ok(Atom::U2),
                        _ => self.err("only U(2) twists are supported"),
                    };
                }
                Ok(Atom::U)
            }
            Some(c @ (b'A' | b'D' | b'E')) => {
                self.pos += 1;
                let n = self.uint()? as u32;
                Ok(match c {
                    b'A' => Atom::A(n),
                    b'D' => Atom::D(n),
                    _ => Atom::E(n),
                })
            }
            Some(b'<') => {
                self.pos += 1;
                let neg = self.eat(b'-');
                let n = self.uint()? as i64;
                if !self.eat(b'>') {
                    return self.err("expected '>'");
                }
                Ok(Atom::Rank1(if neg { -n } else { n }))
            }
            Some(c) => self.err(format!("unknown atom starting with {:?}", c as char)),
            None => self.err("expected an atom"),
        }
    }
}

/// Expands an expression into a Gram matrix, summands in order.
pub fn make(expr: &LatticeExpr) -> Lattice {
    let mut acc: Option<Lattice> = None;
    for &(atom, k) in expr.terms() {
        for _ in 0..k {
            let l = atom.lattice();
            acc = Some(match acc {
                None => l,
                Some(a) => direct_sum(&a, &l),
            });
        }
    }
    let l = acc.unwrap_or_else(|| Lattice::new(IntMatrix::zeros(0, 0)).unwrap());
    l.with_label(expr.to_string())
}

/// Parses and expands in one step. Panics on a malformed literal, so only
/// use it with fixed catalog strings.
pub fn catalog(text: &str) -> Lattice {
    make(&LatticeExpr::parse(text).unwrap_or_else(|e| panic!("bad catalog expression {text:?}: {e}")))
}

/// The invariant lattice `<2> + A1^7`.
pub fn l_plus() -> Lattice {
    catalog("<2> + A1^7")
}

/// The anti-invariant lattice `<2>^2 + D4^3`.
pub fn l_minus() -> Lattice {
    catalog("<2>^2 + D4^3")
}

/// The order-four isometry on the anti-invariant lattice together with its
/// host.
#[derive(Clone, Debug)]
pub struct RhoAction {
    pub host: Lattice,
    pub isometry: Isometry,
}

impl RhoAction {
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.isometry.apply(v)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.isometry.matrix
    }
}

/// `J_2 = [[0,1],[-1,0]]`.
pub fn j2() -> IntMatrix {
    IntMatrix::from_i64_rows(&[vec![0, 1], vec![-1, 0]])
}

fn rat_matrix_from_columns(cols: &[[i64; 4]]) -> RatMatrix {
    let mut m = RatMatrix::zeros(4, 4);
    for (j, c) in cols.iter().enumerate() {
        for i in 0..4 {
            m[(i, j)] = BigRational::from_integer(BigInt::from(c[i]));
        }
    }
    m
}

/// Simple roots of `D4` in the coordinate model, as columns.
const D4_SIMPLE: [[i64; 4]; 4] = [[1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1], [0, 0, 1, 1]];

/// The complex basis `f1, ρ(f1), f2, ρ(f2)` with `f1 = e1−e2`,
/// `f2 = e1−e3`, `ρ(f1) = e3−e4`, `ρ(f2) = e1+e3`.
const D4_COMPLEX_BASIS: [[i64; 4]; 4] = [[1, -1, 0, 0], [0, 0, 1, -1], [1, 0, -1, 0], [1, 0, 1, 0]];

/// The `ρ`-basis `(f1, ρf1, f2, ρf2)` of a `D4` block in simple-root
/// coordinates, one vector per row.
pub fn d4_complex_basis() -> IntMatrix {
    let a_inv = rat_matrix_from_columns(&D4_SIMPLE).inverse().expect("simple roots are a basis");
    let p = rat_matrix_from_columns(&D4_COMPLEX_BASIS);
    a_inv.mul(&p).to_integer().expect("complex basis lies in D4").transpose()
}

/// `ρ` on one `D4` block in its simple-root basis (column convention).
fn rho_on_d4() -> IntMatrix {
    // column convention: f1 -> ρf1 and ρf1 -> -f1, blockwise
    let mut jc = RatMatrix::zeros(4, 4);
    let one = BigRational::one();
    jc[(1, 0)] = one.clone();
    jc[(0, 1)] = -one.clone();
    jc[(3, 2)] = one.clone();
    jc[(2, 3)] = -one;
    let a = rat_matrix_from_columns(&D4_SIMPLE);
    let p = rat_matrix_from_columns(&D4_COMPLEX_BASIS);
    let p_inv = p.inverse().expect("complex basis is a Q-basis");
    let a_inv = a.inverse().expect("simple roots are a basis");
    let in_e = p.mul(&jc).mul(&p_inv);
    a_inv.mul(&in_e).mul(&a).to_integer().expect("rho preserves D4")
}

/// Builds `ρ` on `<2>^2 + D4^3` and checks that it is an isometry of
/// order 4 with square `-I` and no nonzero fixed vectors.
///
/// Panics if any check fails; that would be a bug here, not bad input.
pub fn rho_on_l_minus() -> RhoAction {
    static RHO: OnceLock<RhoAction> = OnceLock::new();
    RHO.get_or_init(|| {
        let host = l_minus();
        // g1 -> g2, g2 -> -g1
        let on_rank1 = IntMatrix::from_i64_rows(&[vec![0, -1], vec![1, 0]]);
        let d4 = rho_on_d4();
        let m = on_rank1.block_diag(&d4).block_diag(&d4).block_diag(&d4);
        let verdict = is_isometry(&host, &m).expect("square of the right size");
        assert!(verdict.preserves_form, "rho does not preserve the form");
        assert_eq!(verdict.order, IsometryOrder::Finite(4), "rho does not have order 4");
        let minus_id = IntMatrix::identity(14).scale(&BigInt::from(-1));
        assert_eq!(m.pow(2), minus_id, "rho^2 != -1");
        assert!(fixed_sublattice(&m).is_empty(), "rho has fixed vectors");
        RhoAction { host, isometry: Isometry { matrix: m, order: verdict.order } }
    })
    .clone()
}

/// Matrix of `ρ` restricted to a block, written in the given basis with the
/// coordinates of `ρ(b_i)` as the `i`-th row.
pub fn rho_in_basis(rho: &RhoAction, basis: &[Vec<BigInt>]) -> Option<IntMatrix> {
    let k = basis.len();
    let n = rho.host.rank();
    // solve  B^T y = ρ(b_i)  for each basis vector, using a k×k minor
    let bt = IntMatrix::from_rows(basis.to_vec()).transpose();
    let rows = (0..n).collect::<Vec<_>>();
    let pick = choose_independent_rows(&bt, &rows, k)?;
    let mut sq = RatMatrix::zeros(k, k);
    for (r, &i) in pick.iter().enumerate() {
        for j in 0..k {
            sq[(r, j)] = BigRational::from_integer(bt[(i, j)].clone());
        }
    }
    let inv = sq.inverse()?;
    let mut out = IntMatrix::zeros(k, k);
    for (row, b) in basis.iter().enumerate() {
        let img = rho.apply(b);
        let rhs: Vec<BigRational> = pick.iter().map(|&i| BigRational::from_integer(img[i].clone())).collect();
        let y = inv.mul_vec(&rhs);
        // verify the image really lies in the span
        let back: Vec<BigRational> = (0..n)
            .map(|i| (0..k).map(|j| BigRational::from_integer(bt[(i, j)].clone()) * &y[j]).sum())
            .collect();
        if back.iter().zip(&img).any(|(a, b)| *a != BigRational::from_integer(b.clone())) {
            return None;
        }
        for (j, v) in y.into_iter().enumerate() {
            if !v.is_integer() {
                return None;
            }
            out[(row, j)] = v.to_integer();
        }
    }
    Some(out)
}

fn choose_independent_rows(m: &IntMatrix, candidates: &[usize], k: usize) -> Option<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::new();
    for &i in candidates {
        let mut trial = chosen.clone();
        trial.push(i);
        let sub = IntMatrix::from_rows(trial.iter().map(|&r| m.row(r).to_vec()).collect());
        if crate::lattice::smith_normal_form(&sub).rank() == trial.len() {
            chosen = trial;
            if chosen.len() == k {
                return Some(chosen);
            }
        }
    }
    None
}

/// The two classes of roots of the anti-invariant lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootClass {
    /// `Λ_r^⊥ ≅ U^2 + A1^8`
    NodeClass,
    /// `Λ_r^⊥ ≅ U(2)^2 + D8`
    HyperellipticClass,
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootClass::NodeClass => "node class",
            RootClass::HyperellipticClass => "hyperelliptic class",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("vector has norm {0}, not -2")]
    NotARoot(BigInt),
    #[error("complement invariants match neither root class: {0:?}")]
    Unmatched(Box<LatticeInvariants>),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Details produced while classifying a root.
#[derive(Clone, Debug, Serialize)]
pub struct RootReport {
    pub class: RootClass,
    /// Signature of `Λ_r = sat<r, ρ(r)>`.
    pub lambda_signature: Signature,
    pub complement: LatticeInvariants,
}

fn class_targets() -> &'static [(RootClass, LatticeInvariants); 2] {
    static T: OnceLock<[(RootClass, LatticeInvariants); 2]> = OnceLock::new();
    T.get_or_init(|| {
        [
            (RootClass::NodeClass, invariants(&catalog("U^2 + A1^8")).expect("nondegenerate")),
            (RootClass::HyperellipticClass, invariants(&catalog("U(2)^2 + D8")).expect("nondegenerate")),
        ]
    })
}

/// Classifies a root `r` of the anti-invariant lattice by the invariants of
/// the complement of `sat<r, ρ(r)>`.
pub fn classify_root(r: &[BigInt]) -> Result<RootReport, RootError> {
    let rho = rho_on_l_minus();
    let host = &rho.host;
    if r.len() != host.rank() {
        return Err(LatticeError::DimensionMismatch { expected: host.rank(), got: r.len() }.into());
    }
    let norm = host.norm(r);
    if norm != BigInt::from(-2) {
        return Err(RootError::NotARoot(norm));
    }
    let pair = [r.to_vec(), rho.apply(r)];
    let lambda = saturate(host, &pair)?;
    let lambda_signature = signature(&sublattice(host, &lambda.basis)?);
    let comp = orthogonal_complement(host, &lambda.basis)?;
    let inv = invariants(&comp.lattice)?;
    for (class, target) in class_targets() {
        if inv.rank == target.rank
            && inv.signature == target.signature
            && inv.invariant_factors == target.invariant_factors
            && inv.delta == target.delta
        {
            return Ok(RootReport { class: *class, lambda_signature, complement: inv });
        }
    }
    Err(RootError::Unmatched(Box::new(inv)))
}

/// Searches the box `|x_i| <= bound` for a primitive `x` in the
/// anti-invariant lattice with `x^2 = 0` and `(x, ρ(x)) = 0`.
///
/// Vectors are visited by increasing support size, then lexicographically
/// by support, then by values in the order `1, -1, 2, -2, …`, so the answer
/// is deterministic.
pub fn isotropic_rho_vector_search(bound: u32) -> Option<Vec<BigInt>> {
    if bound == 0 {
        return None;
    }
    let rho = rho_on_l_minus();
    let n = rho.host.rank();
    let to_i64 = |m: &IntMatrix| -> Vec<Vec<i64>> {
        m.to_rows().iter().map(|r| r.iter().map(|v| v.to_i64().unwrap()).collect()).collect()
    };
    let g = to_i64(rho.host.gram());
    let gm = to_i64(&(rho.host.gram() * rho.matrix()));
    let b = bound as i64;
    let values: Vec<i64> = (1..=b).flat_map(|v| [v, -v]).collect();

    let form = |m: &[Vec<i64>], support: &[usize], vals: &[i64]| -> i64 {
        let mut s = 0;
        for (a, &i) in support.iter().enumerate() {
            for (c, &j) in support.iter().enumerate() {
                s += vals[a] * m[i][j] * vals[c];
            }
        }
        s
    };

    for size in 1..=n {
        let mut support: Vec<usize> = (0..size).collect();
        loop {
            let mut digits = vec![0usize; size];
            loop {
                let vals: Vec<i64> = digits.iter().map(|&d| values[d]).collect();
                let gcd = vals.iter().fold(0i64, |acc, &v| acc.gcd(&v));
                if gcd == 1 && form(&g, &support, &vals) == 0 && form(&gm, &support, &vals) == 0 {
                    let mut x = vec![BigInt::zero(); n];
                    for (&i, &v) in support.iter().zip(&vals) {
                        x[i] = BigInt::from(v);
                    }
                    return Some(x);
                }
                let mut k = size;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    digits[k] += 1;
                    if digits[k] < values.len() {
                        break;
                    }
                    digits[k] = 0;
                    if k == 0 {
                        k = usize::MAX;
                        break;
                    }
                }
                if k == usize::MAX {
                    break;
                }
            }
            if !next_combination(&mut support, n) {
                break;
            }
        }
    }
    None
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Generator of the first `<2>` summand plus `f1` in the first `D4` block.
pub fn standard_isotropic_vector() -> Vec<BigInt> {
    ivec(&[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0])
}
