//! Reference computations for the integration tests, written without the
//! library's lattice code: Gram matrices straight from Dynkin diagrams,
//! Gaussian elimination over `Q`, and brute-force root enumeration.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Gram = Vec<Vec<i64>>;

fn dynkin(n: usize, edges: &[(usize, usize)]) -> Gram {
    let mut g = vec![vec![0; n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for &(i, j) in edges {
        g[i][j] = 1;
        g[j][i] = 1;
    }
    g
}

pub fn a(n: usize) -> Gram {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    dynkin(n, &edges)
}

/// Chain of `n-1` nodes with the last node hung off the second to last.
pub fn d(n: usize) -> Gram {
    let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
    edges.push((n - 3, n - 1));
    dynkin(n, &edges)
}

/// Chain of `n-1` nodes with one more node attached to the third.
pub fn e(n: usize) -> Gram {
    let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
    edges.push((2, n - 1));
    dynkin(n, &edges)
}

pub fn u() -> Gram {
    vec![vec![0, 1], vec![1, 0]]
}

pub fn block_sum(parts: &[Gram]) -> Gram {
    let n: usize = parts.iter().map(Vec::len).sum();
    let mut g = vec![vec![0; n]; n];
    let mut off = 0;
    for p in parts {
        for (i, row) in p.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                g[off + i][off + j] = *x;
            }
        }
        off += p.len();
    }
    g
}

/// Gram matrix of a sum such as `"U + A1^2 + E8^2"` or `"<2>^2 + D4^3"`.
pub fn parse_sum(text: &str) -> Gram {
    let mut parts = Vec::new();
    for term in text.split('+').map(str::trim) {
        let (atom, count) = match term.rsplit_once('^') {
            Some((a, k)) => (a, k.parse::<usize>().expect("exponent")),
            None => (term, 1),
        };
        let g = if atom == "U" {
            u()
        } else if let Some(k) = atom.strip_prefix('<').and_then(|s| s.strip_suffix('>')) {
            vec![vec![k.parse().expect("rank one entry")]]
        } else {
            let n: usize = atom[1..].parse().expect("atom rank");
            match &atom[..1] {
                "A" => a(n),
                "D" => d(n),
                "E" => e(n),
                other => panic!("unknown atom {other}"),
            }
        };
        parts.extend(std::iter::repeat_n(g, count));
    }
    block_sum(&parts)
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

pub fn det(g: &Gram) -> BigInt {
    let n = g.len();
    let mut m: Vec<Vec<BigRational>> = g.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let mut d = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if p != col {
            m.swap(p, col);
            d = -d;
        }
        d *= m[col][col].clone();
        for r in col + 1..n {
            let f = &m[r][col] / &m[col][col];
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    d.to_integer()
}

/// `G^{-1}` by Gauss-Jordan; `None` for singular input.
pub fn inverse(g: &Gram) -> Option<Vec<Vec<BigRational>>> {
    let n = g.len();
    let mut m: Vec<Vec<BigRational>> = g
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<BigRational> = r.iter().map(|&x| q(x)).collect();
            row.extend((0..n).map(|j| q(i64::from(i == j))));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(p, col);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= inv.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..2 * n {
                    let t = &f * &m[col][c];
                    m[r][c] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `(positive, negative, zero)` by symmetric elimination.
pub fn signature(g: &Gram) -> (usize, usize, usize) {
    let n = g.len();
    let mut m: Vec<Vec<BigRational>> = g.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let mut live: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg) = (0, 0);
    while !live.is_empty() {
        let pivot = match live.iter().position(|&i| !m[i][i].is_zero()) {
            Some(k) => live[k],
            None => {
                let pair = live.iter().flat_map(|&i| live.iter().map(move |&j| (i, j))).find(|&(i, j)| !m[i][j].is_zero());
                let Some((i, j)) = pair else { break };
                // v_i += v_j makes the diagonal entry 2 m_ij
                for c in 0..n {
                    let t = m[j][c].clone();
                    m[i][c] += t;
                }
                for r in 0..n {
                    let t = m[r][j].clone();
                    m[r][i] += t;
                }
                i
            }
        };
        if m[pivot][pivot].is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        live.retain(|&i| i != pivot);
        for &k in &live {
            let f = &m[k][pivot] / &m[pivot][pivot];
            for c in 0..n {
                let t = &f * &m[pivot][c];
                m[k][c] -= t;
            }
            for r in 0..n {
                let t = &f * &m[r][pivot];
                m[r][k] -= t;
            }
        }
    }
    (pos, neg, n - pos - neg)
}

/// `(ell, delta)` when the discriminant group is 2-elementary, i.e. when
/// `2 G^{-1}` is integral; then `|det| = 2^ell`, and `delta = 0` exactly when
/// every dual generator has integral norm.
pub fn two_elementary(g: &Gram) -> Option<(usize, u8)> {
    let inv = inverse(g)?;
    let two = q(2);
    if inv.iter().flatten().any(|x| !(x * &two).is_integer()) {
        return None;
    }
    let dabs = det(g).abs();
    let ell = dabs.bits().saturating_sub(1) as usize;
    assert_eq!(BigInt::one() << ell, dabs, "2-elementary determinant is a power of two");
    let delta = u8::from((0..g.len()).any(|i| !inv[i][i].is_integer()));
    Some((ell, delta))
}

pub fn norm(g: &Gram, v: &[i64]) -> i64 {
    let mut s = 0;
    for (i, row) in g.iter().enumerate() {
        if v[i] == 0 {
            continue;
        }
        for (j, x) in row.iter().enumerate() {
            s += v[i] * x * v[j];
        }
    }
    s
}

pub fn pair(g: &Gram, u: &[i64], v: &[i64]) -> i64 {
    g.iter().enumerate().map(|(i, row)| row.iter().enumerate().map(|(j, x)| u[i] * x * v[j]).sum::<i64>()).sum()
}

/// Calls `visit` on every vector of `[-bound, bound]^dim`.
pub fn for_each_in_box(dim: usize, bound: i64, mut visit: impl FnMut(&[i64])) {
    let mut v = vec![-bound; dim];
    loop {
        visit(&v);
        let mut k = 0;
        while k < dim {
            v[k] += 1;
            if v[k] <= bound {
                break;
            }
            v[k] = -bound;
            k += 1;
        }
        if k == dim {
            return;
        }
    }
}

/// Vectors of norm `-2` with all coordinates in `[-bound, bound]`.
pub fn box_roots(g: &Gram, bound: i64) -> usize {
    let mut count = 0;
    for_each_in_box(g.len(), bound, |v| {
        if norm(g, v) == -2 {
            count += 1;
        }
    });
    count
}

/// Roots of `E8` in the even coordinate system (all-integer or
/// all-half-integer vectors of `R^8` with even coordinate sum, norm 2),
/// restricted to those orthogonal to `extra`. Coordinates are doubled.
pub fn e8_coordinate_roots(extra: &[[i64; 8]]) -> usize {
    let mut count = 0;
    for_each_in_box(8, 2, |x| {
        let integral = x.iter().all(|a| a % 2 == 0);
        let half = x.iter().all(|a| a % 2 != 0);
        let sum: i64 = x.iter().sum();
        let ok = x.iter().map(|a| a * a).sum::<i64>() == 8
            && (integral || half)
            && sum % 4 == 0
            && extra.iter().all(|w| x.iter().zip(w).map(|(a, b)| a * b).sum::<i64>() == 0);
        if ok {
            count += 1;
        }
    });
    count
}

pub fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().expect("small coordinates")).collect()
}

pub fn gram_of(m: &quartic_k3::lattice::IntMatrix) -> Gram {
    m.to_rows().iter().map(|r| to_i64(r)).collect()
}

/// Solves `A x = b` over `Q` for square invertible `A`.
pub fn solve(a: &Gram, b: &[i64]) -> Option<Vec<BigRational>> {
    let inv = inverse(a)?;
    Some(inv.iter().map(|row| row.iter().zip(b).map(|(x, &y)| x * q(y)).sum()).collect())
}
