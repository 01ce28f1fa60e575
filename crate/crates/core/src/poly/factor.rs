//! Factorization of univariate polynomials over `Q`.
//!
//! Square-free parts are made primitive over `Z` and factored modulo a prime
//! large enough that every true factor is visible without lifting (the
//! prime exceeds twice the leading coefficient times a coefficient bound for
//! all factors). Factors modulo `p` come from distinct-degree and
//! Cantor-Zassenhaus equal-degree splitting; true factors are recovered by
//! trying products of modular factors in order of subset size.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::rat;
use super::upoly::{QPoly, UPoly};

/// `unit * Π f_i^{e_i}` with monic irreducible `f_i`, sorted by degree then
/// coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: BigRational,
    pub factors: Vec<(QPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> QPoly {
        self.factors
            .iter()
            .fold(UPoly::constant(self.unit.clone()), |acc, (f, e)| acc.mul(&f.pow(*e as u32)))
    }
}

/// Complete factorization of a nonzero polynomial.
pub fn factor(f: &QPoly) -> Factorization {
    assert!(!f.is_zero(), "factorization of zero");
    let unit = f.lead().unwrap().clone();
    let mut factors = Vec::new();
    for (i, part) in f.squarefree_decomposition().into_iter().enumerate() {
        for g in factor_squarefree(&part) {
            factors.push((g, i + 1));
        }
    }
    factors.sort_by(|a, b| cmp_poly(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Factorization { unit, factors }
}

/// Distinct monic irreducible factors.
pub fn irreducible_factors(f: &QPoly) -> Vec<QPoly> {
    let mut v: Vec<QPoly> = factor(f).factors.into_iter().map(|(g, _)| g).collect();
    v.sort_by(cmp_poly);
    v.dedup();
    v
}

pub fn is_irreducible(f: &QPoly) -> bool {
    let fa = factor(f);
    fa.factors.len() == 1 && fa.factors[0].1 == 1
}

fn cmp_poly(a: &QPoly, b: &QPoly) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Monic irreducible factors of a square-free polynomial.
fn factor_squarefree(f: &QPoly) -> Vec<QPoly> {
    match f.degree() {
        None | Some(0) => return vec![],
        Some(1) => return vec![f.monic()],
        _ => {}
    }
    let mut out = Vec::new();
    let mut g = to_primitive(f);
    // pull out the factor t^k first: it keeps the constant term nonzero
    if g[0].is_zero() {
        out.push(UPoly::var(&rat(0)));
        g.remove(0);
    }
    for h in zassenhaus(&g) {
        out.push(from_int(&h).monic());
    }
    out
}

fn to_primitive(f: &QPoly) -> Vec<BigInt> {
    let den = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    primitive(ints)
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return v;
    }
    let g = if v.last().unwrap().is_negative() { -g } else { g };
    v.iter().map(|c| c / &g).collect()
}

fn from_int(v: &[BigInt]) -> QPoly {
    UPoly::new(v.iter().map(|c| BigRational::from_integer(c.clone())).collect(), &rat(0))
}

fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f[n].abs();
    let maxc = f.iter().map(|c| c.abs()).max().unwrap();
    let bound = (BigInt::one() << n) * BigInt::from(n + 1) * maxc;
    let need = BigInt::from(2) * &lc * &bound;
    let bits = need.bits() as usize + 2;
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9 ^ n as u64);
    let (p, modular) = loop {
        let p = random_prime(bits.max(24), &mut rng);
        if (&lc % &p).is_zero() {
            continue;
        }
        let fp = Fp::new(p.clone());
        let fm = fp.monic(&fp.reduce(f));
        if fp.gcd(&fm, &fp.derivative(&fm)).len() != 1 {
            continue;
        }
        break (p, fp.factor(&fm, &mut rng));
    };
    recombine(f, &p, modular)
}

fn recombine(f: &[BigInt], p: &BigInt, mut modular: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let fp = Fp::new(p.clone());
    let mut rest = from_int(f);
    let mut rest_int = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= modular.len() {
        let mut found = None;
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let lc = rest_int.last().unwrap().clone();
            let mut prod = vec![lc];
            for &i in &subset {
                prod = fp.mul(&prod, &modular[i]);
            }
            let cand = primitive(prod.iter().map(|c| fp.symmetric(c)).collect());
            if let Some(q) = rest.exact_div(&from_int(&cand)) {
                found = Some((cand, q));
                break;
            }
            if !next_subset(&mut subset, modular.len()) {
                break;
            }
        }
        match found {
            Some((cand, q)) => {
                for &i in subset.iter().rev() {
                    modular.remove(i);
                }
                rest_int = to_primitive(&q);
                rest = from_int(&rest_int);
                out.push(cand);
            }
            None => size += 1,
        }
    }
    out.push(rest_int);
    out
}

fn next_subset(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
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

fn random_below(n: &BigInt, rng: &mut ChaCha8Rng) -> BigInt {
    let bytes = (n.bits() as usize).div_ceil(8) + 8;
    let buf: Vec<u8> = (0..bytes).map(|_| rng.gen()).collect();
    BigInt::from_biguint(Sign::Plus, BigUint::from_bytes_le(&buf)) % n
}

fn random_prime(bits: usize, rng: &mut ChaCha8Rng) -> BigInt {
    let lo = BigInt::one() << (bits - 1);
    loop {
        let cand = (&lo + random_below(&lo, rng)) | BigInt::one();
        if is_probable_prime(&cand, rng) {
            return cand;
        }
    }
}

fn is_probable_prime(n: &BigInt, rng: &mut ChaCha8Rng) -> bool {
    for sp in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let sp = BigInt::from(sp);
        if *n == sp {
            return true;
        }
        if (n % &sp).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for _ in 0..24 {
        let a = BigInt::from(2) + random_below(&(n - BigInt::from(3)), rng);
        let mut x = a.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2), n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Polynomial arithmetic over `F_p`, coefficients low to high in `[0, p)`.
struct Fp {
    p: BigInt,
}

type Pp = Vec<BigInt>;

impl Fp {
    fn new(p: BigInt) -> Self {
        Fp { p }
    }

    fn trim(mut v: Pp) -> Pp {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    fn reduce(&self, v: &[BigInt]) -> Pp {
        Fp::trim(v.iter().map(|c| c.mod_floor(&self.p)).collect())
    }

    fn symmetric(&self, c: &BigInt) -> BigInt {
        let c = c.mod_floor(&self.p);
        if &c * 2 > self.p {
            c - &self.p
        } else {
            c
        }
    }

    fn inv(&self, a: &BigInt) -> BigInt {
        a.modpow(&(&self.p - 2), &self.p)
    }

    fn monic(&self, f: &Pp) -> Pp {
        let inv = self.inv(f.last().unwrap());
        f.iter().map(|c| (c * &inv) % &self.p).collect()
    }

    fn sub(&self, a: &Pp, b: &Pp) -> Pp {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        Fp::trim(
            (0..n).map(|i| (a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).mod_floor(&self.p)).collect(),
        )
    }

    fn mul(&self, a: &Pp, b: &Pp) -> Pp {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        self.reduce(&v)
    }

    fn rem(&self, a: &Pp, m: &Pp) -> Pp {
        let dm = m.len() - 1;
        let inv = self.inv(&m[dm]);
        let mut r = a.clone();
        while r.len() > dm {
            let k = r.len() - 1 - dm;
            let c = (r.last().unwrap() * &inv) % &self.p;
            for (j, b) in m.iter().enumerate() {
                r[k + j] = (&r[k + j] - &c * b).mod_floor(&self.p);
            }
            r = Fp::trim(r);
        }
        r
    }

    fn div(&self, a: &Pp, m: &Pp) -> Pp {
        let dm = m.len() - 1;
        let inv = self.inv(&m[dm]);
        let mut r = a.clone();
        let mut q = vec![BigInt::zero(); a.len().saturating_sub(dm)];
        while r.len() > dm {
            let k = r.len() - 1 - dm;
            let c = (r.last().unwrap() * &inv) % &self.p;
            for (j, b) in m.iter().enumerate() {
                r[k + j] = (&r[k + j] - &c * b).mod_floor(&self.p);
            }
            q[k] = c;
            r = Fp::trim(r);
        }
        Fp::trim(q)
    }

    fn gcd(&self, a: &Pp, b: &Pp) -> Pp {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        if a.is_empty() {
            a
        } else {
            self.monic(&a)
        }
    }

    fn derivative(&self, f: &Pp) -> Pp {
        self.reduce(&f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect::<Vec<_>>())
    }

    fn powmod(&self, base: &Pp, e: &BigInt, m: &Pp) -> Pp {
        let mut result = vec![BigInt::one()];
        let b = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            result = self.rem(&self.mul(&result, &result), m);
            if e.bit(i) {
                result = self.rem(&self.mul(&result, &b), m);
            }
        }
        result
    }

    /// Monic irreducible factors of a monic square-free polynomial.
    fn factor(&self, f: &Pp, rng: &mut ChaCha8Rng) -> Vec<Pp> {
        let x = vec![BigInt::zero(), BigInt::one()];
        let mut rest = f.clone();
        let mut h = x.clone();
        let mut out = Vec::new();
        let mut d = 1;
        while 2 * d < rest.len() {
            h = self.powmod(&h, &self.p, &rest);
            let g = self.gcd(&self.sub(&h, &x), &rest);
            if g.len() > 1 {
                rest = self.div(&rest, &g);
                h = self.rem(&h, &rest);
                self.split_equal_degree(&g, d, rng, &mut out);
            }
            d += 1;
        }
        if rest.len() > 1 {
            out.push(rest);
        }
        out
    }

    fn split_equal_degree(&self, g: &Pp, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Pp>) {
        if g.len() - 1 == d {
            out.push(g.clone());
            return;
        }
        let e = (self.p.pow(d as u32) - 1) / 2;
        loop {
            let a: Pp = Fp::trim((0..g.len() - 1).map(|_| random_below(&self.p, rng)).collect());
            if a.len() <= 1 {
                continue;
            }
            let b = self.sub(&self.powmod(&a, &e, g), &vec![BigInt::one()]);
            let u = self.gcd(&b, g);
            if u.len() > 1 && u.len() < g.len() {
                self.split_equal_degree(&u, d, rng, out);
                self.split_equal_degree(&self.div(g, &u), d, rng, out);
                return;
            }
        }
    }
}
