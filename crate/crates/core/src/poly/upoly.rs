use std::fmt;

use num_rational::BigRational;

use super::field::Field;
use super::write_term;

/// Dense univariate polynomial, coefficients from low to high degree with no
/// trailing zeros. `zero` fixes the coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<F: Field> {
    coeffs: Vec<F>,
    zero: F,
}

pub type QPoly = UPoly<BigRational>;

impl<F: Field> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>, zero: &F) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs, zero: zero.zero_like() }
    }

    pub fn zero(ctx: &F) -> Self {
        UPoly { coeffs: vec![], zero: ctx.zero_like() }
    }

    pub fn constant(c: F) -> Self {
        let zero = c.zero_like();
        UPoly::new(vec![c], &zero)
    }

    pub fn one(ctx: &F) -> Self {
        UPoly::constant(ctx.one_like())
    }

    /// `c * t^k`
    pub fn monomial(c: F, k: usize) -> Self {
        let zero = c.zero_like();
        let mut v = vec![zero.clone(); k];
        v.push(c);
        UPoly::new(v, &zero)
    }

    /// The variable `t`.
    pub fn var(ctx: &F) -> Self {
        UPoly::monomial(ctx.one_like(), 1)
    }

    pub fn ctx(&self) -> &F {
        &self.zero
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i).plus(&o.coeff(i))).collect();
        UPoly::new(v, &self.zero)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i).minus(&o.coeff(i))).collect();
        UPoly::new(v, &self.zero)
    }

    pub fn neg(&self) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(Field::negate).collect(), zero: self.zero.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero(&self.zero);
        }
        let mut v = vec![self.zero.clone(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].plus(&a.times(b));
            }
        }
        UPoly::new(v, &self.zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a.times(c)).collect(), &self.zero)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UPoly::one(&self.zero);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.coeffs[dd].inverse();
        let mut r = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return (UPoly::zero(&self.zero), self.clone());
        }
        let mut q = vec![self.zero.clone(); n - dd];
        for k in (0..n - dd).rev() {
            let c = r[k + dd].times(&inv);
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].minus(&c.times(b));
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UPoly::new(q, &self.zero), UPoly::new(r, &self.zero))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Quotient of an exact division; `None` if there is a remainder.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, f: &Self) -> bool {
        f.rem(self).is_zero()
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inverse()),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*o = g` and `g` the monic gcd.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let z = &self.zero;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (UPoly::one(z), UPoly::zero(z));
        let (mut t0, mut t1) = (UPoly::zero(z), UPoly::one(z));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = l.inverse();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let v = self.coeffs.iter().enumerate().skip(1).map(|(i, a)| a.times(&a.from_int(i as i64))).collect();
        UPoly::new(v, &self.zero)
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(self.zero.clone(), |acc, a| acc.times(x).plus(a))
    }

    /// `self(g(t))`
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs.iter().rev().fold(UPoly::zero(&self.zero), |acc, a| acc.mul(g).add(&UPoly::constant(a.clone())))
    }

    /// Resultant by the Euclidean algorithm. Zero if either input is zero.
    pub fn resultant(&self, o: &Self) -> F {
        let z = &self.zero;
        let (Some(mut m), Some(mut n)) = (self.degree(), o.degree()) else { return z.zero_like() };
        let (mut a, mut b) = (self.clone(), o.clone());
        let mut acc = z.one_like();
        loop {
            if n == 0 {
                return acc.times(&b.coeffs[0].power(m as u32));
            }
            let r = a.rem(&b);
            let Some(k) = r.degree() else { return z.zero_like() };
            if (m * n) % 2 == 1 {
                acc = acc.negate();
            }
            acc = acc.times(&b.coeffs[n].power((m - k) as u32));
            a = b;
            b = r;
            m = n;
            n = k;
        }
    }

    /// Yun's square-free decomposition of a nonzero polynomial:
    /// `self = lead * Π a_i^i` with monic, pairwise coprime `a_i`. Entry
    /// `i-1` of the result is `a_i`; trailing constant entries are dropped.
    pub fn squarefree_decomposition(&self) -> Vec<Self> {
        assert!(!self.is_zero(), "square-free decomposition of zero");
        let f = self.monic();
        let one = UPoly::one(&self.zero);
        let mut out = Vec::new();
        if f.is_constant() {
            return out;
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let mut c = df.exact_div(&a0).expect("gcd divides");
        let mut d = c.sub(&b.derivative());
        while !b.is_constant() {
            let a = b.gcd(&d);
            b = b.exact_div(&a).expect("gcd divides");
            c = d.exact_div(&a).expect("gcd divides");
            d = c.sub(&b.derivative());
            out.push(a);
        }
        while out.last().is_some_and(|p| *p == one) {
            out.pop();
        }
        out
    }

    /// Monic square-free part.
    pub fn squarefree_part(&self) -> Self {
        let f = self.monic();
        if f.is_constant() {
            return f;
        }
        f.exact_div(&f.gcd(&f.derivative())).expect("gcd divides")
    }

    pub fn map<G: Field>(&self, ctx: &G, f: impl Fn(&F) -> G) -> UPoly<G> {
        UPoly::new(self.coeffs.iter().map(f).collect(), ctx)
    }
}

/// Newton interpolation through `(xs[i], ys[i])` with distinct `xs`.
pub fn interpolate<F: Field>(xs: &[F], ys: &[F], ctx: &F) -> UPoly<F> {
    let n = xs.len();
    let mut dd: Vec<F> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = dd[i].minus(&dd[i - 1]);
            let den = xs[i].minus(&xs[i - j]);
            dd[i] = num.divide(&den);
        }
    }
    let mut p = UPoly::zero(ctx);
    for i in (0..n).rev() {
        let lin = UPoly::new(vec![xs[i].negate(), ctx.one_like()], ctx);
        p = p.mul(&lin).add(&UPoly::constant(dd[i].clone()));
    }
    p
}

impl<F: Field + fmt::Display> UPoly<F> {
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            write_term(&mut out, &c.to_string(), &mono);
        }
        out
    }
}

impl<F: Field + fmt::Display> fmt::Display for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}
