use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::field::Field;
use super::upoly::UPoly;
use super::write_term;

/// Exponents of `(x, y, z)`.
pub type Exp = [u32; 3];

pub const VARS: [char; 3] = ['x', 'y', 'z'];

/// Sparse polynomial in `x, y, z`.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly3<F: Field> {
    terms: BTreeMap<Exp, F>,
    zero: F,
}

pub type QForm = Poly3<BigRational>;

impl<F: Field> Poly3<F> {
    pub fn zero(ctx: &F) -> Self {
        Poly3 { terms: BTreeMap::new(), zero: ctx.zero_like() }
    }

    pub fn constant(c: F) -> Self {
        Poly3::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: F, e: Exp) -> Self {
        let mut p = Poly3::zero(&c);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn var(i: usize, ctx: &F) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Poly3::monomial(ctx.one_like(), e)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exp, F)>, ctx: &F) -> Self {
        let mut p = Poly3::zero(ctx);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    fn add_term(&mut self, e: Exp, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.plus(c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn ctx(&self) -> &F {
        &self.zero
    }

    pub fn terms(&self) -> &BTreeMap<Exp, F> {
        &self.terms
    }

    pub fn coeff(&self, e: &Exp) -> F {
        self.terms.get(e).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Smallest total degree of a term; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// The common degree if the polynomial is a nonzero form.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.degree()?;
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d).then_some(d)
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Poly3 {
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (*e, c.clone())).collect(),
            zero: self.zero.clone(),
        }
    }

    /// Largest exponent of variable `i`.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(*e, c);
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Poly3 { terms: self.terms.iter().map(|(e, c)| (*e, c.negate())).collect(), zero: self.zero.clone() }
    }

    pub fn scale(&self, k: &F) -> Self {
        if k.is_zero() {
            return Poly3::zero(&self.zero);
        }
        Poly3 { terms: self.terms.iter().map(|(e, c)| (*e, c.times(k))).collect(), zero: self.zero.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Poly3::zero(&self.zero);
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                p.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], &c.times(d));
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Poly3::constant(self.zero.one_like());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut p = Poly3::zero(&self.zero);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = *e;
                f[i] -= 1;
                p.add_term(f, &c.times(&c.from_int(e[i] as i64)));
            }
        }
        p
    }

    pub fn gradient(&self) -> [Self; 3] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }

    /// `self(M v)`: variable `i` is replaced by `Σ_j m[i][j] v_j`.
    pub fn compose_linear(&self, m: &[[F; 3]; 3]) -> Self {
        let Some(d) = self.degree() else { return self.clone() };
        let lin: Vec<Poly3<F>> = (0..3)
            .map(|i| Poly3::from_terms((0..3).map(|j| (unit(j), m[i][j].clone())), &self.zero))
            .collect();
        let mut powers: Vec<Vec<Poly3<F>>> = Vec::new();
        for l in &lin {
            let mut v = vec![Poly3::constant(self.zero.one_like())];
            for k in 1..=d as usize {
                let next = v[k - 1].mul(l);
                v.push(next);
            }
            powers.push(v);
        }
        let mut out = Poly3::zero(&self.zero);
        for (e, c) in &self.terms {
            let t = powers[0][e[0] as usize].mul(&powers[1][e[1] as usize]).mul(&powers[2][e[2] as usize]);
            out = out.add(&t.scale(c));
        }
        out
    }

    pub fn eval(&self, p: &[F; 3]) -> F {
        self.terms.iter().fold(self.zero.clone(), |acc, (e, c)| {
            acc.plus(&c.times(&p[0].power(e[0])).times(&p[1].power(e[1])).times(&p[2].power(e[2])))
        })
    }

    /// Substitutes the constant `v` for variable `i`.
    pub fn set_var(&self, i: usize, v: &F) -> Self {
        let mut p = Poly3::zero(&self.zero);
        for (e, c) in &self.terms {
            let mut f = *e;
            f[i] = 0;
            p.add_term(f, &c.times(&v.power(e[i])));
        }
        p
    }

    /// Coefficients of the powers of variable `i`, as polynomials in the
    /// other two variables.
    pub fn coefficients_in(&self, i: usize) -> Vec<Self> {
        let n = self.degree_in(i).map_or(0, |d| d as usize + 1);
        let mut out = vec![Poly3::zero(&self.zero); n];
        for (e, c) in &self.terms {
            let mut f = *e;
            f[i] = 0;
            out[e[i] as usize].add_term(f, c);
        }
        out
    }

    /// Reads the polynomial as univariate in variable `i`; every other
    /// exponent must be zero.
    pub fn to_univariate(&self, i: usize) -> UPoly<F> {
        let n = self.degree_in(i).map_or(0, |d| d as usize + 1);
        let mut v = vec![self.zero.clone(); n];
        for (e, c) in &self.terms {
            assert!((0..3).all(|j| j == i || e[j] == 0), "polynomial involves more than one variable");
            v[e[i] as usize] = c.clone();
        }
        UPoly::new(v, &self.zero)
    }

    pub fn map<G: Field>(&self, ctx: &G, f: impl Fn(&F) -> G) -> Poly3<G> {
        Poly3::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))), ctx)
    }

    /// Leading coefficient in lexicographic order (`x > y > z`).
    pub fn lex_lead(&self) -> Option<(&Exp, &F)> {
        self.terms.iter().next_back()
    }
}

fn unit(j: usize) -> Exp {
    let mut e = [0; 3];
    e[j] = 1;
    e
}

pub fn monomial_string(e: &Exp) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(VARS[i].to_string()),
            _ => parts.push(format!("{}^{k}", VARS[i])),
        }
    }
    parts.join("*")
}

impl<F: Field + fmt::Display> fmt::Display for Poly3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            write_term(&mut out, &c.to_string(), &monomial_string(e));
        }
        f.write_str(&out)
    }
}
