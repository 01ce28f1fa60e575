//! Polynomial text grammar:
//!
//! ```text
//! expr     := sign* term (sign+ term)*
//! sign     := '+' | '-'
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := rational | var | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! A `*` may be left out between factors (`2x^2y`). Positions in errors are
//! character offsets into the input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use super::field::rat;
use super::form::{Poly3, QForm, VARS};

/// Exponents and total degrees above this are rejected.
pub const MAX_DEGREE: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable {var} at position {pos} is not allowed here")]
    VariableNotAllowed { pos: usize, var: char },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("expected a form of degree {expected}, got degree {found}")]
    WrongDegree { expected: u32, found: u32 },
    #[error("the zero polynomial does not define a curve")]
    ZeroForm,
}

/// Parses a polynomial in the variables `vars` (a subset of `x, y, z`).
pub fn parse_polynomial(text: &str, vars: &[char]) -> Result<QForm, ParseError> {
    let mut p = Parser { s: text.chars().collect(), pos: 0, vars };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos < p.s.len() {
        return p.err(format!("unexpected {:?}", p.s[p.pos]));
    }
    Ok(f)
}

/// Parses a nonzero form of the given degree.
pub fn parse_form(text: &str, vars: &[char], degree: u32) -> Result<QForm, ParseError> {
    let f = parse_polynomial(text, vars)?;
    if f.is_zero() {
        return Err(ParseError::ZeroForm);
    }
    let d = f.homogeneous_degree().ok_or(ParseError::NotHomogeneous)?;
    if d != degree {
        return Err(ParseError::WrongDegree { expected: degree, found: d });
    }
    Ok(f)
}

struct Parser<'a> {
    s: Vec<char>,
    pos: usize,
    vars: &'a [char],
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn zero() -> QForm {
        Poly3::zero(&rat(0))
    }

    fn check_degree(&self, f: &QForm, at: usize) -> Result<(), ParseError> {
        if f.degree().unwrap_or(0) > MAX_DEGREE {
            return Err(ParseError::Syntax { pos: at, msg: format!("degree exceeds {MAX_DEGREE}") });
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<QForm, ParseError> {
        let mut acc = Self::zero();
        let mut sign = self.signs();
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            if !matches!(self.peek(), Some('+' | '-')) {
                return Ok(acc);
            }
            sign = self.signs();
        }
    }

    /// Consumes a run of `+` and `-` and returns its combined sign.
    fn signs(&mut self) -> i32 {
        let mut sign = 1;
        while let Some(c @ ('+' | '-')) = self.peek() {
            if c == '-' {
                sign = -sign;
            }
            self.pos += 1;
        }
        sign
    }

    fn starts_base(c: char) -> bool {
        c.is_ascii_digit() || c == '(' || c.is_alphabetic()
    }

    fn term(&mut self) -> Result<QForm, ParseError> {
        let start = self.pos;
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => self.pos += 1,
                Some(c) if Self::starts_base(c) => {}
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = acc.mul(&f);
            self.check_degree(&acc, start)?;
        }
    }

    fn factor(&mut self) -> Result<QForm, ParseError> {
        let start = self.pos;
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let e = self.uint()?;
            if e > BigInt::from(MAX_DEGREE) {
                return Err(ParseError::Syntax { pos: at, msg: format!("exponent exceeds {MAX_DEGREE}") });
            }
            let e: u32 = e.try_into().expect("bounded above");
            if base.degree().unwrap_or(0) as u64 * e as u64 > MAX_DEGREE as u64 {
                return Err(ParseError::Syntax { pos: start, msg: format!("degree exceeds {MAX_DEGREE}") });
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a nonnegative integer");
        }
        let digits: String = self.s[start..self.pos].iter().collect();
        Ok(digits.parse().expect("digits parse"))
    }

    fn base(&mut self) -> Result<QForm, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let den = self.uint()?;
                    if den.is_zero() {
                        return Err(ParseError::Syntax { pos: at, msg: "division by zero".into() });
                    }
                    return Ok(Poly3::constant(BigRational::new(num, den)));
                }
                Ok(Poly3::constant(BigRational::from_integer(num)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_alphabetic() => {
                let at = self.pos;
                self.pos += 1;
                match VARS.iter().position(|&v| v == c) {
                    Some(i) if self.vars.contains(&c) => Ok(Poly3::var(i, &rat(0))),
                    Some(_) => Err(ParseError::VariableNotAllowed { pos: at, var: c }),
                    None => Err(ParseError::Syntax { pos: at, msg: format!("unknown variable {c:?}") }),
                }
            }
            Some(c) => self.err(format!("unexpected {c:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::ratio;

    const XYZ: [char; 3] = ['x', 'y', 'z'];

    #[test]
    fn fermat() {
        let f = parse_form("x^4 + y^4 + z^4", &XYZ, 4).unwrap();
        assert_eq!(f.terms().len(), 3);
        assert_eq!(f.coeff(&[4, 0, 0]), rat(1));
    }

    #[test]
    fn expansion() {
        let f = parse_form("(x^2+y^2+z^2)^2", &XYZ, 4).unwrap();
        assert_eq!(f.terms().len(), 6);
        assert_eq!(f.coeff(&[2, 2, 0]), rat(2));
    }

    #[test]
    fn rational_coefficients() {
        let f = parse_form("x^3*y + 1/2*z^4 - x*y*z^2", &XYZ, 4).unwrap();
        assert_eq!(f.coeff(&[0, 0, 4]), ratio(1, 2));
        assert_eq!(f.coeff(&[1, 1, 2]), rat(-1));
        assert_eq!(f.to_string(), "x^3*y - x*y*z^2 + 1/2*z^4");
    }

    #[test]
    fn implicit_multiplication_and_unary_minus() {
        let f = parse_polynomial("-2x^2y + (x - y)(x + y)", &XYZ).unwrap();
        assert_eq!(f.to_string(), "-2*x^2*y + x^2 - y^2");
        let g = parse_polynomial("x + -2*y - -z", &XYZ).unwrap();
        assert_eq!(g.to_string(), "x - 2*y + z");
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_polynomial("x^4 + y^4 +", &XYZ),
            Err(ParseError::Syntax { pos: 11, msg: "unexpected end of input".into() })
        );
        assert!(matches!(parse_polynomial("x + w", &XYZ), Err(ParseError::Syntax { pos: 4, .. })));
        assert_eq!(
            parse_polynomial("x^8 + z^8", &['x', 'y']),
            Err(ParseError::VariableNotAllowed { pos: 6, var: 'z' })
        );
        assert_eq!(parse_form("x^4 + y^3*z + z", &XYZ, 4), Err(ParseError::NotHomogeneous));
        assert_eq!(parse_form("x^3", &XYZ, 4), Err(ParseError::WrongDegree { expected: 4, found: 3 }));
        assert_eq!(parse_form("x - x", &XYZ, 4), Err(ParseError::ZeroForm));
        assert!(matches!(parse_polynomial("x^100", &XYZ), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_polynomial("1/0", &XYZ), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_polynomial("(x + y", &XYZ), Err(ParseError::Syntax { pos: 6, .. })));
    }
}
