//! Exact polynomial arithmetic over `Q`, number fields and `Q(x)`.

pub mod factor;
pub mod field;
pub mod form;
pub mod numfield;
pub mod parse;
pub mod ratfunc;
pub mod solve;
pub mod upoly;

pub use factor::{factor, irreducible_factors, Factorization};
pub use field::{rat, ratio, Field};
pub use form::{Exp, Poly3, QForm};
pub use numfield::{NfElem, NumberField};
pub use parse::{parse_form, parse_polynomial, ParseError};
pub use ratfunc::RatFunc;
pub use solve::{common_zeros, ProjPoint, SolveError, ZeroSet};
pub use upoly::{interpolate, QPoly, UPoly};

/// Appends `coef*mono` to a sum being printed, choosing the sign and
/// parenthesizing compound coefficients.
pub(crate) fn write_term(out: &mut String, coef: &str, mono: &str) {
    let compound = coef.contains(['+', ' ']) || coef.get(1..).is_some_and(|r| r.contains('-'));
    let (neg, body) = match coef.strip_prefix('-') {
        Some(rest) if !compound => (true, rest.to_string()),
        _ => (false, if compound { format!("({coef})") } else { coef.to_string() }),
    };
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        out.push_str(&body);
    } else if body == "1" {
        out.push_str(mono);
    } else {
        out.push_str(&body);
        out.push('*');
        out.push_str(mono);
    }
}
