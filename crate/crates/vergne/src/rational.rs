//! The scalar type of the whole crate: arbitrary-precision rationals.
//!
//! Every quantity in this crate is a [`Rational`]. There is no floating
//! point anywhere: polarization correctness is a rank condition, and ranks
//! are unstable under rounding. `num-rational` keeps values in lowest terms
//! with a positive denominator after every operation, which also bounds
//! coefficient growth during elimination.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from numerator and denominator. Panics on a zero denominator;
/// use [`parse_rational`] for untrusted input.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `p` or `p/q` exactly. Rejects a zero denominator.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty rational".to_string());
    }
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let numer: BigInt = num_text
        .parse()
        .map_err(|_| format!("invalid integer `{num_text}`"))?;
    let denom: BigInt = match den_text {
        Some(d) => d.parse().map_err(|_| format!("invalid integer `{d}`"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(format!("zero denominator in `{text}`"));
    }
    Ok(Rational::new(numer, denom))
}

/// Render a coordinate vector as `[a, b, c]` with exact `p/q` entries.
pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Render a coordinate vector as a linear combination of named basis
/// vectors, e.g. `Z1 - 2/3*Z2`. Returns `0` for the zero vector.
pub fn format_combination(v: &[Rational], names: &[String]) -> String {
    let order: Vec<usize> = (0..v.len()).collect();
    format_combination_ordered(v, names, &order)
}

/// Same as [`format_combination`] but emitting terms in the given index
/// order, so a distinguished leading term can come first.
pub fn format_combination_ordered(v: &[Rational], names: &[String], order: &[usize]) -> String {
    let mut out = String::new();
    for &idx in order {
        let coeff = &v[idx];
        if coeff.is_zero() {
            continue;
        }
        let name = &names[idx];
        let magnitude = coeff.abs();
        let term = if magnitude.is_one() {
            name.clone()
        } else {
            format!("{magnitude}*{name}")
        };
        if out.is_empty() {
            if coeff.is_negative() {
                out.push('-');
            }
        } else if coeff.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parse a comma-separated list of rationals of required length `n`.
pub fn parse_rational_csv(text: &str, n: usize) -> Result<Vec<Rational>, Error> {
    let trimmed = text.trim();
    let entries: Vec<&str> = if trimmed.is_empty() {
        Vec::new()
    } else {
        trimmed.split(',').collect()
    };
    if entries.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: entries.len(),
        });
    }
    let mut out = Vec::with_capacity(n);
    let mut col = 1;
    for entry in entries {
        match parse_rational(entry) {
            Ok(value) => out.push(value),
            Err(message) => {
                return Err(Error::Parse {
                    line: 1,
                    col,
                    message,
                })
            }
        }
        col += entry.len() + 1;
    }
    Ok(out)
}
