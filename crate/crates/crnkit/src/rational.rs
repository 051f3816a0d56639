//! Exact rational scalars.
//!
//! All stoichiometric data is kept as arbitrary-precision rationals in
//! canonical form (reduced fraction, positive denominator); no operation in
//! this crate ever rounds. `BigRational` maintains the canonical form on
//! every arithmetic operation, so it is re-exported as the crate's scalar.

use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

/// The scalar field of the toolkit: arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Error produced when a coefficient string is not `p` or `p/q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?} (expected `p` or `p/q`)", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

/// Parses `"p"` or `"p/q"` with optional sign on the numerator.
pub fn parse(s: &str) -> Result<Rational, ParseRationalError> {
    let bad = || ParseRationalError(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Canonical display form: `p` when the denominator is one, else `p/q`.
pub fn display(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
