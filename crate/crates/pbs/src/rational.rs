//! Exact rational scalars and the small integer-combinatorics helpers used
//! throughout the crate.
//!
//! Every numeric quantity in this crate is exact: face counts and transform
//! entries are arbitrary-precision integers ([`BigInt`]), eigenvalues and
//! eigenvector coordinates are arbitrary-precision rationals ([`Rational`]).
//! No floating point is used anywhere, so equality checks in the test suites
//! are genuine identities rather than tolerance comparisons.
//!
//! Rationals are kept reduced with a positive denominator at all times (the
//! underlying [`num_rational::Ratio`] type maintains this on construction),
//! and their textual form is `"p/q"`, shortened to `"n"` when the denominator
//! is one. [`parse_rational`] and [`format_rational`] are exact inverses on
//! that format.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

// Re-exported so downstream users can build face vectors and read matrix
// entries without depending on the `num-bigint` crate directly.
pub use num_bigint::BigInt as Integer;

/// Builds a rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `num / den` from machine integers.
///
/// # Panics
///
/// Panics if `den == 0`; use [`checked_div`] when the denominator is not a
/// compile-time constant.
pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "ratio() requires a nonzero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"n"` into a reduced rational.
///
/// Whitespace around the string is ignored. The denominator must be nonzero
/// and both parts must be (optionally signed) decimal integers; the result is
/// reduced and sign-normalized regardless of how the input was written, so
/// `"-4/-6"` parses to the same value as `"2/3"`.
///
/// # Errors
///
/// Returns [`Error::Parse`] for anything that is not of the above shape,
/// including a zero denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |part: &str| -> Result<BigInt> {
        BigInt::from_str(part.trim()).map_err(|_| Error::Parse {
            reason: format!("`{part}` is not an integer"),
        })
    };
    match s.split('/').collect::<Vec<_>>().as_slice() {
        [whole] => Ok(Rational::from_integer(parse_int(whole)?)),
        [num, den] => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Parse {
                    reason: format!("`{s}` has a zero denominator"),
                });
            }
            Ok(Rational::new(num, den))
        }
        _ => Err(Error::Parse {
            reason: format!("`{s}` is not of the form `p/q` or `n`"),
        }),
    }
}

/// Formats a rational as `"p/q"`, or `"n"` when the denominator is one.
///
/// This is the exact inverse of [`parse_rational`] and the canonical textual
/// form used in all JSON and CSV output.
pub fn format_rational(r: &Rational) -> String {
    // `Ratio`'s `Display` already prints `p/q` for non-integers and `p` for
    // integers, which is exactly the canonical form.
    r.to_string()
}

/// Exact division that reports a zero divisor instead of panicking.
///
/// # Errors
///
/// Returns [`Error::DivisionByZero`] when `den` is zero.
pub fn checked_div(num: &Rational, den: &Rational) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(num / den)
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    factorial_quotient(n, 0)
}

/// `n! / k!` as a big integer, computed as the product `(k+1)(k+2)⋯n`.
///
/// This quotient shows up throughout the crate: it counts the facets of the
/// subdivided simplex, the column sums of the transform matrices, and the
/// nontrivial eigenvalues.
///
/// # Panics
///
/// Panics if `k > n` (the quotient would not be an integer).
pub fn factorial_quotient(n: usize, k: usize) -> BigInt {
    assert!(k <= n, "factorial_quotient requires k <= n, got n={n}, k={k}");
    let mut acc = BigInt::one();
    for m in (k + 1)..=n {
        acc *= BigInt::from(m);
    }
    acc
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Multinomial coefficient `(Σ parts)! / Π (parts[i]!)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let mut acc = BigInt::one();
    let mut total = 0usize;
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// Absolute value of a rational (handy for residual reporting).
pub fn rational_abs(r: &Rational) -> Rational {
    r.abs()
}
