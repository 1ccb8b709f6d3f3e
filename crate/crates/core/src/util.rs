//! Small exact-arithmetic helpers used across modules.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `n!` as a big integer.
pub(crate) fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a big integer (`0` when `k > n`).
pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Converts an exact rational that must be an integer, failing loudly when
/// the denominator is not `1`.
pub(crate) fn rational_to_integer(q: &BigRational, context: &str) -> Result<BigInt> {
    if !q.is_integer() {
        return Err(Error::NegativeOrNonIntegral(format!(
            "{context}: got {q}"
        )));
    }
    Ok(q.to_integer())
}

/// Like [`rational_to_integer`] but additionally requires the value to be
/// nonnegative.
pub(crate) fn rational_to_nonneg_integer(q: &BigRational, context: &str) -> Result<BigInt> {
    let z = rational_to_integer(q, context)?;
    if z.is_negative() {
        return Err(Error::NegativeOrNonIntegral(format!(
            "{context}: got {z}"
        )));
    }
    Ok(z)
}
