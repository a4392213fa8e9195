//! Exact rational scalars.
//!
//! Backed by `num_rational::BigRational`, which maintains exactly the
//! invariants we need: always reduced, denominator positive, zero stored
//! as 0/1.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rat = num_rational::BigRational;

/// Shorthand constructor `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact integer power, allowing negative exponents.
///
/// `0^e` with `e < 0` is an evaluation error; `0^0 = 1`.
pub fn rat_pow(base: &Rat, exp: i64) -> Result<Rat> {
    if exp == 0 {
        return Ok(Rat::one());
    }
    if base.is_zero() {
        if exp < 0 {
            return Err(Error::ZeroToNegativePower);
        }
        return Ok(Rat::zero());
    }
    let mut acc = Rat::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    Ok(acc)
}
