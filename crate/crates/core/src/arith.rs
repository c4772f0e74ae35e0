//! Exact integer helpers shared by the closed forms.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{BigNat, Error, Result};

/// `C(n, k)` for a big `n` and a machine-sized `k`. Zero when `k > n`.
pub fn binomial(n: &BigNat, k: u64) -> BigNat {
    if BigNat::from(k) > *n {
        return BigNat::zero();
    }
    // C(n, i) = C(n, i-1) * (n - i + 1) / i, each quotient exact.
    let mut acc = BigNat::one();
    for i in 1..=k {
        acc *= n - BigNat::from(i - 1);
        acc /= BigNat::from(i);
    }
    acc
}

pub fn binomial_u64(n: u64, k: u64) -> BigNat {
    binomial(&BigNat::from(n), k)
}

pub fn factorial(n: u64) -> BigNat {
    (1..=n).fold(BigNat::one(), |acc, i| acc * BigNat::from(i))
}

/// `top! / bottom!` as a falling product. Requires `bottom <= top`.
pub fn factorial_ratio(top: u64, bottom: u64) -> Result<BigNat> {
    if bottom > top {
        return Err(Error::Domain(format!(
            "factorial ratio {top}!/{bottom}! is not an integer"
        )));
    }
    Ok(((bottom + 1)..=top).fold(BigNat::one(), |acc, i| acc * BigNat::from(i)))
}

/// Divides `numerator` by `denominator`, failing on any remainder.
pub fn exact_div(
    numerator: &BigInt,
    denominator: &BigInt,
    context: &'static str,
) -> Result<BigInt> {
    let (q, r) = numerator.div_rem(denominator);
    if !r.is_zero() {
        return Err(Error::NotIntegral {
            context,
            numerator: numerator.to_string(),
            denominator: denominator.to_string(),
        });
    }
    Ok(q)
}

pub fn exact_div_nat(
    numerator: &BigNat,
    denominator: &BigNat,
    context: &'static str,
) -> Result<BigNat> {
    let (q, r) = numerator.div_rem(denominator);
    if !r.is_zero() {
        return Err(Error::NotIntegral {
            context,
            numerator: numerator.to_string(),
            denominator: denominator.to_string(),
        });
    }
    Ok(q)
}

/// Converts a signed intermediate back to a count.
pub fn to_nat(value: BigInt, context: &'static str) -> Result<BigNat> {
    if value.is_negative() {
        return Err(Error::Internal(format!("{context} produced negative count {value}")));
    }
    Ok(value.into_parts().1)
}

pub fn signed(n: &BigNat) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n.clone())
}

/// `ceil(numerator / denominator)` for nonnegative operands.
pub fn ceil_div(numerator: &BigNat, denominator: &BigNat) -> BigNat {
    let (q, r) = numerator.div_rem(denominator);
    if r.is_zero() {
        q
    } else {
        q + 1u32
    }
}

pub fn pow2(exponent: u64) -> BigNat {
    BigNat::one() << exponent
}

/// `2^q + 1`, or `None` when `q` does not fit a machine word.
pub fn pow2_plus_one(q: &BigNat) -> Option<BigNat> {
    q.to_u64().map(|e| pow2(e) + 1u32)
}

/// Compares `2^q + 1` against `value` without materializing huge powers.
pub fn pow2_plus_one_cmp(q: &BigNat, value: &BigNat) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    // 2^q + 1 > 2^q >= 2^bits(value) > value once q >= bits(value).
    if *q >= BigNat::from(value.bits()) {
        return Ordering::Greater;
    }
    let e = q.to_u64().expect("q below a bit length fits in u64");
    (pow2(e) + 1u32).cmp(value)
}

#[cfg(test)]
fn nat(n: u64) -> BigNat {
    BigNat::from(n)
}
