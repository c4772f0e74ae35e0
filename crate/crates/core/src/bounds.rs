//! Bounding functions: thresholds `n` beyond which `RD(n) <= n - m`.
//!
//! `G` is the established bounding function, `G'` improves it on
//! `[13, 17]` and `[22, 25]` using `Xi`, and `H` is the hypothetical function
//! obtained by using `Xi` for every degree. The crossover scans (`m_d`, `M_d`)
//! record where each degree starts to win.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, binomial_u64, ceil_div, exact_div_nat, factorial, factorial_ratio, signed};
use crate::table::{BoundTable, TableRow};
use crate::tschirnhaus::{xi, xi_capped};
use crate::{BigNat, Error, Result, SemanticsMode};

/// Published values of `G(m)` for `m` in `[1, 14]`.
pub const G_TABLE: [u64; 14] = [
    2, 3, 4, 5, 9, 21, 109, 325, 1681, 15121, 151_201, 1_663_201, 19_958_401, 259_459_201,
];

/// Where `G'` uses `Xi(m, 5)`.
pub const XI5_RANGE: RangeInclusive<u64> = 13..=17;
/// Where `G'` uses `Xi(m, 6)`.
pub const XI6_RANGE: RangeInclusive<u64> = 22..=25;

const SCAN_LIMIT: u64 = 1000;

/// `(k+1)(r-k) - sum_{j=2}^{d} C(k+j, j)`, the quantity whose first
/// nonnegative value defines `vartheta`.
fn vartheta_slack(d: u64, k: u64, r: &BigInt) -> BigInt {
    let sum: BigNat = (2..=d).map(|j| binomial_u64(k + j, j)).sum();
    BigInt::from(k + 1) * (r - BigInt::from(k)) - signed(&sum)
}

/// Minimal `r >= 1` with `(k+1)(r-k) >= sum_{j=2}^{d} C(k+j, j)`.
///
/// Evaluated in closed form as `k + ceil((C(k+d+1, d) - (k+2)) / (k+1))` and
/// then checked against the defining inequality at `r` and `r - 1`.
pub fn vartheta(d: u64, k: u64) -> Result<BigNat> {
    if d < 3 || k < 1 {
        return Err(Error::Domain(format!("vartheta({d}, {k}) needs d >= 3 and k >= 1")));
    }
    let excess = binomial_u64(k + d + 1, d) - BigNat::from(k + 2);
    let r = BigNat::from(k) + ceil_div(&excess, &BigNat::from(k + 1));
    let at_r = vartheta_slack(d, k, &signed(&r));
    let below = vartheta_slack(d, k, &(signed(&r) - 1));
    if at_r.is_negative() || (!below.is_negative() && r > BigNat::one()) {
        return Err(Error::Internal(format!(
            "vartheta({d}, {k}) = {r} fails its minimality check"
        )));
    }
    Ok(r)
}

/// Both branches of `phi(d, k)`, before taking the maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiBranches {
    /// `(d+k)! / d!`
    pub factorial: BigNat,
    /// `C(vartheta+d+1, d) - (vartheta+1)^2 - (vartheta+d)`; may be negative.
    pub dimension: BigInt,
}

pub fn phi_branches(d: u64, k: u64) -> Result<PhiBranches> {
    if d < 4 {
        return Err(Error::Domain(format!("phi({d}, {k}) needs d >= 4")));
    }
    let theta = vartheta(d, k)?;
    let big_d = BigNat::from(d);
    let dimension = signed(&binomial(&(&theta + &big_d + 1u32), d))
        - signed(&((&theta + 1u32) * (&theta + 1u32)))
        - signed(&(&theta + &big_d));
    Ok(PhiBranches {
        factorial: factorial_ratio(d + k, d)?,
        dimension,
    })
}

/// `max((d+k)!/d!, C(vartheta+d+1, d) - (vartheta+1)^2 - (vartheta+d))`.
/// A negative second branch counts as zero.
pub fn phi(d: u64, k: u64) -> Result<BigNat> {
    let b = phi_branches(d, k)?;
    let dimension = if b.dimension.is_negative() {
        BigNat::zero()
    } else {
        b.dimension.into_parts().1
    };
    Ok(b.factorial.max(dimension))
}

/// Degrees `d` in `[4, m-2]` that attain the minimum in `G(m)` and the value.
fn g_formula(m: u64) -> Result<(BigNat, Vec<u64>)> {
    if m < 6 {
        return Err(Error::Domain(format!("the formula for G needs m >= 6, got {m}")));
    }
    let values = (4..=m - 2)
        .map(|d| Ok((d, BigNat::one() + phi(d, m - d - 1)?)))
        .collect::<Result<Vec<_>>>()?;
    let min = values.iter().map(|(_, v)| v).min().expect("non-empty range").clone();
    let argmin = values.iter().filter(|(_, v)| *v == min).map(|(d, _)| *d).collect();
    Ok((min, argmin))
}

/// The bounding function `G(m)`.
pub fn g_function(m: u64) -> Result<BigNat> {
    match m {
        0 => Err(Error::Domain("G(m) needs m >= 1".into())),
        1..=14 => Ok(BigNat::from(G_TABLE[m as usize - 1])),
        _ => g_formula(m).map(|(v, _)| v),
    }
}

/// `(m-1)!/divisor + 1`, with the quotient checked exact.
pub fn factorial_branch(m: u64, divisor_degree: u64) -> Result<BigNat> {
    if m == 0 {
        return Err(Error::Domain("factorial branch needs m >= 1".into()));
    }
    let quotient = exact_div_nat(&factorial(m - 1), &factorial(divisor_degree), "factorial branch")?;
    Ok(quotient + 1u32)
}

/// The improved bounding function `G'(m)`.
pub fn g_prime(m: u64, mode: SemanticsMode) -> Result<BigNat> {
    let improved = |d: u64| -> Result<BigNat> {
        Ok(xi(m, d, mode)?.xi.max(factorial_branch(m, d)?))
    };
    if XI5_RANGE.contains(&m) {
        improved(5)
    } else if XI6_RANGE.contains(&m) {
        improved(6)
    } else {
        g_function(m)
    }
}

/// `max(Xi(d+k+1, d), (d+k)!/d! + 1)`.
pub fn varrho(d: u64, k: u64, mode: SemanticsMode) -> Result<BigNat> {
    varrho_capped(d, k, mode, None).map(|v| v.expect("uncapped"))
}

fn varrho_capped(d: u64, k: u64, mode: SemanticsMode, cap: Option<&BigNat>) -> Result<Option<BigNat>> {
    if d < 4 || k < 1 {
        return Err(Error::Domain(format!("varrho({d}, {k}) needs d >= 4 and k >= 1")));
    }
    let factorial = factorial_ratio(d + k, d)? + 1u32;
    if cap.is_some_and(|cap| &factorial > cap) {
        return Ok(None);
    }
    Ok(xi_capped(d + k + 1, d, mode, cap)?.map(|x| x.max(factorial)))
}

/// `H(m)` and the degrees attaining it.
pub fn h_function_detailed(m: u64, mode: SemanticsMode) -> Result<(BigNat, Vec<u64>)> {
    if m < 13 {
        return Err(Error::Domain(format!("H(m) needs m >= 13, got {m}")));
    }
    let mut best: Option<BigNat> = None;
    let mut seen = Vec::new();
    for d in 4..=m - 2 {
        // Anything strictly above the running minimum can be abandoned early;
        // ties survive because the cap is inclusive.
        if let Some(value) = varrho_capped(d, m - d - 1, mode, best.as_ref())? {
            if best.as_ref().is_none_or(|b| &value < b) {
                best = Some(value.clone());
            }
            seen.push((d, value));
        }
    }
    let best = best.expect("d = 4 is never pruned");
    let argmin = seen.into_iter().filter(|(_, v)| *v == best).map(|(d, _)| d).collect();
    Ok((best, argmin))
}

pub fn h_function(m: u64, mode: SemanticsMode) -> Result<BigNat> {
    h_function_detailed(m, mode).map(|(v, _)| v)
}

/// Smallest `m` with `G(m) = 1 + phi(d, m-d-1)`.
pub fn crossover_g(d: u64) -> Result<u64> {
    if d < 4 {
        return Err(Error::Domain(format!("crossover for G needs d >= 4, got {d}")));
    }
    for m in (d + 2)..=SCAN_LIMIT {
        let hit = if m <= 14 {
            g_function(m)? == BigNat::one() + phi(d, m - d - 1)?
        } else {
            g_formula(m)?.1.contains(&d)
        };
        if hit {
            return Ok(m);
        }
    }
    Err(Error::Domain(format!("no crossover for d = {d} below m = {SCAN_LIMIT}")))
}

/// Smallest `m >= 13` with `H(m) = varrho(d, m-d-1)`.
pub fn crossover_h(d: u64, mode: SemanticsMode) -> Result<u64> {
    if d < 4 {
        return Err(Error::Domain(format!("crossover for H needs d >= 4, got {d}")));
    }
    for m in (d + 2).max(13)..=SCAN_LIMIT {
        if h_function_detailed(m, mode)?.1.contains(&d) {
            return Ok(m);
        }
    }
    Err(Error::Domain(format!("no crossover for d = {d} below m = {SCAN_LIMIT}")))
}

/// `(m_d, M_d)` for each `d` in the range, as a table.
pub fn crossover_intervals(degrees: RangeInclusive<u64>, mode: SemanticsMode) -> Result<BoundTable> {
    let rows = degrees
        .map(|d| {
            Ok(TableRow {
                key: d.to_string(),
                values: vec![BigNat::from(crossover_g(d)?), BigNat::from(crossover_h(d, mode)?)],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundTable {
        name: "crossover".into(),
        column_labels: vec!["d".into(), "m_d".into(), "M_d".into()],
        rows,
    })
}

/// Result of an `RD(n)` query: `RD(n) <= n - m = bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RdBound {
    pub m: u64,
    pub bound: BigNat,
}

/// Largest `m` with `G'(m) <= n`, and the resulting bound `n - m`.
///
/// The scan covers every `m` up to 26 and then stops at the first `m` with
/// `G(m) > n` and `1 + phi(m-1, 1) > n`. Since `phi(d, k)` is nondecreasing
/// in `k` and `phi(d, 1)` is nondecreasing in `d`, every later `G(m')` is at
/// least the smaller of those two, so no later `m'` can qualify.
pub fn rd_upper_bound(n: &BigNat, mode: SemanticsMode) -> Result<RdBound> {
    if n < &BigNat::from(2u32) {
        return Err(Error::Domain(format!("RD(n) bounds need n >= 2, got {n}")));
    }
    let mut best = 0;
    for m in 1..=SCAN_LIMIT {
        let value = g_prime(m, mode)?;
        if &value <= n {
            best = m;
        } else if m >= 26 && BigNat::one() + phi(m - 1, 1)? > *n {
            let bound = n - BigNat::from(best);
            return Ok(RdBound { m: best, bound });
        }
    }
    Err(Error::Domain(format!("n = {n} is beyond the supported scan (m <= {SCAN_LIMIT})")))
}
