//! The optimal reduction bound `Xi(m, d)` for polar cones of Tschirnhaus
//! complete intersections.
//!
//! Pipeline: build the type of an `(m-d-1)`-st polar cone of `tau_{1..d}`,
//! obliterate degrees `d` down to 3, then choose how many quadrics to keep.
//! Keeping `q` quadrics costs a polynomial of degree `2^q`; obliterating the
//! rest costs ambient dimension. `Xi` is the best trade-off.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{binomial_u64, ceil_div, exact_div, pow2, pow2_plus_one, pow2_plus_one_cmp, signed, to_nat};
use crate::typealgebra::{obliterate_top_degree, quartics_closed, cubics_closed};
use crate::{BigNat, Error, MultiDegree, Result, SemanticsMode};

/// A reduced type `[lambda2, lambda1]`: quadrics and hyperplanes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricStage {
    pub lambda2: BigNat,
    pub lambda1: BigNat,
}

/// One evaluated candidate: `q` quadrics kept and its `xi` value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiCandidate {
    pub q: BigNat,
    pub value: BigNat,
}

/// Everything computed on the way to `Xi(m, d)`.
///
/// `candidates` bracket the crossover between the exponential branch
/// `2^q + 1` and the linear branch. Ties in the minimum go to the larger `q`
/// (fewer quadrics reduced, same bound).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiReport {
    pub m: u64,
    pub d: u64,
    pub mode: SemanticsMode,
    pub lambda2: BigNat,
    pub lambda1: BigNat,
    /// Smallest `q` at which the exponential branch reaches the linear one.
    pub crossover_q: BigNat,
    pub candidates: Vec<XiCandidate>,
    pub minimizing_q: BigNat,
    pub xi: BigNat,
}

fn require_tschirnhaus_domain(d: u64, m: u64, min_d: u64) -> Result<()> {
    if d < min_d {
        return Err(Error::Domain(format!("degree d = {d} must be at least {min_d}")));
    }
    if m < d + 2 {
        return Err(Error::Domain(format!("m = {m} must be at least d + 2 = {}", d + 2)));
    }
    Ok(())
}

/// Type of an `(m-d-1)`-st polar cone of `tau_{1..d}`:
/// `[1, C(m-d, 1), C(m-d+1, 2), ..., C(m-2, d-1)]`.
pub fn tschirnhaus_polar_type(d: u64, m: u64) -> Result<MultiDegree> {
    require_tschirnhaus_domain(d, m, 2)?;
    let level = m - d - 1;
    MultiDegree::new((0..d).map(|i| binomial_u64(level + i, i)).collect())
}

/// Obliterates `t` down to its quadric stage.
///
/// Degrees five and up use exact obliteration; quartics and cubics use their
/// closed forms in `mode`. A slot whose count is zero is simply dropped.
pub fn reduce_type_to_quadric_stage(t: &MultiDegree, mode: SemanticsMode) -> Result<QuadricStage> {
    reduce_capped(t, mode, None).map(|stage| stage.expect("uncapped reduction always completes"))
}

/// Reduction that gives up (returning `None`) as soon as the quadric count is
/// known to exceed `cap`. Counts below the top degree never decrease under
/// obliteration, so the running quadric count is a lower bound on `lambda2`.
fn reduce_capped(t: &MultiDegree, mode: SemanticsMode, cap: Option<&BigNat>) -> Result<Option<QuadricStage>> {
    if t.top_degree() < 2 {
        return Err(Error::Precondition(format!("type {t} has no quadric stage")));
    }
    let exceeds = |ty: &MultiDegree| match cap {
        Some(cap) => ty.count_of_degree(2).is_some_and(|q| q > cap),
        None => false,
    };
    let mut current = t.clone();
    while current.top_degree() > 2 {
        if exceeds(&current) {
            return Ok(None);
        }
        let c = current.counts();
        current = if current.top_degree() > 4 || c[0].is_zero() {
            obliterate_top_degree(&current)?
        } else if current.top_degree() == 4 {
            quartics_closed(&c[0], &c[1], &c[2], &c[3], mode)?
        } else {
            cubics_closed(&c[0], &c[1], &c[2])?
        };
    }
    if exceeds(&current) {
        return Ok(None);
    }
    let mut counts = current.into_counts().into_iter();
    let lambda2 = counts.next().expect("two slots");
    let lambda1 = counts.next().expect("two slots");
    Ok(Some(QuadricStage { lambda2, lambda1 }))
}

/// `[lambda2, lambda1]` for the Tschirnhaus polar cone of `(d, m)`.
pub fn reduce_to_quadric_stage(d: u64, m: u64, mode: SemanticsMode) -> Result<QuadricStage> {
    require_tschirnhaus_domain(d, m, 3)?;
    reduce_type_to_quadric_stage(&tschirnhaus_polar_type(d, m)?, mode)
}

/// The linear (dimension) branch of `xi` when `q` quadrics are kept.
fn linear_branch(m: u64, d: u64, q: &BigNat, stage: &QuadricStage, mode: SemanticsMode) -> Result<BigNat> {
    const CTX: &str = "quadric-stage dimension";
    let offset = BigInt::from(m - d + 1);
    let l2 = signed(&stage.lambda2);
    let l1 = signed(&stage.lambda1);
    let qs = signed(q);
    let value = match mode {
        SemanticsMode::Corrected => {
            // sum_{v = q}^{l2 - 1} v = j l2 - j(j+1)/2 with j = l2 - q
            let j = &l2 - &qs;
            let sum = &j * &l2 - exact_div(&(&j * (&j + 1)), &BigInt::from(2), CTX)?;
            offset + &qs + l1 + sum
        }
        SemanticsMode::AsPublished => {
            let removed = exact_div(&(&l2 * (&l2 + 1) - &qs * (&qs + 1)), &BigInt::from(2), CTX)?;
            l1 + removed + offset
        }
        SemanticsMode::Tabulated => {
            let removed = exact_div(&(&l2 * (&l2 + 1) - &qs * (&qs + 1)), &BigInt::from(2), CTX)?;
            // Only the single-quadric candidate carries the hyperplane count.
            let base = if q.is_one() { l1 } else { qs };
            base + removed + offset
        }
    };
    to_nat(value, CTX)
}

fn require_q(q: &BigNat, stage: &QuadricStage) -> Result<()> {
    if q.is_zero() || q > &stage.lambda2 {
        return Err(Error::Domain(format!(
            "q = {q} must lie in [1, {}]",
            stage.lambda2
        )));
    }
    Ok(())
}

/// `xi` for `q = lambda2 - j` remaining quadrics:
/// `max(linear branch, 2^q + 1)`.
pub fn xi_candidate(
    m: u64,
    d: u64,
    q: &BigNat,
    lambda2: &BigNat,
    lambda1: &BigNat,
    mode: SemanticsMode,
) -> Result<BigNat> {
    let stage = QuadricStage { lambda2: lambda2.clone(), lambda1: lambda1.clone() };
    require_q(q, &stage)?;
    candidate_value(m, d, q, &stage, mode)
}

fn candidate_value(m: u64, d: u64, q: &BigNat, stage: &QuadricStage, mode: SemanticsMode) -> Result<BigNat> {
    let linear = linear_branch(m, d, q, stage, mode)?;
    match pow2_plus_one_cmp(q, &linear) {
        Ordering::Greater => pow2_plus_one(q).ok_or_else(|| {
            Error::Domain(format!("2^{q} + 1 is too large to materialize"))
        }),
        _ => Ok(linear),
    }
}

/// Smallest `q` in `[1, lambda2]` with `2^q + 1 >= linear(q)`, or `lambda2`
/// if there is none. Doubling then bisection; the predicate is monotone
/// because the exponential branch increases and the linear one does not.
fn crossover(m: u64, d: u64, stage: &QuadricStage, mode: SemanticsMode) -> Result<BigNat> {
    let reached = |q: &BigNat| -> Result<bool> {
        Ok(pow2_plus_one_cmp(q, &linear_branch(m, d, q, stage, mode)?) != Ordering::Less)
    };
    let top = &stage.lambda2;
    let mut lo = BigNat::zero(); // predicate false (or unknown) at lo
    let mut hi = BigNat::one();
    loop {
        if &hi >= top {
            hi = top.clone();
            if !reached(&hi)? {
                return Ok(hi);
            }
            break;
        }
        if reached(&hi)? {
            break;
        }
        lo = hi.clone();
        hi <<= 1u8;
    }
    // reached(hi) holds and reached(lo) fails (lo = 0 is a sentinel).
    while &hi - &lo > BigNat::one() {
        let mid: BigNat = (&lo + &hi) >> 1u8;
        if reached(&mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// `Xi` from an already reduced quadric stage.
pub fn xi_from_stage(m: u64, d: u64, stage: QuadricStage, mode: SemanticsMode) -> Result<XiReport> {
    if stage.lambda2.is_zero() {
        return Err(Error::Domain(format!(
            "Xi({m}, {d}) is degenerate: the reduced type has no quadrics to trade against"
        )));
    }
    let q_star = crossover(m, d, &stage, mode)?;
    let mut candidates = Vec::with_capacity(3);
    let low = if q_star > BigNat::one() { &q_star - 1u32 } else { q_star.clone() };
    let mut q = low;
    while q <= &q_star + 1u32 && q <= stage.lambda2 {
        let value = candidate_value(m, d, &q, &stage, mode)?;
        candidates.push(XiCandidate { q: q.clone(), value });
        q += 1u32;
    }
    let best = candidates
        .iter()
        .min_by(|a, b| a.value.cmp(&b.value).then_with(|| b.q.cmp(&a.q)))
        .expect("at least q* is evaluated");
    Ok(XiReport {
        m,
        d,
        mode,
        minimizing_q: best.q.clone(),
        xi: best.value.clone(),
        crossover_q: q_star,
        candidates,
        lambda2: stage.lambda2,
        lambda1: stage.lambda1,
    })
}

/// The optimal reduction bound `Xi(m, d)`.
pub fn xi(m: u64, d: u64, mode: SemanticsMode) -> Result<XiReport> {
    let stage = reduce_to_quadric_stage(d, m, mode)?;
    xi_from_stage(m, d, stage, mode)
}

/// `Xi(m, d)` if it is at most `cap`, otherwise `None`. Uses `Xi >= lambda2`
/// to abandon hopeless reductions early.
pub(crate) fn xi_capped(m: u64, d: u64, mode: SemanticsMode, cap: Option<&BigNat>) -> Result<Option<BigNat>> {
    require_tschirnhaus_domain(d, m, 3)?;
    let Some(stage) = reduce_capped(&tschirnhaus_polar_type(d, m)?, mode, cap)? else {
        return Ok(None);
    };
    let report = xi_from_stage(m, d, stage, mode)?;
    Ok(match cap {
        Some(cap) if &report.xi > cap => None,
        _ => Some(report.xi),
    })
}

/// `ceil(4 ((m-d-1)/2)^(2d-4))`, a lower bound on `Xi(m, d)` for `d >= 4`.
pub fn xi_lower_bound(m: u64, d: u64) -> Result<BigNat> {
    require_tschirnhaus_domain(d, m, 4)?;
    let exponent = 2 * d - 4;
    let numerator = BigNat::from(m - d - 1).pow(exponent as u32) * 4u32;
    Ok(ceil_div(&numerator, &pow2(exponent)))
}

/// `ceil(2^(5-2d) (l_d - 1)^(2d-4))`, a lower bound on `lambda2` for the
/// pure type with `l_d` hypersurfaces of degree `d`.
pub fn lambda2_lower_bound(d: u64, top_count: &BigNat) -> Result<BigNat> {
    if d < 3 {
        return Err(Error::Domain(format!("degree d = {d} must be at least 3")));
    }
    if top_count < &BigNat::from(2u32) {
        return Err(Error::Domain(format!("top count {top_count} must be at least 2")));
    }
    let exponent = (2 * d - 4).to_u32().expect("small degree");
    let numerator = (top_count - 1u32).pow(exponent);
    Ok(ceil_div(&numerator, &pow2(2 * d - 5)))
}
