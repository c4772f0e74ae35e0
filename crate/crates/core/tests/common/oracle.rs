//! Naive reference implementations. Nothing here calls into the library; the
//! only shared dependency is `num-bigint`. `None` means the input is outside
//! the oracle's tractability guard.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

pub const G_ENTRY_GUARD: u64 = 10_000;
pub const STEP_BUDGET: u64 = 2_000_000;
pub const XI_LAMBDA2_GUARD: u64 = 20_000;
pub const LAMBDA_ENTRY_GUARD: u64 = 50;

/// Which linear branch to score quadric-stage candidates with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `(m-d+1) + q + lambda1 + sum_{v=q}^{lambda2-1} v`
    Definition,
    /// `lambda1 + (lambda2(lambda2+1) - q(q+1))/2 + (m-d+1)`
    Restored,
    /// As in the staged routine: `lambda1` only for `q = 1`, `q` otherwise.
    Routine,
}

fn step(list: &mut [BigUint]) {
    list[0] -= 1u32;
    let mut running = BigUint::zero();
    for slot in list.iter_mut() {
        running += &*slot;
        *slot = running.clone();
    }
    *list.last_mut().unwrap() += 1u32;
}

/// Removes the top slot by repeated single steps, counting against `budget`.
fn obliterate(list: &mut Vec<BigUint>, budget: &mut u64) -> bool {
    while !list[0].is_zero() {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        step(list);
    }
    list.remove(0);
    true
}

/// Runs the single-step loop from the top degree down to two slots.
pub fn loop_reduce(counts: &[BigUint], budget: &mut u64) -> Option<Vec<BigUint>> {
    let mut list = counts.to_vec();
    while list.len() > 2 {
        if !obliterate(&mut list, budget) {
            return None;
        }
    }
    Some(list)
}

/// Removes only the top slot.
pub fn loop_obliterate(counts: &[BigUint]) -> Option<Vec<BigUint>> {
    let mut list = counts.to_vec();
    let mut budget = STEP_BUDGET;
    obliterate(&mut list, &mut budget).then_some(list)
}

pub fn g_bound_naive(counts: &[u64]) -> Option<BigUint> {
    if counts.iter().any(|&c| c > G_ENTRY_GUARD) || counts.is_empty() || counts[0] == 0 {
        return None;
    }
    let list: Vec<BigUint> = counts.iter().map(|&c| BigUint::from(c)).collect();
    if list.len() == 1 {
        return Some(list[0].clone());
    }
    let mut budget = STEP_BUDGET;
    let mut list = loop_reduce(&list, &mut budget)?;
    while list[0] > BigUint::one() {
        if budget == 0 {
            return None;
        }
        budget -= 1;
        step(&mut list);
    }
    Some(&list[0] + &list[1])
}

fn binomial_row(n: u64) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![BigUint::one()];
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigUint::one());
        row = next;
    }
    row
}

pub fn binomial_naive(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    binomial_row(n)[k as usize].clone()
}

/// Type of the `(m-d-1)`-st polar cone of the Tschirnhaus complete
/// intersection, built by repeated prefix sums of `[1, 1, ..., 1]`.
pub fn tschirnhaus_type_naive(d: u64, m: u64) -> Vec<BigUint> {
    let mut list = vec![BigUint::one(); d as usize];
    for _ in 0..(m - d - 1) {
        let mut running = BigUint::zero();
        for slot in list.iter_mut() {
            running += &*slot;
            *slot = running.clone();
        }
    }
    list
}

pub fn quadric_stage_naive(d: u64, m: u64) -> Option<(BigUint, BigUint)> {
    let mut budget = STEP_BUDGET;
    let list = loop_reduce(&tschirnhaus_type_naive(d, m), &mut budget)?;
    Some((list[0].clone(), list[1].clone()))
}

fn linear(m: u64, d: u64, q: u64, l2: u64, l1: &BigUint, branch: Branch, sum: &BigUint) -> BigUint {
    let offset = BigUint::from(m - d + 1);
    let removed = (BigUint::from(l2) * (l2 + 1) - BigUint::from(q) * (q + 1)) / 2u32;
    match branch {
        Branch::Definition => offset + q + l1 + sum,
        Branch::Restored => l1 + removed + offset,
        Branch::Routine if q == 1 => l1 + removed + offset,
        Branch::Routine => BigUint::from(q) + removed + offset,
    }
}

/// Exhaustive minimum over every `q` in `[1, lambda2]`.
pub fn xi_naive_from_stage(m: u64, d: u64, l2: u64, l1: &BigUint, branch: Branch) -> Option<BigUint> {
    if l2 == 0 || l2 > XI_LAMBDA2_GUARD {
        return None;
    }
    let mut best: Option<BigUint> = None;
    let mut sum = BigUint::zero(); // sum_{v=q}^{l2-1} v
    let mut power = BigUint::one() << l2 as usize;
    for q in (1..=l2).rev() {
        let value = linear(m, d, q, l2, l1, branch, &sum).max(&power + 1u32);
        if best.as_ref().is_none_or(|b| &value < b) {
            best = Some(value);
        }
        sum += q - 1;
        power >>= 1;
    }
    best
}

/// Loop reduction followed by the exhaustive minimum.
pub fn xi_naive(m: u64, d: u64, branch: Branch) -> Option<BigUint> {
    let (l2, l1) = quadric_stage_naive(d, m)?;
    let l2: u64 = l2.try_into().ok()?;
    xi_naive_from_stage(m, d, l2, &l1, branch)
}

/// The minimal-quadrics routine exactly as staged: grow the number of kept
/// quadrics while `2^q < Dimension`, then compare the last two candidates.
pub fn minimal_quadrics_routine(m: u64, d: u64, a: &BigUint, b: &BigUint) -> BigUint {
    let a = BigInt::from(a.clone());
    let b = BigInt::from(b.clone());
    let mut dimension: BigInt = &b + (&a * &a + &a - 2u32) / 2u32;
    let mut q: u32 = 1;
    let mut dimensions = vec![dimension.clone()];
    while (BigInt::one() << q) < dimension {
        q += 1;
        let qb = BigInt::from(q);
        dimension = &qb + (&a * &a + &a - &qb * &qb - &qb) / 2u32;
        dimensions.push(dimension.clone());
    }
    let offset = BigInt::from(m - d + 1);
    // Negative indices wrap around, as list indexing does in the routine.
    let index = |i: i64| -> usize {
        if i < 0 { dimensions.len() - 1 } else { i as usize }
    };
    let list1 = [
        (BigInt::one() << (q - 1)) + 1,
        &dimensions[index(q as i64 - 2)] + &offset,
    ];
    let list2 = [(BigInt::one() << q) + 1, &dimensions[index(q as i64 - 1)] + &offset];
    let max1 = list1[0].clone().max(list1[1].clone());
    let max2 = list2[0].clone().max(list2[1].clone());
    let pick = |l: &[BigInt; 2]| if l[1] < l[0] { l[0].clone() } else { l[1].clone() };
    let chosen = if max2 < max1 { pick(&list2) } else { pick(&list1) };
    chosen.try_into().expect("nonnegative")
}

fn emanant(list: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![&list[0] - 1u32];
    let mut running = list[0].clone();
    for c in &list[1..] {
        running += c;
        out.push(running.clone());
    }
    *out.last_mut().unwrap() += 1u32;
    out
}

/// Iterates the completed-emanant step `l_d` times and drops the top slot.
pub fn lambda_naive(counts: &[u64]) -> Option<Vec<BigUint>> {
    if counts.len() < 2 || counts[0] == 0 || counts.iter().any(|&c| c > LAMBDA_ENTRY_GUARD) {
        return None;
    }
    let mut list: Vec<BigUint> = counts.iter().map(|&c| BigUint::from(c)).collect();
    for _ in 0..counts[0] {
        list = emanant(&list);
    }
    list.remove(0);
    Some(list)
}

/// Smallest `r >= 1` with `(k+1)(r-k) >= sum_{j=2}^d C(k+j, j)`, by search.
pub fn vartheta_naive(d: u64, k: u64) -> u64 {
    let target: BigUint = (2..=d).map(|j| binomial_naive(k + j, j)).sum();
    let target = BigInt::from(target);
    (1..)
        .find(|&r| BigInt::from(k + 1) * (BigInt::from(r) - BigInt::from(k)) >= target)
        .unwrap()
}

pub fn factorial_naive(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}
