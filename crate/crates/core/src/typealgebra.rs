//! Algebra on multidegree types: polar cones, Sylvester reductions and the
//! geometric dimension bound `g`.
//!
//! The stepwise loop (remove one top-degree hypersurface, pass to the polar
//! cone of what remains, add one hyperplane) is the ground truth. Everything
//! else in this module is an exact closed form of some number of those steps.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, exact_div, signed, to_nat};
use crate::{BigNat, Error, MultiDegree, Result, SemanticsMode};

/// Type of a polar cone: running prefix sums of the counts.
///
/// Each hypersurface of degree `e` contributes one polar of every degree
/// below `e`, so the count of degree `d - k` in the cone is the total number
/// of hypersurfaces of degree at least `d - k`.
pub fn polar_cone_type(t: &MultiDegree) -> MultiDegree {
    let mut acc = BigNat::zero();
    let counts = t
        .counts()
        .iter()
        .map(|c| {
            acc += c;
            acc.clone()
        })
        .collect();
    MultiDegree::new(counts).expect("same length as a non-empty type")
}

pub fn add_hyperplanes(t: &MultiDegree, extra: &BigNat) -> MultiDegree {
    let mut out = t.clone();
    *out.counts_mut().last_mut().expect("non-empty") += extra;
    out
}

/// One partial Sylvester reduction: drop a top-degree hypersurface, take the
/// polar cone of the rest and add one hyperplane.
pub fn partial_sylvester_step(t: &MultiDegree) -> Result<MultiDegree> {
    if t.top_count().is_zero() {
        return Err(Error::Precondition(format!(
            "partial Sylvester step on {t} needs a top-degree hypersurface"
        )));
    }
    let mut reduced = t.clone();
    reduced.counts_mut()[0] -= 1u32;
    Ok(add_hyperplanes(&polar_cone_type(&reduced), &BigNat::one()))
}

/// `steps` consecutive partial Sylvester steps in closed form.
///
/// A step is the affine map `v -> P (v - e_0) + e_last` with `P` the
/// lower-triangular all-ones matrix, and `P^s` has entries `C(s-1+i-j, i-j)`.
/// Summing the geometric series of the affine part gives, for `i >= 1`,
///
/// ```text
/// v_k[i] = sum_{j<=i} C(k-1+i-j, i-j) v_0[j] - C(k+i, i+1) + k [i = last]
/// ```
///
/// and `v_k[0] = v_0[0] - k`. Cost is quadratic in the degree and independent
/// of `steps`.
pub fn partial_sylvester_steps(t: &MultiDegree, steps: &BigNat) -> Result<MultiDegree> {
    let v = t.counts();
    if steps > &v[0] {
        return Err(Error::Precondition(format!(
            "cannot take {steps} partial Sylvester steps on {t}: only {} top-degree hypersurfaces",
            v[0]
        )));
    }
    if steps.is_zero() {
        return Ok(t.clone());
    }
    let len = v.len();
    // powers[r] = C(k-1+r, r); series[i] = C(k+i, i+1).
    let k_minus_one = steps - 1u32;
    let powers: Vec<BigNat> = (0..len as u64)
        .map(|r| binomial(&(&k_minus_one + r), r))
        .collect();
    let mut out = Vec::with_capacity(len);
    out.push(&v[0] - steps);
    for i in 1..len {
        let mut acc: BigNat = (0..=i).map(|j| &powers[i - j] * &v[j]).sum();
        let subtrahend = binomial(&(steps + i as u64), i as u64 + 1);
        if i == len - 1 {
            acc += steps;
        }
        if acc < subtrahend {
            return Err(Error::Internal(format!(
                "closed-form partial steps went negative on {t}"
            )));
        }
        out.push(acc - subtrahend);
    }
    MultiDegree::new(out)
}

/// First Sylvester reduction: obliterate every top-degree hypersurface, then
/// drop the exhausted slot. The result has one fewer degree.
pub fn obliterate_top_degree(t: &MultiDegree) -> Result<MultiDegree> {
    require_obliterable(t)?;
    let exhausted = partial_sylvester_steps(t, t.top_count())?;
    drop_top_slot(exhausted)
}

/// Literal loop form of [`obliterate_top_degree`]; runs `top_count` steps.
pub fn obliterate_top_degree_stepwise(t: &MultiDegree) -> Result<MultiDegree> {
    require_obliterable(t)?;
    let mut current = t.clone();
    while !current.top_count().is_zero() {
        current = partial_sylvester_step(&current)?;
    }
    drop_top_slot(current)
}

fn require_obliterable(t: &MultiDegree) -> Result<()> {
    if t.top_degree() < 2 {
        return Err(Error::Precondition(format!(
            "type {t} is purely linear; there is no degree to obliterate"
        )));
    }
    Ok(())
}

fn drop_top_slot(t: MultiDegree) -> Result<MultiDegree> {
    let mut counts = t.into_counts();
    counts.remove(0);
    MultiDegree::new(counts)
}

/// Successive Sylvester reductions `V_1, V_2, ...` of `t`, stopping at the
/// quadric stage (two slots) or after `limit` reductions.
pub fn sylvester_reductions(t: &MultiDegree, limit: Option<usize>) -> Result<Vec<MultiDegree>> {
    let mut out = Vec::new();
    let mut current = t.clone();
    while current.top_degree() > 2 && limit.is_none_or(|n| out.len() < n) {
        current = obliterate_top_degree(&current)?;
        out.push(current.clone());
    }
    Ok(out)
}

/// Geometric dimension bound `g` of a canonical type.
///
/// Obliterates degrees down to quadrics, reduces to a single quadric and
/// returns quadrics plus hyperplanes.
pub fn g_bound(t: &MultiDegree) -> Result<BigNat> {
    t.require_canonical()?;
    if t.top_degree() == 1 {
        return Ok(t.top_count().clone());
    }
    let mut current = t.clone();
    while current.top_degree() > 2 {
        current = obliterate_top_degree(&current)?;
    }
    let quadrics = current.top_count().clone();
    if quadrics > BigNat::one() {
        current = partial_sylvester_steps(&current, &(quadrics - 1u32))?;
    }
    let c = current.counts();
    Ok(&c[0] + &c[1])
}

/// `g` computed through the accelerated pipeline: loops down to quartics,
/// then the quartic, cubic and quadric closed forms in the given mode.
pub fn g_bound_accelerated(t: &MultiDegree, mode: SemanticsMode) -> Result<BigNat> {
    t.require_canonical()?;
    let mut current = t.clone();
    if current.top_degree() == 1 {
        return Ok(current.top_count().clone());
    }
    while current.top_degree() > 4 {
        current = obliterate_top_degree(&current)?;
    }
    if current.top_degree() == 4 {
        let c = current.counts();
        current = quartic_reduction(&c[0], &c[1], &c[2], &c[3], mode)?;
    }
    if current.top_degree() == 3 {
        let c = current.counts();
        current = cubic_reduction(&c[0], &c[1], &c[2])?;
    }
    let c = current.counts();
    quadric_bound(&c[0], &c[1], mode)
}

/// Closed form for `g` of a quadric-stage type `[l2, l1]`.
///
/// Loop-consistent modes give `1 + l1 + (l2 - 1)(l2 + 2)/2`; `AsPublished`
/// gives the printed accelerated value `1 + l1 + l2(l2 + 1)/2`, one larger.
pub fn quadrics_closed(l2: &BigNat, l1: &BigNat, mode: SemanticsMode) -> Result<BigNat> {
    require_positive(l2, "quadric closed form")?;
    quadric_bound(l2, l1, mode)
}

fn quadric_bound(l2: &BigNat, l1: &BigNat, mode: SemanticsMode) -> Result<BigNat> {
    let a = signed(l2);
    let b = signed(l1);
    let value = if mode.loop_consistent_reductions() {
        BigInt::one() + &b + half(&(&a - 1) * (&a + 2), "quadric closed form")?
    } else {
        BigInt::one() + &b + half(&a * (&a + 1), "quadric closed form (as published)")?
    };
    to_nat(value, "quadric closed form")
}

/// Closed form of [`obliterate_top_degree`] on `[l3, l2, l1]`, giving
/// `[beta, alpha]`.
pub fn cubics_closed(l3: &BigNat, l2: &BigNat, l1: &BigNat) -> Result<MultiDegree> {
    require_positive(l3, "cubic closed form")?;
    cubic_reduction(l3, l2, l1)
}

fn cubic_reduction(l3: &BigNat, l2: &BigNat, l1: &BigNat) -> Result<MultiDegree> {
    const CTX: &str = "cubic closed form";
    let (a, b, c) = (signed(l3), signed(l2), signed(l1));
    let beta = &b + half(&(&a - 1) * &a, CTX)?;
    let alpha = &c
        + &a * &b
        + half(&a * (&a + 1), CTX)?
        + div(&a * quadratic_2_3_1(&a), 6, CTX)?;
    MultiDegree::new(vec![to_nat(beta, CTX)?, to_nat(alpha, CTX)?])
}

/// Closed form of [`obliterate_top_degree`] on `[l4, l3, l2, l1]`, giving
/// `[gamma, beta, alpha]`.
///
/// `Corrected` and `Tabulated` agree with the loop. `AsPublished` keeps the
/// printed accelerated `beta`, whose middle term is `a(a+1)/2` instead of
/// `(a-1)a/2`, and so overshoots by `l4`.
pub fn quartics_closed(
    l4: &BigNat,
    l3: &BigNat,
    l2: &BigNat,
    l1: &BigNat,
    mode: SemanticsMode,
) -> Result<MultiDegree> {
    require_positive(l4, "quartic closed form")?;
    quartic_reduction(l4, l3, l2, l1, mode)
}

fn quartic_reduction(
    l4: &BigNat,
    l3: &BigNat,
    l2: &BigNat,
    l1: &BigNat,
    mode: SemanticsMode,
) -> Result<MultiDegree> {
    const CTX: &str = "quartic closed form";
    let (a, b, c, d) = (signed(l4), signed(l3), signed(l2), signed(l1));
    let cubic_sum = div(&a * quadratic_2_3_1(&a), 6, CTX)?;

    let gamma = &b + half(&(&a - 1) * &a, CTX)?;
    let beta = if mode.loop_consistent_reductions() {
        &c + &a * &b + half(&(&a - 1) * &a, CTX)? + &cubic_sum
    } else {
        &c + &a * &b + half(&a * (&a + 1), CTX)? + div(&(&a - 1) * &a * (2 * &a - 1), 6, CTX)?
    };
    let alpha = &d
        + &a * (&b + &c)
        + half(&a * (&a + 1), CTX)?
        + half(&a * &b * (&a - 1), CTX)?
        + div(&a * quadratic_2_3_1(&a), 3, CTX)?
        + div(&(&a - 2) * (&a - 1) * &a * (3 * &a - 1), 24, CTX)?;
    MultiDegree::new(vec![
        to_nat(gamma, CTX)?,
        to_nat(beta, CTX)?,
        to_nat(alpha, CTX)?,
    ])
}

/// `2a^2 - 3a + 1 = (a - 1)(2a - 1)`.
fn quadratic_2_3_1(a: &BigInt) -> BigInt {
    (a - 1) * (2 * a - 1)
}

fn half(numerator: BigInt, context: &'static str) -> Result<BigInt> {
    div(numerator, 2, context)
}

fn div(numerator: BigInt, denominator: i64, context: &'static str) -> Result<BigInt> {
    exact_div(&numerator, &BigInt::from(denominator), context)
}

fn require_positive(count: &BigNat, what: &str) -> Result<()> {
    if count.is_zero() {
        return Err(Error::Precondition(format!(
            "{what} needs at least one hypersurface of its top degree"
        )));
    }
    Ok(())
}
