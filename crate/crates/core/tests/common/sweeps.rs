//! Oracle sweeps shared by the agreement tests and the acceptance run. Each
//! returns the number of cases checked, or a description of the first
//! disagreement.

use num_bigint::{BigInt, BigUint};
use obliteration::bounds::{phi, vartheta};
use obliteration::sylvester::sylvester_lambda;
use obliteration::tschirnhaus::{
    lambda2_lower_bound, reduce_type_to_quadric_stage, xi, xi_from_stage, xi_lower_bound, QuadricStage,
};
use obliteration::typealgebra::{add_hyperplanes, cubics_closed, g_bound, quadrics_closed, quartics_closed};
use obliteration::{MultiDegree, SemanticsMode};

use super::oracle::{self, Branch};

pub type Sweep = Result<usize, String>;

pub const ENTRY_MAX: u64 = 30;

pub fn branch(mode: SemanticsMode) -> Branch {
    match mode {
        SemanticsMode::Corrected => Branch::Definition,
        SemanticsMode::AsPublished => Branch::Restored,
        SemanticsMode::Tabulated => Branch::Routine,
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn bigs(counts: &[u64]) -> Vec<BigUint> {
    counts.iter().map(|&c| big(c)).collect()
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(what()) }
}

pub fn quadric_closed_forms() -> Sweep {
    let mut n = 0;
    for a in 1..=ENTRY_MAX {
        for b in 0..=ENTRY_MAX {
            let expected = oracle::g_bound_naive(&[a, b]).ok_or("oracle unavailable")?;
            let got = quadrics_closed(&big(a), &big(b), SemanticsMode::Corrected).map_err(|e| e.to_string())?;
            check(got == expected, || format!("quadrics [{a},{b}]: {got} vs {expected}"))?;
            n += 1;
        }
    }
    Ok(n)
}

pub fn cubic_closed_forms() -> Sweep {
    let mut n = 0;
    for a in 1..=ENTRY_MAX {
        for b in 0..=ENTRY_MAX {
            for c in 0..=ENTRY_MAX {
                let expected = oracle::loop_obliterate(&bigs(&[a, b, c])).ok_or("oracle unavailable")?;
                let got = cubics_closed(&big(a), &big(b), &big(c)).map_err(|e| e.to_string())?;
                check(got.counts() == expected.as_slice(), || format!("cubics [{a},{b},{c}]: {got}"))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

pub fn quartic_closed_forms() -> Sweep {
    let mut n = 0;
    for a in 1..=ENTRY_MAX {
        for b in 0..=ENTRY_MAX {
            for c in 0..=ENTRY_MAX {
                for d in 0..=ENTRY_MAX {
                    let expected = oracle::loop_obliterate(&bigs(&[a, b, c, d])).ok_or("oracle unavailable")?;
                    let got = quartics_closed(&big(a), &big(b), &big(c), &big(d), SemanticsMode::Corrected)
                        .map_err(|e| e.to_string())?;
                    check(got.counts() == expected.as_slice(), || format!("quartics [{a},{b},{c},{d}]: {got}"))?;
                    n += 1;
                }
            }
        }
    }
    Ok(n)
}

/// Every canonical type of the given length with entries in `[0, max]`.
pub fn all_types(len: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = (1..=max).map(|a| vec![a]).collect();
    for _ in 1..len {
        out = out
            .into_iter()
            .flat_map(|t| (0..=max).map(move |c| [t.clone(), vec![c]].concat()))
            .collect();
    }
    out
}

pub fn sylvester_lambda_exhaustive() -> Sweep {
    let mut n = 0;
    for len in 2..=6 {
        for t in all_types(len, 6) {
            let expected = oracle::lambda_naive(&t).ok_or("oracle unavailable")?;
            let got = sylvester_lambda(&MultiDegree::from_u64s(&t).unwrap()).map_err(|e| e.to_string())?;
            check(got.counts() == expected.as_slice(), || format!("lambda {t:?}: {got}"))?;
            n += 1;
        }
    }
    Ok(n)
}

/// `Xi` against the exhaustive minimum, both on loop-reduced Tschirnhaus
/// stages and on every synthetic stage with `lambda2 <= 64`.
pub fn xi_exhaustive() -> Sweep {
    let mut n = 0;
    for d in 3..=6u64 {
        for m in (d + 2)..=(d + 12) {
            for mode in [SemanticsMode::Corrected, SemanticsMode::Tabulated] {
                let Some(expected) = oracle::xi_naive(m, d, branch(mode)) else { continue };
                let got = xi(m, d, mode).map_err(|e| e.to_string())?.xi;
                check(got == expected, || format!("Xi({m}, {d}) {mode}: {got} vs {expected}"))?;
                n += 1;
            }
        }
    }
    for l2 in 1..=64u64 {
        for l1 in [0u64, 1, l2, 3 * l2 + 7, 1000, 1 << 40] {
            for mode in SemanticsMode::ALL {
                let stage = QuadricStage { lambda2: big(l2), lambda1: big(l1) };
                let got = xi_from_stage(9, 4, stage, mode).map_err(|e| e.to_string())?.xi;
                let expected = oracle::xi_naive_from_stage(9, 4, l2, &big(l1), branch(mode)).ok_or("oracle unavailable")?;
                check(got == expected, || format!("stage [{l2},{l1}] {mode}: {got} vs {expected}"))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

/// `g(t + one hyperplane) = g(t) + 1` on `cases` pseudo-random types.
pub fn hyperplane_identity(cases: usize) -> Sweep {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = |bound: u64| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state % bound
    };
    for _ in 0..cases {
        let len = 1 + next(5) as usize;
        let mut counts = vec![1 + next(6)];
        counts.extend((1..len).map(|_| next(7)));
        let t = MultiDegree::from_u64s(&counts).unwrap();
        let plus = add_hyperplanes(&t, &big(1));
        let (a, b) = (g_bound(&plus).map_err(|e| e.to_string())?, g_bound(&t).map_err(|e| e.to_string())?);
        check(a == &b + 1u32, || format!("hyperplane identity on {t}: {a} vs {b} + 1"))?;
    }
    Ok(cases)
}

pub fn lower_bounds() -> Sweep {
    let mut n = 0;
    for mode in SemanticsMode::ALL {
        for d in 4..=6u64 {
            for m in (d + 2)..=(d + 14) {
                let report = xi(m, d, mode).map_err(|e| e.to_string())?;
                let bound = xi_lower_bound(m, d).map_err(|e| e.to_string())?;
                check(report.xi >= bound, || format!("Xi({m}, {d}) {mode} below {bound}"))?;
                check(report.lambda1 >= report.lambda2, || format!("lambda1 < lambda2 at ({m}, {d}) {mode}"))?;
                n += 1;
            }
        }
        for d in 3..=6u64 {
            for top in 2..=8u64 {
                let mut counts = vec![top];
                counts.extend(std::iter::repeat_n(0, d as usize - 1));
                let stage = reduce_type_to_quadric_stage(&MultiDegree::from_u64s(&counts).unwrap(), mode)
                    .map_err(|e| e.to_string())?;
                let bound = lambda2_lower_bound(d, &big(top)).map_err(|e| e.to_string())?;
                check(stage.lambda2 >= bound, || format!("lambda2 of [{top}; {d}] {mode} below {bound}"))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

pub fn vartheta_minimality() -> Sweep {
    let mut n = 0;
    for d in 3..=10 {
        for k in 1..=10 {
            let got = vartheta(d, k).map_err(|e| e.to_string())?;
            let expected = big(oracle::vartheta_naive(d, k));
            check(got == expected, || format!("vartheta({d}, {k}): {got} vs {expected}"))?;
            n += 1;
        }
    }
    Ok(n)
}

pub fn phi_evaluation() -> Sweep {
    let mut n = 0;
    for d in 4..=9u64 {
        for k in 1..=8u64 {
            let theta = oracle::vartheta_naive(d, k);
            let factorial = oracle::factorial_naive(d + k) / oracle::factorial_naive(d);
            let dimension = BigInt::from(oracle::binomial_naive(theta + d + 1, d))
                - BigInt::from((theta + 1) * (theta + 1) + theta + d);
            let expected = factorial.max(BigUint::try_from(dimension).unwrap_or_default());
            let got = phi(d, k).map_err(|e| e.to_string())?;
            check(got == expected, || format!("phi({d}, {k}): {got} vs {expected}"))?;
            n += 1;
        }
    }
    Ok(n)
}
