//! Known inconsistencies between printed formulas, algorithms and tables, and
//! which variant each [`SemanticsMode`] follows.

use std::fmt::Write as _;

use crate::bounds::{crossover_g, g_function};
use crate::table::format_approximate;
use crate::tschirnhaus::xi;
use crate::typealgebra::{g_bound, quadrics_closed, quartics_closed};
use crate::{BigNat, MultiDegree, Result, SemanticsMode, CANONICAL_MODE};

/// Tabulated `Xi(m, 5)` for `m` in `[13, 17]`.
pub const TABULATED_XI5: [(u64, u64); 5] = [
    (13, 5_250_198),
    (14, 12_253_482),
    (15, 26_357_165),
    (16, 53_008_668),
    (17, 100_769_994),
];
/// Tabulated `Xi(22, 6)`.
pub const TABULATED_XI22_6: &str = "381918437071508900";
/// Tabulated roundings of `Xi(m, 6)` for `m` in `[23, 25]`.
pub const TABULATED_XI6_ROUNDED: [(u64, &str); 3] =
    [(23, "~9.526 × 10^17"), (24, "~2.262 × 10^18"), (25, "~5.137 × 10^18")];

/// How one mode fares against the tabulated values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeEvidence {
    pub mode: SemanticsMode,
    pub xi5: Vec<(u64, BigNat)>,
    pub xi22_6: BigNat,
    pub matches_xi5: bool,
    pub matches_xi6: bool,
}

impl ModeEvidence {
    pub fn matches(&self) -> bool {
        self.matches_xi5 && self.matches_xi6
    }
}

pub fn mode_evidence(mode: SemanticsMode) -> Result<ModeEvidence> {
    let xi5 = TABULATED_XI5
        .iter()
        .map(|&(m, _)| Ok((m, xi(m, 5, mode)?.xi)))
        .collect::<Result<Vec<_>>>()?;
    let matches_xi5 = xi5.iter().zip(TABULATED_XI5).all(|((_, got), (_, want))| *got == BigNat::from(want));
    let xi22_6 = xi(22, 6, mode)?.xi;
    let mut matches_xi6 = xi22_6.to_string() == TABULATED_XI22_6;
    for (m, rounded) in TABULATED_XI6_ROUNDED {
        matches_xi6 &= format_approximate(&xi(m, 6, mode)?.xi, 4) == rounded;
    }
    Ok(ModeEvidence { mode, xi5, xi22_6, matches_xi5, matches_xi6 })
}

/// The first mode reproducing every tabulated `Xi` value, if any.
pub fn discover_canonical_mode() -> Result<Option<SemanticsMode>> {
    for mode in SemanticsMode::ALL {
        if mode_evidence(mode)?.matches() {
            return Ok(Some(mode));
        }
    }
    Ok(None)
}

/// One line explaining why [`CANONICAL_MODE`] is canonical.
pub fn canonical_reason() -> String {
    format!(
        "{CANONICAL_MODE} is canonical: it is the mode that reproduces every tabulated Xi value \
         (Xi(13..17, 5) exactly, Xi(22, 6) = {TABULATED_XI22_6} and the rounded Xi(23..25, 6))"
    )
}

fn ty(counts: &[u64]) -> MultiDegree {
    MultiDegree::from_u64s(counts).expect("non-empty literal")
}

fn nat(v: u64) -> BigNat {
    BigNat::from(v)
}

/// The printed two-degree recursion `g(2; l2, l1) = g(2; l2 - 1, l2 + l1 + 1)`.
fn printed_quadric_recursion(l2: u64, l1: u64) -> u64 {
    if l2 <= 1 {
        l2 + l1
    } else {
        printed_quadric_recursion(l2 - 1, l2 + l1 + 1)
    }
}

/// Markdown report of every known inconsistency, with numeric evidence.
pub fn report() -> Result<String> {
    let mut out = String::new();
    let w = &mut out;
    let evidence = SemanticsMode::ALL.map(mode_evidence).into_iter().collect::<Result<Vec<_>>>()?;
    let discovered = discover_canonical_mode()?;

    writeln!(w, "# Discrepancies").unwrap();
    writeln!(w).unwrap();
    writeln!(w, "Canonical mode: `{CANONICAL_MODE}`.").unwrap();
    match discovered {
        Some(mode) => writeln!(w, "Rediscovered from the tables: `{mode}`.").unwrap(),
        None => writeln!(w, "No mode reproduces the tables.").unwrap(),
    }
    writeln!(w).unwrap();
    writeln!(w, "## Mode evidence").unwrap();
    writeln!(w).unwrap();
    writeln!(w, "| mode | Xi(13..17, 5) | Xi(22, 6) | matches |").unwrap();
    writeln!(w, "|---|---|---|---|").unwrap();
    for e in &evidence {
        let xi5: Vec<String> = e.xi5.iter().map(|(_, v)| v.to_string()).collect();
        writeln!(w, "| {} | {} | {} | {} |", e.mode, xi5.join(", "), e.xi22_6, e.matches()).unwrap();
    }
    let tabulated: Vec<String> = TABULATED_XI5.iter().map(|(_, v)| v.to_string()).collect();
    writeln!(w, "| table | {} | {TABULATED_XI22_6} | |", tabulated.join(", ")).unwrap();
    writeln!(w).unwrap();

    let mut item = |title: &str, body: String| {
        writeln!(w, "## {title}").unwrap();
        writeln!(w).unwrap();
        writeln!(w, "{body}").unwrap();
        writeln!(w).unwrap();
    };

    item(
        "Two-degree recursion",
        format!(
            "The printed recursion `g(2; l2, l1) = g(2; l2-1, l2+l1+1)` adds one hyperplane too many \
             per step. The loop gives `[l2-1, l2+l1]`. All modes follow the loop.\n\n\
             Evidence: on `[2,0]` the loop gives {} and the printed recursion gives {}.",
            g_bound(&ty(&[2, 0]))?,
            printed_quadric_recursion(2, 0),
        ),
    );
    item(
        "Interior-degree recursion",
        "The printed rule for `d >= 3, l_d >= 2` sums the linear slot over `j = 1..d-1` and so leaves \
         out `l_d`. The loop includes it, and all modes follow the loop."
            .into(),
    );
    let corrected = quartics_closed(&nat(2), &nat(1), &nat(0), &nat(0), SemanticsMode::Corrected)?;
    let published = quartics_closed(&nat(2), &nat(1), &nat(0), &nat(0), SemanticsMode::AsPublished)?;
    item(
        "Quartic closed form",
        format!(
            "The algorithm's quartic `beta` has middle term `a(a+1)/2` where the loop gives `(a-1)a/2`. \
             The stated quartic closed form also has a spurious `l3(l4+1)/2` in `alpha`. `corrected` and `tabulated` \
             use the loop values; `published` keeps the algorithm's `beta`.\n\n\
             Evidence: on `[2,1,0,0]` the loop form gives `[{corrected}]` and the printed `beta` gives `[{published}]`."
        ),
    );
    item(
        "Quadric closed form",
        format!(
            "The accelerated quadric value `1 + b + a(a+1)/2` is one more than the loop value \
             `1 + b + (a-1)(a+2)/2`. `published` keeps the printed value.\n\n\
             Evidence: on `[3,0]` the loop gives {} and the printed form gives {}.",
            quadrics_closed(&nat(3), &nat(0), SemanticsMode::Corrected)?,
            quadrics_closed(&nat(3), &nat(0), SemanticsMode::AsPublished)?,
        ),
    );
    let row = |mode: SemanticsMode| evidence.iter().find(|e| e.mode == mode).expect("all modes").xi5[0].1.clone();
    item(
        "Linear branch of Xi",
        format!(
            "The definition of `xi(m,d;j)` includes `lambda1` and the per-quadric sum for every `j`. \
             The minimal-quadrics routine adds `lambda1` only to its first candidate and scores later \
             candidates with `q + (lambda2(lambda2+1) - q(q+1))/2`. The tables follow the routine.\n\n\
             Evidence for Xi(13, 5): `corrected` {}, `published` {}, `tabulated` {}, table 5250198.",
            row(SemanticsMode::Corrected),
            row(SemanticsMode::AsPublished),
            row(SemanticsMode::Tabulated),
        ),
    );
    item(
        "Threshold stated twice",
        "The thresholds are stated once as 5,250,199 and 381,918,437,071,508,901. The tabulated \
         values are 5,250,198 and 381,918,437,071,508,900. The computed values match the table."
            .into(),
    );
    item(
        "Worked cubic example",
        format!(
            "A worked example states `g(3; 1,1,1) = 5`. Running the loop on `[1,1,1]` gives {}, \
             through the reduced type `[1,3]`.",
            g_bound(&ty(&[1, 1, 1]))?
        ),
    );
    item(
        "Domain of phi",
        format!(
            "`phi` is introduced for `d >= 15` but the `G` formula and the crossover values need it on \
             `d >= 4`. It is implemented on `d >= 4`. Evidence: with that domain the first `m` at which \
             degree 5 wins the minimum in `G` is {}, and G(14) = {} agrees with 1 + min phi.",
            crossover_g(5)?,
            g_function(14)?,
        ),
    );
    item(
        "Index in vartheta",
        "The sum defining `vartheta` is written over `j = 2..d` with summand `C(k+i, i)`. It is read \
         with `i = j`, which is the only reading consistent with the closed form `C(k+d+1, d) - (k+2)`."
            .into(),
    );
    item(
        "Returned sum",
        "The staged main routine ends with `Sum = List[0] = List[1]`. It is read as the sum of the two \
         remaining counts, which is the value `g` takes on a quadric-stage type with one quadric."
            .into(),
    );
    item(
        "Range of the minimum in G",
        "The minimum in `G(m)` runs over `d` in `[4, m-2]`, so that `k = m-d-1 >= 1` as `vartheta` \
         requires. Allowing `d = m-1` would let a `k = 0` term win and the crossover values would move."
            .into(),
    );
    Ok(out)
}
