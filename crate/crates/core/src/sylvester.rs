//! Sylvester's formula of obliteration.
//!
//! Sylvester's bookkeeping passes to a *completed emanant*: all polars of the
//! system at a solution, including those of the hypersurface being removed,
//! plus one linear form. It therefore differs from
//! [`typealgebra::obliterate_top_degree`](crate::typealgebra::obliterate_top_degree)
//! and the two must not be expected to agree.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{binomial, exact_div, signed, to_nat};
use crate::{BigNat, Error, MultiDegree, Result};

/// Type of the completed emanant subsystem after one top-degree hypersurface
/// has been accounted for: top count drops by one, every lower slot becomes
/// the number of original hypersurfaces of that degree or higher, and the
/// linear slot gains the completing hyperplane.
pub fn emanant_step(t: &MultiDegree) -> Result<MultiDegree> {
    if t.top_degree() < 2 {
        return Err(Error::Precondition(format!("emanant step on linear type {t}")));
    }
    if t.top_count().is_zero() {
        return Err(Error::Precondition(format!(
            "emanant step on {t} needs a top-degree hypersurface"
        )));
    }
    let counts = t.counts();
    let mut out = Vec::with_capacity(counts.len());
    out.push(&counts[0] - 1u32);
    let mut running = counts[0].clone();
    for c in &counts[1..] {
        running += c;
        out.push(running.clone());
    }
    *out.last_mut().expect("length >= 2") += 1u32;
    MultiDegree::new(out)
}

/// The reduced type `[lambda_{d-1}, ..., lambda_2, lambda_1 + l_d]`.
///
/// `lambda_{d-j} = C(l_d+j-1, j)(j l_d + 1)/(j+1) + sum_{v<j} C(l_d+v-1, v) l_{d-j+v}`.
/// The first product is divisible by `j + 1`; a remainder is reported as
/// [`Error::NotIntegral`].
pub fn sylvester_lambda(t: &MultiDegree) -> Result<MultiDegree> {
    t.require_canonical()?;
    let d = t.top_degree();
    if d < 2 {
        return Err(Error::Precondition(format!("no formula of obliteration for linear type {t}")));
    }
    let top = t.top_count();
    // C(l_d + v - 1, v) for v in 0..d
    let weights: Vec<BigNat> = (0..d as u64)
        .map(|v| binomial(&(top + v - 1u32), v))
        .collect();
    let count = |degree: usize| t.count_of_degree(degree).expect("degree within type");

    let mut out = Vec::with_capacity(d - 1);
    for j in 1..d {
        let j_big = j as u64;
        let numerator = signed(&binomial(&(top + j_big - 1u32), j_big))
            * (BigInt::from(j_big) * signed(top) + 1);
        let leading = to_nat(
            exact_div(&numerator, &BigInt::from(j_big + 1), "formula of obliteration")?,
            "formula of obliteration",
        )?;
        let tail: BigNat = (0..j).map(|v| &weights[v] * count(d - j + v)).sum();
        out.push(leading + tail);
    }
    *out.last_mut().expect("d >= 2") += top;
    MultiDegree::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(counts: &[u64]) -> MultiDegree {
        MultiDegree::from_u64s(counts).unwrap()
    }

    fn iterate(t: &MultiDegree) -> MultiDegree {
        let mut current = t.clone();
        while !current.top_count().is_zero() {
            current = emanant_step(&current).unwrap();
        }
        MultiDegree::new(current.counts()[1..].to_vec()).unwrap()
    }

    #[test]
    fn emanant_examples() {
        assert_eq!(emanant_step(&ty(&[2, 0, 0])).unwrap(), ty(&[1, 2, 3]));
        assert_eq!(emanant_step(&ty(&[1, 2, 3])).unwrap(), ty(&[0, 3, 7]));
        assert_eq!(emanant_step(&ty(&[1, 0])).unwrap(), ty(&[0, 2]));
        assert!(emanant_step(&ty(&[0, 1])).is_err());
        assert!(emanant_step(&ty(&[3])).is_err());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(sylvester_lambda(&ty(&[1, 0, 0])).unwrap(), ty(&[1, 2]));
        assert_eq!(sylvester_lambda(&ty(&[2, 0, 0])).unwrap(), ty(&[3, 7]));
        assert_eq!(sylvester_lambda(&ty(&[1, 1, 1])).unwrap(), ty(&[2, 4]));
    }

    #[test]
    fn lambda_matches_emanant_iteration_on_small_types() {
        for a in 1..5u64 {
            for b in 0..4 {
                for c in 0..4 {
                    let t = ty(&[a, b, c, 1]);
                    assert_eq!(sylvester_lambda(&t).unwrap(), iterate(&t), "{t}");
                }
            }
        }
    }

    #[test]
    fn differs_from_geometric_obliteration() {
        let t = ty(&[2, 0, 0]);
        let geometric = crate::typealgebra::obliterate_top_degree(&t).unwrap();
        assert_ne!(sylvester_lambda(&t).unwrap(), geometric);
    }
}
