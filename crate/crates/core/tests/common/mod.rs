#![allow(dead_code)]

pub mod oracle;
pub mod sweeps;

use num_bigint::BigUint;
use obliteration::MultiDegree;

pub fn ty(counts: &[u64]) -> MultiDegree {
    MultiDegree::from_u64s(counts).unwrap()
}

pub fn big(v: u64) -> BigUint {
    BigUint::from(v)
}
