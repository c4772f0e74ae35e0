//! Exact type-level obliteration for intersections of hypersurfaces.
//!
//! An intersection of hypersurfaces is tracked only through its *type*: the
//! number of defining hypersurfaces of each degree. This crate implements the
//! polar-cone map on types, Sylvester reductions, the geometric dimension
//! bound, Sylvester's formula of obliteration, the optimal reduction bound
//! `Xi(m, d)` for polar cones of Tschirnhaus complete intersections, and the
//! bounding functions `G`, `G'`, `H` used to bound resolvent degree.
//!
//! Every count is an arbitrary-precision integer; every rational expression is
//! evaluated numerator-first and divided exactly.
//!
//! ```
//! use obliteration::{tschirnhaus, SemanticsMode};
//!
//! let report = tschirnhaus::xi(13, 5, SemanticsMode::Tabulated).unwrap();
//! assert_eq!(report.xi.to_string(), "5250198");
//! ```

pub mod arith;
pub mod bounds;
mod canonical;
pub mod cli;
pub mod discrepancy;
mod error;
mod mode;
mod multidegree;
pub mod sylvester;
pub mod table;
pub mod tschirnhaus;
pub mod typealgebra;

pub use canonical::CANONICAL_MODE;
pub use error::{Error, Result};
pub use mode::SemanticsMode;
pub use multidegree::MultiDegree;

/// Arbitrary-precision nonnegative integer used for every count and bound.
pub type BigNat = num_bigint::BigUint;
