use crate::SemanticsMode;

/// The mode whose `Xi` values match every published table entry.
///
/// `discrepancy::discover_canonical_mode` recomputes this from scratch; the
/// test suite fails if the two ever disagree.
pub const CANONICAL_MODE: SemanticsMode = SemanticsMode::Tabulated;
