use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::{BigNat, Error, Result};

/// The type of an intersection of hypersurfaces.
///
/// `counts[0]` is the number of hypersurfaces of the top degree `d`, where `d`
/// is the length of the vector, and the last entry counts hyperplanes. Entries
/// may be zero; a type is *canonical* when its top count is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiDegree {
    counts: Vec<BigNat>,
}

impl MultiDegree {
    pub fn new(counts: Vec<BigNat>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::MalformedType("a type needs at least one degree slot".into()));
        }
        Ok(MultiDegree { counts })
    }

    /// Like [`MultiDegree::new`] but also requires a positive top count.
    pub fn canonical(counts: Vec<BigNat>) -> Result<Self> {
        let t = MultiDegree::new(counts)?;
        t.require_canonical()?;
        Ok(t)
    }

    pub fn from_u64s(counts: &[u64]) -> Result<Self> {
        MultiDegree::new(counts.iter().map(|&c| BigNat::from(c)).collect())
    }

    pub fn counts(&self) -> &[BigNat] {
        &self.counts
    }

    pub fn into_counts(self) -> Vec<BigNat> {
        self.counts
    }

    /// The top degree, equal to the number of slots.
    pub fn top_degree(&self) -> usize {
        self.counts.len()
    }

    pub fn top_count(&self) -> &BigNat {
        &self.counts[0]
    }

    pub fn linear_count(&self) -> &BigNat {
        self.counts.last().expect("non-empty by construction")
    }

    /// Count of hypersurfaces of the given degree (1-based), if present.
    pub fn count_of_degree(&self, degree: usize) -> Option<&BigNat> {
        let len = self.counts.len();
        (1..=len).contains(&degree).then(|| &self.counts[len - degree])
    }

    pub fn is_canonical(&self) -> bool {
        !self.counts[0].is_zero()
    }

    pub(crate) fn require_canonical(&self) -> Result<()> {
        if self.is_canonical() {
            Ok(())
        } else {
            Err(Error::MalformedType(format!(
                "type {self} has no hypersurface of its top degree"
            )))
        }
    }

    pub(crate) fn counts_mut(&mut self) -> &mut Vec<BigNat> {
        &mut self.counts
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses comma-separated descending counts, e.g. `"1,1,1"` for a cubic, a
/// quadric and a hyperplane.
impl FromStr for MultiDegree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
        if trimmed.is_empty() {
            return Err(Error::MalformedType("empty type string".into()));
        }
        let counts = trimmed
            .split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<BigNat>()
                    .map_err(|_| Error::MalformedType(format!("{part:?} is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiDegree::new(counts)
    }
}
