use std::fmt;

use crate::consistency::{check, Variant};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    BruteForceOptimal,
    TreeDpOptimal,
    /// Built by a reduction's forward construction.
    Constructed,
    UserSupplied,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::BruteForceOptimal => "brute-force-optimal",
            Provenance::TreeDpOptimal => "tree-dp-optimal",
            Provenance::Constructed => "constructed",
            Provenance::UserSupplied => "user-supplied",
        })
    }
}

/// A candidate (strict) consistent subset. The witness is kept sorted and
/// deduplicated; it is never empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    variant: Variant,
    witness: Vec<Vertex>,
    provenance: Provenance,
}

impl Certificate {
    pub fn new(variant: Variant, mut witness: Vec<Vertex>, provenance: Provenance) -> Result<Self> {
        witness.sort_unstable();
        witness.dedup();
        if witness.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(Certificate { variant, witness, provenance })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn witness(&self) -> &[Vertex] {
        &self.witness
    }

    pub fn size(&self) -> usize {
        self.witness.len()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.witness.binary_search(&v).is_ok()
    }

    /// Runs the checker matching the certificate's variant.
    pub fn verify(&self, g: &ColoredGraph) -> Result<bool> {
        check(g, &self.witness, self.variant)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_is_normalized() {
        let c = Certificate::new(Variant::Mcs, vec![3, 1, 3], Provenance::UserSupplied).unwrap();
        assert_eq!(c.witness(), &[1, 3]);
        assert_eq!(c.size(), 2);
        assert!(c.contains(3) && !c.contains(2));
        assert_eq!(Certificate::new(Variant::Mscs, vec![], Provenance::Constructed), Err(Error::EmptySubset));
    }
}
