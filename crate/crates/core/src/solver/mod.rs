//! Explicit transposition sequences realizing the `k - 1` and `k - 2` upper
//! bounds.
//!
//! Every sequence returned here has been replayed from the canonical start
//! and checked to reach the target class; a mismatch is reported as
//! [`Error::ConstructionFailed`] and never papered over with search.

mod greedy;
mod lemma3;

use serde::{Deserialize, Serialize};

pub use greedy::greedy_upper_bound;
pub use lemma3::{lemma3_applicable, lemma3_solve, lemma3_solve_traced, Lemma3Case, PlanSource, SolverTrace};

use crate::error::{Error, Result};
use crate::sequence::TranspositionSequence;
use crate::string::CircularBinaryString;

/// Which of the two strings played the source role in a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    AsGiven,
    Swapped,
}

/// Where an upper bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperProvenance {
    Lemma3,
    Greedy,
    TrivialEqual,
}

impl std::fmt::Display for UpperProvenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            UpperProvenance::Lemma3 => "lemma3",
            UpperProvenance::Greedy => "greedy",
            UpperProvenance::TrivialEqual => "trivial_equal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperBound {
    pub length: usize,
    pub provenance: UpperProvenance,
    pub sequence: TranspositionSequence,
}

/// The shorter of the greedy and (when applicable) lemma-3 constructions.
pub fn best_upper_bound(s: &CircularBinaryString, t: &CircularBinaryString) -> Result<UpperBound> {
    if !s.compatible_with(t) {
        return Err(Error::Incompatible);
    }
    if s == t {
        return Ok(UpperBound {
            length: 0,
            provenance: UpperProvenance::TrivialEqual,
            sequence: TranspositionSequence::empty(s.clone()),
        });
    }
    let greedy = greedy_upper_bound(s, t)?;
    let mut best = UpperBound { length: greedy.len(), provenance: UpperProvenance::Greedy, sequence: greedy };
    if s.part_count() >= 2 {
        let ps = crate::partition::to_partition(s)?;
        let pt = crate::partition::to_partition(t)?;
        if lemma3_applicable(&ps, &pt)?.is_some() {
            let seq = lemma3_solve(s, t)?;
            if seq.len() <= best.length {
                best = UpperBound { length: seq.len(), provenance: UpperProvenance::Lemma3, sequence: seq };
            }
        }
    }
    Ok(best)
}

/// Both strings as concrete literals with `1` as the minority symbol.
///
/// The literals are the canonical representatives, complemented bit-for-bit
/// when needed, so cut triples computed on them apply unchanged to the
/// original canonical representatives.
pub(crate) struct Working {
    pub source: Vec<u8>,
    pub target: Vec<u8>,
    pub k: usize,
}

impl Working {
    pub fn new(s: &CircularBinaryString, t: &CircularBinaryString) -> Result<Self> {
        if !s.compatible_with(t) {
            return Err(Error::Incompatible);
        }
        let flip = s.ones() > s.zeros();
        let prep = |c: &CircularBinaryString| -> Vec<u8> {
            c.bits().iter().map(|&b| if flip { 1 - b } else { b }).collect()
        };
        Ok(Working { source: prep(s), target: prep(t), k: s.part_count() })
    }
}
