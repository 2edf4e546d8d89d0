//! Move lists replayed against an evolving concrete representative.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::string::{canonicalize, rotation_offset, CircularBinaryString};
use crate::transposition::{inverse_of, Transposition};

/// Moves from `start` towards `claimed_end`.
///
/// The first move applies to the canonical representative of `start`; every
/// later move applies to the literal output of the previous one, without
/// re-canonicalizing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranspositionSequence {
    pub start: CircularBinaryString,
    pub moves: Vec<Transposition>,
    pub claimed_end: CircularBinaryString,
}

/// Outcome of replaying a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Move `index` (0-based) is not a valid triple for the string length.
    InvalidMove { index: usize },
    /// All moves applied but the final class differs from the claimed end.
    WrongEnd { reached: CircularBinaryString },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("PASS"),
            Verdict::InvalidMove { index } => write!(f, "FAIL at move {} (invalid triple)", index + 1),
            Verdict::WrongEnd { reached } => write!(f, "FAIL (sequence ends at {reached})"),
        }
    }
}

impl TranspositionSequence {
    pub fn empty(s: CircularBinaryString) -> Self {
        TranspositionSequence { start: s.clone(), moves: Vec::new(), claimed_end: s }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Concrete representatives visited, starting with the canonical start.
    pub fn representatives(&self) -> Result<Vec<Vec<u8>>> {
        let mut reps = Vec::with_capacity(self.moves.len() + 1);
        reps.push(self.start.bits().to_vec());
        for t in &self.moves {
            let next = t.apply_to(reps.last().expect("non-empty"))?;
            reps.push(next);
        }
        Ok(reps)
    }

    pub fn verify(&self) -> Verdict {
        let mut current = self.start.bits().to_vec();
        for (index, t) in self.moves.iter().enumerate() {
            match t.apply_to(&current) {
                Ok(next) => current = next,
                Err(_) => return Verdict::InvalidMove { index },
            }
        }
        let reached = canonicalize(&current).expect("length preserved");
        if reached == self.claimed_end {
            Verdict::Pass
        } else {
            Verdict::WrongEnd { reached }
        }
    }

    /// The same path walked backwards, from `claimed_end` to `start`.
    ///
    /// Each move is inverted on the representative it produced and then
    /// re-expressed against the rotation actually reached, since the reverse
    /// walk starts from the canonical representative of `claimed_end`.
    pub fn reversed(&self) -> Result<Self> {
        let n = self.start.len();
        let reps = self.representatives()?;
        let mut current = self.claimed_end.bits().to_vec();
        let mut moves = Vec::with_capacity(self.moves.len());
        for (idx, t) in self.moves.iter().enumerate().rev() {
            let r = rotation_offset(&reps[idx + 1], &current).ok_or(Error::NotARotation)?;
            let back = inverse_of(t, n)?.rebase(n, r)?;
            current = back.apply_to(&current)?;
            moves.push(back);
        }
        TranspositionSequence { start: self.claimed_end.clone(), moves, claimed_end: self.start.clone() }.validated()
    }

    /// Errors with [`Error::ConstructionFailed`] unless the sequence replays.
    pub fn validated(self) -> Result<Self> {
        match self.verify() {
            Verdict::Pass => Ok(self),
            v => Err(Error::ConstructionFailed(format!(
                "{} -> {} does not replay: {v}",
                self.start, self.claimed_end
            ))),
        }
    }
}

/// Parses a move file: one `i j k` triple per line, `#` starts a comment.
pub fn parse_moves(text: &str) -> std::result::Result<Vec<Transposition>, String> {
    let mut moves = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed: Vec<usize> = fields
            .iter()
            .map(|f| f.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| format!("line {}: expected three integers, got {raw:?}", lineno + 1))?;
        match parsed.as_slice() {
            &[i, j, k] => moves.push(Transposition { i, j, k }),
            _ => return Err(format!("line {}: expected three integers, got {raw:?}", lineno + 1)),
        }
    }
    Ok(moves)
}
