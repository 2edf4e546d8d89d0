//! Partition form: the cyclic sequence of 0-run lengths between separators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::string::{canonicalize, least_rotation, rotate_left, rotation_offset, CircularBinaryString};

/// Weights `s_1..s_k` of the string `0^{s_1} 1 ... 0^{s_k} 1`, read around
/// the circle.
///
/// Weights are kept in their least cyclic rotation, so two partitions of the
/// same circular string compare equal. `complemented` records that the
/// symbols were interchanged to make `1` the minority symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CircularPartition {
    weights: Vec<usize>,
    complemented: bool,
}

impl CircularPartition {
    pub fn new(weights: Vec<usize>, complemented: bool) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::TooFewParts { k: 0, min: 1 });
        }
        let r = least_rotation(&weights);
        Ok(CircularPartition { weights: rotate_left(&weights, r), complemented })
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    /// Part count `k`.
    pub fn k(&self) -> usize {
        self.weights.len()
    }

    /// Total weight, the number of separated symbols.
    pub fn total(&self) -> usize {
        self.weights.iter().sum()
    }

    pub fn complemented(&self) -> bool {
        self.complemented
    }

    /// True when both partitions have the same part count and total weight,
    /// i.e. they describe strings of the same bucket.
    pub fn comparable(&self, other: &CircularPartition) -> bool {
        self.k() == other.k() && self.total() == other.total()
    }

    /// `0^{s_1} 1 ... 0^{s_k} 1` with the separator as `1`, not canonicalized.
    pub fn expand(&self) -> Vec<u8> {
        expand_weights(&self.weights)
    }

    /// True when `other` lists the same weights up to cyclic rotation.
    pub fn same_cycle(&self, weights: &[usize]) -> bool {
        rotation_offset(weights, &self.weights).is_some()
    }
}

impl fmt::Display for CircularPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("p:")?;
        for (idx, w) in self.weights.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl FromStr for CircularPartition {
    type Err = Error;

    /// Parses the `p:3,1,2` text form. The result is never complemented.
    fn from_str(text: &str) -> Result<Self> {
        let body = text
            .strip_prefix("p:")
            .ok_or_else(|| Error::MalformedPartition(format!("missing `p:` prefix in {text:?}")))?;
        if body.is_empty() {
            return Err(Error::MalformedPartition("no weights".into()));
        }
        let weights = body
            .split(',')
            .map(|w| {
                w.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::MalformedPartition(format!("bad weight {w:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CircularPartition::new(weights, false)
    }
}

pub(crate) fn expand_weights(weights: &[usize]) -> Vec<u8> {
    let mut bits = Vec::with_capacity(weights.iter().sum::<usize>() + weights.len());
    for &w in weights {
        bits.extend(std::iter::repeat_n(0u8, w));
        bits.push(1);
    }
    bits
}

/// Lengths of the 0-runs that precede each `1`, in circular order, for a
/// concrete sequence containing at least one `1`. The first entry belongs
/// to the first `1` of `bits`.
pub(crate) fn runs_before_ones(bits: &[u8]) -> Vec<usize> {
    let n = bits.len();
    let ones: Vec<usize> = (0..n).filter(|&i| bits[i] == 1).collect();
    ones.iter()
        .enumerate()
        .map(|(idx, &pos)| {
            let prev = ones[(idx + ones.len() - 1) % ones.len()];
            (pos + n - prev - 1) % n
        })
        .collect()
}

/// Converts a string to partition form, complementing first when `1` is the
/// majority symbol.
pub fn to_partition(s: &CircularBinaryString) -> Result<CircularPartition> {
    if s.part_count() == 0 {
        return Err(Error::DegeneratePartition);
    }
    let complemented = s.ones() > s.zeros();
    let working = if complemented { s.complement() } else { s.clone() };
    CircularPartition::new(runs_before_ones(working.bits()), complemented)
}

/// Inverse of [`to_partition`] up to rotation class.
pub fn from_partition(p: &CircularPartition) -> CircularBinaryString {
    let mut bits = p.expand();
    if p.complemented {
        bits.iter_mut().for_each(|b| *b = 1 - *b);
    }
    canonicalize(&bits).expect("partition expansion is non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::string::parse_string;
    use proptest::prelude::*;

    fn p(weights: &[usize]) -> CircularPartition {
        CircularPartition::new(weights.to_vec(), false).unwrap()
    }

    #[test]
    fn to_partition_examples() {
        assert_eq!(to_partition(&parse_string("010010001").unwrap()).unwrap(), p(&[1, 2, 3]));
        assert_eq!(to_partition(&parse_string("0011").unwrap()).unwrap().weights(), &[0, 2]);
    }

    #[test]
    fn to_partition_complements_majority_ones() {
        // 110111: five 1s, one 0. Complement is 001000 (one separator, five 0s).
        let s = parse_string("110111").unwrap();
        let part = to_partition(&s).unwrap();
        assert!(part.complemented());
        assert_eq!(part.weights(), &[5]);
        assert_eq!(from_partition(&part), s);

        // 0100111: four 1s, three 0s. Complement class 0001011 has runs
        // 3, 1, 0 before its 1s.
        let s = parse_string("0100111").unwrap();
        let part = to_partition(&s).unwrap();
        assert!(part.complemented());
        assert_eq!(part.weights(), &[0, 3, 1]);
        assert_eq!(from_partition(&part), s);
    }

    #[test]
    fn ties_use_one_as_separator() {
        let part = to_partition(&parse_string("0101").unwrap()).unwrap();
        assert!(!part.complemented());
        assert_eq!(part.weights(), &[1, 1]);
    }

    #[test]
    fn degenerate_strings_have_no_partition() {
        assert_eq!(to_partition(&parse_string("0000").unwrap()), Err(Error::DegeneratePartition));
        assert_eq!(to_partition(&parse_string("111").unwrap()), Err(Error::DegeneratePartition));
    }

    #[test]
    fn from_partition_examples() {
        assert_eq!(from_partition(&p(&[1, 2, 3])), parse_string("010010001").unwrap());
        assert_eq!(from_partition(&p(&[0])).to_string(), "1");
        assert_eq!(from_partition(&p(&[4, 0, 0])), parse_string("0000111").unwrap());
    }

    #[test]
    fn text_form() {
        let part: CircularPartition = "p:3,1,2".parse().unwrap();
        assert_eq!(part.weights(), &[1, 2, 3]);
        assert_eq!(part.to_string(), "p:1,2,3");
        assert_eq!(from_partition(&part), parse_string("000101001").unwrap());
        assert!("3,1,2".parse::<CircularPartition>().is_err());
        assert!("p:".parse::<CircularPartition>().is_err());
        assert!("p:1,x".parse::<CircularPartition>().is_err());
    }

    proptest! {
        #[test]
        fn round_trip_lands_in_same_class(bits in prop::collection::vec(0u8..2, 2..16)) {
            let s = canonicalize(&bits).unwrap();
            prop_assume!(s.part_count() > 0);
            let part = to_partition(&s).unwrap();
            prop_assert_eq!(part.total() + part.k(), s.len());
            prop_assert_eq!(from_partition(&part), s);
        }

        #[test]
        fn rotated_weights_give_equal_partitions(
            weights in prop::collection::vec(0usize..5, 1..8),
            r in 0usize..8,
        ) {
            prop_assert_eq!(p(&weights), p(&rotate_left(&weights, r)));
        }
    }
}
