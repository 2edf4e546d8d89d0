//! Circular binary strings stored as their least rotation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A binary string up to rotation.
///
/// The stored bit sequence is always the lexicographically least rotation, so
/// derived equality, ordering and hashing are class-level operations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct CircularBinaryString {
    bits: Vec<u8>,
}

impl CircularBinaryString {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The canonical representative, one byte (0 or 1) per symbol.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }

    /// Number of parts in partition form: the count of the minority symbol,
    /// with ties resolved in favour of `1`.
    pub fn part_count(&self) -> usize {
        self.ones().min(self.zeros())
    }

    /// Interchanges the two symbols.
    pub fn complement(&self) -> CircularBinaryString {
        let flipped: Vec<u8> = self.bits.iter().map(|b| 1 - b).collect();
        Self::from_canonical_unchecked(rotate_to_least(&flipped))
    }

    /// True when `other` has the same length and symbol counts.
    pub fn compatible_with(&self, other: &CircularBinaryString) -> bool {
        self.len() == other.len() && self.ones() == other.ones()
    }

    /// Offset `r` such that `literal[(i + r) % n] == self.bits()[i]`, if
    /// `literal` is a rotation of this string.
    pub fn rotation_offset(&self, literal: &[u8]) -> Option<usize> {
        rotation_offset(literal, &self.bits)
    }

    pub(crate) fn from_canonical_unchecked(bits: Vec<u8>) -> Self {
        debug_assert_eq!(least_rotation(&bits), 0);
        CircularBinaryString { bits }
    }
}

impl fmt::Display for CircularBinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&bits_to_text(&self.bits))
    }
}

impl From<CircularBinaryString> for String {
    fn from(s: CircularBinaryString) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for CircularBinaryString {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        parse_string(&s)
    }
}

impl FromStr for CircularBinaryString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_string(s)
    }
}

/// Parses contiguous `'0'`/`'1'` text into its rotation class.
pub fn parse_string(text: &str) -> Result<CircularBinaryString> {
    let bits = parse_bits(text)?;
    canonicalize(&bits)
}

/// Parses `'0'`/`'1'` text into raw symbols without canonicalizing.
pub fn parse_bits(text: &str) -> Result<Vec<u8>> {
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    text.chars()
        .enumerate()
        .map(|(position, c)| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            found => Err(Error::InvalidSymbol { position, found }),
        })
        .collect()
}

/// Reduces a concrete symbol sequence to its rotation class.
pub fn canonicalize(bits: &[u8]) -> Result<CircularBinaryString> {
    if bits.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(position) = bits.iter().position(|&b| b > 1) {
        return Err(Error::InvalidSymbol {
            position,
            found: char::from(b'0' + bits[position].min(9)),
        });
    }
    Ok(CircularBinaryString::from_canonical_unchecked(rotate_to_least(bits)))
}

pub(crate) fn bits_to_text(bits: &[u8]) -> String {
    bits.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect()
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
///
/// When several rotations are equal the smallest such start index is
/// returned.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut failure = vec![-1isize; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = &s[j % n];
        let mut i = failure[j - k - 1];
        while i != -1 && *sj != s[(k + i as usize + 1) % n] {
            if *sj < s[(k + i as usize + 1) % n] {
                k = j - i as usize - 1;
            }
            i = failure[i as usize];
        }
        if i == -1 && *sj != s[k % n] {
            if *sj < s[k % n] {
                k = j;
            }
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    k % n
}

pub(crate) fn rotate_to_least(bits: &[u8]) -> Vec<u8> {
    rotate_left(bits, least_rotation(bits))
}

pub(crate) fn rotate_left<T: Clone>(bits: &[T], r: usize) -> Vec<T> {
    let n = bits.len();
    if n == 0 {
        return Vec::new();
    }
    let r = r % n;
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&bits[r..]);
    out.extend_from_slice(&bits[..r]);
    out
}

/// Smallest `r` with `from[(i + r) % n] == to[i]` for all `i`.
pub(crate) fn rotation_offset<T: PartialEq>(from: &[T], to: &[T]) -> Option<usize> {
    let n = from.len();
    if n != to.len() {
        return None;
    }
    if n == 0 {
        return Some(0);
    }
    (0..n).find(|&r| (0..n).all(|i| from[(i + r) % n] == to[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn serializes_as_canonical_text() {
        let s = parse_string("1100").unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), "\"0011\"");
        assert_eq!(serde_json::from_str::<CircularBinaryString>("\"0110\"").unwrap(), s);
        assert!(serde_json::from_str::<CircularBinaryString>("\"01x\"").is_err());
    }

    fn brute_least(bits: &[u8]) -> Vec<u8> {
        (0..bits.len()).map(|r| rotate_left(bits, r)).min().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_string("010010001").unwrap().to_string(), "000101001");
        assert_eq!(parse_string("0110").unwrap().to_string(), "0011");
        assert_eq!(parse_string("1100").unwrap(), parse_string("0011").unwrap());
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(parse_string(""), Err(Error::EmptyInput));
        assert_eq!(
            parse_string("01a1"),
            Err(Error::InvalidSymbol { position: 2, found: 'a' })
        );
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(canonicalize(&[1, 0, 1, 0]).unwrap().bits(), &[0, 1, 0, 1]);
        assert_eq!(canonicalize(&[0, 0, 0, 1]).unwrap().bits(), &[0, 0, 0, 1]);
        assert_eq!(canonicalize(&[1, 1, 1]).unwrap().bits(), &[1, 1, 1]);
        assert_eq!(canonicalize(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn booth_picks_first_of_equal_rotations() {
        assert_eq!(least_rotation(&[1, 0, 1, 0]), 1);
        assert_eq!(least_rotation(&[0, 1, 0, 1]), 0);
        assert_eq!(least_rotation(&[1, 1, 1]), 0);
    }

    #[test]
    fn complement_is_class_level() {
        let s = parse_string("0001011").unwrap();
        assert_eq!(s.complement().to_string(), "0011101");
        assert_eq!(s.complement().complement(), s);
    }

    proptest! {
        #[test]
        fn booth_matches_brute_force(bits in prop::collection::vec(0u8..2, 1..16)) {
            prop_assert_eq!(rotate_to_least(&bits), brute_least(&bits));
        }

        #[test]
        fn canonical_form_is_rotation_invariant(
            bits in prop::collection::vec(0u8..2, 1..16),
            r in 0usize..16,
        ) {
            let c = canonicalize(&bits).unwrap();
            prop_assert_eq!(canonicalize(&rotate_left(&bits, r)).unwrap(), c.clone());
            prop_assert_eq!(canonicalize(c.bits()).unwrap(), c.clone());
            prop_assert_eq!(c.len(), bits.len());
            prop_assert_eq!(c.ones(), bits.iter().filter(|&&b| b == 1).count());
        }

        #[test]
        fn rotation_offset_recovers_shift(
            bits in prop::collection::vec(0u8..2, 1..16),
            r in 0usize..16,
        ) {
            let c = canonicalize(&bits).unwrap();
            let literal = rotate_left(c.bits(), r);
            let off = c.rotation_offset(&literal).unwrap();
            prop_assert_eq!(rotate_left(&literal, off), c.bits().to_vec());
        }
    }
}
