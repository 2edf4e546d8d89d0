//! One-move witnesses: explicit part choices and zero counts showing that a
//! single transposition turns one partition into another.
//!
//! A move touching three parts `α, β, γ` (in circular order) cuts `x`, `y`,
//! `z` zeros off the tails of their runs and produces the circular weight
//! sequence
//!
//! ```text
//! [s_α - x + y]  parts(β..γ)  [s_γ - z + x]  parts(α..β)  [s_β - y + z]  parts(γ..α)
//! ```
//!
//! A move touching two parts shifts `x` zeros from the tail of `α` onto the
//! tail of `β` and leaves the part order alone. The witness is *relative*
//! when the target parts sit at the index offsets this rearrangement
//! implies, which is what makes the result equal to the target rather than
//! just sharing three weights with it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{to_partition, CircularPartition};
use crate::string::{rotation_offset, CircularBinaryString};
use crate::transposition::Transposition;

/// Part indices are 1-based positions in the stored (least-rotation) weight
/// sequences of the source and target partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MoveWitness {
    TwoParts { alpha: usize, beta: usize, alpha_t: usize, beta_t: usize, x: usize },
    ThreeParts {
        alpha: usize,
        beta: usize,
        gamma: usize,
        alpha_t: usize,
        beta_t: usize,
        gamma_t: usize,
        x: usize,
        y: usize,
        z: usize,
    },
}

fn fwd(from: usize, to: usize, k: usize) -> usize {
    (to + k - from) % k
}

/// Weights after moving `x` zeros from part `a` to part `b` (0-based).
fn two_part_result(w: &[usize], a: usize, b: usize, x: usize) -> Vec<usize> {
    let mut out = w.to_vec();
    out[a] -= x;
    out[b] += x;
    out
}

/// Weights after the three-part move, listed from the new `α` part.
fn three_part_result(w: &[usize], a: usize, b: usize, c: usize, x: usize, y: usize, z: usize) -> Vec<usize> {
    let k = w.len();
    let between = |from: usize, to: usize| (1..fwd(from, to, k)).map(move |d| w[(from + d) % k]);
    let mut out = Vec::with_capacity(k);
    out.push(w[a] - x + y);
    out.extend(between(b, c));
    out.push(w[c] - z + x);
    out.extend(between(a, b));
    out.push(w[b] - y + z);
    out.extend(between(c, a));
    out
}

impl MoveWitness {
    /// Checks amounts, weight equalities and the relative index offsets
    /// against the source and target partitions, then confirms that the
    /// rearranged source equals the target.
    pub fn holds(&self, ps: &CircularPartition, pt: &CircularPartition) -> bool {
        if !ps.comparable(pt) {
            return false;
        }
        let (s, t, k) = (ps.weights(), pt.weights(), ps.k());
        let idx = |v: usize| (v >= 1 && v <= k).then(|| v - 1);
        match *self {
            MoveWitness::TwoParts { alpha, beta, alpha_t, beta_t, x } => {
                let (Some(a), Some(b), Some(at), Some(bt)) = (idx(alpha), idx(beta), idx(alpha_t), idx(beta_t)) else {
                    return false;
                };
                a != b
                    && x <= s[a]
                    && s[a] - x == t[at]
                    && s[b] + x == t[bt]
                    && fwd(at, bt, k) == fwd(a, b, k)
                    && aligned(&two_part_result(s, a, b, x), t, a, at)
            }
            MoveWitness::ThreeParts { alpha, beta, gamma, alpha_t, beta_t, gamma_t, x, y, z } => {
                let parts = (idx(alpha), idx(beta), idx(gamma), idx(alpha_t), idx(beta_t), idx(gamma_t));
                let (Some(a), Some(b), Some(c), Some(at), Some(bt), Some(ct)) = parts else {
                    return false;
                };
                let ordered = a != b && b != c && a != c && fwd(a, b, k) < fwd(a, c, k);
                ordered
                    && x <= s[a]
                    && y <= s[b]
                    && z <= s[c]
                    && s[a] - x + y == t[at]
                    && s[c] - z + x == t[bt]
                    && s[b] - y + z == t[ct]
                    && fwd(at, bt, k) == fwd(b, c, k)
                    && fwd(bt, ct, k) == fwd(a, b, k)
                    && aligned(&three_part_result(s, a, b, c, x, y, z), t, 0, at)
            }
        }
    }

    /// The cut triple realizing this move on `expand(ps)`, or `None` for the
    /// identity witness (`x = 0` on two parts).
    pub fn realize(&self, ps: &CircularPartition) -> Option<Transposition> {
        let w = ps.weights();
        let n = ps.total() + ps.k();
        // Run of part p starts at starts[p]; its closing 1 sits at starts[p] + w[p].
        let starts: Vec<usize> = w
            .iter()
            .scan(0, |acc, &len| {
                let s = *acc;
                *acc += len + 1;
                Some(s)
            })
            .collect();
        let tail_cut = |p: usize, amount: usize| starts[p] + w[p] - amount;
        let gaps = match *self {
            MoveWitness::TwoParts { x: 0, .. } => return None,
            MoveWitness::TwoParts { alpha, beta, x, .. } => {
                let (a, b) = (alpha - 1, beta - 1);
                [tail_cut(a, x), tail_cut(a, 0), tail_cut(b, 0)]
            }
            MoveWitness::ThreeParts { alpha, beta, gamma, x, y, z, .. } => {
                [tail_cut(alpha - 1, x), tail_cut(beta - 1, y), tail_cut(gamma - 1, z)]
            }
        };
        Transposition::from_gaps(gaps, n).ok()
    }
}

/// True when `result`, whose element `anchor` should land on target index
/// `anchor_t`, equals `target` under that alignment.
fn aligned(result: &[usize], target: &[usize], anchor: usize, anchor_t: usize) -> bool {
    let k = target.len();
    (0..k).all(|i| result[(anchor + i) % k] == target[(anchor_t + i) % k])
}

fn sorted(w: &[usize]) -> Vec<usize> {
    let mut v = w.to_vec();
    v.sort_unstable();
    v
}

/// Searches every two- and three-part move of `ps` for one landing on `pt`.
///
/// Equal partitions yield the identity witness (two parts, `x = 0`).
pub fn partition_witness(ps: &CircularPartition, pt: &CircularPartition) -> Result<Option<MoveWitness>> {
    if !ps.comparable(pt) {
        return Err(Error::MismatchedPartitions);
    }
    let k = ps.k();
    if k < 2 {
        return Err(Error::TooFewParts { k, min: 2 });
    }
    let (s, t) = (ps.weights(), pt.weights());
    let target_multiset = sorted(t);
    if ps == pt {
        return Ok(Some(MoveWitness::TwoParts { alpha: 1, beta: 2, alpha_t: 1, beta_t: 2, x: 0 }));
    }
    for a in 0..k {
        for b in (0..k).filter(|&b| b != a) {
            for x in 1..=s[a] {
                let result = two_part_result(s, a, b, x);
                if sorted(&result) != target_multiset {
                    continue;
                }
                if let Some(off) = rotation_offset(t, &result) {
                    let at = (a + off) % k;
                    let bt = (b + off) % k;
                    return Ok(Some(MoveWitness::TwoParts { alpha: a + 1, beta: b + 1, alpha_t: at + 1, beta_t: bt + 1, x }));
                }
            }
        }
    }
    if k < 3 {
        return Ok(None);
    }
    for a in 0..k {
        for db in 1..k {
            for dc in db + 1..k {
                let (b, c) = ((a + db) % k, (a + dc) % k);
                for x in 0..=s[a] {
                    for y in 0..=s[b] {
                        for z in 0..=s[c] {
                            let result = three_part_result(s, a, b, c, x, y, z);
                            if sorted(&result) != target_multiset {
                                continue;
                            }
                            if let Some(at) = rotation_offset(t, &result) {
                                let bt = (at + fwd(b, c, k)) % k;
                                let ct = (bt + fwd(a, b, k)) % k;
                                return Ok(Some(MoveWitness::ThreeParts {
                                    alpha: a + 1,
                                    beta: b + 1,
                                    gamma: c + 1,
                                    alpha_t: at + 1,
                                    beta_t: bt + 1,
                                    gamma_t: ct + 1,
                                    x,
                                    y,
                                    z,
                                }));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// A witness that one transposition turns `s` into `t`, if one exists.
pub fn one_move_witness(s: &CircularBinaryString, t: &CircularBinaryString) -> Result<Option<MoveWitness>> {
    if !s.compatible_with(t) {
        return Err(Error::Incompatible);
    }
    let k = s.part_count();
    if k < 2 {
        return Err(Error::TooFewParts { k, min: 2 });
    }
    partition_witness(&to_partition(s)?, &to_partition(t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::from_partition;
    use crate::string::canonicalize;

    fn p(weights: &[usize]) -> CircularPartition {
        CircularPartition::new(weights.to_vec(), false).unwrap()
    }

    fn check_realization(ps: &CircularPartition, pt: &CircularPartition, w: &MoveWitness) {
        assert!(w.holds(ps, pt), "{w:?}");
        let expanded = ps.expand();
        let landed = match w.realize(ps) {
            Some(t) => canonicalize(&t.apply_to(&expanded).unwrap()).unwrap(),
            None => canonicalize(&expanded).unwrap(),
        };
        assert_eq!(landed, from_partition(pt));
    }

    #[test]
    fn identity_witness() {
        let q = p(&[2, 1, 0]);
        let w = partition_witness(&q, &q).unwrap().unwrap();
        assert!(matches!(w, MoveWitness::TwoParts { x: 0, .. }));
        check_realization(&q, &q, &w);
    }

    #[test]
    fn two_part_witness() {
        let (ps, pt) = (p(&[3, 1]), p(&[2, 2]));
        let w = partition_witness(&ps, &pt).unwrap().unwrap();
        check_realization(&ps, &pt, &w);
    }

    #[test]
    fn three_part_witness() {
        let (ps, pt) = (p(&[2, 2, 2]), p(&[1, 2, 3]));
        let w = partition_witness(&ps, &pt).unwrap().unwrap();
        check_realization(&ps, &pt, &w);
    }

    #[test]
    fn diameter_pair_has_no_witness() {
        assert_eq!(partition_witness(&p(&[4, 0, 0]), &p(&[2, 1, 1])).unwrap(), None);
    }

    #[test]
    fn string_level_errors() {
        let a = crate::string::parse_string("0011").unwrap();
        let b = crate::string::parse_string("0001").unwrap();
        assert_eq!(one_move_witness(&a, &b), Err(Error::Incompatible));
        let c = crate::string::parse_string("0001").unwrap();
        assert_eq!(one_move_witness(&c, &c), Err(Error::TooFewParts { k: 1, min: 2 }));
        let d = crate::string::parse_string("001011").unwrap();
        let e = crate::string::parse_string("010101").unwrap();
        assert!(one_move_witness(&d, &e).unwrap().is_some());
    }

    #[test]
    fn tampered_witness_fails() {
        let (ps, pt) = (p(&[2, 2, 2]), p(&[1, 2, 3]));
        let w = partition_witness(&ps, &pt).unwrap().unwrap();
        if let MoveWitness::ThreeParts { alpha, beta, gamma, alpha_t, beta_t, gamma_t, x, y, z } = w {
            let bad = MoveWitness::ThreeParts { alpha, beta, gamma, alpha_t: beta_t, beta_t: alpha_t, gamma_t, x, y, z };
            assert!(!bad.holds(&ps, &pt));
        }
    }
}
