//! Reservoir construction: at most one two-part move per mismatched part.

use super::Working;
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::sequence::TranspositionSequence;
use crate::string::CircularBinaryString;

/// Cyclic offset of the target weights minimizing mismatched parts; ties go
/// to the lowest offset.
fn best_alignment(source: &[usize], target: &[usize]) -> usize {
    let k = source.len();
    (0..k)
        .min_by_key(|&o| (0..k).filter(|&p| source[p] != target[(p + o) % k]).count())
        .unwrap_or(0)
}

/// A sequence of at most `k - 1` moves from `s` to `t`.
///
/// After aligning the target weights, the first mismatched part becomes the
/// reservoir. Every other part with surplus empties it into the reservoir,
/// then every part with a deficit draws from it. After the surplus pass the
/// reservoir holds its target weight plus all remaining deficits, so it
/// cannot run dry, and it ends on its own target weight without a move.
pub fn greedy_upper_bound(s: &CircularBinaryString, t: &CircularBinaryString) -> Result<TranspositionSequence> {
    let work = Working::new(s, t)?;
    if s == t || work.k == 0 {
        return Ok(TranspositionSequence::empty(s.clone()));
    }
    let mut ring = Ring::new(work.source.clone());
    let seps = ring.separators();
    let source = ring.weights(&seps);
    let target_ring = Ring::new(work.target.clone());
    let target = target_ring.weights(&target_ring.separators());
    let offset = best_alignment(&source, &target);
    let goal: Vec<usize> = (0..work.k).map(|p| target[(p + offset) % work.k]).collect();

    let mismatched: Vec<usize> = (0..work.k).filter(|&p| source[p] != goal[p]).collect();
    let Some((&reservoir, rest)) = mismatched.split_first() else {
        return Err(Error::ConstructionFailed("aligned weights agree but classes differ".into()));
    };
    let mut moves = Vec::with_capacity(rest.len());
    for &p in rest.iter().filter(|&&p| source[p] > goal[p]) {
        moves.push(ring.shift_zeros(seps[p], seps[reservoir], source[p] - goal[p])?.1);
    }
    for &p in rest.iter().filter(|&&p| source[p] < goal[p]) {
        let need = goal[p] - source[p];
        let held = ring.run_after(seps[reservoir]);
        assert!(held >= need, "reservoir underflow: holds {held}, needs {need}");
        moves.push(ring.shift_zeros(seps[reservoir], seps[p], need)?.1);
    }
    debug_assert_eq!(ring.weights(&seps), goal);
    TranspositionSequence { start: s.clone(), moves, claimed_end: t.clone() }.validated()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{from_partition, CircularPartition};
    use crate::string::parse_string;

    fn realize(weights: &[usize]) -> CircularBinaryString {
        from_partition(&CircularPartition::new(weights.to_vec(), false).unwrap())
    }

    #[test]
    fn examples() {
        let seq = greedy_upper_bound(&realize(&[4, 0, 0]), &realize(&[2, 1, 1])).unwrap();
        assert_eq!(seq.len(), 2);
        let s = realize(&[3, 1, 2]);
        assert!(greedy_upper_bound(&s, &s).unwrap().is_empty());
        assert_eq!(greedy_upper_bound(&realize(&[3, 1]), &realize(&[2, 2])).unwrap().len(), 1);
    }

    #[test]
    fn handles_majority_ones_and_degenerate_strings() {
        let s = parse_string("0111111011").unwrap();
        let t = parse_string("0110111111").unwrap();
        let seq = greedy_upper_bound(&s, &t).unwrap();
        assert!(seq.len() <= s.part_count().saturating_sub(1));
        let z = parse_string("0000").unwrap();
        assert!(greedy_upper_bound(&z, &z).unwrap().is_empty());
        assert_eq!(greedy_upper_bound(&z, &parse_string("0001").unwrap()), Err(Error::Incompatible));
    }

    #[test]
    fn alignment_prefers_fewest_mismatches() {
        assert_eq!(best_alignment(&[1, 2, 3], &[3, 1, 2]), 1);
        assert_eq!(best_alignment(&[0, 0], &[0, 0]), 0);
    }
}
