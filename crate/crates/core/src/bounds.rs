//! Partition sums, single-move feasibility, the partition lower bound and
//! the diameter test.
//!
//! `f1(P, r)` / `f2(P, r)` are the largest / smallest sum of `r` distinct
//! weights of `P`. Both clamp: `r > k` behaves as `r = k` and `r <= 0`
//! gives 0. If `d(S, T) <= m` then for every `r`
//!
//! ```text
//! f2(S, r - m) <= f2(T, r) <= f1(T, r) <= f1(S, r + m)
//! ```
//!
//! and [`lower_bound`] is the least `m` satisfying that family in both
//! orientations.

use crate::error::{Error, Result};
use crate::partition::CircularPartition;

fn clamp(p: &CircularPartition, r: i64) -> usize {
    if r <= 0 {
        0
    } else {
        (r as usize).min(p.k())
    }
}

/// Maximum sum of `r` distinct weights, clamped.
pub fn f1(p: &CircularPartition, r: i64) -> usize {
    let r = clamp(p, r);
    let mut w = p.weights().to_vec();
    w.sort_unstable_by(|a, b| b.cmp(a));
    w[..r].iter().sum()
}

/// Minimum sum of `r` distinct weights, clamped.
pub fn f2(p: &CircularPartition, r: i64) -> usize {
    let r = clamp(p, r);
    let mut w = p.weights().to_vec();
    w.sort_unstable();
    w[..r].iter().sum()
}

/// Prefix sums of the weights sorted descending and ascending; entry `r`
/// holds `f1(P, r)` / `f2(P, r)` for `0 <= r <= k`.
#[derive(Debug, Clone)]
pub struct SortedSums {
    max: Vec<usize>,
    min: Vec<usize>,
}

impl SortedSums {
    pub fn new(p: &CircularPartition) -> Self {
        let mut asc = p.weights().to_vec();
        asc.sort_unstable();
        let prefix = |ws: &mut dyn Iterator<Item = usize>| {
            let mut acc = vec![0];
            for w in ws {
                acc.push(acc.last().unwrap() + w);
            }
            acc
        };
        SortedSums {
            min: prefix(&mut asc.iter().copied()),
            max: prefix(&mut asc.iter().rev().copied()),
        }
    }

    fn index(&self, r: i64) -> usize {
        if r <= 0 {
            0
        } else {
            (r as usize).min(self.max.len() - 1)
        }
    }

    pub fn f1(&self, r: i64) -> usize {
        self.max[self.index(r)]
    }

    pub fn f2(&self, r: i64) -> usize {
        self.min[self.index(r)]
    }
}

/// Whether one transposition touching three parts can turn source weights
/// `(s_a, s_b, s_c)` into target weights `(t_a, t_b, t_c)`.
pub fn three_feasible(s: (usize, usize, usize), t: (usize, usize, usize)) -> bool {
    let (sa, sb, sc) = s;
    let (ta, tb, tc) = t;
    sa + sb + sc == ta + tb + tc && ta <= sa + sb && tb <= sc + sa && tc <= sb + sc
}

/// Whether one transposition moving zeros forward from part `a` to part `b`
/// turns `(s_a, s_b)` into `(t_a, t_b)`.
pub fn two_feasible(s: (usize, usize), t: (usize, usize)) -> bool {
    s.0 + s.1 == t.0 + t.1 && t.0 <= s.0
}

fn require_comparable(ps: &CircularPartition, pt: &CircularPartition) -> Result<()> {
    if ps.comparable(pt) {
        Ok(())
    } else {
        Err(Error::MismatchedPartitions)
    }
}

fn holds_sorted(s: &SortedSums, t: &SortedSums, k: usize, m: usize) -> bool {
    let m = m as i64;
    (1..=k as i64).all(|r| s.f2(r - m) <= t.f2(r) && t.f1(r) <= s.f1(r + m))
}

/// The necessary condition for `d(S, T) <= m`, checked for `r = 1..=k`.
pub fn theorem2_holds(ps: &CircularPartition, pt: &CircularPartition, m: usize) -> Result<bool> {
    require_comparable(ps, pt)?;
    Ok(holds_sorted(&SortedSums::new(ps), &SortedSums::new(pt), ps.k(), m))
}

/// Least `m` passing [`theorem2_holds`], maximized over both orientations.
pub fn lower_bound(ps: &CircularPartition, pt: &CircularPartition) -> Result<usize> {
    require_comparable(ps, pt)?;
    let (s, t) = (SortedSums::new(ps), SortedSums::new(pt));
    let k = ps.k();
    // m = k always holds: every f2(., r - k) is 0 and every f1(., r + k) is the total.
    let least = |a: &SortedSums, b: &SortedSums| (0..=k).find(|&m| holds_sorted(a, b, k, m)).unwrap_or(k);
    Ok(least(&s, &t).max(least(&t, &s)))
}

/// Decides `d(S, T) = k - 1` for `k >= 2`.
///
/// The pair is oriented so the first has the larger maximum weight; the test
/// is then `f1(S,1) > f1(T,1)` and `f2(T,1) > f2(S,k-1)`.
pub fn diameter_predicate(ps: &CircularPartition, pt: &CircularPartition) -> Result<bool> {
    require_comparable(ps, pt)?;
    let k = ps.k();
    if k < 2 {
        return Err(Error::TooFewParts { k, min: 2 });
    }
    let (s, t) = if f1(ps, 1) >= f1(pt, 1) { (ps, pt) } else { (pt, ps) };
    Ok(f1(s, 1) > f1(t, 1) && f2(t, 1) > f2(s, k as i64 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::string::rotate_left;
    use proptest::prelude::*;

    fn p(weights: &[usize]) -> CircularPartition {
        CircularPartition::new(weights.to_vec(), false).unwrap()
    }

    /// Max and min over every r-subset of indices.
    fn subset_sums(weights: &[usize], r: usize) -> (usize, usize) {
        let k = weights.len();
        let mut best = (0, usize::MAX);
        for mask in 0u32..(1 << k) {
            if mask.count_ones() as usize != r {
                continue;
            }
            let sum: usize = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| weights[i]).sum();
            best = (best.0.max(sum), best.1.min(sum));
        }
        best
    }

    #[test]
    fn f_examples() {
        let q = p(&[3, 1, 2]);
        assert_eq!(f1(&q, 2), 5);
        assert_eq!(f1(&q, 5), 6);
        assert_eq!(f1(&q, 0), 0);
        assert_eq!(f2(&q, 2), 3);
        assert_eq!(f2(&q, -1), 0);
        assert_eq!(f2(&p(&[4, 0, 0]), 2), 0);
    }

    #[test]
    fn feasibility_examples() {
        assert!(three_feasible((3, 1, 2), (2, 2, 2)));
        assert!(!three_feasible((0, 0, 6), (2, 2, 2)));
        assert!(three_feasible((2, 2, 2), (1, 2, 3)));
        assert!(two_feasible((3, 1), (1, 3)));
        assert!(!two_feasible((1, 3), (3, 1)));
        assert!(two_feasible((2, 2), (2, 2)));
    }

    #[test]
    fn theorem2_examples() {
        assert!(theorem2_holds(&p(&[4, 0, 0]), &p(&[2, 1, 1]), 0).unwrap());
        assert!(!theorem2_holds(&p(&[2, 1, 1]), &p(&[4, 0, 0]), 1).unwrap());
        assert!(theorem2_holds(&p(&[2, 1, 1]), &p(&[2, 1, 1]), 0).unwrap());
        assert_eq!(theorem2_holds(&p(&[2, 1]), &p(&[2, 1, 0]), 0), Err(Error::MismatchedPartitions));
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound(&p(&[4, 0, 0]), &p(&[2, 1, 1])).unwrap(), 2);
        assert_eq!(lower_bound(&p(&[2, 1, 1]), &p(&[4, 0, 0])).unwrap(), 2);
        assert_eq!(lower_bound(&p(&[1, 2, 3]), &p(&[3, 1, 2])).unwrap(), 0);
        assert_eq!(lower_bound(&p(&[3, 1]), &p(&[2, 2])).unwrap(), 1);
        assert!(lower_bound(&p(&[3, 1]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn diameter_examples() {
        assert!(diameter_predicate(&p(&[4, 0, 0]), &p(&[2, 1, 1])).unwrap());
        assert!(diameter_predicate(&p(&[2, 1, 1]), &p(&[4, 0, 0])).unwrap());
        assert!(!diameter_predicate(&p(&[4, 0, 0]), &p(&[3, 1, 0])).unwrap());
        assert!(diameter_predicate(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(!diameter_predicate(&p(&[3, 1]), &p(&[3, 1])).unwrap());
        assert_eq!(diameter_predicate(&p(&[2]), &p(&[2])), Err(Error::TooFewParts { k: 1, min: 2 }));
    }

    #[test]
    fn f_matches_subset_enumeration_exhaustively() {
        for k in 1..=5usize {
            let total = 4usize.pow(k as u32);
            for code in 0..total {
                let weights: Vec<usize> = (0..k).map(|i| code / 4usize.pow(i as u32) % 4).collect();
                let q = p(&weights);
                for r in 1..=k {
                    let (max, min) = subset_sums(&weights, r);
                    assert_eq!((f1(&q, r as i64), f2(&q, r as i64)), (max, min));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn f_is_monotone_and_tops_out_at_total(weights in prop::collection::vec(0usize..7, 1..9)) {
            let q = p(&weights);
            let k = q.k() as i64;
            for r in -2..=k + 2 {
                prop_assert!(f1(&q, r) <= f1(&q, r + 1));
                prop_assert!(f2(&q, r) <= f2(&q, r + 1));
                prop_assert!(f2(&q, r) <= f1(&q, r));
            }
            prop_assert_eq!(f1(&q, k), q.total());
            prop_assert_eq!(f2(&q, k), q.total());
            let sums = SortedSums::new(&q);
            for r in -2..=k + 2 {
                prop_assert_eq!(sums.f1(r), f1(&q, r));
                prop_assert_eq!(sums.f2(r), f2(&q, r));
            }
        }

        #[test]
        fn bounds_ignore_rotation(
            (a, mut b) in prop::collection::vec(0usize..5, 2..7)
                .prop_flat_map(|a| (Just(a.clone()), Just(a).prop_shuffle())),
            (i, j, amount) in (0usize..7, 0usize..7, 0usize..5),
            r in 0usize..7,
        ) {
            let (i, j) = (i % b.len(), j % b.len());
            let amount = amount.min(b[i]);
            b[i] -= amount;
            b[j] += amount;
            let (pa, pb) = (p(&a), p(&b));
            let pb_rot = CircularPartition::new(rotate_left(&b, r), false).unwrap();
            prop_assert_eq!(lower_bound(&pa, &pb).unwrap(), lower_bound(&pa, &pb_rot).unwrap());
            prop_assert_eq!(diameter_predicate(&pa, &pb).unwrap(), diameter_predicate(&pa, &pb_rot).unwrap());
        }
    }
}
