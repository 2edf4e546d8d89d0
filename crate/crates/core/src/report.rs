//! Lower bound, constructive upper bound and (optionally) exact distance for
//! one pair.

use serde::{Deserialize, Serialize};

use crate::bounds::{diameter_predicate, lower_bound};
use crate::error::{Error, Result};
use crate::oracle::exact_distance;
use crate::partition::to_partition;
use crate::solver::{best_upper_bound, UpperProvenance};
use crate::string::CircularBinaryString;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub lower: usize,
    pub upper: usize,
    pub upper_provenance: UpperProvenance,
    pub exact: Option<usize>,
    pub is_diameter: bool,
    pub k: usize,
}

/// Bounds for `s -> t`; `exact` also runs the oracle.
pub fn bound_report(s: &CircularBinaryString, t: &CircularBinaryString, exact: bool) -> Result<BoundReport> {
    if !s.compatible_with(t) {
        return Err(Error::Incompatible);
    }
    let k = s.part_count();
    let exact = if exact { Some(exact_distance(s, t)?) } else { None };
    if k == 0 {
        return Ok(BoundReport {
            lower: 0,
            upper: 0,
            upper_provenance: UpperProvenance::TrivialEqual,
            exact,
            is_diameter: false,
            k,
        });
    }
    let (ps, pt) = (to_partition(s)?, to_partition(t)?);
    let upper = best_upper_bound(s, t)?;
    Ok(BoundReport {
        lower: lower_bound(&ps, &pt)?,
        upper: upper.length,
        upper_provenance: upper.provenance,
        exact,
        is_diameter: k >= 2 && diameter_predicate(&ps, &pt)?,
        k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::string::parse_string;

    #[test]
    fn anchor_pair() {
        let r = bound_report(&parse_string("0000111").unwrap(), &parse_string("0010101").unwrap(), true).unwrap();
        assert_eq!(
            r,
            BoundReport { lower: 2, upper: 2, upper_provenance: UpperProvenance::Greedy, exact: Some(2), is_diameter: true, k: 3 }
        );
    }

    #[test]
    fn trivial_pairs() {
        let z = parse_string("0000").unwrap();
        let r = bound_report(&z, &z, true).unwrap();
        assert_eq!((r.lower, r.upper, r.exact, r.k), (0, 0, Some(0), 0));
        let s = parse_string("01").unwrap();
        let r = bound_report(&s, &s, false).unwrap();
        assert_eq!((r.upper, r.upper_provenance, r.exact), (0, UpperProvenance::TrivialEqual, None));
        assert_eq!(bound_report(&s, &z, false), Err(Error::Incompatible));
    }
}
