//! Reproducible random rotation classes.

use std::collections::HashSet;

use num_integer::{binomial, gcd};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::oracle::{enumerate_classes, MAX_ORACLE_LEN};
use crate::string::{canonicalize, CircularBinaryString};

fn totient(mut n: u128) -> u128 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Number of rotation classes of length `n` with `ones` ones, or `None` if
/// it does not fit in a `u128`.
pub fn class_count(n: usize, ones: usize) -> Option<u128> {
    if n == 0 || ones > n {
        return Some(0);
    }
    let g = gcd(n, ones) as u128;
    let mut sum: u128 = 0;
    for d in (1..=g).filter(|d| g.is_multiple_of(*d)) {
        let m = n as u128 / d;
        if m > 128 {
            return None;
        }
        let c = binomial(m, ones as u128 / d);
        sum = sum.checked_add(totient(d).checked_mul(c)?)?;
    }
    Some(sum / n as u128)
}

/// `count` canonical classes of length `n` with `ones` ones, fully
/// determined by `seed`.
///
/// Classes are distinct until the bucket is exhausted; only then do repeats
/// appear. Up to the oracle limit classes are drawn uniformly from the full
/// enumeration. Beyond it, uniformly random strings are canonicalized, which
/// favours classes with more distinct rotations.
pub fn random_classes(n: usize, ones: usize, count: usize, seed: u64) -> Result<Vec<CircularBinaryString>> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if ones > n {
        return Err(Error::Precondition("ones must not exceed n"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bucket = class_count(n, ones).map_or(usize::MAX, |c| usize::try_from(c).unwrap_or(usize::MAX));
    let distinct = count.min(bucket);
    let mut out = if n <= MAX_ORACLE_LEN {
        let classes = enumerate_classes(n, ones)?;
        sample(&mut rng, classes.len(), distinct).into_iter().map(|i| classes[i].clone()).collect()
    } else {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(distinct);
        while out.len() < distinct {
            let mut bits = vec![0u8; n];
            for i in sample(&mut rng, n, ones) {
                bits[i] = 1;
            }
            let c = canonicalize(&bits)?;
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
        out
    };
    while out.len() < count {
        let pick = rng.random_range(0..distinct);
        out.push(out[pick].clone());
    }
    Ok(out)
}
