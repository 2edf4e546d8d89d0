//! Block transpositions on concrete representatives and one-move adjacency.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::string::{canonicalize, CircularBinaryString};

/// Exchange of the adjacent blocks `[i, j)` and `[j, k)` (1-based cuts,
/// `1 <= i < j < k <= n + 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Transposition {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl Transposition {
    pub fn new(i: usize, j: usize, k: usize, n: usize) -> Result<Self> {
        let t = Transposition { i, j, k };
        t.check(n)?;
        Ok(t)
    }

    pub fn check(&self, n: usize) -> Result<()> {
        let Transposition { i, j, k } = *self;
        if 1 <= i && i < j && j < k && k <= n + 1 {
            Ok(())
        } else {
            Err(Error::InvalidTriple { i, j, k, n })
        }
    }

    /// Builds the cut triple for three distinct circular gap positions.
    ///
    /// Gap `g` (0-based) sits immediately before symbol `g`. Any three
    /// distinct gaps admit exactly one non-trivial reassembly up to
    /// rotation, which the sorted linear triple realizes.
    pub fn from_gaps(gaps: [usize; 3], n: usize) -> Result<Self> {
        let mut g = gaps.map(|x| x % n.max(1));
        g.sort_unstable();
        if g[0] == g[1] || g[1] == g[2] {
            let [i, j, k] = gaps;
            return Err(Error::InvalidTriple { i: i + 1, j: j + 1, k: k + 1, n });
        }
        Transposition::new(g[0] + 1, g[1] + 1, g[2] + 1, n)
    }

    /// Circular gap positions of the three cuts, reduced mod `n`.
    pub fn gaps(&self, n: usize) -> [usize; 3] {
        [(self.i - 1) % n, (self.j - 1) % n, (self.k - 1) % n]
    }

    /// Applies the block exchange to a concrete sequence.
    pub fn apply_to<T: Clone>(&self, bits: &[T]) -> Result<Vec<T>> {
        self.check(bits.len())?;
        let (i, j, k) = (self.i - 1, self.j - 1, self.k - 1);
        let mut out = Vec::with_capacity(bits.len());
        out.extend_from_slice(&bits[..i]);
        out.extend_from_slice(&bits[j..k]);
        out.extend_from_slice(&bits[i..j]);
        out.extend_from_slice(&bits[k..]);
        Ok(out)
    }

    /// The same circular cuts expressed on `rotate_left(literal, r)`.
    ///
    /// Fails for triples that only rotate the string (`i = 1`, `k = n + 1`),
    /// whose cuts coincide on the circle.
    pub fn rebase(&self, n: usize, r: usize) -> Result<Self> {
        self.check(n)?;
        let gaps = self.gaps(n).map(|g| (g + n - r % n) % n);
        Transposition::from_gaps(gaps, n)
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.i, self.j, self.k)
    }
}

/// Applies `t` to `representative` (or to the canonical form of `s` when
/// none is given) and returns the resulting class.
pub fn apply_transposition(
    s: &CircularBinaryString,
    t: &Transposition,
    representative: Option<&[u8]>,
) -> Result<CircularBinaryString> {
    let base = match representative {
        Some(rep) => {
            if s.rotation_offset(rep).is_none() {
                return Err(Error::NotARotation);
            }
            rep
        }
        None => s.bits(),
    };
    canonicalize(&t.apply_to(base)?)
}

/// Reverses `t` on the representative it produced: `(i, i + (k - j), k)`.
pub fn inverse_of(t: &Transposition, n: usize) -> Result<Transposition> {
    t.check(n)?;
    Transposition::new(t.i, t.i + (t.k - t.j), t.k, n)
}

/// Classes reachable from `s` by exactly one transposition, excluding `s`,
/// each paired with the first cut triple (in lexicographic order) reaching
/// it from the canonical representative.
pub fn neighbor_moves(s: &CircularBinaryString) -> Result<BTreeMap<CircularBinaryString, Transposition>> {
    let n = s.len();
    if n < 3 {
        return Err(Error::TooShort { n, min: 3 });
    }
    let bits = s.bits();
    let mut out = BTreeMap::new();
    let mut scratch = Vec::with_capacity(n);
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                scratch.clear();
                scratch.extend_from_slice(&bits[..i - 1]);
                scratch.extend_from_slice(&bits[j - 1..k - 1]);
                scratch.extend_from_slice(&bits[i - 1..j - 1]);
                scratch.extend_from_slice(&bits[k - 1..]);
                let c = canonicalize(&scratch)?;
                if c != *s {
                    out.entry(c).or_insert(Transposition { i, j, k });
                }
            }
        }
    }
    Ok(out)
}

/// Classes reachable from `s` by exactly one transposition, excluding `s`.
pub fn neighbors(s: &CircularBinaryString) -> Result<Vec<CircularBinaryString>> {
    Ok(neighbor_moves(s)?.into_keys().collect())
}
