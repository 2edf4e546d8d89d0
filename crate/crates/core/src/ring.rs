//! A concrete representative whose symbols carry stable identities.
//!
//! Constructions plan moves in terms of parts and need to emit cut triples
//! against whatever literal rotation the previous move produced. Tagging
//! every symbol lets a part be found by its separator after any number of
//! moves. A cut is named by the tag of the symbol right after it, and a move
//! named by three such tags is its own inverse: after the exchange the same
//! three symbols still start the three arcs.

use crate::error::{Error, Result};
use crate::string::{rotation_offset, CircularBinaryString};
use crate::transposition::Transposition;

pub(crate) type Tag = u32;

#[derive(Debug, Clone)]
pub(crate) struct Ring {
    bits: Vec<u8>,
    tags: Vec<Tag>,
    /// `position[tag]` is the current index of that symbol.
    position: Vec<usize>,
}

impl Ring {
    pub fn new(bits: Vec<u8>) -> Self {
        let n = bits.len();
        Ring { bits, tags: (0..n as Tag).collect(), position: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Tags of the separator symbols (`1`) in current literal order.
    pub fn separators(&self) -> Vec<Tag> {
        (0..self.len()).filter(|&i| self.bits[i] == 1).map(|i| self.tags[i]).collect()
    }

    /// Number of `0`s following separator `sep` before the next separator.
    pub fn run_after(&self, sep: Tag) -> usize {
        let n = self.len();
        let start = self.position[sep as usize];
        (1..n).take_while(|d| self.bits[(start + d) % n] == 0).count()
    }

    pub fn weights(&self, seps: &[Tag]) -> Vec<usize> {
        seps.iter().map(|&s| self.run_after(s)).collect()
    }

    /// The gap `offset` symbols into the run after `sep`, named by the tag
    /// of the symbol that follows it.
    pub fn gap_in_run(&self, sep: Tag, offset: usize) -> Tag {
        let n = self.len();
        self.tags[(self.position[sep as usize] + 1 + offset) % n]
    }

    pub fn cut(&mut self, cuts: [Tag; 3]) -> Result<Transposition> {
        let n = self.len();
        let gaps = cuts.map(|tag| self.position[tag as usize]);
        let t = Transposition::from_gaps(gaps, n)?;
        self.bits = t.apply_to(&self.bits)?;
        self.tags = t.apply_to(&self.tags)?;
        for (i, &tag) in self.tags.iter().enumerate() {
            self.position[tag as usize] = i;
        }
        Ok(t)
    }

    /// Moves `amount` zeros from the tail of the run after `from` onto the
    /// tail of the run after `to`. Returns the cut tags used.
    pub fn shift_zeros(&mut self, from: Tag, to: Tag, amount: usize) -> Result<([Tag; 3], Transposition)> {
        let (wf, wt) = (self.run_after(from), self.run_after(to));
        if amount == 0 || amount > wf || from == to {
            return Err(Error::ConstructionFailed(format!(
                "cannot shift {amount} zeros out of a run of {wf}"
            )));
        }
        let cuts = [self.gap_in_run(from, wf - amount), self.gap_in_run(from, wf), self.gap_in_run(to, wt)];
        let t = self.cut(cuts)?;
        Ok((cuts, t))
    }

    pub fn class(&self) -> CircularBinaryString {
        crate::string::canonicalize(&self.bits).expect("non-empty ring")
    }

    /// A ring holding `literal`, which must be a rotation of this ring's
    /// bits, with each symbol inheriting the tag of its counterpart here.
    pub fn carried_onto(&self, literal: &[u8]) -> Result<Ring> {
        let n = self.len();
        let r = rotation_offset(&self.bits, literal).ok_or(Error::NotARotation)?;
        let tags: Vec<Tag> = (0..n).map(|i| self.tags[(i + r) % n]).collect();
        let mut position = vec![0; n];
        for (i, &tag) in tags.iter().enumerate() {
            position[tag as usize] = i;
        }
        Ok(Ring { bits: literal.to_vec(), tags, position })
    }
}
