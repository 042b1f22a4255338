use std::cell::Cell;

use super::{BitVec, IntVec};

/// Subset of `0..n` with constant-time add/remove/contains and iteration in
/// time proportional to the number of members.
///
/// Membership is a plain bit array. Words holding at least one member are kept
/// in a dense list with a back-pointer per word, so iteration only touches
/// non-empty words and never scans the universe.
#[derive(Clone, Debug)]
pub struct ChoiceDict {
    bits: BitVec,
    dense: IntVec,
    pos: IntVec,
    nonempty: usize,
    members: usize,
    words_visited: Cell<u64>,
}

impl ChoiceDict {
    pub fn new(universe: usize) -> Self {
        let nw = universe.div_ceil(64);
        ChoiceDict {
            bits: BitVec::new(universe),
            dense: IntVec::for_max(nw, nw as u64),
            pos: IntVec::for_max(nw, nw as u64),
            nonempty: 0,
            members: 0,
            words_visited: Cell::new(0),
        }
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.bits.get(v)
    }

    /// Returns true if `v` was newly inserted.
    pub fn add(&mut self, v: usize) -> bool {
        if self.bits.get(v) {
            return false;
        }
        let w = v >> 6;
        if self.bits.word(w) == 0 {
            self.dense.set(self.nonempty, w as u64);
            self.pos.set(w, self.nonempty as u64);
            self.nonempty += 1;
        }
        self.bits.set(v);
        self.members += 1;
        true
    }

    /// Returns true if `v` was a member.
    pub fn remove(&mut self, v: usize) -> bool {
        if !self.bits.get(v) {
            return false;
        }
        self.bits.clear(v);
        self.members -= 1;
        let w = v >> 6;
        if self.bits.word(w) == 0 {
            let slot = self.pos.get(w) as usize;
            let last = self.dense.get(self.nonempty - 1);
            self.dense.set(slot, last);
            self.pos.set(last as usize, slot as u64);
            self.nonempty -= 1;
        }
        true
    }

    pub fn clear(&mut self) {
        let members: Vec<usize> = self.iter().collect();
        for v in members {
            self.remove(v);
        }
    }

    /// Members, word by word; ascending inside each word.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nonempty).flat_map(move |slot| {
            self.words_visited.set(self.words_visited.get() + 1);
            let w = self.dense.get(slot) as usize;
            let mut word = self.bits.word(w);
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let t = word.trailing_zeros() as usize;
                word &= word - 1;
                Some((w << 6) + t)
            })
        })
    }

    /// Words inspected by iteration so far; used to check that iteration never
    /// scans the whole universe.
    pub fn words_visited(&self) -> u64 {
        self.words_visited.get()
    }

    pub fn as_bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn size_in_bits(&self) -> u64 {
        self.bits.size_in_bits() + self.dense.size_in_bits() + self.pos.size_in_bits()
    }
}
