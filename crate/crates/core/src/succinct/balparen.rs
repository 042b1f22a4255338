use super::{BitVec, SuccinctError};

const BLOCKS_PER_SUPER: usize = 64;

/// Balanced parentheses sequence with findopen/findclose.
///
/// A set bit is an open parenthesis. Every 64-bit block keeps its total
/// excess and the minimum prefix excess inside it; superblocks of 64 blocks
/// keep the same pair, so a search skips whole blocks and superblocks.
#[derive(Clone, Debug)]
pub struct BalParen {
    bits: BitVec,
    block_total: Vec<i8>,
    block_min: Vec<i8>,
    super_total: Vec<i32>,
    super_min: Vec<i32>,
}

#[inline]
fn word_excess(word: u64, nbits: usize) -> (i32, i32) {
    let mut e = 0i32;
    let mut m = 0i32;
    for r in 0..nbits {
        e += if (word >> r) & 1 == 1 { 1 } else { -1 };
        m = m.min(e);
    }
    (e, m)
}

impl BalParen {
    /// Wrap `bits` (1 = open). Returns an error when the sequence is not balanced.
    pub fn new(bits: BitVec) -> Result<Self, SuccinctError> {
        let n = bits.len();
        let nw = bits.words().len();
        let mut block_total = Vec::with_capacity(nw);
        let mut block_min = Vec::with_capacity(nw);
        for w in 0..nw {
            let nbits = (n - w * 64).min(64);
            let (t, m) = word_excess(bits.word(w), nbits);
            block_total.push(t as i8);
            block_min.push(m as i8);
        }
        let mut super_total = Vec::new();
        let mut super_min = Vec::new();
        for chunk in 0..nw.div_ceil(BLOCKS_PER_SUPER) {
            let mut e = 0i32;
            let mut m = 0i32;
            for b in chunk * BLOCKS_PER_SUPER..((chunk + 1) * BLOCKS_PER_SUPER).min(nw) {
                m = m.min(e + block_min[b] as i32);
                e += block_total[b] as i32;
            }
            super_total.push(e);
            super_min.push(m);
        }
        let total: i32 = super_total.iter().sum();
        let min_prefix = {
            let mut e = 0;
            let mut m = 0;
            for (t, mm) in super_total.iter().zip(&super_min) {
                m = m.min(e + mm);
                e += t;
            }
            m
        };
        if total != 0 || min_prefix < 0 {
            return Err(SuccinctError::Unbalanced);
        }
        Ok(BalParen { bits, block_total, block_min, super_total, super_min })
    }

    /// Parse `(`/`)` characters.
    pub fn parse(s: &str) -> Result<Self, SuccinctError> {
        let bools: Vec<bool> = s.chars().filter(|c| *c == '(' || *c == ')').map(|c| c == '(').collect();
        BalParen::new(BitVec::from_bools(&bools))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn is_open(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    /// Excess (opens minus closes) of the prefix `[0, i)`.
    fn excess_before(&self, i: usize) -> i32 {
        let w = i >> 6;
        let s = w / BLOCKS_PER_SUPER;
        let mut e: i32 = self.super_total[..s].iter().sum();
        for b in s * BLOCKS_PER_SUPER..w {
            e += self.block_total[b] as i32;
        }
        let r = i & 63;
        if r > 0 {
            e += word_excess(self.bits.word(w), r).0;
        }
        e
    }

    /// Matching close of the open parenthesis at `i`.
    pub fn findclose(&self, i: usize) -> Result<usize, SuccinctError> {
        if i >= self.len() || !self.is_open(i) {
            return Err(SuccinctError::NotAParen(i));
        }
        let target = self.excess_before(i);
        let nw = self.block_total.len();
        // rest of the current word
        let mut e = target + 1;
        let w0 = i >> 6;
        let end0 = ((w0 + 1) * 64).min(self.len());
        for p in i + 1..end0 {
            e += if self.bits.get(p) { 1 } else { -1 };
            if e == target {
                return Ok(p);
            }
        }
        let mut w = w0 + 1;
        while w < nw {
            if w.is_multiple_of(BLOCKS_PER_SUPER) {
                let s = w / BLOCKS_PER_SUPER;
                if e + self.super_min[s] > target {
                    e += self.super_total[s];
                    w += BLOCKS_PER_SUPER;
                    continue;
                }
            }
            if e + (self.block_min[w] as i32) <= target {
                let end = ((w + 1) * 64).min(self.len());
                for p in w * 64..end {
                    e += if self.bits.get(p) { 1 } else { -1 };
                    if e == target {
                        return Ok(p);
                    }
                }
                unreachable!("block minimum promised a match");
            }
            e += self.block_total[w] as i32;
            w += 1;
        }
        Err(SuccinctError::Unmatched(i))
    }

    /// Matching open of the close parenthesis at `j`.
    pub fn findopen(&self, j: usize) -> Result<usize, SuccinctError> {
        if j >= self.len() || self.is_open(j) {
            return Err(SuccinctError::NotAParen(j));
        }
        // excess before position p, walking p downward from j
        let target = self.excess_before(j) - 1;
        let mut e = target + 1;
        let w0 = j >> 6;
        let mut p = j;
        while p > w0 * 64 {
            p -= 1;
            e -= if self.bits.get(p) { 1 } else { -1 };
            if e == target {
                return Ok(p);
            }
        }
        // e is now the excess before the start of block w0
        let mut w = w0;
        while w > 0 {
            if w.is_multiple_of(BLOCKS_PER_SUPER) {
                let s = w / BLOCKS_PER_SUPER - 1;
                let start = e - self.super_total[s];
                if start + self.super_min[s] > target {
                    e = start;
                    w -= BLOCKS_PER_SUPER;
                    continue;
                }
            }
            let b = w - 1;
            let start = e - self.block_total[b] as i32;
            if start + (self.block_min[b] as i32) <= target {
                let mut q = b * 64 + 64.min(self.len() - b * 64);
                while q > b * 64 {
                    q -= 1;
                    e -= if self.bits.get(q) { 1 } else { -1 };
                    if e == target {
                        return Ok(q);
                    }
                }
                unreachable!("block minimum promised a match");
            }
            e = start;
            w -= 1;
        }
        Err(SuccinctError::Unmatched(j))
    }

    pub fn size_in_bits(&self) -> u64 {
        self.bits.size_in_bits()
            + self.block_total.len() as u64 * 16
            + self.super_total.len() as u64 * 64
    }
}
