use super::{BitVec, SuccinctError};

const WORDS_PER_SUPER: usize = 8;

/// Immutable bit vector with a two-level rank directory.
///
/// Superblocks of 512 bits keep an absolute count, each 64-bit block keeps a
/// count relative to its superblock. Select binary-searches the superblocks
/// and then scans at most eight words.
#[derive(Clone, Debug, Default)]
pub struct RankSelect {
    bits: BitVec,
    supers: Vec<u32>,
    blocks: Vec<u16>,
    ones: usize,
}

impl RankSelect {
    pub fn new(bits: BitVec) -> Self {
        let nw = bits.words().len();
        let mut supers = Vec::with_capacity(nw / WORDS_PER_SUPER + 1);
        let mut blocks = Vec::with_capacity(nw);
        let mut total = 0usize;
        let mut rel = 0usize;
        for (i, w) in bits.words().iter().enumerate() {
            if i % WORDS_PER_SUPER == 0 {
                supers.push(total as u32);
                rel = 0;
            }
            blocks.push(rel as u16);
            let c = w.count_ones() as usize;
            rel += c;
            total += c;
        }
        RankSelect { bits, supers, blocks, ones: total }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn into_bits(self) -> BitVec {
        self.bits
    }

    #[inline]
    pub fn count_ones(&self) -> usize {
        self.ones
    }

    /// Number of set bits in `[0, i)`. Panics when `i > len`.
    #[inline]
    pub fn rank1(&self, i: usize) -> usize {
        assert!(i <= self.bits.len(), "rank index {i} beyond length {}", self.bits.len());
        let w = i >> 6;
        if w >= self.blocks.len() {
            return self.ones;
        }
        let base = self.supers[w / WORDS_PER_SUPER] as usize + self.blocks[w] as usize;
        let r = i & 63;
        if r == 0 {
            base
        } else {
            base + (self.bits.word(w) & ((1u64 << r) - 1)).count_ones() as usize
        }
    }

    #[inline]
    pub fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }

    /// Position of the set bit with zero-based ordinal `j`. Panics when `j >= count_ones`.
    pub fn select1(&self, j: usize) -> usize {
        assert!(j < self.ones, "select ordinal {j} beyond popcount {}", self.ones);
        // last superblock whose absolute count is <= j
        let mut lo = 0usize;
        let mut hi = self.supers.len();
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.supers[mid] as usize <= j {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut rem = j - self.supers[lo] as usize;
        let start = lo * WORDS_PER_SUPER;
        let end = (start + WORDS_PER_SUPER).min(self.blocks.len());
        for w in start..end {
            let word = self.bits.word(w);
            let c = word.count_ones() as usize;
            if rem < c {
                return (w << 6) + select_in_word(word, rem);
            }
            rem -= c;
        }
        unreachable!("rank directory inconsistent")
    }

    pub fn checked_rank1(&self, i: usize) -> Result<usize, SuccinctError> {
        if i > self.bits.len() {
            return Err(SuccinctError::IndexOutOfRange { index: i, len: self.bits.len() });
        }
        Ok(self.rank1(i))
    }

    pub fn checked_select1(&self, j: usize) -> Result<usize, SuccinctError> {
        if j >= self.ones {
            return Err(SuccinctError::OrdinalOutOfRange { ordinal: j, ones: self.ones });
        }
        Ok(self.select1(j))
    }

    /// Bits for payload plus directory.
    pub fn size_in_bits(&self) -> u64 {
        self.bits.size_in_bits() + self.supers.len() as u64 * 32 + self.blocks.len() as u64 * 16
    }
}

/// Position of the `r`-th (zero-based) set bit inside `word`.
#[inline]
pub fn select_in_word(mut word: u64, r: usize) -> usize {
    for _ in 0..r {
        word &= word - 1;
    }
    word.trailing_zeros() as usize
}
