use super::{BitVec, RankSelect};

/// Packed array where slot `i` has its own width, fixed at construction.
///
/// Slot starts are marked in a bit vector of the total payload length and
/// found with `select1`, so the overhead is about one bit per payload bit.
#[derive(Clone, Debug)]
pub struct VarVec {
    starts: RankSelect,
    words: Vec<u64>,
    total: usize,
}

impl VarVec {
    /// `widths` yields one width in `1..=64` per slot.
    pub fn new(widths: impl IntoIterator<Item = u32>) -> Self {
        let widths: Vec<u32> = widths.into_iter().collect();
        let total: usize = widths.iter().map(|&w| w as usize).sum();
        let mut starts = BitVec::new(total);
        let mut at = 0;
        for &w in &widths {
            assert!((1..=64).contains(&w), "width {w} out of range");
            starts.set(at);
            at += w as usize;
        }
        VarVec { starts: RankSelect::new(starts), words: vec![0; total.div_ceil(64)], total }
    }

    pub fn len(&self) -> usize {
        self.starts.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn span(&self, i: usize) -> (usize, u32) {
        let start = self.starts.select1(i);
        let end = if i + 1 < self.len() { self.starts.select1(i + 1) } else { self.total };
        (start, (end - start) as u32)
    }

    pub fn width(&self, i: usize) -> u32 {
        self.span(i).1
    }

    pub fn get(&self, i: usize) -> u64 {
        let (start, w) = self.span(i);
        let (word, off) = (start / 64, start % 64);
        let mut v = self.words[word] >> off;
        if off + w as usize > 64 {
            v |= self.words[word + 1] << (64 - off);
        }
        if w == 64 {
            v
        } else {
            v & ((1u64 << w) - 1)
        }
    }

    /// Store `value`, which must fit the slot's width.
    pub fn set(&mut self, i: usize, value: u64) {
        let (start, w) = self.span(i);
        let mask = if w == 64 { !0 } else { (1u64 << w) - 1 };
        assert!(value & !mask == 0, "value {value} does not fit {w} bits");
        let (word, off) = (start / 64, start % 64);
        self.words[word] = (self.words[word] & !(mask << off)) | (value << off);
        if off + w as usize > 64 {
            let hi = 64 - off;
            self.words[word + 1] = (self.words[word + 1] & !(mask >> hi)) | (value >> hi);
        }
    }

    pub fn size_in_bits(&self) -> u64 {
        self.words.len() as u64 * 64 + self.starts.size_in_bits()
    }
}
