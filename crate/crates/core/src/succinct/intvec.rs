/// Fixed-width packed integer array.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntVec {
    words: Vec<u64>,
    width: u32,
    len: usize,
}

/// Bits needed to store every value in `0..=max`.
pub fn bits_for(max: u64) -> u32 {
    (64 - max.leading_zeros()).max(1)
}

impl IntVec {
    pub fn new(len: usize, width: u32) -> Self {
        assert!((1..=64).contains(&width), "width {width} out of range");
        let total = len as u64 * width as u64;
        IntVec { words: vec![0; total.div_ceil(64) as usize], width, len }
    }

    /// Array able to hold values up to `max`.
    pub fn for_max(len: usize, max: u64) -> Self {
        IntVec::new(len, bits_for(max))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn width(&self) -> u32 {
        self.width
    }

    #[inline]
    fn mask(&self) -> u64 {
        if self.width == 64 {
            !0
        } else {
            (1u64 << self.width) - 1
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> u64 {
        debug_assert!(i < self.len);
        let bit = i as u64 * self.width as u64;
        let w = (bit >> 6) as usize;
        let off = (bit & 63) as u32;
        let lo = self.words[w] >> off;
        if off + self.width <= 64 {
            lo & self.mask()
        } else {
            (lo | (self.words[w + 1] << (64 - off))) & self.mask()
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: u64) {
        debug_assert!(i < self.len);
        let mask = self.mask();
        debug_assert!(value <= mask, "value {value} exceeds width {}", self.width);
        let bit = i as u64 * self.width as u64;
        let w = (bit >> 6) as usize;
        let off = (bit & 63) as u32;
        self.words[w] = (self.words[w] & !(mask << off)) | ((value & mask) << off);
        if off + self.width > 64 {
            let spill = off + self.width - 64;
            let hi_mask = (1u64 << spill) - 1;
            self.words[w + 1] = (self.words[w + 1] & !hi_mask) | ((value & mask) >> (64 - off));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn size_in_bits(&self) -> u64 {
        self.words.len() as u64 * 64
    }
}
