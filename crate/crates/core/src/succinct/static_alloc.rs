use super::{BitVec, IntVec, RankSelect, SuccinctError};

/// Fixed key set over `0..n`, each key owning a `width`-bit payload slot.
///
/// Built in two passes: a census marks the keys, then payload offsets come
/// from a rank directory over the key bits.
#[derive(Clone, Debug)]
pub struct StaticAlloc {
    keys: RankSelect,
    payload: IntVec,
}

/// First pass of construction: collects keys.
#[derive(Clone, Debug)]
pub struct Census {
    keys: BitVec,
}

impl Census {
    pub fn new(universe: usize) -> Self {
        Census { keys: BitVec::new(universe) }
    }

    pub fn mark(&mut self, key: usize) {
        self.keys.set(key);
    }

    pub fn is_marked(&self, key: usize) -> bool {
        self.keys.get(key)
    }

    pub fn count(&self) -> usize {
        self.keys.count_ones()
    }

    /// Second pass: lay out payload slots, all zero.
    pub fn finish(self, width: u32) -> StaticAlloc {
        let keys = RankSelect::new(self.keys);
        let payload = IntVec::new(keys.count_ones(), width);
        StaticAlloc { keys, payload }
    }
}

impl StaticAlloc {
    pub fn new(universe: usize, keys: impl IntoIterator<Item = usize>, width: u32) -> Self {
        let mut c = Census::new(universe);
        for k in keys {
            c.mark(k);
        }
        c.finish(width)
    }

    pub fn empty(universe: usize, width: u32) -> Self {
        Census::new(universe).finish(width)
    }

    pub fn universe(&self) -> usize {
        self.keys.len()
    }

    pub fn key_count(&self) -> usize {
        self.keys.count_ones()
    }

    #[inline]
    pub fn is_key(&self, key: usize) -> bool {
        key < self.keys.len() && self.keys.get(key)
    }

    #[inline]
    pub fn get(&self, key: usize) -> Option<u64> {
        self.is_key(key).then(|| self.payload.get(self.keys.rank1(key)))
    }

    pub fn set(&mut self, key: usize, value: u64) -> Result<(), SuccinctError> {
        if !self.is_key(key) {
            return Err(SuccinctError::NotAKey(key));
        }
        let slot = self.keys.rank1(key);
        self.payload.set(slot, value);
        Ok(())
    }

    pub fn keys(&self) -> impl Iterator<Item = usize> + '_ {
        self.keys.bits().iter_ones()
    }

    pub fn size_in_bits(&self) -> u64 {
        self.keys.size_in_bits() + self.payload.size_in_bits()
    }
}
