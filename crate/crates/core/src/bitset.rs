/// Fixed-capacity set of vertex labels packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub(crate) fn empty(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    pub(crate) fn full(capacity: usize) -> Self {
        let mut set = Self::empty(capacity);
        for (i, word) in set.words.iter_mut().enumerate() {
            let lo = i * 64;
            let bits = (capacity - lo).min(64);
            *word = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
        }
        set
    }

    #[inline]
    pub(crate) fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub(crate) fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub(crate) fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w & (1u64 << (v % 64)) != 0)
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub(crate) fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }

    /// Members strictly greater than `v`.
    pub(crate) fn iter_above(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.iter().filter(move |&u| u > v)
    }
}
