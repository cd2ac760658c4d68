//! Fixed-width bit rows used for incidence sets and adjacency matrices.

/// A fixed-length bit vector. Unused high bits of the last word stay zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn set(&mut self, idx: usize) {
        debug_assert!(idx < self.len);
        self.words[idx / 64] |= 1u64 << (idx % 64);
    }

    #[inline]
    pub fn get(&self, idx: usize) -> bool {
        debug_assert!(idx < self.len);
        self.words[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Popcount of `a & b` without materializing the intersection.
    pub fn and_count(a: &Self, b: &Self) -> usize {
        debug_assert_eq!(a.len, b.len);
        a.words
            .iter()
            .zip(&b.words)
            .map(|(x, y)| (x & y).count_ones() as usize)
            .sum()
    }

    pub fn and(a: &Self, b: &Self) -> Self {
        debug_assert_eq!(a.len, b.len);
        BitRow {
            len: a.len,
            words: a.words.iter().zip(&b.words).map(|(x, y)| x & y).collect(),
        }
    }

    pub fn or_inplace(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    /// `self ⊇ other`
    pub fn is_superset_of(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(s, o)| o & !s == 0)
    }

    /// `self ⊇ (a & b)`, fused so callers avoid the temporary.
    pub fn contains_and(&self, a: &Self, b: &Self) -> bool {
        debug_assert_eq!(self.len, a.len);
        debug_assert_eq!(self.len, b.len);
        self.words
            .iter()
            .zip(a.words.iter().zip(&b.words))
            .all(|(s, (x, y))| (x & y) & !s == 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + bit)
                }
            })
        })
    }
}
