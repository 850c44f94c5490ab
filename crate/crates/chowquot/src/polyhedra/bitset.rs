/// Fixed-capacity bitset over indices `0..n`, used for ray/facet incidences.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BitSet {
    words: Box<[u64]>,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        BitSet { words: vec![0u64; n.div_ceil(64).max(1)].into_boxed_slice() }
    }

    pub fn from_indices(n: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(n);
        for i in idx {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(other.words.iter()).map(|(a, b)| a & b).collect() }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = BitSet::from_indices(130, [0, 5, 64, 129]);
        let b = BitSet::from_indices(130, [5, 129]);
        assert_eq!(a.len(), 4);
        assert!(b.is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.intersection(&b), b);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 5, 64, 129]);
    }
}
