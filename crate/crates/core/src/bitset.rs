use std::cmp::Ordering;
use std::fmt;

/// Subset of a fixed universe `0..n`, packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        BitSet { words: vec![0; n.div_ceil(64)] }
    }

    pub fn from_iter(n: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut b = BitSet::new(n);
        for i in items {
            b.insert(i);
        }
        b
    }

    pub fn full(n: usize) -> Self {
        BitSet::from_iter(n, 0..n)
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let (w, m) = (i / 64, 1u64 << (i % 64));
        let fresh = self.words[w] & m == 0;
        self.words[w] |= m;
        fresh
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn xor_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    /// Least element, if any.
    pub fn first(&self) -> Option<usize> {
        self.words.iter().position(|&w| w != 0).map(|i| i * 64 + self.words[i].trailing_zeros() as usize)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order of the sorted member lists.
    pub fn cmp_lex(&self, other: &BitSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_compares_member_lists() {
        let a = BitSet::from_iter(130, [0, 2]);
        let b = BitSet::from_iter(130, [0, 3]);
        let c = BitSet::from_iter(130, [0, 2, 129]);
        assert_eq!(a.cmp_lex(&b), Ordering::Less);
        assert_eq!(a.cmp_lex(&c), Ordering::Less);
        assert_eq!(c.cmp_lex(&b), Ordering::Less);
        assert_eq!(c.to_vec(), vec![0, 2, 129]);
        assert!(a.is_subset(&c) && !b.is_subset(&c));
    }
}
