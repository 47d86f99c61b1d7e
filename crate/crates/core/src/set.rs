//! Subsets of a finite ground set, packed into machine words.
//!
//! Every ground set in this crate is `{0, 1, ..., n-1}` for some `n`, so a
//! subset is a bit vector. Canonical ordering of subsets is by cardinality
//! first, then lexicographically by the ascending element list; families of
//! subsets are kept sorted in that order wherever they appear in reports.

use std::fmt;

const WORD_BITS: usize = 64;

fn words_for(nbits: usize) -> usize {
    nbits.div_ceil(WORD_BITS).max(1)
}

/// A subset of `{0, ..., nbits-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    nbits: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(nbits: usize) -> Self {
        Subset {
            nbits,
            words: vec![0; words_for(nbits)],
        }
    }

    pub fn full(nbits: usize) -> Self {
        let mut s = Subset::empty(nbits);
        for i in 0..nbits {
            s.insert(i);
        }
        s
    }

    pub fn singleton(nbits: usize, elem: usize) -> Self {
        let mut s = Subset::empty(nbits);
        s.insert(elem);
        s
    }

    pub fn from_elems(nbits: usize, elems: &[usize]) -> Self {
        let mut s = Subset::empty(nbits);
        for &e in elems {
            s.insert(e);
        }
        s
    }

    /// Builds a subset of a ground set with at most 64 elements from a raw mask.
    pub fn from_word(nbits: usize, word: u64) -> Self {
        assert!(nbits <= WORD_BITS);
        let mask = if nbits == WORD_BITS {
            u64::MAX
        } else {
            (1u64 << nbits) - 1
        };
        Subset {
            nbits,
            words: vec![word & mask],
        }
    }

    /// The raw mask of a subset whose ground set has at most 64 elements.
    pub fn word(&self) -> u64 {
        assert!(self.nbits <= WORD_BITS);
        self.words[0]
    }

    pub fn ground_size(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, elem: usize) {
        assert!(elem < self.nbits, "element {elem} out of range {}", self.nbits);
        self.words[elem / WORD_BITS] |= 1u64 << (elem % WORD_BITS);
    }

    pub fn remove(&mut self, elem: usize) {
        assert!(elem < self.nbits);
        self.words[elem / WORD_BITS] &= !(1u64 << (elem % WORD_BITS));
    }

    pub fn contains(&self, elem: usize) -> bool {
        elem < self.nbits && self.words[elem / WORD_BITS] >> (elem % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.nbits
    }

    pub fn union_with(&mut self, other: &Subset) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Subset) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn minus(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.nbits, other.nbits);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        s
    }

    pub fn complement(&self) -> Subset {
        Subset::full(self.nbits).minus(self)
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * WORD_BITS;
            BitIter { word: w }.map(move |b| base + b)
        })
    }

    pub fn elems(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Cardinality-then-lexicographic order on the ascending element lists.
    pub fn cmp_canonical(&self, other: &Subset) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(b)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Sorts a family of subsets into canonical order and removes duplicates.
pub fn canonicalize_family(mut family: Vec<Subset>) -> Vec<Subset> {
    family.sort_by(Subset::cmp_canonical);
    family.dedup();
    family
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_iter() {
        let s = Subset::from_elems(12, &[4, 0, 8]);
        assert!(s.contains(0) && s.contains(4) && s.contains(8));
        assert!(!s.contains(1));
        assert_eq!(s.elems(), vec![0, 4, 8]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn multi_word_ground_set() {
        let mut s = Subset::empty(200);
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(199);
        assert_eq!(s.elems(), vec![0, 63, 64, 199]);
        assert_eq!(s.complement().len(), 196);
        assert!(s.is_subset_of(&Subset::full(200)));
    }

    #[test]
    fn canonical_order_is_size_then_element_lex() {
        let a = Subset::from_elems(4, &[1, 2]);
        let b = Subset::from_elems(4, &[0, 3]);
        // [0,3] precedes [1,2] even though its mask is numerically larger.
        assert_eq!(b.cmp_canonical(&a), std::cmp::Ordering::Less);
        let c = Subset::from_elems(4, &[2]);
        assert_eq!(c.cmp_canonical(&a), std::cmp::Ordering::Less);
    }

    #[test]
    fn set_algebra() {
        let a = Subset::from_elems(6, &[0, 1, 2]);
        let b = Subset::from_elems(6, &[2, 3]);
        assert_eq!(a.union(&b).elems(), vec![0, 1, 2, 3]);
        assert_eq!(a.intersection(&b).elems(), vec![2]);
        assert_eq!(a.minus(&b).elems(), vec![0, 1]);
        assert!(a.intersects(&b));
        assert!(!a.minus(&b).intersects(&b));
    }
}
