//! Fixed-width membership vectors over ring element indices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

const WORDS: usize = 4;

/// Largest ring order representable by an [`ElementSet`].
pub const MAX_ORDER: usize = WORDS * 64;

/// A subset of `0..universe` stored as a 256-bit vector.
///
/// Ordering is canonical: first by the sorted member list compared
/// lexicographically. Callers that want "(size, members)" order sort by
/// `(len(), set)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementSet {
    words: [u64; WORDS],
    universe: u16,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_ORDER, "universe {universe} exceeds {MAX_ORDER}");
        ElementSet {
            words: [0; WORDS],
            universe: universe as u16,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn singleton(universe: usize, x: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(x);
        s
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(universe: usize, it: I) -> Self {
        let mut s = Self::empty(universe);
        for x in it {
            s.insert(x);
        }
        s
    }

    pub fn from_predicate(universe: usize, mut pred: impl FnMut(usize) -> bool) -> Self {
        let mut s = Self::empty(universe);
        for x in 0..universe {
            if pred(x) {
                s.insert(x);
            }
        }
        s
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.universe() && self.words[x >> 6] >> (x & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.universe(), "element {x} outside universe {}", self.universe);
        let was = self.contains(x);
        self.words[x >> 6] |= 1 << (x & 63);
        !was
    }

    #[inline]
    pub fn remove(&mut self, x: usize) -> bool {
        let was = self.contains(x);
        if was {
            self.words[x >> 6] &= !(1 << (x & 63));
        }
        was
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.words[0],
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        let mut words = [0; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            *w = f(self.words[i], other.words[i]);
        }
        ElementSet {
            words,
            universe: self.universe,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.universe()).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }
}

pub struct Iter<'a> {
    set: &'a ElementSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + tz);
            }
            self.word += 1;
            if self.word >= WORDS {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Sort key putting smaller sets first, ties broken by member list.
pub fn canonical_key(s: &ElementSet) -> (usize, ElementSet) {
    (s.len(), *s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterates_in_order_across_words() {
        let s = ElementSet::from_elements(200, [199, 3, 64, 0, 127]);
        assert_eq!(s.to_vec(), vec![0, 3, 64, 127, 199]);
        assert_eq!(s.len(), 5);
    }

    #[test]
    fn set_algebra() {
        let a = ElementSet::from_elements(8, [1, 2, 3]);
        let b = ElementSet::from_elements(8, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 2]);
        assert_eq!(b.complement().to_vec(), vec![0, 1, 2, 5, 6, 7]);
        assert!(ElementSet::from_elements(8, [3]).is_subset(&a));
        assert!(!b.is_subset(&a));
    }

    #[test]
    fn canonical_order_is_by_size_then_members() {
        let mut v = vec![
            ElementSet::from_elements(6, [0, 3]),
            ElementSet::from_elements(6, [0]),
            ElementSet::from_elements(6, [0, 2, 4]),
            ElementSet::from_elements(6, [0, 2]),
        ];
        v.sort_by_key(canonical_key);
        let lists: Vec<_> = v.iter().map(|s| s.to_vec()).collect();
        assert_eq!(lists, vec![vec![0], vec![0, 2], vec![0, 3], vec![0, 2, 4]]);
    }

    #[test]
    fn serializes_as_sorted_list() {
        let s = ElementSet::from_elements(10, [5, 1]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,5]");
    }
}
