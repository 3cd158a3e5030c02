use std::cmp::Ordering;
use std::fmt;

/// A subset of the vertices `0..capacity` of a graph, stored as a bitset.
///
/// Membership tests are O(1) and iteration yields ids in increasing order,
/// so every consumer sees the same deterministic ordering.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    capacity: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(capacity: usize) -> Self {
        VertexSet {
            capacity,
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::empty(capacity);
        for v in 0..capacity {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(capacity: usize, ids: I) -> Self {
        let mut s = Self::empty(capacity);
        for v in ids {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.capacity);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.capacity);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// True iff `self ∩ other` contains a bit outside `excluded`.
    pub fn intersects_outside(&self, other: &VertexSet, excluded: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .zip(&excluded.words)
            .any(|((a, b), e)| a & b & !e != 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares two sets as increasing id sequences (lexicographic order).
    pub fn cmp_lex(&self, other: &VertexSet) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
