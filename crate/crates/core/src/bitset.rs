//! Fixed-width vertex sets.
//!
//! Every set lives in a universe of at most [`MAX_VERTICES`] vertices. The
//! [`Bits`] trait abstracts over the single-word representation (`u64`, used by
//! the enumeration hot loops whenever `n <= 64`) and the multi-word
//! [`VertexSet`] used by large constructions.

use std::fmt;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 512;

const WORDS: usize = MAX_VERTICES / 64;

/// Set operations shared by the narrow and wide vertex-set representations.
pub trait Bits: Copy + Eq + std::hash::Hash + Send + Sync + fmt::Debug {
    fn empty() -> Self;
    /// The set `{0, .., n-1}`.
    fn full(n: usize) -> Self;
    fn contains(&self, v: usize) -> bool;
    fn insert(&mut self, v: usize);
    fn remove(&mut self, v: usize);
    fn union(&self, other: &Self) -> Self;
    fn intersection(&self, other: &Self) -> Self;
    fn difference(&self, other: &Self) -> Self;
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool;
    /// Smallest element.
    fn first(&self) -> Option<usize>;

    fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    fn ones(&self) -> Ones<Self> {
        Ones { rest: *self }
    }

    fn to_vertex_set(&self) -> VertexSet;
    /// Panics if `s` does not fit the representation.
    fn from_vertex_set(s: &VertexSet) -> Self;
}

/// Iterator over the elements of a set in increasing order.
pub struct Ones<B> {
    rest: B,
}

impl<B: Bits> Iterator for Ones<B> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let v = self.rest.first()?;
        self.rest.remove(v);
        Some(v)
    }
}

impl Bits for u64 {
    #[inline]
    fn empty() -> Self {
        0
    }

    #[inline]
    fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    #[inline]
    fn contains(&self, v: usize) -> bool {
        v < 64 && (self >> v) & 1 == 1
    }

    #[inline]
    fn insert(&mut self, v: usize) {
        *self |= 1 << v;
    }

    #[inline]
    fn remove(&mut self, v: usize) {
        *self &= !(1 << v);
    }

    #[inline]
    fn union(&self, other: &Self) -> Self {
        self | other
    }

    #[inline]
    fn intersection(&self, other: &Self) -> Self {
        self & other
    }

    #[inline]
    fn difference(&self, other: &Self) -> Self {
        self & !other
    }

    #[inline]
    fn len(&self) -> usize {
        self.count_ones() as usize
    }

    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }

    #[inline]
    fn first(&self) -> Option<usize> {
        if *self == 0 {
            None
        } else {
            Some(self.trailing_zeros() as usize)
        }
    }

    fn to_vertex_set(&self) -> VertexSet {
        VertexSet::from_low_word(*self)
    }

    fn from_vertex_set(s: &VertexSet) -> Self {
        assert!(s.last().is_none_or(|v| v < 64), "set does not fit one word");
        s.low_word()
    }
}

/// A set of vertex indices below [`MAX_VERTICES`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: usize) -> Self {
        Self::new().with(v)
    }

    /// Panics if a vertex is out of range.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut s = Self::new();
        for v in vertices {
            assert!(v < MAX_VERTICES, "vertex {v} out of range");
            s.insert(v);
        }
        s
    }

    pub fn iter(&self) -> Ones<Self> {
        self.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Largest element, if any.
    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    /// Narrows to a single word. Only meaningful when every element is `< 64`.
    pub(crate) fn low_word(&self) -> u64 {
        self.words[0]
    }

    pub(crate) fn from_low_word(w: u64) -> Self {
        let mut s = Self::new();
        s.words[0] = w;
        s
    }
}

impl Bits for VertexSet {
    fn empty() -> Self {
        Self::default()
    }

    fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        let mut s = Self::default();
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && (self.words[v / 64] >> (v % 64)) & 1 == 1
    }

    #[inline]
    fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        out.words.iter_mut().zip(other.words).for_each(|(a, b)| *a |= b);
        out
    }

    fn intersection(&self, other: &Self) -> Self {
        let mut out = *self;
        out.words.iter_mut().zip(other.words).for_each(|(a, b)| *a &= b);
        out
    }

    fn difference(&self, other: &Self) -> Self {
        let mut out = *self;
        out.words.iter_mut().zip(other.words).for_each(|(a, b)| *a &= !b);
        out
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn to_vertex_set(&self) -> VertexSet {
        *self
    }

    fn from_vertex_set(s: &VertexSet) -> Self {
        *s
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_vertices(iter)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_set_crosses_word_boundaries() {
        let s = VertexSet::from_vertices([0, 63, 64, 200, 511]);
        assert_eq!(s.len(), 5);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.last(), Some(511));
        assert_eq!(s.to_vec(), vec![0, 63, 64, 200, 511]);
        assert!(s.without(0).without(63).first() == Some(64));
    }

    #[test]
    fn full_sets() {
        assert_eq!(<u64 as Bits>::full(0), 0);
        assert_eq!(<u64 as Bits>::full(64), u64::MAX);
        assert_eq!(VertexSet::full(130).len(), 130);
        assert_eq!(VertexSet::full(130).last(), Some(129));
        assert_eq!(VertexSet::full(MAX_VERTICES).len(), MAX_VERTICES);
    }

    #[test]
    fn algebra_matches_between_representations() {
        let a: u64 = 0b1011_0110;
        let b: u64 = 0b0110_1100;
        let wa = VertexSet::from_low_word(a);
        let wb = VertexSet::from_low_word(b);
        assert_eq!(wa.union(&wb).low_word(), a | b);
        assert_eq!(wa.intersection(&wb).low_word(), a & b);
        assert_eq!(wa.difference(&wb).low_word(), a & !b);
        assert_eq!(a.ones().collect::<Vec<_>>(), wa.to_vec());
    }

    #[test]
    fn display() {
        assert_eq!(VertexSet::from_vertices([1, 4]).to_string(), "{1,4}");
        assert_eq!(VertexSet::new().to_string(), "{}");
    }
}
