//! Fixed-width vertex sets used as adjacency rows.
//!
//! Graphs with at most 64 vertices store each neighbourhood in a single
//! `u64`; larger graphs (up to 256 vertices) use [`WideSet`]. Algorithms are
//! written once against [`VertexSet`] and monomorphised for both widths.

use core::fmt;

mod sealed {
    pub trait Sealed {}
    impl Sealed for u64 {}
    impl Sealed for super::WideSet {}
}

/// A set of vertex ids below [`VertexSet::CAPACITY`].
pub trait VertexSet: sealed::Sealed + Copy + Eq + Ord + Default + fmt::Debug + Send + Sync + 'static {
    const CAPACITY: usize;

    fn full(n: usize) -> Self;
    fn singleton(v: usize) -> Self;
    fn contains(&self, v: usize) -> bool;
    fn insert(&mut self, v: usize);
    fn remove(&mut self, v: usize);
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool;
    fn first(&self) -> Option<usize>;
    fn intersect(self, other: Self) -> Self;
    fn union(self, other: Self) -> Self;
    fn minus(self, other: Self) -> Self;
    /// 64-bit word `i` of the set (bits `64*i .. 64*i+63`).
    fn word(&self, i: usize) -> u64;
    fn from_word(w: u64) -> Self;

    #[inline]
    fn is_subset(self, other: Self) -> bool {
        self.minus(other).is_empty()
    }

    #[inline]
    fn iter(self) -> Members<Self> {
        Members(self)
    }

    #[inline]
    fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    #[inline]
    fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }
}

/// Iterator over the members of a set in increasing order.
#[derive(Clone, Copy, Debug)]
pub struct Members<S>(S);

impl<S: VertexSet> Iterator for Members<S> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        let v = self.0.first()?;
        self.0.remove(v);
        Some(v)
    }
}

impl VertexSet for u64 {
    const CAPACITY: usize = 64;

    #[inline]
    fn full(n: usize) -> Self {
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }
    #[inline]
    fn singleton(v: usize) -> Self {
        1u64 << v
    }
    #[inline]
    fn contains(&self, v: usize) -> bool {
        (*self >> v) & 1 == 1
    }
    #[inline]
    fn insert(&mut self, v: usize) {
        *self |= 1u64 << v;
    }
    #[inline]
    fn remove(&mut self, v: usize) {
        *self &= !(1u64 << v);
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
    #[inline]
    fn intersect(self, other: Self) -> Self {
        self & other
    }
    #[inline]
    fn union(self, other: Self) -> Self {
        self | other
    }
    #[inline]
    fn minus(self, other: Self) -> Self {
        self & !other
    }
    #[inline]
    fn word(&self, i: usize) -> u64 {
        if i == 0 {
            *self
        } else {
            0
        }
    }
    #[inline]
    fn from_word(w: u64) -> Self {
        w
    }
}

const WIDE_WORDS: usize = 4;

/// A 256-bit vertex set.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WideSet([u64; WIDE_WORDS]);

impl fmt::Debug for WideSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl VertexSet for WideSet {
    const CAPACITY: usize = 64 * WIDE_WORDS;

    fn full(n: usize) -> Self {
        let mut words = [0u64; WIDE_WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        WideSet(words)
    }
    #[inline]
    fn singleton(v: usize) -> Self {
        let mut s = WideSet::default();
        s.insert(v);
        s
    }
    #[inline]
    fn contains(&self, v: usize) -> bool {
        (self.0[v >> 6] >> (v & 63)) & 1 == 1
    }
    #[inline]
    fn insert(&mut self, v: usize) {
        self.0[v >> 6] |= 1u64 << (v & 63);
    }
    #[inline]
    fn remove(&mut self, v: usize) {
        self.0[v >> 6] &= !(1u64 << (v & 63));
    }
    #[inline]
    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    #[inline]
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    #[inline]
    fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
    #[inline]
    fn intersect(self, other: Self) -> Self {
        let mut out = self;
        for i in 0..WIDE_WORDS {
            out.0[i] &= other.0[i];
        }
        out
    }
    #[inline]
    fn union(self, other: Self) -> Self {
        let mut out = self;
        for i in 0..WIDE_WORDS {
            out.0[i] |= other.0[i];
        }
        out
    }
    #[inline]
    fn minus(self, other: Self) -> Self {
        let mut out = self;
        for i in 0..WIDE_WORDS {
            out.0[i] &= !other.0[i];
        }
        out
    }
    #[inline]
    fn word(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }
    #[inline]
    fn from_word(w: u64) -> Self {
        let mut s = WideSet::default();
        s.0[0] = w;
        s
    }
}
