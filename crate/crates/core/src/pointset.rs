//! Dense bitset over a fixed point universe `0..n`.
//!
//! `PointSet` is the working representation of subsets of a geometry's
//! points, in particular of subspaces. Equality is set equality and the
//! canonical order compares sets as ascending member lists, so sorted
//! collections of sets are deterministic.

use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    n: usize,
    words: Vec<u64>,
}

impl PointSet {
    /// Empty set over the universe `0..n`.
    pub fn empty(n: usize) -> Self {
        PointSet {
            n,
            words: vec![0; n.div_ceil(WORD_BITS)],
        }
    }

    /// The full universe `0..n`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.clear_tail();
        s
    }

    /// Set containing the given points. Panics on out-of-range members;
    /// callers validate untrusted input first.
    pub fn from_points<I: IntoIterator<Item = usize>>(n: usize, points: I) -> Self {
        let mut s = Self::empty(n);
        for p in points {
            assert!(p < n, "point {p} out of range for universe {n}");
            s.insert(p);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn contains(&self, p: usize) -> bool {
        debug_assert!(p < self.n);
        self.words[p / WORD_BITS] & (1u64 << (p % WORD_BITS)) != 0
    }

    /// Inserts `p`; returns true if it was not already present.
    pub fn insert(&mut self, p: usize) -> bool {
        debug_assert!(p < self.n);
        let w = &mut self.words[p / WORD_BITS];
        let mask = 1u64 << (p % WORD_BITS);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    pub fn remove(&mut self, p: usize) -> bool {
        debug_assert!(p < self.n);
        let w = &mut self.words[p / WORD_BITS];
        let mask = 1u64 << (p % WORD_BITS);
        let present = *w & mask != 0;
        *w &= !mask;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    pub fn union_with(&mut self, other: &PointSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection_len(&self, other: &PointSet) -> usize {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &PointSet) -> bool {
        other.is_subset(self)
    }

    /// Strict inclusion.
    pub fn is_proper_subset(&self, other: &PointSet) -> bool {
        self.is_subset(other) && self != other
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * WORD_BITS + b)
                }
            })
        })
    }

    /// Points of the universe not in the set, ascending.
    pub fn complement_iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&p| !self.contains(p))
    }

    /// Smallest member, if any. (Named to avoid clashing with `Ord::min`.)
    pub fn min_point(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Members as a sorted vector.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Copy with `p` inserted.
    pub fn with(&self, p: usize) -> PointSet {
        let mut s = self.clone();
        s.insert(p);
        s
    }

    /// Copy with `p` removed.
    pub fn without(&self, p: usize) -> PointSet {
        let mut s = self.clone();
        s.remove(p);
        s
    }

    fn clear_tail(&mut self) {
        let used = self.n % WORD_BITS;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
        if self.n == 0 {
            self.words.clear();
        }
    }
}

impl Ord for PointSet {
    /// Lexicographic order on ascending member lists, so `{}` sorts first,
    /// `{0}` before `{0,1}`, and `{0,2}` before `{1,2}`.
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.n, other.n);
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

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
