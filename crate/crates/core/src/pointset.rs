//! Subsets of the `2ab` variables as 128-bit masks.
//!
//! Bit `v` stands for the variable with index `v` in the order
//! `x_{111} > x_{112} > … > x_{1ab} > x_{211} > … > x_{2ab}`, so the same
//! mask describes a set of grid points of `P`, a squarefree monomial, or a
//! face of `Δ_{t+1}`.

use std::fmt;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(pub u128);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    #[inline]
    pub fn singleton(index: usize) -> Self {
        PointSet(1u128 << index)
    }

    /// All indices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        if n >= 128 {
            PointSet(u128::MAX)
        } else {
            PointSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(&self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, index: usize) {
        self.0 |= 1u128 << index;
    }

    #[inline]
    pub fn remove(&mut self, index: usize) {
        self.0 &= !(1u128 << index);
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> Indices {
        Indices(self.0)
    }
}

pub struct Indices(u128);

impl Iterator for Indices {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
