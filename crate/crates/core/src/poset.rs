//! The poset `P` on the `2ab` variable positions.
//!
//! `P = {(i, j) : 1 <= i <= a, 1 <= j <= 2b}`, where `(i, j)` stands for
//! `x_{1ij}` when `j <= b` and for `x_{2i(j-b)}` otherwise. The order is
//!
//! ```text
//! (x, y) ⪯ (z, w)  iff  (x, y) = (z, w)
//!                   or  x < z and y < w
//!                   or  y <= b, w >= b + 1 and y < w - b
//! ```
//!
//! so that the pairs of comparable elements are exactly the leading terms
//! of the 2-minors of the second and third unfoldings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::Shape;
use crate::pointset::PointSet;

/// A position `(row, col)` of `P`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridPoint {
    pub row: usize,
    pub col: usize,
}

impl GridPoint {
    pub const fn new(row: usize, col: usize) -> Self {
        GridPoint { row, col }
    }

    pub fn check(&self, shape: Shape) -> Result<()> {
        if self.row < 1 || self.row > shape.a() || self.col < 1 || self.col > 2 * shape.b() {
            return Err(Error::InvalidParams(format!(
                "point ({}, {}) outside P = [1,{}] x [1,{}]",
                self.row,
                self.col,
                shape.a(),
                2 * shape.b()
            )));
        }
        Ok(())
    }

    /// The variable `x_{slice,row,k}` this position stands for.
    pub fn variable(&self, shape: Shape) -> VariableId {
        if self.col <= shape.b() {
            VariableId {
                slice: 1,
                second: self.row,
                third: self.col,
            }
        } else {
            VariableId {
                slice: 2,
                second: self.row,
                third: self.col - shape.b(),
            }
        }
    }

    /// Index of the corresponding variable in the term order.
    #[inline]
    pub fn index(&self, shape: Shape) -> usize {
        let (a, b) = (shape.a(), shape.b());
        if self.col <= b {
            (self.row - 1) * b + (self.col - 1)
        } else {
            a * b + (self.row - 1) * b + (self.col - b - 1)
        }
    }

    #[inline]
    pub fn from_index(index: usize, shape: Shape) -> GridPoint {
        let (a, b) = (shape.a(), shape.b());
        if index < a * b {
            GridPoint::new(index / b + 1, index % b + 1)
        } else {
            let r = index - a * b;
            GridPoint::new(r / b + 1, b + r % b + 1)
        }
    }
}

/// The variable `x_{slice, second, third}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VariableId {
    pub slice: usize,
    pub second: usize,
    pub third: usize,
}

impl VariableId {
    pub const fn new(slice: usize, second: usize, third: usize) -> Self {
        VariableId {
            slice,
            second,
            third,
        }
    }

    pub fn check(&self, shape: Shape) -> Result<()> {
        if !(1..=2).contains(&self.slice)
            || !(1..=shape.a()).contains(&self.second)
            || !(1..=shape.b()).contains(&self.third)
        {
            return Err(Error::InvalidParams(format!(
                "variable x_({},{},{}) outside [2]x[{}]x[{}]",
                self.slice,
                self.second,
                self.third,
                shape.a(),
                shape.b()
            )));
        }
        Ok(())
    }

    /// Position in `x_{111} > x_{112} > … > x_{2ab}`; index 0 is the largest.
    #[inline]
    pub fn index(&self, shape: Shape) -> usize {
        (self.slice - 1) * shape.a() * shape.b() + (self.second - 1) * shape.b() + (self.third - 1)
    }

    #[inline]
    pub fn from_index(index: usize, shape: Shape) -> VariableId {
        let ab = shape.a() * shape.b();
        let r = index % ab;
        VariableId::new(index / ab + 1, r / shape.b() + 1, r % shape.b() + 1)
    }

    pub fn grid_point(&self, shape: Shape) -> GridPoint {
        match self.slice {
            1 => GridPoint::new(self.second, self.third),
            _ => GridPoint::new(self.second, shape.b() + self.third),
        }
    }
}

impl std::fmt::Display for VariableId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "x{}{}{}", self.slice, self.second, self.third)
    }
}

/// An element of the distributive lattice `[2]×[a]×[b]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeElement(pub usize, pub usize, pub usize);

impl LatticeElement {
    pub fn leq(&self, other: &LatticeElement) -> bool {
        self.0 <= other.0 && self.1 <= other.1 && self.2 <= other.2
    }

    pub fn comparable(&self, other: &LatticeElement) -> bool {
        self.leq(other) || other.leq(self)
    }

    pub fn variable(&self) -> VariableId {
        VariableId::new(self.0, self.1, self.2)
    }
}

/// Componentwise minimum and maximum.
pub fn lattice_meet_join(u: LatticeElement, v: LatticeElement) -> (LatticeElement, LatticeElement) {
    (
        LatticeElement(u.0.min(v.0), u.1.min(v.1), u.2.min(v.2)),
        LatticeElement(u.0.max(v.0), u.1.max(v.1), u.2.max(v.2)),
    )
}

/// The three-clause order, without range checks.
#[inline]
pub fn precedes_or_equal(b: usize, p: GridPoint, q: GridPoint) -> bool {
    p == q || (p.row < q.row && p.col < q.col) || (p.col <= b && q.col > b && p.col + b < q.col)
}

#[derive(Debug, Clone)]
pub struct Poset {
    shape: Shape,
    /// All points in lexicographic `(row, col)` order.
    points: Vec<GridPoint>,
    /// Strict up-set of each variable index.
    up: Vec<PointSet>,
    /// Strict down-set of each variable index.
    down: Vec<PointSet>,
    /// Variable indices in a linear extension of `≺`.
    topo: Vec<usize>,
}

impl Poset {
    pub fn new(shape: Shape) -> Self {
        let (a, b) = (shape.a(), shape.b());
        let n = shape.num_variables();
        let points: Vec<GridPoint> = (1..=a)
            .flat_map(|r| (1..=2 * b).map(move |c| GridPoint::new(r, c)))
            .collect();
        let mut up = vec![PointSet::EMPTY; n];
        let mut down = vec![PointSet::EMPTY; n];
        for &p in &points {
            for &q in &points {
                if p != q && precedes_or_equal(b, p, q) {
                    up[p.index(shape)].insert(q.index(shape));
                    down[q.index(shape)].insert(p.index(shape));
                }
            }
        }
        // Y-positions are never below X-positions, and within a block the
        // order refines the sum row + col.
        let mut topo: Vec<usize> = (0..n).collect();
        topo.sort_by_key(|&i| {
            let p = GridPoint::from_index(i, shape);
            (p.col > b, p.row + p.col, p.row)
        });
        Poset {
            shape,
            points,
            up,
            down,
            topo,
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// All points in lexicographic order.
    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn all(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// `p ⪯ q`.
    pub fn leq(&self, p: GridPoint, q: GridPoint) -> Result<bool> {
        p.check(self.shape)?;
        q.check(self.shape)?;
        Ok(precedes_or_equal(self.shape.b(), p, q))
    }

    /// Strict comparability `p ≺ q`.
    pub fn less(&self, p: GridPoint, q: GridPoint) -> Result<bool> {
        Ok(p != q && self.leq(p, q)?)
    }

    #[inline]
    pub fn less_index(&self, p: usize, q: usize) -> bool {
        self.up[p].contains(q)
    }

    #[inline]
    pub fn up_set(&self, index: usize) -> PointSet {
        self.up[index]
    }

    #[inline]
    pub fn down_set(&self, index: usize) -> PointSet {
        self.down[index]
    }

    /// Variable indices in a linear extension of the order.
    pub fn linear_extension(&self) -> &[usize] {
        &self.topo
    }

    pub fn index(&self, p: GridPoint) -> Result<usize> {
        p.check(self.shape)?;
        Ok(p.index(self.shape))
    }

    pub fn point(&self, index: usize) -> GridPoint {
        GridPoint::from_index(index, self.shape)
    }

    pub fn set_of(&self, points: &[GridPoint]) -> Result<PointSet> {
        let mut s = PointSet::EMPTY;
        for &p in points {
            s.insert(self.index(p)?);
        }
        Ok(s)
    }

    /// Points of `s` in lexicographic order.
    pub fn points_of(&self, s: PointSet) -> Vec<GridPoint> {
        let mut v: Vec<GridPoint> = s.iter().map(|i| self.point(i)).collect();
        v.sort_unstable();
        v
    }

    /// Length of the longest chain ending at each element of `s`, indexed
    /// by variable index (0 outside `s`).
    fn chain_levels(&self, s: PointSet) -> [u8; 128] {
        let mut level = [0u8; 128];
        for &p in &self.topo {
            if !s.contains(p) {
                continue;
            }
            let best = self.down[p]
                .intersection(s)
                .iter()
                .map(|q| level[q])
                .max()
                .unwrap_or(0);
            level[p] = best + 1;
        }
        level
    }

    /// Number of elements of a longest chain in `s`; 0 for the empty set.
    pub fn longest_chain(&self, s: PointSet) -> usize {
        let level = self.chain_levels(s);
        s.iter().map(|p| level[p] as usize).max().unwrap_or(0)
    }

    /// Partition of `s` into `longest_chain(s)` antichains, the `k`-th
    /// holding the elements whose longest chain from below has `k+1`
    /// elements.
    pub fn mirsky_partition(&self, s: PointSet) -> Vec<PointSet> {
        let level = self.chain_levels(s);
        let height = s.iter().map(|p| level[p] as usize).max().unwrap_or(0);
        let mut parts = vec![PointSet::EMPTY; height];
        for p in s.iter() {
            parts[level[p] as usize - 1].insert(p);
        }
        parts
    }

    pub fn is_antichain(&self, s: PointSet) -> bool {
        s.iter().all(|p| self.up[p].is_disjoint(&s))
    }

    /// All chains with `len` elements, each listed bottom to top, in
    /// lexicographic order of their point sequences.
    pub fn enumerate_chains(&self, len: usize) -> Vec<Vec<GridPoint>> {
        let mut out = Vec::new();
        if len == 0 {
            return out;
        }
        let mut stack = Vec::with_capacity(len);
        for &p in &self.points {
            stack.push(p);
            self.extend_chains(len, &mut stack, &mut out);
            stack.pop();
        }
        out
    }

    fn extend_chains(&self, len: usize, stack: &mut Vec<GridPoint>, out: &mut Vec<Vec<GridPoint>>) {
        if stack.len() == len {
            out.push(stack.clone());
            return;
        }
        let last = stack[stack.len() - 1].index(self.shape);
        // Successors of the last element, in lexicographic order.
        for q in self.points_of(self.up[last]) {
            stack.push(q);
            self.extend_chains(len, stack, out);
            stack.pop();
        }
    }

    /// The chains with `len` elements as point sets (squarefree monomials).
    pub fn chain_sets(&self, len: usize) -> Vec<PointSet> {
        self.enumerate_chains(len)
            .iter()
            .map(|c| c.iter().map(|p| p.index(self.shape)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(a: usize, b: usize) -> Poset {
        Poset::new(Shape::new(a, b).unwrap())
    }

    #[test]
    fn sizes_and_variables() {
        let p = poset(2, 2);
        assert_eq!(p.len(), 8);
        let shape = Shape::new(2, 3).unwrap();
        assert_eq!(
            GridPoint::new(1, 6).variable(shape),
            VariableId::new(2, 1, 3)
        );
        for i in 0..shape.num_variables() {
            let g = GridPoint::from_index(i, shape);
            assert_eq!(g.index(shape), i);
            assert_eq!(g.variable(shape).index(shape), i);
            assert_eq!(VariableId::from_index(i, shape).grid_point(shape), g);
        }
    }

    #[test]
    fn order_examples() {
        let p = poset(3, 3);
        let g = GridPoint::new;
        assert!(p.leq(g(1, 1), g(2, 2)).unwrap());
        assert!(!p.leq(g(2, 2), g(1, 1)).unwrap());
        assert!(p.less(g(3, 1), g(1, 5)).unwrap());
        assert!(!p.less(g(3, 1), g(1, 4)).unwrap());
        assert!(!p.less(g(1, 1), g(1, 1)).unwrap());
        assert!(p.less(g(0, 1), g(1, 1)).is_err());
        assert!(p.less(g(1, 7), g(1, 1)).is_err());
    }

    #[test]
    fn partial_order_axioms_exhaustive() {
        for a in 2..=4 {
            for b in a..=4 {
                let p = poset(a, b);
                let n = p.len();
                for x in 0..n {
                    assert!(!p.less_index(x, x));
                    for y in 0..n {
                        if p.less_index(x, y) {
                            assert!(!p.less_index(y, x), "antisymmetry ({a},{b})");
                            assert!(
                                p.up_set(y).is_subset(&p.up_set(x)),
                                "transitivity ({a},{b})"
                            );
                        }
                    }
                }
                // the linear extension respects the order
                let mut pos = vec![0; n];
                for (k, &v) in p.linear_extension().iter().enumerate() {
                    pos[v] = k;
                }
                for x in 0..n {
                    for y in p.up_set(x).iter() {
                        assert!(pos[x] < pos[y]);
                    }
                }
            }
        }
    }

    /// Longest chain by trying every subset of `s`.
    fn longest_chain_by_subsets(p: &Poset, s: PointSet) -> usize {
        let elems: Vec<usize> = s.iter().collect();
        let mut best = 0;
        for mask in 0u32..(1 << elems.len()) {
            let sub: Vec<usize> = (0..elems.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| elems[i])
                .collect();
            let total = sub.iter().all(|&x| {
                sub.iter()
                    .all(|&y| x == y || p.less_index(x, y) || p.less_index(y, x))
            });
            if total {
                best = best.max(sub.len());
            }
        }
        best
    }

    #[test]
    fn longest_chain_examples() {
        let p = poset(2, 2);
        assert_eq!(longest_chain_by_subsets(&p, p.all()), 2);
        assert_eq!(p.longest_chain(p.all()), 2);
        assert_eq!(p.longest_chain(PointSet::EMPTY), 0);

        let p = poset(3, 3);
        let g = GridPoint::new;
        let s = p.set_of(&[g(1, 1), g(2, 2), g(3, 5)]).unwrap();
        assert_eq!(longest_chain_by_subsets(&p, s), 3);
        assert_eq!(p.longest_chain(s), 3);
        let anti = p.set_of(&[g(1, 3), g(2, 2), g(3, 1)]).unwrap();
        assert!(p.is_antichain(anti));
        assert_eq!(p.longest_chain(anti), 1);
    }

    #[test]
    fn mirsky_examples() {
        let p = poset(3, 3);
        let g = GridPoint::new;
        let single = p.set_of(&[g(2, 4)]).unwrap();
        assert_eq!(p.mirsky_partition(single), vec![single]);
        let chain = [g(1, 1), g(2, 2), g(3, 5)];
        let parts = p.mirsky_partition(p.set_of(&chain).unwrap());
        assert_eq!(parts.len(), 3);
        for (part, q) in parts.iter().zip(chain) {
            assert_eq!(*part, p.set_of(&[q]).unwrap());
        }
    }

    #[test]
    fn chain_enumeration() {
        let p = poset(2, 3);
        let pairs = p.enumerate_chains(2);
        // every comparable pair, counted directly from the definition
        let direct = p
            .points()
            .iter()
            .flat_map(|&x| p.points().iter().map(move |&y| (x, y)))
            .filter(|&(x, y)| x != y && precedes_or_equal(3, x, y))
            .count();
        assert_eq!(direct, 24);
        assert_eq!(pairs.len(), 24);
        let mut sorted = pairs.clone();
        sorted.sort();
        assert_eq!(sorted, pairs);

        assert_eq!(poset(2, 2).enumerate_chains(3).len(), 0);
        assert_eq!(poset(3, 4).enumerate_chains(1).len(), 24);
    }

    #[test]
    fn meet_join() {
        let u = LatticeElement(2, 1, 3);
        let v = LatticeElement(1, 2, 4);
        assert_eq!(
            lattice_meet_join(u, v),
            (LatticeElement(1, 1, 3), LatticeElement(2, 2, 4))
        );
        assert_eq!(lattice_meet_join(u, u), (u, u));
        let w = LatticeElement(2, 2, 4);
        assert_eq!(
            lattice_meet_join(LatticeElement(1, 1, 3), w),
            (LatticeElement(1, 1, 3), w)
        );
        assert!(!u.comparable(&v));
    }
}
