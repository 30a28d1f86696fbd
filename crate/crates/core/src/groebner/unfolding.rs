//! Symbolic unfoldings, their minors, and the Hibi relations.

use std::collections::HashSet;

use serde::Serialize;

use super::field::Field;
use super::poly::{Monomial, Polynomial, Ring};
use crate::params::Shape;
use crate::poset::{lattice_meet_join, LatticeElement, VariableId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum UnfoldingKind {
    /// `a × 2b`, the block matrix `[X | Y]`.
    Second,
    /// `b × 2a`, the block matrix `[Xᵀ | Yᵀ]`.
    Third,
}

impl UnfoldingKind {
    pub const BOTH: [UnfoldingKind; 2] = [UnfoldingKind::Second, UnfoldingKind::Third];
}

/// A matrix of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicUnfolding {
    kind: UnfoldingKind,
    entries: Vec<Vec<VariableId>>,
}

impl SymbolicUnfolding {
    pub fn new(shape: Shape, kind: UnfoldingKind) -> Self {
        let (a, b) = (shape.a(), shape.b());
        let entries = match kind {
            UnfoldingKind::Second => (1..=a)
                .map(|i| {
                    (1..=2 * b)
                        .map(|j| {
                            if j <= b {
                                VariableId::new(1, i, j)
                            } else {
                                VariableId::new(2, i, j - b)
                            }
                        })
                        .collect()
                })
                .collect(),
            UnfoldingKind::Third => (1..=b)
                .map(|j| {
                    (1..=2 * a)
                        .map(|i| {
                            if i <= a {
                                VariableId::new(1, i, j)
                            } else {
                                VariableId::new(2, i - a, j)
                            }
                        })
                        .collect()
                })
                .collect(),
        };
        SymbolicUnfolding { kind, entries }
    }

    pub fn kind(&self) -> UnfoldingKind {
        self.kind
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries[0].len()
    }

    /// Entry at 0-based `(r, c)`.
    pub fn entry(&self, r: usize, c: usize) -> VariableId {
        self.entries[r][c]
    }

    pub fn entries(&self) -> &[Vec<VariableId>] {
        &self.entries
    }

    /// Product of the entries on the main diagonal of the submatrix.
    pub fn diagonal(&self, rows: &[usize], cols: &[usize]) -> Vec<VariableId> {
        rows.iter()
            .zip(cols)
            .map(|(&r, &c)| self.entries[r][c])
            .collect()
    }

    /// The minor on the given 0-based rows and columns, with ±1
    /// coefficients as produced by the permutation expansion.
    pub fn minor<F: Field>(
        &self,
        ring: &Ring<F>,
        rows: &[usize],
        cols: &[usize],
    ) -> Polynomial<F::Elem> {
        assert_eq!(rows.len(), cols.len());
        let shape = ring.shape();
        let n = ring.nvars();
        let mut terms = Vec::new();
        for_each_permutation(cols.len(), |perm, sign| {
            let mut e = vec![0u8; n];
            for (k, &p) in perm.iter().enumerate() {
                e[self.entries[rows[k]][cols[p]].index(shape)] += 1;
            }
            terms.push((Monomial::from_exponents(e), ring.field().from_i64(sign)));
        });
        ring.from_terms(terms)
    }

    /// All `s × s` minors, rows-major over index subsets in lexicographic
    /// order. Empty when `s` exceeds either dimension.
    pub fn minors<F: Field>(&self, ring: &Ring<F>, s: usize) -> Vec<Minor<F::Elem>> {
        let mut out = Vec::new();
        if s == 0 || s > self.rows() || s > self.cols() {
            return out;
        }
        for rows in subsets(self.rows(), s) {
            for cols in subsets(self.cols(), s) {
                let poly = self.minor(ring, &rows, &cols);
                out.push(Minor {
                    kind: self.kind,
                    rows: rows.clone(),
                    cols,
                    poly,
                });
            }
        }
        out
    }
}

/// A minor together with where it came from (0-based indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor<E> {
    pub kind: UnfoldingKind,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub poly: Polynomial<E>,
}

/// Calls `f(perm, sign)` for every permutation of `0..n`.
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize], i64)) {
    fn rec(k: usize, perm: &mut Vec<usize>, sign: i64, f: &mut impl FnMut(&[usize], i64)) {
        if k == perm.len() {
            f(perm, sign);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(k + 1, perm, if i == k { sign } else { -sign }, f);
            perm.swap(k, i);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    rec(0, &mut perm, 1, &mut f);
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// The `s × s` minors of one unfolding, normalized to be monic.
pub fn unfolding_minors<F: Field>(
    ring: &Ring<F>,
    kind: UnfoldingKind,
    s: usize,
) -> Vec<Polynomial<F::Elem>> {
    SymbolicUnfolding::new(ring.shape(), kind)
        .minors(ring, s)
        .into_iter()
        .map(|m| ring.monic(&m.poly))
        .collect()
}

/// Monic `s × s` minors of both unfoldings: second unfolding first, then
/// the third-unfolding minors not already present. Minors supported in the
/// `X` or `Y` block occur in both and are kept once.
pub fn secant_generators<F: Field>(ring: &Ring<F>, s: usize) -> Vec<Polynomial<F::Elem>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for kind in UnfoldingKind::BOTH {
        for p in unfolding_minors(ring, kind, s) {
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
    }
    out
}

/// `x_α x_β − x_{α∧β} x_{α∨β}`.
pub fn hibi_relation<F: Field>(
    ring: &Ring<F>,
    alpha: LatticeElement,
    beta: LatticeElement,
) -> Polynomial<F::Elem> {
    let (meet, join) = lattice_meet_join(alpha, beta);
    ring.sub(
        &ring.term(1, &[alpha.variable(), beta.variable()]),
        &ring.term(1, &[meet.variable(), join.variable()]),
    )
}

/// One relation per unordered incomparable pair of `[2]×[a]×[b]`.
pub fn hibi_generators<F: Field>(ring: &Ring<F>) -> Vec<Polynomial<F::Elem>> {
    let shape = ring.shape();
    let elems: Vec<LatticeElement> = (0..shape.num_variables())
        .map(|i| {
            let v = VariableId::from_index(i, shape);
            LatticeElement(v.slice, v.second, v.third)
        })
        .collect();
    let mut out = Vec::new();
    for (k, &u) in elems.iter().enumerate() {
        for &v in &elems[k + 1..] {
            if !u.comparable(&v) {
                out.push(hibi_relation(ring, u, v));
            }
        }
    }
    out
}
