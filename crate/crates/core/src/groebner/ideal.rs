//! Monomial ideals and Hilbert series numerators of squarefree ones.

use std::collections::HashMap;

use super::poly::Monomial;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// A monomial ideal stored by its minimal generators, sorted by the term
/// order, so equal ideals compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by_key(|m| m.degree());
        all.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            assert_eq!(m.nvars(), nvars, "monomial in the wrong ring");
            if !minimal.iter().any(|g| g.divides(&m)) {
                minimal.push(m);
            }
        }
        minimal.sort();
        MonomialIdeal {
            nvars,
            gens: minimal,
        }
    }

    /// Squarefree monomial ideal from generator supports.
    pub fn from_sets(nvars: usize, sets: impl IntoIterator<Item = PointSet>) -> Self {
        MonomialIdeal::new(
            nvars,
            sets.into_iter().map(|s| Monomial::from_set(nvars, s)),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators in increasing term order.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Generator supports; `None` if some generator is not squarefree.
    pub fn to_sets(&self) -> Option<Vec<PointSet>> {
        self.gens.iter().map(Monomial::to_set).collect()
    }

    /// Numerator `N` of the Hilbert series `N(x) / (1-x)^n` of `R/I`, with
    /// `n` the number of variables. Only squarefree ideals are supported.
    pub fn hilbert_numerator(&self, max_nodes: u64) -> Result<Vec<i128>> {
        let sets = self.to_sets().ok_or_else(|| {
            Error::InvalidParams("Hilbert recursion needs a squarefree ideal".into())
        })?;
        let mut rec = Recursion {
            memo: HashMap::new(),
            nodes: 0,
            max_nodes,
        };
        let gens: Vec<u128> = sets.iter().map(|s| s.0).collect();
        rec.numerator(gens)
    }
}

struct Recursion {
    memo: HashMap<Vec<u128>, Vec<i128>>,
    nodes: u64,
    max_nodes: u64,
}

type Poly = Vec<i128>;

fn poly_mul(p: &[i128], q: &[i128]) -> Result<Poly> {
    let mut out = vec![0i128; p.len() + q.len() - 1];
    for (i, &x) in p.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in q.iter().enumerate() {
            let prod = x
                .checked_mul(y)
                .ok_or(Error::Overflow("Hilbert numerator"))?;
            out[i + j] = out[i + j]
                .checked_add(prod)
                .ok_or(Error::Overflow("Hilbert numerator"))?;
        }
    }
    Ok(trim(out))
}

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

/// `1 - x^d`.
fn one_minus_power(d: u32) -> Poly {
    let mut p = vec![0i128; d as usize + 1];
    p[0] = 1;
    p[d as usize] -= 1;
    p
}

impl Recursion {
    fn numerator(&mut self, mut gens: Vec<u128>) -> Result<Poly> {
        if gens.is_empty() {
            return Ok(vec![1]);
        }
        if gens.contains(&0) {
            return Ok(vec![0]);
        }
        gens.sort_unstable();
        if let Some(p) = self.memo.get(&gens) {
            return Ok(p.clone());
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::budget("Hilbert recursion nodes", self.max_nodes));
        }
        let result = self.split(&gens)?;
        self.memo.insert(gens, result.clone());
        Ok(result)
    }

    fn split(&mut self, gens: &[u128]) -> Result<Poly> {
        // Pairwise coprime generators form a regular sequence.
        let union = gens.iter().fold(0u128, |acc, g| acc | g);
        let total: u32 = gens.iter().map(|g| g.count_ones()).sum();
        if total == union.count_ones() {
            let mut p = vec![1i128];
            for g in gens {
                p = poly_mul(&p, &one_minus_power(g.count_ones()))?;
            }
            return Ok(p);
        }

        // Connected components of the support graph multiply.
        let components = components(gens);
        if components.len() > 1 {
            let mut p = vec![1i128];
            for c in components {
                p = poly_mul(&p, &self.numerator(c)?)?;
            }
            return Ok(p);
        }

        // N(I) = (1 - x) N(I') + x N(I : v), I' the generators avoiding v.
        let pivot = most_frequent(gens);
        let bit = 1u128 << pivot;
        let without: Vec<u128> = gens.iter().copied().filter(|g| g & bit == 0).collect();
        let colon = colon(gens, bit);
        let a = poly_mul(&[1, -1], &self.numerator(without)?)?;
        let b = poly_mul(&[0, 1], &self.numerator(colon)?)?;
        let mut out = vec![0i128; a.len().max(b.len())];
        for (i, x) in a.iter().enumerate() {
            out[i] = *x;
        }
        for (i, x) in b.iter().enumerate() {
            out[i] = out[i]
                .checked_add(*x)
                .ok_or(Error::Overflow("Hilbert numerator"))?;
        }
        Ok(trim(out))
    }
}

fn most_frequent(gens: &[u128]) -> u32 {
    let mut counts = [0u32; 128];
    for g in gens {
        let mut m = *g;
        while m != 0 {
            counts[m.trailing_zeros() as usize] += 1;
            m &= m - 1;
        }
    }
    let mut best = 0;
    for (i, &c) in counts.iter().enumerate() {
        if c > counts[best] {
            best = i;
        }
    }
    best as u32
}

/// Minimal generators of `I : v` for a minimal squarefree generating set.
/// Only generators avoiding `v` can become redundant.
fn colon(gens: &[u128], bit: u128) -> Vec<u128> {
    let reduced: Vec<u128> = gens
        .iter()
        .filter(|g| *g & bit != 0)
        .map(|g| g & !bit)
        .collect();
    let mut out: Vec<u128> = gens
        .iter()
        .copied()
        .filter(|g| g & bit == 0 && !reduced.iter().any(|r| r & !g == 0))
        .collect();
    out.extend(reduced);
    out
}

fn components(gens: &[u128]) -> Vec<Vec<u128>> {
    let mut groups: Vec<(u128, Vec<u128>)> = Vec::new();
    for &g in gens {
        let mut support = g;
        let mut members = vec![g];
        let mut k = 0;
        while k < groups.len() {
            if groups[k].0 & support != 0 {
                let (s, m) = groups.swap_remove(k);
                support |= s;
                members.extend(m);
            } else {
                k += 1;
            }
        }
        groups.push((support, members));
    }
    groups.into_iter().map(|(_, m)| m).collect()
}

/// Divides `p` by `(1 - x)` as often as possible; returns the quotient and
/// the number of divisions.
pub fn divide_out_one_minus_x(p: &[i128]) -> (Vec<i128>, usize) {
    let mut cur = trim(p.to_vec());
    let mut k = 0;
    loop {
        if cur.iter().all(|&c| c == 0) || cur.iter().sum::<i128>() != 0 {
            return (cur, k);
        }
        // q_i = sum_{j <= i} p_j
        let mut q = Vec::with_capacity(cur.len() - 1);
        let mut acc = 0i128;
        for &c in &cur[..cur.len() - 1] {
            acc += c;
            q.push(acc);
        }
        cur = trim(q);
        k += 1;
    }
}
