//! A shelling of `Δ_{t+1}` and the invariants read off from it.
//!
//! For a path `F` let `R̄_F` be the set of points weakly below and to the
//! right of some point of `F`. Facets are compared pathwise: `F ⪯ G` when
//! every path of `G` lies in `R̄` of the corresponding path of `F`. Any
//! linear extension of this order is a shelling.

mod hvector;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Complex, Facet};
use crate::counting;
use crate::error::{Error, Result};
use crate::params::{SegreParams, Shape};
use crate::pointset::PointSet;
use crate::poset::GridPoint;

pub use hvector::{
    f_vector, gorenstein_symmetry, h_from_f, h_vector, regularity, HBudget, HMethod, HReport,
    HVector, HilbertSeries, RegularityReport,
};

/// `R̄_x` for every point `x`, indexed by variable index.
pub fn closed_regions(shape: Shape) -> Vec<PointSet> {
    let n = shape.num_variables();
    (0..n)
        .map(|x| {
            let p = GridPoint::from_index(x, shape);
            (0..n)
                .filter(|&y| {
                    let q = GridPoint::from_index(y, shape);
                    q.row >= p.row && q.col >= p.col
                })
                .collect()
        })
        .collect()
}

fn region_of(regions: &[PointSet], s: PointSet) -> PointSet {
    s.iter()
        .fold(PointSet::EMPTY, |acc, x| acc.union(regions[x]))
}

/// `F ⪯ G`.
pub fn facet_preceq(f: &Facet, g: &Facet) -> Result<bool> {
    if f.params() != g.params() {
        return Err(Error::ShapeMismatch(format!(
            "facets of {} and {}",
            f.params(),
            g.params()
        )));
    }
    let regions = closed_regions(f.params().shape());
    Ok(f.paths()
        .iter()
        .zip(g.paths())
        .all(|(p, q)| q.set().is_subset(&region_of(&regions, p.set()))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShellingOptions {
    /// Refuse to build orders with more facets than this.
    pub max_facets: u64,
    pub certify: bool,
}

impl Default for ShellingOptions {
    fn default() -> Self {
        ShellingOptions {
            max_facets: 200_000,
            certify: true,
        }
    }
}

/// The facets of `Δ_{t+1}` in shelling order.
///
/// Facets are sorted by decreasing `Σ_i |R̄_{F_i}|`, ties broken by the
/// lexicographic order of sorted point lists. The key drops strictly along
/// `⪯`, so the order is a linear extension.
#[derive(Debug, Clone)]
pub struct ShellingOrder {
    complex: Complex,
    /// Per facet, `(h, index into complex.paths(h))` for each path.
    ids: Vec<Vec<(usize, usize)>>,
    sets: Vec<PointSet>,
    paths: Vec<Vec<PointSet>>,
    rank: HashMap<u128, usize>,
    certificate: Option<Certificate>,
}

impl ShellingOrder {
    pub fn params(&self) -> SegreParams {
        self.complex.params()
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Facet point sets in order.
    pub fn sets(&self) -> &[PointSet] {
        &self.sets
    }

    pub fn facet(&self, rank: usize) -> Facet {
        let paths = self.ids[rank]
            .iter()
            .map(|&(h, i)| self.complex.paths(h)[i].clone())
            .collect();
        Facet::from_paths(self.params(), paths).expect("stored facet is valid")
    }

    pub fn rank_of(&self, s: PointSet) -> Option<usize> {
        self.rank.get(&s.0).copied()
    }

    /// The certificate computed at construction, if certification ran.
    pub fn certificate(&self) -> Option<&Certificate> {
        self.certificate.as_ref()
    }

    /// A copy with facets permuted; `perm[k]` is the old rank of the new
    /// `k`-th facet. Any certificate is dropped.
    pub fn permuted(&self, perm: &[usize]) -> Result<ShellingOrder> {
        let mut seen = vec![false; self.len()];
        if perm.len() != self.len()
            || perm
                .iter()
                .any(|&p| p >= self.len() || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidParams(
                "not a permutation of the facets".into(),
            ));
        }
        let ids = perm.iter().map(|&p| self.ids[p].clone()).collect();
        let sets: Vec<PointSet> = perm.iter().map(|&p| self.sets[p]).collect();
        let paths = perm.iter().map(|&p| self.paths[p].clone()).collect();
        let rank = sets.iter().enumerate().map(|(k, s)| (s.0, k)).collect();
        Ok(ShellingOrder {
            complex: self.complex.clone(),
            ids,
            sets,
            paths,
            rank,
            certificate: None,
        })
    }

    /// `(i, j)` with `i < j` and facet `j ⪯` facet `i`, if any.
    pub fn preceq_violation(&self) -> Option<(usize, usize)> {
        let regions = closed_regions(self.params().shape());
        let hulls: Vec<Vec<PointSet>> = self
            .paths
            .iter()
            .map(|ps| ps.iter().map(|&p| region_of(&regions, p)).collect())
            .collect();
        let n = self.len();
        (0..n).into_par_iter().find_map_first(|i| {
            (i + 1..n).find_map(|j| {
                let below = self.paths[i]
                    .iter()
                    .zip(&hulls[j])
                    .all(|(p, h)| p.is_subset(h));
                below.then_some((i, j))
            })
        })
    }

    /// `r(F)` for the facet of the given rank: the points `x` such that
    /// `F \ F'' = {x}` for some earlier facet `F''`.
    pub fn restriction_set(&self, rank: usize) -> PointSet {
        let f = self.sets[rank];
        let outside = PointSet::full(self.params().shape().num_variables()).difference(f);
        let mut r = PointSet::EMPTY;
        for x in f.iter() {
            let base = f.difference(PointSet::singleton(x));
            if outside.iter().any(|y| {
                self.rank_of(base.union(PointSet::singleton(y)))
                    .is_some_and(|k| k < rank)
            }) {
                r.insert(x);
            }
        }
        r
    }

    pub fn restriction_sets(&self) -> Vec<PointSet> {
        (0..self.len())
            .into_par_iter()
            .map(|k| self.restriction_set(k))
            .collect()
    }
}

/// Result of checking the shelling condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub is_shelling: bool,
    /// First `(i, j)`, `j < i`, such that no earlier facet `F_k` has
    /// `F_i \ F_k = {x} ⊆ F_i \ F_j`.
    pub witness: Option<(usize, usize)>,
    pub facets: usize,
}

/// Checks that for all `j < i` some `x ∈ r(F_i)` lies outside `F_j`.
pub fn certify_shelling(order: &ShellingOrder) -> Certificate {
    let r = order.restriction_sets();
    let sets = &order.sets;
    let witness = (0..sets.len())
        .into_par_iter()
        .find_map_first(|i| (0..i).find(|&j| r[i].is_subset(&sets[j])).map(|j| (i, j)));
    Certificate {
        is_shelling: witness.is_none(),
        witness,
        facets: sets.len(),
    }
}

/// Sort key, sorted points, path ids, facet set and path sets.
type SortRow = (
    usize,
    Vec<GridPoint>,
    Vec<(usize, usize)>,
    PointSet,
    Vec<PointSet>,
);

/// Enumerates the facets and sorts them into the shelling order, then
/// certifies it when `options.certify` is set.
pub fn shelling_order(params: SegreParams, options: ShellingOptions) -> Result<ShellingOrder> {
    let complex = Complex::new(params)?;
    let estimate = counting::degree(params)?;
    if estimate > options.max_facets.into() {
        return Err(Error::Budget {
            what: "facets in shelling order".into(),
            limit: options.max_facets,
            estimate: Some(estimate.to_string()),
        });
    }
    let shape = params.shape();
    let regions = closed_regions(shape);
    let mut stream = complex.facets();
    let mut rows: Vec<SortRow> = Vec::new();
    while let Some((hs, idx, set)) = stream.next_indices() {
        let ids: Vec<(usize, usize)> = hs.into_iter().zip(idx).collect();
        let paths: Vec<PointSet> = ids
            .iter()
            .map(|&(h, i)| complex.paths(h)[i].set())
            .collect();
        let key = paths.iter().map(|&p| region_of(&regions, p).len()).sum();
        let mut pts: Vec<GridPoint> = set
            .iter()
            .map(|x| GridPoint::from_index(x, shape))
            .collect();
        pts.sort_unstable();
        rows.push((key, pts, ids, set, paths));
    }
    rows.par_sort_unstable_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.cmp(&y.1)));
    let mut ids = Vec::with_capacity(rows.len());
    let mut sets = Vec::with_capacity(rows.len());
    let mut paths = Vec::with_capacity(rows.len());
    for (_, _, i, s, p) in rows {
        ids.push(i);
        sets.push(s);
        paths.push(p);
    }
    let rank = sets.iter().enumerate().map(|(k, s)| (s.0, k)).collect();
    let mut order = ShellingOrder {
        complex,
        ids,
        sets,
        paths,
        rank,
        certificate: None,
    };
    if options.certify {
        order.certificate = Some(certify_shelling(&order));
    }
    Ok(order)
}
