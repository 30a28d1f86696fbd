//! The simplicial complexes `Δ_2` and `Δ_{t+1}`.
//!
//! A facet of `Δ_2` is a monotone lattice path in `P` from `(1, b+h)` to
//! `(a, h)` using down steps `(+1, 0)` and left steps `(0, -1)`. For
//! `t < a` a facet of `Δ_{t+1}` is the union of `t` vertex-disjoint such
//! paths with distinct `h`. Facets are identified by their point set; the
//! path tuple is how they are enumerated.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{SegreParams, Shape};
use crate::pointset::PointSet;
use crate::poset::{GridPoint, Poset};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    h: usize,
    points: Vec<GridPoint>,
    set: PointSet,
}

impl Path {
    /// Validates a point sequence as a path from `(1, b+h)` to `(a, h)`.
    pub fn from_points(shape: Shape, points: Vec<GridPoint>) -> Result<Path> {
        let (a, b) = (shape.a(), shape.b());
        if points.len() != a + b {
            return Err(Error::InvalidParams(format!(
                "a path has {} points, got {}",
                a + b,
                points.len()
            )));
        }
        for p in &points {
            p.check(shape)?;
        }
        let first = points[0];
        let last = points[points.len() - 1];
        if first.row != 1 || first.col <= b {
            return Err(Error::InvalidParams(format!(
                "path must start at (1, b+h), got {first:?}"
            )));
        }
        let h = first.col - b;
        if last != GridPoint::new(a, h) {
            return Err(Error::InvalidParams(format!(
                "path must end at ({a}, {h}), got {last:?}"
            )));
        }
        for w in points.windows(2) {
            let down = w[1].row == w[0].row + 1 && w[1].col == w[0].col;
            let left = w[1].row == w[0].row && w[1].col + 1 == w[0].col;
            if !down && !left {
                return Err(Error::InvalidParams(format!(
                    "illegal step {:?} -> {:?}",
                    w[0], w[1]
                )));
            }
        }
        let set = points.iter().map(|p| p.index(shape)).collect();
        Ok(Path { h, points, set })
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn set(&self) -> PointSet {
        self.set
    }

    pub fn start(&self) -> GridPoint {
        self.points[0]
    }

    /// Points entered by a down step and left by a left step.
    pub fn right_turns(&self) -> Vec<GridPoint> {
        self.points
            .windows(3)
            .filter(|w| w[1].row == w[0].row + 1 && w[2].col + 1 == w[1].col)
            .map(|w| w[1])
            .collect()
    }
}

/// All paths from `(1, b+h)` to `(a, h)`, in lexicographic order of their
/// point sequences. There are `C(a+b-1, a-1)` of them.
pub fn enumerate_paths(shape: Shape, h: usize) -> Result<Vec<Path>> {
    if h < 1 || h > shape.b() {
        return Err(Error::InvalidParams(format!(
            "h = {h} outside [1, {}]",
            shape.b()
        )));
    }
    let mut out = Vec::new();
    let mut stack = vec![GridPoint::new(1, shape.b() + h)];
    walk_paths(shape, h, &mut stack, &mut |pts| out.push(pts.to_vec()));
    Ok(out
        .into_iter()
        .map(|pts| {
            let set = pts.iter().map(|p| p.index(shape)).collect();
            Path {
                h,
                points: pts,
                set,
            }
        })
        .collect())
}

fn walk_paths(
    shape: Shape,
    h: usize,
    stack: &mut Vec<GridPoint>,
    emit: &mut impl FnMut(&[GridPoint]),
) {
    let cur = stack[stack.len() - 1];
    if cur.row == shape.a() && cur.col == h {
        emit(stack);
        return;
    }
    // A left step gives a lexicographically smaller successor than a down step.
    if cur.col > h {
        stack.push(GridPoint::new(cur.row, cur.col - 1));
        walk_paths(shape, h, stack, emit);
        stack.pop();
    }
    if cur.row < shape.a() {
        stack.push(GridPoint::new(cur.row + 1, cur.col));
        walk_paths(shape, h, stack, emit);
        stack.pop();
    }
}

/// A facet of `Δ_{t+1}` together with its path decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    params: SegreParams,
    paths: Vec<Path>,
    points: PointSet,
}

impl Facet {
    /// Builds a facet from `t` pairwise disjoint paths with increasing `h`.
    pub fn from_paths(params: SegreParams, paths: Vec<Path>) -> Result<Facet> {
        if paths.len() != params.t() {
            return Err(Error::NotAFacet(format!(
                "expected {} paths, got {}",
                params.t(),
                paths.len()
            )));
        }
        let mut points = PointSet::EMPTY;
        for (i, p) in paths.iter().enumerate() {
            if i > 0 && paths[i - 1].h >= p.h {
                return Err(Error::NotAFacet(
                    "path endpoints must be strictly increasing".into(),
                ));
            }
            if !points.is_disjoint(&p.set) {
                return Err(Error::NotAFacet(format!(
                    "path {} meets an earlier path",
                    i + 1
                )));
            }
            points = points.union(p.set);
        }
        Ok(Facet {
            params,
            paths,
            points,
        })
    }

    pub fn params(&self) -> SegreParams {
        self.params
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn h(&self) -> Vec<usize> {
        self.paths.iter().map(|p| p.h).collect()
    }

    pub fn points(&self) -> PointSet {
        self.points
    }

    /// Points in lexicographic `(row, col)` order.
    pub fn sorted_points(&self) -> Vec<GridPoint> {
        let shape = self.params.shape();
        let mut v: Vec<GridPoint> = self
            .points
            .iter()
            .map(|i| GridPoint::from_index(i, shape))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn to_record(&self) -> FacetRecord {
        FacetRecord {
            h: self.h(),
            paths: self
                .paths
                .iter()
                .map(|p| p.points.iter().map(|g| [g.row, g.col]).collect())
                .collect(),
        }
    }

    pub fn from_record(params: SegreParams, record: &FacetRecord) -> Result<Facet> {
        let shape = params.shape();
        let paths = record
            .paths
            .iter()
            .map(|pts| {
                Path::from_points(
                    shape,
                    pts.iter().map(|&[r, c]| GridPoint::new(r, c)).collect(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let facet = Facet::from_paths(params, paths)?;
        if facet.h() != record.h {
            return Err(Error::Parse(format!(
                "h = {:?} disagrees with the paths {:?}",
                record.h,
                facet.h()
            )));
        }
        Ok(facet)
    }
}

/// JSON-lines form of a facet: `{"h": [...], "paths": [[[r, c], ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetRecord {
    pub h: Vec<usize>,
    pub paths: Vec<Vec<[usize; 2]>>,
}

/// Strictly increasing `t`-tuples in `[1, b]`, in lexicographic order.
pub fn h_tuples(b: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if t == 0 || t > b {
        return out;
    }
    let mut cur: Vec<usize> = (1..=t).collect();
    loop {
        out.push(cur.clone());
        let mut i = t;
        while i > 0 && cur[i - 1] == b - (t - i) {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..t {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Δ_{t+1} for fixed parameters, with the path tables precomputed.
#[derive(Debug, Clone)]
pub struct Complex {
    params: SegreParams,
    poset: Poset,
    /// `paths[h - 1]` = all paths ending at `(a, h)`.
    paths: Arc<Vec<Vec<Path>>>,
}

impl Complex {
    pub fn new(params: SegreParams) -> Result<Self> {
        params.require_path_regime()?;
        let shape = params.shape();
        let paths = (1..=shape.b())
            .map(|h| enumerate_paths(shape, h))
            .collect::<Result<Vec<_>>>()?;
        Ok(Complex {
            params,
            poset: Poset::new(shape),
            paths: Arc::new(paths),
        })
    }

    pub fn params(&self) -> SegreParams {
        self.params
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn paths(&self, h: usize) -> &[Path] {
        &self.paths[h - 1]
    }

    /// Streams all facets ordered by `h`-tuple, then by path tuple.
    pub fn facets(&self) -> FacetStream {
        FacetStream::new(
            self.params,
            self.paths.clone(),
            h_tuples(self.params.b(), self.params.t()),
        )
    }

    /// Facets whose paths end at the given `h`-tuple.
    pub fn facets_for(&self, h: &[usize]) -> Result<FacetStream> {
        self.check_h(h)?;
        Ok(FacetStream::new(
            self.params,
            self.paths.clone(),
            vec![h.to_vec()],
        ))
    }

    fn check_h(&self, h: &[usize]) -> Result<()> {
        if h.len() != self.params.t() {
            return Err(Error::InvalidParams(format!(
                "expected {} endpoints, got {}",
                self.params.t(),
                h.len()
            )));
        }
        for (i, &x) in h.iter().enumerate() {
            if x < 1 || x > self.params.b() {
                return Err(Error::InvalidParams(format!(
                    "h = {x} outside [1, {}]",
                    self.params.b()
                )));
            }
            if i > 0 && h[i - 1] >= x {
                return Err(Error::InvalidParams(format!(
                    "endpoints {h:?} are not strictly increasing"
                )));
            }
        }
        Ok(())
    }

    /// `|s| = (a+b)t` and `s` contains no chain of `t+1` elements. The
    /// complex is pure, so faces of maximal size are exactly the facets.
    pub fn is_facet(&self, s: PointSet) -> bool {
        s.len() == self.params.facet_size() && self.poset.longest_chain(s) <= self.params.t()
    }

    /// Every way of writing `s` as `t` disjoint paths.
    pub fn decompose_facet(&self, s: PointSet) -> Result<Decomposition> {
        if !self.is_facet(s) {
            return Err(Error::NotAFacet(format!(
                "{} points, longest chain {}",
                s.len(),
                self.poset.longest_chain(s)
            )));
        }
        let shape = self.params.shape();
        let (a, b, t) = (shape.a(), shape.b(), self.params.t());
        let candidates: Vec<(usize, Vec<&Path>)> = (1..=b)
            .filter(|&h| {
                s.contains(GridPoint::new(1, b + h).index(shape))
                    && s.contains(GridPoint::new(a, h).index(shape))
            })
            .map(|h| {
                (
                    h,
                    self.paths[h - 1]
                        .iter()
                        .filter(|p| p.set.is_subset(&s))
                        .collect(),
                )
            })
            .collect();
        let mut found = Vec::new();
        let mut chosen: Vec<&Path> = Vec::with_capacity(t);
        self.decompose_rec(&candidates, 0, PointSet::EMPTY, &mut chosen, &mut found)?;
        Ok(match found.len() {
            0 => Decomposition::Undecomposable,
            1 => Decomposition::Unique(found.pop().unwrap()),
            _ => Decomposition::Ambiguous(found),
        })
    }

    fn decompose_rec<'p>(
        &self,
        candidates: &[(usize, Vec<&'p Path>)],
        from: usize,
        used: PointSet,
        chosen: &mut Vec<&'p Path>,
        found: &mut Vec<Facet>,
    ) -> Result<()> {
        if chosen.len() == self.params.t() {
            found.push(Facet::from_paths(
                self.params,
                chosen.iter().map(|&p| p.clone()).collect(),
            )?);
            return Ok(());
        }
        for k in from..candidates.len() {
            for &p in &candidates[k].1 {
                if p.set.is_disjoint(&used) {
                    chosen.push(p);
                    self.decompose_rec(candidates, k + 1, used.union(p.set), chosen, found)?;
                    chosen.pop();
                }
            }
        }
        Ok(())
    }

    /// Draws the facet in `P′`: the `a × 2b` block `X|Y` followed by an
    /// `a × b` block repeating the `Y` part below `X`. Cells are `.` or
    /// the 1-based index of the path through them (`1`–`9`, then `a`–`z`).
    pub fn render_p_prime(&self, facet: &Facet) -> Result<String> {
        if facet.params != self.params {
            return Err(Error::ShapeMismatch(format!(
                "facet for {} rendered with {}",
                facet.params, self.params
            )));
        }
        let (a, b) = (self.params.a(), self.params.b());
        let mut top = vec![vec!['.'; 2 * b]; a];
        let mut bottom = vec![vec!['.'; b]; a];
        for (k, path) in facet.paths.iter().enumerate() {
            let mark = path_mark(k)?;
            for p in &path.points {
                top[p.row - 1][p.col - 1] = mark;
                if p.col > b {
                    bottom[p.row - 1][p.col - b - 1] = mark;
                }
            }
        }
        let mut out = String::new();
        for row in &top {
            let line: String =
                row[..b].iter().collect::<String>() + "|" + &row[b..].iter().collect::<String>();
            writeln!(out, "{line}").unwrap();
        }
        for row in &bottom {
            writeln!(out, "{}", row.iter().collect::<String>()).unwrap();
        }
        Ok(out)
    }

    /// Inverse of [`Complex::render_p_prime`].
    pub fn parse_p_prime(&self, text: &str) -> Result<Facet> {
        let (a, b) = (self.params.a(), self.params.b());
        let shape = self.params.shape();
        let lines: Vec<&str> = text.lines().collect();
        if lines.len() != 2 * a {
            return Err(Error::Parse(format!(
                "expected {} lines, got {}",
                2 * a,
                lines.len()
            )));
        }
        let mut by_mark: BTreeMap<usize, Vec<GridPoint>> = BTreeMap::new();
        let mut duplicated: BTreeMap<(usize, usize), char> = BTreeMap::new();
        for (i, line) in lines[..a].iter().enumerate() {
            let cells: Vec<char> = line.chars().collect();
            if cells.len() != 2 * b + 1 || cells[b] != '|' {
                return Err(Error::Parse(format!(
                    "line {} is not of the form X|Y",
                    i + 1
                )));
            }
            let cols = cells[..b].iter().chain(&cells[b + 1..]);
            for (j, &c) in cols.enumerate() {
                if c == '.' {
                    continue;
                }
                by_mark
                    .entry(mark_index(c)?)
                    .or_default()
                    .push(GridPoint::new(i + 1, j + 1));
                if j >= b {
                    duplicated.insert((i, j - b), c);
                }
            }
        }
        for (i, line) in lines[a..].iter().enumerate() {
            let cells: Vec<char> = line.chars().collect();
            if cells.len() != b {
                return Err(Error::Parse(format!(
                    "line {} must have {b} cells",
                    a + i + 1
                )));
            }
            for (j, &c) in cells.iter().enumerate() {
                if duplicated.get(&(i, j)).copied().unwrap_or('.') != c {
                    return Err(Error::Parse(format!(
                        "cell ({}, {}) of the lower block does not repeat the Y block",
                        a + i + 1,
                        j + 1
                    )));
                }
            }
        }
        let paths = by_mark
            .into_values()
            .map(|mut pts| {
                // along a path rows increase and columns decrease
                pts.sort_by_key(|p| (p.row, std::cmp::Reverse(p.col)));
                Path::from_points(shape, pts)
            })
            .collect::<Result<Vec<_>>>()?;
        Facet::from_paths(self.params, paths)
    }
}

fn path_mark(k: usize) -> Result<char> {
    char::from_digit((k + 1) as u32, 36)
        .ok_or_else(|| Error::InvalidParams("at most 35 paths can be rendered".into()))
}

fn mark_index(c: char) -> Result<usize> {
    match c.to_digit(36) {
        Some(d) if d >= 1 => Ok(d as usize - 1),
        _ => Err(Error::Parse(format!("unexpected cell {c:?}"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    Unique(Facet),
    Ambiguous(Vec<Facet>),
    Undecomposable,
}

impl Decomposition {
    pub fn count(&self) -> usize {
        match self {
            Decomposition::Unique(_) => 1,
            Decomposition::Ambiguous(v) => v.len(),
            Decomposition::Undecomposable => 0,
        }
    }
}

/// Convenience wrapper: the facet stream of `Δ_{t+1}`.
pub fn enumerate_facets(params: SegreParams) -> Result<FacetStream> {
    Ok(Complex::new(params)?.facets())
}

/// Lazily enumerates tuples of pairwise disjoint paths.
pub struct FacetStream {
    params: SegreParams,
    table: Arc<Vec<Vec<Path>>>,
    tuples: std::vec::IntoIter<Vec<usize>>,
    hs: Option<Vec<usize>>,
    level: usize,
    choice: Vec<usize>,
    next_try: Vec<usize>,
    used: Vec<PointSet>,
}

impl FacetStream {
    fn new(params: SegreParams, table: Arc<Vec<Vec<Path>>>, tuples: Vec<Vec<usize>>) -> Self {
        let t = params.t();
        let mut s = FacetStream {
            params,
            table,
            tuples: tuples.into_iter(),
            hs: None,
            level: 0,
            choice: Vec::with_capacity(t),
            next_try: vec![0; t],
            used: vec![PointSet::EMPTY; t + 1],
        };
        s.start_next_tuple();
        s
    }

    fn start_next_tuple(&mut self) {
        self.hs = self.tuples.next();
        self.level = 0;
        self.choice.clear();
        self.next_try[0] = 0;
    }

    /// Advances to the next disjoint tuple, returning its `h`-tuple and
    /// the chosen indices into the path tables.
    fn advance(&mut self) -> Option<(&[usize], PointSet)> {
        let t = self.params.t();
        loop {
            let hs = self.hs.as_ref()?;
            let k = self.level;
            if k == t {
                self.level -= 1;
                self.choice.pop();
                return Some((self.hs.as_deref().unwrap(), self.used[t]));
            }
            let candidates = &self.table[hs[k] - 1];
            let mut found = None;
            while self.next_try[k] < candidates.len() {
                let c = self.next_try[k];
                self.next_try[k] += 1;
                if candidates[c].set.is_disjoint(&self.used[k]) {
                    found = Some(c);
                    break;
                }
            }
            match found {
                Some(c) => {
                    self.used[k + 1] = self.used[k].union(candidates[c].set);
                    self.choice.push(c);
                    self.level += 1;
                    if self.level < t {
                        self.next_try[self.level] = 0;
                    }
                }
                None if k == 0 => self.start_next_tuple(),
                None => {
                    self.level -= 1;
                    self.choice.pop();
                }
            }
        }
    }

    /// The next tuple as its `h`-tuple, indices into the path tables and
    /// union of points.
    pub(crate) fn next_indices(&mut self) -> Option<(Vec<usize>, Vec<usize>, PointSet)> {
        let (hs, points) = self.advance()?;
        let hs = hs.to_vec();
        let mut idx = self.choice.clone();
        idx.push(self.next_try[self.params.t() - 1] - 1);
        Some((hs, idx, points))
    }

    /// The remaining facets as bare point sets.
    pub fn sets(self) -> FacetSets {
        FacetSets(self)
    }
}

impl Iterator for FacetStream {
    type Item = Facet;

    fn next(&mut self) -> Option<Facet> {
        let (hs, idx, points) = self.next_indices()?;
        let paths = hs
            .iter()
            .zip(&idx)
            .map(|(&h, &i)| self.table[h - 1][i].clone())
            .collect();
        Some(Facet {
            params: self.params,
            paths,
            points,
        })
    }
}

pub struct FacetSets(FacetStream);

impl Iterator for FacetSets {
    type Item = PointSet;

    fn next(&mut self) -> Option<PointSet> {
        self.0.advance().map(|(_, s)| s)
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn path_counts() {
        let s22 = Shape::new(2, 2).unwrap();
        assert_eq!(enumerate_paths(s22, 1).unwrap().len(), 3);
        let s33 = Shape::new(3, 3).unwrap();
        assert_eq!(enumerate_paths(s33, 2).unwrap().len(), 10);
        assert!(enumerate_paths(s33, 0).is_err());
        assert!(enumerate_paths(s33, 4).is_err());
        for a in 2..=4 {
            for b in a..=5 {
                let shape = Shape::new(a, b).unwrap();
                let poset = Poset::new(shape);
                for h in 1..=b {
                    let paths = enumerate_paths(shape, h).unwrap();
                    assert_eq!(paths.len(), binom(a + b - 1, a - 1));
                    let mut sorted = paths.clone();
                    sorted.sort_by(|x, y| x.points.cmp(&y.points));
                    assert_eq!(sorted, paths);
                    for p in &paths {
                        assert!(poset.is_antichain(p.set));
                        assert_eq!(Path::from_points(shape, p.points.clone()).unwrap(), *p);
                    }
                }
            }
        }
    }

    #[test]
    fn path_validation() {
        let shape = Shape::new(2, 2).unwrap();
        let g = GridPoint::new;
        assert!(Path::from_points(shape, vec![g(1, 3), g(1, 2), g(1, 1), g(2, 1)]).is_ok());
        assert!(Path::from_points(shape, vec![g(1, 3), g(2, 3), g(2, 2), g(2, 1)]).is_ok());
        assert!(Path::from_points(shape, vec![g(1, 3), g(2, 2), g(2, 1), g(2, 1)]).is_err());
        assert!(Path::from_points(shape, vec![g(1, 4), g(1, 3), g(1, 2), g(2, 2)]).is_ok());
        assert!(Path::from_points(shape, vec![g(1, 2), g(1, 1), g(2, 1)]).is_err());
    }

    #[test]
    fn tuples() {
        assert_eq!(h_tuples(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(h_tuples(4, 1).len(), 4);
        assert_eq!(h_tuples(5, 3).len(), 10);
        assert!(h_tuples(2, 3).is_empty());
    }

    /// Disjoint path tuples counted by nested loops over the path lists.
    fn brute_force_facets(params: SegreParams) -> Vec<PointSet> {
        let shape = params.shape();
        let tables: Vec<Vec<Path>> = (1..=shape.b())
            .map(|h| enumerate_paths(shape, h).unwrap())
            .collect();
        let mut out = Vec::new();
        for hs in h_tuples(shape.b(), params.t()) {
            let mut partial = vec![PointSet::EMPTY];
            for &h in &hs {
                let mut next = Vec::new();
                for &u in &partial {
                    for p in &tables[h - 1] {
                        if u.is_disjoint(&p.set) {
                            next.push(u.union(p.set));
                        }
                    }
                }
                partial = next;
            }
            out.extend(partial);
        }
        out
    }

    #[test]
    fn facet_counts_match_brute_force() {
        for (a, b, t, expected) in [(2, 2, 1, 6), (3, 3, 2, 57), (4, 4, 2, 1830)] {
            let params = SegreParams::new(a, b, t).unwrap();
            let brute = brute_force_facets(params);
            assert_eq!(brute.len(), expected);
            let streamed: Vec<PointSet> = enumerate_facets(params).unwrap().sets().collect();
            assert_eq!(streamed, brute);
            let facets: Vec<Facet> = enumerate_facets(params).unwrap().collect();
            assert_eq!(facets.len(), expected);
            let distinct: HashSet<PointSet> = facets.iter().map(|f| f.points()).collect();
            assert_eq!(distinct.len(), expected);
        }
    }

    #[test]
    fn stream_is_lexicographic_and_valid() {
        let params = SegreParams::new(3, 4, 2).unwrap();
        let cx = Complex::new(params).unwrap();
        let facets: Vec<Facet> = cx.facets().collect();
        let keys: Vec<(Vec<usize>, Vec<Vec<GridPoint>>)> = facets
            .iter()
            .map(|f| {
                (
                    f.h(),
                    f.paths().iter().map(|p| p.points().to_vec()).collect(),
                )
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        for f in &facets {
            assert!(cx.is_facet(f.points()));
            assert_eq!(f.points().len(), params.facet_size());
        }
        // per-tuple streams concatenate to the full stream
        let mut concatenated = Vec::new();
        for hs in h_tuples(4, 2) {
            concatenated.extend(cx.facets_for(&hs).unwrap().sets());
        }
        assert_eq!(
            concatenated,
            facets.iter().map(|f| f.points()).collect::<Vec<_>>()
        );
        assert!(cx.facets_for(&[2, 2]).is_err());
    }

    #[test]
    fn regime_errors() {
        assert!(matches!(
            enumerate_facets(SegreParams::new(3, 5, 3).unwrap()).err(),
            Some(Error::UnsupportedRegime { .. })
        ));
        assert!(matches!(
            enumerate_facets(SegreParams::new(2, 3, 3).unwrap()).err(),
            Some(Error::TrivialIdeal { .. })
        ));
    }

    #[test]
    fn facet_membership() {
        let params = SegreParams::new(3, 3, 1).unwrap();
        let cx = Complex::new(params).unwrap();
        let path = &cx.paths(2)[4];
        assert!(cx.is_facet(path.set()));
        let mut smaller = path.set();
        smaller.remove(path.set().iter().next().unwrap());
        assert!(!cx.is_facet(smaller));

        let params = SegreParams::new(3, 3, 2).unwrap();
        let cx = Complex::new(params).unwrap();
        let g = GridPoint::new;
        let p1 = Path::from_points(
            params.shape(),
            vec![g(1, 4), g(1, 3), g(1, 2), g(1, 1), g(2, 1), g(3, 1)],
        )
        .unwrap();
        let p2 = Path::from_points(
            params.shape(),
            vec![g(1, 6), g(1, 5), g(2, 5), g(3, 5), g(3, 4), g(3, 3)],
        )
        .unwrap();
        let union = p1.set().union(p2.set());
        assert_eq!(cx.poset().longest_chain(union), 2);
        assert!(cx.is_facet(union));
    }

    #[test]
    fn decompositions_are_unique() {
        for (a, b, t) in [(2, 3, 1), (3, 3, 2), (4, 4, 2)] {
            let cx = Complex::new(SegreParams::new(a, b, t).unwrap()).unwrap();
            for f in cx.facets() {
                match cx.decompose_facet(f.points()).unwrap() {
                    Decomposition::Unique(d) => assert_eq!(d, f),
                    other => panic!("({a},{b},{t}): {} decompositions", other.count()),
                }
            }
        }
        let cx = Complex::new(SegreParams::new(3, 3, 2).unwrap()).unwrap();
        assert!(matches!(
            cx.decompose_facet(PointSet::singleton(0)),
            Err(Error::NotAFacet(_))
        ));
    }

    #[test]
    fn mirsky_parts_of_facets() {
        let cx = Complex::new(SegreParams::new(4, 4, 3).unwrap()).unwrap();
        for f in cx.facets() {
            let parts = cx.poset().mirsky_partition(f.points());
            assert!(parts.len() <= 3);
            assert!(parts.iter().all(|&p| cx.poset().is_antichain(p)));
            assert_eq!(
                parts.iter().fold(PointSet::EMPTY, |u, &p| u.union(p)),
                f.points()
            );
        }
    }

    #[test]
    fn render_layout() {
        let cx = Complex::new(SegreParams::new(2, 2, 1).unwrap()).unwrap();
        let f = cx.facets().next().unwrap();
        let text = cx.render_p_prime(&f).unwrap();
        assert_eq!(text, "11|1.\n1.|..\n1.\n..\n");
        for f in cx.facets() {
            let text = cx.render_p_prime(&f).unwrap();
            let lines: Vec<&str> = text.lines().collect();
            assert_eq!(lines.len(), 4);
            let top_marks = lines[..2]
                .iter()
                .flat_map(|l| l.chars())
                .filter(|c| *c == '1')
                .count();
            assert_eq!(top_marks, 4);
            let bottom_marks = lines[2..]
                .iter()
                .flat_map(|l| l.chars())
                .filter(|c| *c == '1')
                .count();
            let y_points = f.sorted_points().iter().filter(|p| p.col > 2).count();
            assert_eq!(bottom_marks, y_points);
            assert_eq!(cx.parse_p_prime(&text).unwrap(), f);
        }
    }

    #[test]
    fn render_round_trip_and_errors() {
        let cx = Complex::new(SegreParams::new(4, 5, 3).unwrap()).unwrap();
        for f in cx.facets().step_by(97) {
            let text = cx.render_p_prime(&f).unwrap();
            assert_eq!(cx.parse_p_prime(&text).unwrap(), f);
        }
        assert!(cx.parse_p_prime("..|..\n").is_err());
        let f = cx.facets().next().unwrap();
        let mut text = cx.render_p_prime(&f).unwrap();
        let last = text.rfind(['1', '2', '3']).unwrap();
        text.replace_range(last..last + 1, ".");
        assert!(cx.parse_p_prime(&text).is_err());
    }

    #[test]
    fn json_record_round_trip() {
        let params = SegreParams::new(3, 3, 2).unwrap();
        let cx = Complex::new(params).unwrap();
        let f = cx.facets().nth(11).unwrap();
        let line = serde_json::to_string(&f.to_record()).unwrap();
        assert!(line.starts_with("{\"h\":[1,"));
        let back: FacetRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(Facet::from_record(params, &back).unwrap(), f);
    }

    #[test]
    fn right_turns() {
        let shape = Shape::new(3, 3).unwrap();
        let g = GridPoint::new;
        let p = Path::from_points(
            shape,
            vec![g(1, 5), g(2, 5), g(2, 4), g(2, 3), g(3, 3), g(3, 2)],
        )
        .unwrap();
        assert_eq!(p.right_turns(), vec![g(2, 5), g(3, 3)]);
    }
}
