//! h-vectors of `Δ_{t+1}` by three independent routes, and what follows
//! from them.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{shelling_order, ShellingOptions};
use crate::counting::binomial_u;
use crate::error::{Error, Result};
use crate::groebner::{divide_out_one_minus_x, MonomialIdeal};
use crate::params::SegreParams;
use crate::pointset::PointSet;
use crate::poset::Poset;

/// Coefficients `h_0, h_1, …` with trailing zeros removed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HVector(Vec<BigInt>);

impl HVector {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        HVector(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        HVector::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    /// Largest index with a nonzero entry.
    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn top(&self) -> &BigInt {
        self.0.last().unwrap()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|i| self.0[i] == self.0[n - 1 - i])
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `h(x) / (1-x)^d` with `d` the Krull dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: HVector,
    pub pole_order: usize,
}

impl HilbertSeries {
    /// Values of the Hilbert function in degrees `0..n`.
    pub fn hilbert_function(&self, n: usize) -> Vec<BigInt> {
        let mut s: Vec<BigInt> = (0..n)
            .map(|i| self.numerator.0.get(i).cloned().unwrap_or_default())
            .collect();
        for _ in 0..self.pole_order {
            for i in 1..n {
                let prev = s[i - 1].clone();
                s[i] += prev;
            }
        }
        s
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.numerator.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            let body = match (c.abs().is_one() && i > 0, c.is_negative()) {
                (true, neg) => format!("{}{mono}", if neg { "-" } else { "" }),
                (false, _) => format!("{c}{mono}"),
            };
            terms.push(body);
        }
        let num = terms.join(" + ").replace("+ -", "- ");
        write!(f, "({num}) / (1-x)^{}", self.pole_order)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HMethod {
    /// Counting facets by the size of their restriction set.
    Shelling,
    /// Counting all faces, then the standard f-to-h transform.
    FVector,
    /// Hilbert series of the Stanley–Reisner ideal of the chains.
    Monomial,
}

impl HMethod {
    pub const ALL: [HMethod; 3] = [HMethod::Shelling, HMethod::FVector, HMethod::Monomial];

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "shelling" => Ok(HMethod::Shelling),
            "f-vector" | "f_vector" | "fvector" => Ok(HMethod::FVector),
            "monomial" => Ok(HMethod::Monomial),
            _ => Err(Error::InvalidParams(format!(
                "unknown method {s:?}; expected shelling, f-vector or monomial"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            HMethod::Shelling => "shelling",
            HMethod::FVector => "f-vector",
            HMethod::Monomial => "monomial",
        }
    }
}

/// Per-method limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HBudget {
    pub max_facets: u64,
    pub max_states: u64,
    pub max_nodes: u64,
}

impl Default for HBudget {
    fn default() -> Self {
        HBudget {
            max_facets: 200_000,
            max_states: 20_000_000,
            max_nodes: 50_000_000,
        }
    }
}

/// Number of faces of `Δ_{t+1}` of each size `0, 1, …`, i.e. `f_{-1}, f_0, …`.
///
/// Points are scanned along a linear extension of `P`. The state records,
/// for each `k <= t`, which unscanned points lie above a chosen point that
/// tops a chain of `k` chosen points; a point can be chosen unless it lies
/// above a chain of `t`.
pub fn f_vector(params: SegreParams, max_states: u64) -> Result<Vec<BigInt>> {
    params.require_path_regime()?;
    let poset = Poset::new(params.shape());
    let order: Vec<usize> = poset.linear_extension().to_vec();
    let n = order.len();
    // remaining[k] = points at positions >= k
    let mut remaining = vec![PointSet::EMPTY; n + 1];
    for k in (0..n).rev() {
        remaining[k] = remaining[k + 1].union(PointSet::singleton(order[k]));
    }
    let up: Vec<PointSet> = (0..n).map(|i| poset.up_set(i)).collect();
    let mut dp = FaceCounter {
        order,
        remaining,
        up,
        t: params.t(),
        memo: HashMap::new(),
        max_states,
    };
    let counts = dp.count(0, vec![0u128; params.t()])?;
    Ok(counts.iter().map(|&c| BigInt::from(c)).collect())
}

struct FaceCounter {
    order: Vec<usize>,
    remaining: Vec<PointSet>,
    up: Vec<PointSet>,
    t: usize,
    memo: HashMap<(usize, Vec<u128>), Rc<Vec<u128>>>,
    max_states: u64,
}

impl FaceCounter {
    fn count(&mut self, pos: usize, masks: Vec<u128>) -> Result<Rc<Vec<u128>>> {
        if pos == self.order.len() {
            return Ok(Rc::new(vec![1]));
        }
        let key = (pos, masks);
        if let Some(r) = self.memo.get(&key) {
            return Ok(r.clone());
        }
        if self.memo.len() as u64 >= self.max_states {
            return Err(Error::budget("f-vector states", self.max_states));
        }
        let (_, masks) = &key;
        let p = self.order[pos];
        let rest = self.remaining[pos + 1].0;
        let level = masks.iter().take_while(|m| *m >> p & 1 == 1).count();

        let skip_masks: Vec<u128> = masks.iter().map(|m| m & rest).collect();
        let skip = self.count(pos + 1, skip_masks)?;
        let mut out: Vec<u128> = skip.to_vec();
        if level < self.t {
            let up = self.up[p].0;
            let take_masks: Vec<u128> = masks
                .iter()
                .enumerate()
                .map(|(k, m)| {
                    if k <= level {
                        (m | up) & rest
                    } else {
                        m & rest
                    }
                })
                .collect();
            let take = self.count(pos + 1, take_masks)?;
            if out.len() < take.len() + 1 {
                out.resize(take.len() + 1, 0);
            }
            for (i, c) in take.iter().enumerate() {
                out[i + 1] += c;
            }
        }
        let out = Rc::new(out);
        self.memo.insert(key, out.clone());
        Ok(out)
    }
}

/// `h_k = Σ_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}` where `f[i]` is the
/// number of faces with `i` vertices.
pub fn h_from_f(f: &[BigInt], d: usize) -> HVector {
    let d = d as i64;
    let h = (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let fi = f.get(i as usize).cloned().unwrap_or_default();
                    let term = binomial_u(d - i, k - i) * fi;
                    if (k - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();
    HVector::new(h)
}

fn monomial_h(params: SegreParams, max_nodes: u64) -> Result<HVector> {
    params.require_path_regime()?;
    let shape = params.shape();
    let poset = Poset::new(shape);
    let ideal = MonomialIdeal::from_sets(shape.num_variables(), poset.chain_sets(params.t() + 1));
    let numerator = ideal.hilbert_numerator(max_nodes)?;
    let (h, divisions) = divide_out_one_minus_x(&numerator);
    let codim = shape.num_variables() - params.dimension();
    if divisions != codim {
        return Err(Error::InvalidParams(format!(
            "Hilbert numerator vanishes to order {divisions} at 1, expected codimension {codim}"
        )));
    }
    Ok(HVector::new(h.into_iter().map(BigInt::from).collect()))
}

fn shelling_h(
    params: SegreParams,
    max_facets: u64,
    certify: bool,
) -> Result<(HVector, Option<bool>)> {
    let order = shelling_order(
        params,
        ShellingOptions {
            max_facets,
            certify,
        },
    )?;
    let mut counts = vec![0u64; params.dimension() + 1];
    for r in order.restriction_sets() {
        counts[r.len()] += 1;
    }
    let certified = order.certificate().map(|c| c.is_shelling);
    Ok((
        HVector::new(counts.into_iter().map(BigInt::from).collect()),
        certified,
    ))
}

pub fn h_vector(params: SegreParams, method: HMethod, budget: HBudget) -> Result<HVector> {
    match method {
        HMethod::Shelling => Ok(shelling_h(params, budget.max_facets, false)?.0),
        HMethod::FVector => Ok(h_from_f(
            &f_vector(params, budget.max_states)?,
            params.dimension(),
        )),
        HMethod::Monomial => monomial_h(params, budget.max_nodes),
    }
}

/// What the CLI and the acceptance checks report about an h-vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HReport {
    pub params: SegreParams,
    pub method: HMethod,
    pub h: HVector,
    pub series: HilbertSeries,
    pub regularity: usize,
    pub degree: BigInt,
    pub symmetric: bool,
    /// Whether the shelling was certified; `None` for other methods.
    pub certified: Option<bool>,
}

impl HReport {
    pub fn compute(
        params: SegreParams,
        method: HMethod,
        budget: HBudget,
        certify: bool,
    ) -> Result<Self> {
        let (h, certified) = match method {
            HMethod::Shelling => shelling_h(params, budget.max_facets, certify)?,
            _ => (h_vector(params, method, budget)?, None),
        };
        Ok(HReport {
            params,
            method,
            series: HilbertSeries {
                numerator: h.clone(),
                pole_order: params.dimension(),
            },
            regularity: h.degree(),
            degree: h.sum(),
            symmetric: h.is_symmetric(),
            h,
            certified,
        })
    }
}

/// The regularity together with the bound `at`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub regularity: usize,
    pub bound: usize,
    /// `b >= 2t`, where the bound is attained.
    pub equality_expected: bool,
    pub holds: bool,
}

pub fn regularity(
    params: SegreParams,
    method: HMethod,
    budget: HBudget,
) -> Result<RegularityReport> {
    let reg = h_vector(params, method, budget)?.degree();
    Ok(regularity_report(params, reg))
}

pub(crate) fn regularity_report(params: SegreParams, regularity: usize) -> RegularityReport {
    let bound = params.a() * params.t();
    let equality_expected = params.b() >= 2 * params.t();
    let holds = regularity <= bound && (!equality_expected || regularity == bound);
    RegularityReport {
        regularity,
        bound,
        equality_expected,
        holds,
    }
}

/// `h_i = h_{s-i}` with `s` the last nonzero index.
pub fn gorenstein_symmetry(h: &HVector) -> bool {
    h.is_symmetric()
}
