//! The acceptance checks, shared by the `acceptance` test target and the
//! `repro` command.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::complex::Complex;
use crate::counting::degree;
use crate::error::Result;
use crate::groebner::{
    buchberger, hibi_generators, hibi_relation, initial_ideal, is_groebner, reduce,
    secant_generators, Field, GroebnerBudget, MonomialIdeal, PrimeField, Rationals, Ring,
};
use crate::params::{SegreParams, Shape};
use crate::poset::{LatticeElement, Poset};
use crate::shelling::{
    certify_shelling, h_vector, shelling_order, HBudget, HMethod, HVector, ShellingOptions,
};
use crate::tensor::{
    evaluate, membership, random_dense_tensor, random_rank_tensor, unfold, SampleRange,
};

/// Coefficients of the Hilbert numerator of `R/I(6,6)^{3}`.
pub const NUMERATOR_6_6_3: [i64; 19] = [
    1, 36, 666, 8436, 68526, 366660, 1330644, 3296124, 5650866, 6762316, 5650866, 3296124, 1330644,
    366660, 68526, 8436, 666, 36, 1,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub title: &'static str,
    pub status: Status,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ReproConfig {
    pub rank_samples: u64,
    pub dense_samples: u64,
    pub seed: u64,
    pub h_budget: HBudget,
    pub groebner_budget: GroebnerBudget,
}

impl Default for ReproConfig {
    fn default() -> Self {
        ReproConfig {
            rank_samples: 200,
            dense_samples: 50,
            seed: 0,
            h_budget: HBudget::default(),
            groebner_budget: GroebnerBudget::default(),
        }
    }
}

type Outcome = Result<(bool, String)>;

pub struct Criterion {
    pub id: &'static str,
    pub title: &'static str,
    /// Wall-clock limit; exceeding it fails the check.
    pub limit: Option<Duration>,
    /// Budget exhaustion skips instead of failing.
    pub stretch: bool,
    run: fn(&ReproConfig) -> Outcome,
}

pub fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: "AC1",
            title: "2-minors form a Gröbner basis",
            limit: Some(secs(60)),
            stretch: false,
            run: ac1,
        },
        Criterion {
            id: "AC2",
            title: "3-minors: Gröbner basis, ini = chain ideal",
            limit: Some(secs(600)),
            stretch: false,
            run: ac2,
        },
        Criterion {
            id: "AC3",
            title: "degree = distinct facet count, a <= b <= 5",
            limit: Some(secs(300)),
            stretch: false,
            run: ac3,
        },
        Criterion {
            id: "AC4",
            title: "degree for t = 1, a <= b <= 8",
            limit: None,
            stretch: false,
            run: ac4,
        },
        Criterion {
            id: "AC5",
            title: "degree(6,6,3) = 28206234",
            limit: None,
            stretch: false,
            run: ac5,
        },
        Criterion {
            id: "AC6",
            title: "h-vector methods agree, a <= b <= 4",
            limit: Some(secs(600)),
            stretch: false,
            run: ac6,
        },
        Criterion {
            id: "AC7",
            title: "shelling certified, a <= b <= 4",
            limit: None,
            stretch: false,
            run: ac7,
        },
        Criterion {
            id: "AC8",
            title: "regularity <= at, = at when b >= 2t",
            limit: None,
            stretch: false,
            run: ac8,
        },
        Criterion {
            id: "AC9",
            title: "symmetric h-vector with top entry 1",
            limit: None,
            stretch: false,
            run: ac9,
        },
        Criterion {
            id: "AC10",
            title: "membership of rank-t and dense samples",
            limit: None,
            stretch: false,
            run: ac10,
        },
        Criterion {
            id: "AC11",
            title: "leading terms agree over Q, F2, F3",
            limit: None,
            stretch: false,
            run: ac11,
        },
        Criterion {
            id: "AC12",
            title: "Hibi and 2-minor ideals coincide",
            limit: None,
            stretch: false,
            run: ac12,
        },
        Criterion {
            id: "AC13",
            title: "Hilbert numerator of (6,6,3)",
            limit: None,
            stretch: true,
            run: ac13,
        },
    ]
}

pub fn run_criterion(c: &Criterion, config: &ReproConfig) -> CheckResult {
    let start = Instant::now();
    let outcome = (c.run)(config);
    let elapsed = start.elapsed();
    let (status, detail) = match outcome {
        Ok((true, d)) => match c.limit {
            Some(limit) if elapsed > limit => {
                (Status::Fail, format!("{d}; exceeded {}s", limit.as_secs()))
            }
            _ => (Status::Pass, d),
        },
        Ok((false, d)) => (Status::Fail, d),
        Err(e) if c.stretch && e.is_budget() => (Status::Skip, e.to_string()),
        Err(e) => (Status::Fail, e.to_string()),
    };
    CheckResult {
        id: c.id,
        title: c.title,
        status,
        detail,
        elapsed,
    }
}

/// Runs the selected criteria (all when `only` is empty) in order.
pub fn run(config: &ReproConfig, only: &[String]) -> Vec<CheckResult> {
    criteria()
        .iter()
        .filter(|c| only.is_empty() || only.iter().any(|o| o.eq_ignore_ascii_case(c.id)))
        .map(|c| run_criterion(c, config))
        .collect()
}

/// One line per result; elapsed times are appended when `timing` is set.
pub fn format_table(results: &[CheckResult], timing: bool) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&format!(
            "{:<5} {}  {} ({})",
            r.id,
            r.status.label(),
            r.title,
            r.detail
        ));
        if timing {
            out.push_str(&format!(" [{:.1}s]", r.elapsed.as_secs_f64()));
        }
        out.push('\n');
    }
    out
}

fn p(a: usize, b: usize, t: usize) -> SegreParams {
    SegreParams::new(a, b, t).expect("valid parameters")
}

/// All `(a, b, t)` with `2 <= a <= b <= max_b` and `t < a`.
pub fn small_instances(max_b: usize) -> Vec<SegreParams> {
    let mut v = Vec::new();
    for b in 2..=max_b {
        for a in 2..=b {
            for t in 1..a {
                v.push(p(a, b, t));
            }
        }
    }
    v
}

fn ring_q(a: usize, b: usize) -> Result<Ring<Rationals>> {
    Ring::new(Shape::new(a, b)?, Rationals)
}

fn ac1(config: &ReproConfig) -> Outcome {
    let mut details = Vec::new();
    for (a, b) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
        let ring = ring_q(a, b)?;
        let check = is_groebner(&ring, &secant_generators(&ring, 2), config.groebner_budget)?;
        if !check.is_groebner() {
            let (i, j, _) = check.failure.unwrap();
            return Ok((
                false,
                format!("({a},{b}): S-pair ({i},{j}) does not reduce to 0"),
            ));
        }
        details.push(format!("({a},{b}) {} pairs", check.spairs_checked));
    }
    Ok((true, details.join(", ")))
}

fn ac2(config: &ReproConfig) -> Outcome {
    let mut details = Vec::new();
    for (a, b, t) in [(3, 3, 2), (3, 4, 2)] {
        let ring = ring_q(a, b)?;
        let check = is_groebner(
            &ring,
            &secant_generators(&ring, t + 1),
            config.groebner_budget,
        )?;
        let Some(basis) = check.basis() else {
            return Ok((false, format!("({a},{b},{t}): not a Gröbner basis")));
        };
        let shape = ring.shape();
        let chains =
            MonomialIdeal::from_sets(shape.num_variables(), Poset::new(shape).chain_sets(t + 1));
        let ini = initial_ideal(basis);
        if ini != chains {
            return Ok((
                false,
                format!(
                    "({a},{b},{t}): ini has {} generators, chains {}",
                    ini.len(),
                    chains.len()
                ),
            ));
        }
        details.push(format!("({a},{b},{t}) {} generators", ini.len()));
    }
    Ok((true, details.join(", ")))
}

fn ac3(_: &ReproConfig) -> Outcome {
    let mut total = 0u64;
    for params in small_instances(5) {
        let complex = Complex::new(params)?;
        let mut distinct = HashSet::new();
        let mut tuples = 0u64;
        for s in complex.facets().sets() {
            tuples += 1;
            distinct.insert(s.0);
        }
        let d = degree(params)?;
        if BigInt::from(distinct.len()) != d || tuples != distinct.len() as u64 {
            return Ok((
                false,
                format!(
                    "{params}: degree {d}, {} distinct facets from {tuples} tuples",
                    distinct.len()
                ),
            ));
        }
        total += tuples;
    }
    Ok((true, format!("{total} facets over all instances")))
}

fn ac4(_: &ReproConfig) -> Outcome {
    let factorial = |n: i64| (1..=n).map(BigInt::from).product::<BigInt>();
    let mut n = 0;
    for b in 2..=8 {
        for a in 2..=b {
            let expected =
                factorial((a + b - 1) as i64) / (factorial(a as i64 - 1) * factorial(b as i64 - 1));
            let got = degree(p(a, b, 1))?;
            if got != expected {
                return Ok((false, format!("({a},{b},1): {got} != {expected}")));
            }
            n += 1;
        }
    }
    Ok((true, format!("{n} instances")))
}

fn ac5(_: &ReproConfig) -> Outcome {
    let d = degree(p(6, 6, 3))?;
    let printed: i64 = NUMERATOR_6_6_3.iter().sum();
    Ok((
        d == BigInt::from(28206234) && d == BigInt::from(printed),
        format!("degree {d}, numerator sum {printed}"),
    ))
}

fn ac6(config: &ReproConfig) -> Outcome {
    let h221 = h_vector(p(2, 2, 1), HMethod::Shelling, config.h_budget)?;
    if h221 != HVector::from_i64(&[1, 4, 1]) {
        return Ok((false, format!("h(2,2,1) = {h221}")));
    }
    let instances = small_instances(4);
    for &params in &instances {
        let hs = HMethod::ALL
            .iter()
            .map(|&m| h_vector(params, m, config.h_budget))
            .collect::<Result<Vec<_>>>()?;
        if hs[0] != hs[1] || hs[0] != hs[2] {
            return Ok((
                false,
                format!(
                    "{params}: shelling {}, f-vector {}, monomial {}",
                    hs[0], hs[1], hs[2]
                ),
            ));
        }
        let d = degree(params)?;
        if hs[0].sum() != d {
            return Ok((
                false,
                format!("{params}: sum {} != degree {d}", hs[0].sum()),
            ));
        }
    }
    Ok((
        true,
        format!("{} instances, h(2,2,1) = {h221}", instances.len()),
    ))
}

fn ac7(config: &ReproConfig) -> Outcome {
    let instances = small_instances(4);
    let mut facets = 0;
    for &params in &instances {
        let order = shelling_order(
            params,
            ShellingOptions {
                max_facets: config.h_budget.max_facets,
                certify: false,
            },
        )?;
        let c = certify_shelling(&order);
        if !c.is_shelling {
            return Ok((false, format!("{params}: witness {:?}", c.witness)));
        }
        facets += c.facets;
    }
    Ok((
        true,
        format!("{} instances, {facets} facets", instances.len()),
    ))
}

fn ac8(config: &ReproConfig) -> Outcome {
    let mut instances = small_instances(4);
    instances.extend([p(3, 6, 2), p(3, 4, 1)]);
    let mut equalities = Vec::new();
    for &params in &instances {
        let reg = h_vector(params, HMethod::Shelling, config.h_budget)?.degree();
        let bound = params.a() * params.t();
        let forced = params.b() >= 2 * params.t();
        if reg > bound || (forced && reg != bound) {
            return Ok((false, format!("{params}: regularity {reg}, bound {bound}")));
        }
        if matches!(
            (params.a(), params.b(), params.t()),
            (2, 2, 1) | (2, 4, 1) | (3, 6, 2)
        ) {
            equalities.push(format!("{params} -> {reg}"));
        }
    }
    Ok((
        true,
        format!("{} instances; {}", instances.len(), equalities.join(", ")),
    ))
}

fn ac9(config: &ReproConfig) -> Outcome {
    let mut details = Vec::new();
    for params in [p(2, 2, 1), p(4, 4, 2)] {
        let h = h_vector(params, HMethod::Shelling, config.h_budget)?;
        if !h.is_symmetric() || *h.top() != BigInt::from(1) {
            return Ok((false, format!("{params}: h = {h}")));
        }
        details.push(format!("{params}: {h}"));
    }
    Ok((true, details.join("; ")))
}

fn ac10(config: &ReproConfig) -> Outcome {
    let range = SampleRange::default();
    let mut generators = 0;
    for (a, b, t) in [(2, 3, 1), (3, 3, 2), (3, 4, 2)] {
        let ring = ring_q(a, b)?;
        let shape = ring.shape();
        let gens = secant_generators(&ring, t + 1);
        generators += gens.len();
        for k in 0..config.rank_samples {
            let seed = config.seed.wrapping_add(k);
            let tensor = random_rank_tensor(shape, t, seed, range);
            if !membership(&tensor, t)?.member {
                return Ok((
                    false,
                    format!("({a},{b},{t}) rank sample {seed} not a member"),
                ));
            }
            for f in &gens {
                if !evaluate(&ring, f, &tensor)?.is_zero() {
                    return Ok((
                        false,
                        format!(
                            "({a},{b},{t}) rank sample {seed}: {} does not vanish",
                            ring.format(f)
                        ),
                    ));
                }
            }
        }
        for k in 0..config.dense_samples {
            let seed = config.seed.wrapping_add(1_000_000 + k);
            let tensor = random_dense_tensor(shape, seed, range);
            let m = membership(&tensor, t)?;
            let verified = m.witness.as_ref().is_some_and(|w| {
                w.rows.len() == t + 1
                    && unfold(&tensor, w.unfolding)
                        .is_ok_and(|u| u.minor(&w.rows, &w.cols) == w.value)
                    && !w.value.is_zero()
            });
            if m.member || !verified {
                return Ok((
                    false,
                    format!(
                        "({a},{b},{t}) dense sample {seed}: member={}, witness verified={verified}",
                        m.member
                    ),
                ));
            }
        }
    }
    Ok((
        true,
        format!(
            "{} rank-t and {} dense samples per instance, {generators} generators evaluated",
            config.rank_samples, config.dense_samples
        ),
    ))
}

fn leading_terms<F: Field>(
    ring: &Ring<F>,
    t: usize,
    budget: GroebnerBudget,
) -> Result<Vec<String>> {
    let gb = buchberger(ring, &secant_generators(ring, t + 1), budget)?;
    Ok(gb
        .leading_monomials()
        .iter()
        .map(|m| m.display(ring.shape()))
        .collect())
}

fn ac11(config: &ReproConfig) -> Outcome {
    let mut details = Vec::new();
    for (a, b, t) in [(2, 2, 1), (2, 3, 1), (3, 3, 2)] {
        let shape = Shape::new(a, b)?;
        let q = leading_terms(&Ring::new(shape, Rationals)?, t, config.groebner_budget)?;
        for prime in [2, 3] {
            let f = leading_terms(
                &Ring::new(shape, PrimeField::new(prime)?)?,
                t,
                config.groebner_budget,
            )?;
            if f != q {
                return Ok((false, format!("({a},{b},{t}): F{prime} differs from Q")));
            }
        }
        details.push(format!("({a},{b},{t}) {} leading terms", q.len()));
    }
    Ok((true, details.join(", ")))
}

fn ac12(config: &ReproConfig) -> Outcome {
    for (a, b) in [(2, 2), (2, 3)] {
        let ring = ring_q(a, b)?;
        let hibi = buchberger(&ring, &hibi_generators(&ring), config.groebner_budget)?;
        let minors = buchberger(&ring, &secant_generators(&ring, 2), config.groebner_budget)?;
        if hibi.polys() != minors.polys() {
            return Ok((false, format!("({a},{b}): reduced bases differ")));
        }
    }
    let ring = ring_q(2, 4)?;
    let f = hibi_relation(&ring, LatticeElement(2, 1, 3), LatticeElement(1, 2, 4));
    let r = reduce(&ring, &f, &secant_generators(&ring, 2));
    if !r.is_zero() {
        return Ok((
            false,
            format!("{} leaves remainder {}", ring.format(&f), ring.format(&r)),
        ));
    }
    Ok((
        true,
        format!("(2,2), (2,3) bases equal; {} reduces to 0", ring.format(&f)),
    ))
}

fn ac13(config: &ReproConfig) -> Outcome {
    let h = h_vector(p(6, 6, 3), HMethod::Monomial, config.h_budget)?;
    let expected = HVector::from_i64(&NUMERATOR_6_6_3);
    Ok((h == expected, format!("h = {h}")))
}

pub fn all_pass(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.status != Status::Fail)
}
