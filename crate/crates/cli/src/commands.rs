use std::collections::HashSet;

use secant_core::complex::{Complex, Facet, FacetRecord};
use secant_core::counting::{degree, degree_report, dimension};
use secant_core::groebner::{
    buchberger, hibi_generators, initial_ideal, is_groebner, secant_generators, Field, FieldKind,
    GroebnerBudget, MonomialIdeal, Ring,
};
use secant_core::repro::{self, ReproConfig, Status};
use secant_core::shelling::{
    certify_shelling, regularity, shelling_order, HBudget, HMethod, HReport, ShellingOptions,
};
use secant_core::tensor::{membership, random_rank_tensor, SampleRange, Tensor3};
use secant_core::{Error, Poset, Result, SegreParams, Shape};
use serde_json::{json, Value};

use crate::report::{big, bigs, params_json, Output};

fn shape_json(s: Shape) -> Value {
    json!({ "a": s.a(), "b": s.b() })
}

fn checked(a: usize, b: usize, t: usize) -> Result<SegreParams> {
    let p = SegreParams::new(a, b, t)?;
    p.require_path_regime()?;
    Ok(p)
}

pub fn degree_one(a: usize, b: usize, t: usize) -> Result<Output> {
    let p = checked(a, b, t)?;
    let report = degree_report(p)?;
    let dim = dimension(p)?;
    let per_tuple: Vec<Value> = report
        .per_tuple
        .iter()
        .map(|d| json!({ "h": d.h, "determinant": big(&d.determinant) }))
        .collect();
    let results = json!({
        "degree": big(&report.degree),
        "dimension": dim.dimension,
        "codimension": dim.codimension,
        "per_tuple": per_tuple,
    });
    let mut out = Output::new(params_json(p), results);
    out.csv = Some(format!(
        "{}{a},{b},{t},{},{},{}\n",
        CSV_HEADER, report.degree, dim.dimension, dim.codimension
    ));
    Ok(out)
}

const CSV_HEADER: &str = "a,b,t,degree,dimension,codimension\n";

pub fn degree_grid(max_b: usize) -> Result<Output> {
    let mut rows = Vec::new();
    let mut csv = String::from(CSV_HEADER);
    for p in repro::small_instances(max_b) {
        let d = degree(p)?;
        let dim = dimension(p)?;
        csv.push_str(&format!(
            "{},{},{},{d},{},{}\n",
            p.a(),
            p.b(),
            p.t(),
            dim.dimension,
            dim.codimension
        ));
        rows.push(json!({
            "a": p.a(), "b": p.b(), "t": p.t(),
            "degree": big(&d), "dimension": dim.dimension, "codimension": dim.codimension,
        }));
    }
    let mut out = Output::new(json!({ "max_b": max_b }), json!({ "rows": rows }));
    out.text = Some(csv.replace(',', "\t"));
    out.csv = Some(csv);
    Ok(out)
}

pub fn facets(
    a: usize,
    b: usize,
    t: usize,
    limit: Option<usize>,
    max_facets: u64,
) -> Result<Output> {
    let p = checked(a, b, t)?;
    let total = degree(p)?;
    let wanted = limit.map_or(total.clone(), |l| total.clone().min(l.into()));
    if wanted > max_facets.into() {
        return Err(Error::Budget {
            what: "facets to list".into(),
            limit: max_facets,
            estimate: Some(wanted.to_string()),
        });
    }
    let complex = Complex::new(p)?;
    let records: Vec<FacetRecord> = complex
        .facets()
        .take(limit.unwrap_or(usize::MAX))
        .map(|f| f.to_record())
        .collect();
    let text: String = records
        .iter()
        .map(|r| serde_json::to_string(r).expect("record serializes") + "\n")
        .collect();
    let results = json!({ "total": big(&total), "listed": records.len(), "facets": records });
    Ok(Output::new(params_json(p), results)
        .budget(json!({ "max_facets": max_facets }))
        .text(text))
}

pub fn hvector(
    a: usize,
    b: usize,
    t: usize,
    method: HMethod,
    budget: HBudget,
    certify: bool,
) -> Result<Output> {
    let p = checked(a, b, t)?;
    let r = HReport::compute(p, method, budget, certify)?;
    let results = json!({
        "method": method.name(),
        "h": bigs(r.h.coefficients()),
        "hilbert_series": r.series.to_string(),
        "pole_order": r.series.pole_order,
        "regularity": r.regularity,
        "degree": big(&r.degree),
        "symmetric": r.symmetric,
        "certified": r.certified,
    });
    let text = format!(
        "h = {}\nH(x) = {}\nregularity = {}\ndegree = {}\n",
        r.h, r.series, r.regularity, r.degree
    );
    Ok(Output::new(params_json(p), results)
        .budget(serde_json::to_value(budget).expect("budget serializes"))
        .text(text)
        .claim(r.certified != Some(false)))
}

pub fn regularity_cmd(
    a: usize,
    b: usize,
    t: usize,
    method: HMethod,
    budget: HBudget,
) -> Result<Output> {
    let p = checked(a, b, t)?;
    let r = regularity(p, method, budget)?;
    let results = serde_json::to_value(r).expect("report serializes");
    Ok(Output::new(params_json(p), results)
        .budget(serde_json::to_value(budget).expect("budget serializes"))
        .claim(r.holds))
}

pub fn shelling_certify(
    a: usize,
    b: usize,
    t: usize,
    max_facets: u64,
    check_extension: bool,
) -> Result<Output> {
    let p = checked(a, b, t)?;
    let order = shelling_order(
        p,
        ShellingOptions {
            max_facets,
            certify: false,
        },
    )?;
    let cert = certify_shelling(&order);
    let mut results = json!({
        "facets": cert.facets,
        "is_shelling": cert.is_shelling,
        "witness": cert.witness,
    });
    let mut holds = cert.is_shelling;
    if check_extension {
        let violation = order.preceq_violation();
        holds &= violation.is_none();
        results["linear_extension"] = json!(violation.is_none());
        results["extension_violation"] = json!(violation);
    }
    Ok(Output::new(params_json(p), results)
        .budget(json!({ "max_facets": max_facets }))
        .claim(holds))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Claim {
    /// The `(t+1)`-minors of the second and third unfoldings.
    Minors,
    /// The Hibi relations of `[2]×[a]×[b]` generate the 2-minor ideal;
    /// requires `t = 1`.
    Hibi,
}

pub fn groebner_check(
    a: usize,
    b: usize,
    t: usize,
    field: FieldKind,
    claim: Claim,
    certify_only: bool,
    budget: GroebnerBudget,
) -> Result<Output> {
    let p = checked(a, b, t)?;
    if claim == Claim::Hibi && t != 1 {
        return Err(Error::InvalidParams(
            "the Hibi presentation describes t = 1 only".into(),
        ));
    }
    let results = match field {
        FieldKind::Rationals => groebner_in(
            Ring::new(p.shape(), secant_core::groebner::Rationals)?,
            p,
            claim,
            certify_only,
            budget,
        )?,
        FieldKind::Prime(f) => {
            groebner_in(Ring::new(p.shape(), f)?, p, claim, certify_only, budget)?
        }
    };
    let holds = (results["verdict"] == "groebner" || results["verdict"] == "equal-ideals")
        && results.get("initial_ideal_matches") != Some(&json!(false));
    Ok(Output::new(params_json(p), results)
        .budget(serde_json::to_value(budget).expect("budget serializes"))
        .claim(holds))
}

fn groebner_in<F: Field>(
    ring: Ring<F>,
    p: SegreParams,
    claim: Claim,
    certify_only: bool,
    budget: GroebnerBudget,
) -> Result<Value> {
    if claim == Claim::Hibi {
        return hibi_in(ring, p, budget);
    }
    let gens = secant_generators(&ring, p.t() + 1);
    let check = is_groebner(&ring, &gens, budget)?;
    let mut v = json!({
        "claim": "minors",
        "instance": format!("({},{},{})", p.a(), p.b(), p.t()),
        "field": ring.field().name(),
        "generators": gens.len(),
        "verdict": if check.is_groebner() { "groebner" } else { "not-groebner" },
        "spairs_checked": check.spairs_checked,
        "spairs_skipped": check.spairs_skipped,
    });
    if let Some((i, j, rem)) = &check.failure {
        v["failing_pair"] = json!([i, j]);
        v["remainder"] = json!(ring.format(rem));
    }
    if !certify_only {
        if let Some(basis) = check.basis() {
            let shape = ring.shape();
            let chains = MonomialIdeal::from_sets(
                shape.num_variables(),
                Poset::new(shape).chain_sets(p.t() + 1),
            );
            let ini = initial_ideal(basis);
            v["initial_ideal_generators"] = json!(ini.len());
            v["chain_generators"] = json!(chains.len());
            v["initial_ideal_matches"] = json!(ini == chains);
        }
    }
    Ok(v)
}

/// Compares the reduced bases of the Hibi and 2-minor ideals.
fn hibi_in<F: Field>(ring: Ring<F>, p: SegreParams, budget: GroebnerBudget) -> Result<Value> {
    let hibi_gens = hibi_generators(&ring);
    let hibi = buchberger(&ring, &hibi_gens, budget)?;
    let minors = buchberger(&ring, &secant_generators(&ring, 2), budget)?;
    let equal = hibi.polys() == minors.polys();
    Ok(json!({
        "claim": "hibi",
        "instance": format!("({},{},{})", p.a(), p.b(), p.t()),
        "field": ring.field().name(),
        "generators": hibi_gens.len(),
        "verdict": if equal { "equal-ideals" } else { "different-ideals" },
        "basis_size": hibi.len(),
        "spairs_checked": hibi.spairs() + minors.spairs(),
    }))
}

pub fn chains(a: usize, b: usize, len: usize, limit: Option<usize>) -> Result<Output> {
    let shape = Shape::new(a, b)?;
    if len == 0 {
        return Err(Error::InvalidParams(
            "chain length must be at least 1".into(),
        ));
    }
    let poset = Poset::new(shape);
    let all = poset.enumerate_chains(len);
    let shown: Vec<Value> = all
        .iter()
        .take(limit.unwrap_or(usize::MAX))
        .map(|c| json!(c.iter().map(|g| [g.row, g.col]).collect::<Vec<_>>()))
        .collect();
    let text: String = std::iter::once(format!("count: {}\n", all.len()))
        .chain(all.iter().take(limit.unwrap_or(usize::MAX)).map(|c| {
            c.iter()
                .map(|g| g.variable(shape).to_string())
                .collect::<Vec<_>>()
                .join(" < ")
                + "\n"
        }))
        .collect();
    let results = json!({ "length": len, "count": all.len(), "longest": poset.longest_chain(poset.all()), "chains": shown });
    Ok(Output::new(shape_json(shape), results).text(text))
}

pub enum TensorSource {
    File(String),
    Sample {
        a: usize,
        b: usize,
        rank: usize,
        seed: u64,
        range: SampleRange,
    },
}

pub fn membership_cmd(source: TensorSource, t: usize) -> Result<Output> {
    let tensor = match &source {
        TensorSource::File(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
            Tensor3::from_json(&text)?
        }
        TensorSource::Sample {
            a,
            b,
            rank,
            seed,
            range,
        } => random_rank_tensor(Shape::new(*a, *b)?, *rank, *seed, *range),
    };
    let m = membership(&tensor, t)?;
    let mut results = json!({ "member": m.member, "rank2": m.rank2, "rank3": m.rank3 });
    if let Some(w) = &m.witness {
        results["witness_minor"] = json!({
            "unfolding": w.unfolding,
            "rows": w.rows,
            "cols": w.cols,
            "value": w.value.to_string(),
        });
    }
    let mut params = shape_json(tensor.shape());
    params["t"] = json!(t);
    if let TensorSource::Sample { rank, seed, .. } = source {
        params["sample_rank"] = json!(rank);
        params["seed"] = json!(seed);
        results["tensor"] = tensor.to_json();
    }
    Ok(Output::new(params, results))
}

pub fn render(
    a: usize,
    b: usize,
    t: usize,
    rank: usize,
    input: Option<&str>,
    max_facets: u64,
) -> Result<Output> {
    let p = checked(a, b, t)?;
    let complex = Complex::new(p)?;
    let (facet, rank): (Facet, Option<usize>) = match input {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
            let record: FacetRecord =
                serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            (Facet::from_record(p, &record)?, None)
        }
        None => {
            let order = shelling_order(
                p,
                ShellingOptions {
                    max_facets,
                    certify: false,
                },
            )?;
            if rank >= order.len() {
                return Err(Error::InvalidParams(format!(
                    "rank {rank} out of range; {} facets",
                    order.len()
                )));
            }
            (order.facet(rank), Some(rank))
        }
    };
    let grid = complex.render_p_prime(&facet)?;
    let results = json!({ "rank": rank, "facet": facet.to_record(), "grid": grid });
    Ok(Output::new(params_json(p), results).text(grid))
}

pub fn repro_cmd(config: ReproConfig, only: &[String], timing: bool) -> Result<Output> {
    let known: HashSet<&str> = repro::criteria().iter().map(|c| c.id).collect();
    for o in only {
        if !known.contains(o.to_ascii_uppercase().as_str()) {
            return Err(Error::InvalidParams(format!("unknown criterion {o}")));
        }
    }
    let results = repro::run(&config, only);
    let table = repro::format_table(&results, timing);
    let holds = repro::all_pass(&results);
    let rows: Vec<Value> = results
        .iter()
        .map(|r| json!({ "id": r.id, "title": r.title, "status": r.status, "detail": r.detail }))
        .collect();
    let passed = results.iter().filter(|r| r.status == Status::Pass).count();
    let params = json!({
        "seed": config.seed,
        "rank_samples": config.rank_samples,
        "dense_samples": config.dense_samples,
    });
    let body = json!({ "criteria": rows, "passed": passed, "total": results.len() });
    Ok(Output::new(params, body).text(table).claim(holds))
}
