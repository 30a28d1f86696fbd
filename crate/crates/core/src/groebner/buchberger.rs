//! Division, the Buchberger criterion and completion.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::field::Field;
use super::ideal::MonomialIdeal;
use super::poly::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};

/// Hard caps for Gröbner computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroebnerBudget {
    pub max_variables: usize,
    pub max_generators: usize,
    pub max_spairs: u64,
}

impl Default for GroebnerBudget {
    fn default() -> Self {
        GroebnerBudget {
            max_variables: 72,
            max_generators: 5000,
            max_spairs: 1_000_000,
        }
    }
}

impl GroebnerBudget {
    fn check_input(&self, nvars: usize, ngens: usize) -> Result<()> {
        if nvars > self.max_variables {
            return Err(Error::budget("variables", self.max_variables as u64));
        }
        if ngens > self.max_generators {
            return Err(Error::budget("generators", self.max_generators as u64));
        }
        Ok(())
    }
}

fn support(m: &Monomial) -> u128 {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |acc, (i, _)| acc | 1u128 << i)
}

/// Leading monomials of a divisor list with a support prefilter.
struct Leads {
    monos: Vec<Monomial>,
    masks: Vec<u128>,
}

impl Leads {
    fn new<E: Clone>(g: &[Polynomial<E>]) -> Self {
        let monos: Vec<Monomial> = g
            .iter()
            .map(|p| p.leading_monomial().expect("zero divisor").clone())
            .collect();
        let masks = monos.iter().map(support).collect();
        Leads { monos, masks }
    }

    /// First divisor whose leading monomial divides `m`.
    fn find(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mask = support(m);
        (0..self.monos.len())
            .find(|&i| Some(i) != skip && self.masks[i] & !mask == 0 && self.monos[i].divides(m))
    }
}

/// Normal form of `f` modulo `g`, reducing every term. The divisor is
/// always the first element of `g` whose leading monomial divides the
/// current term.
pub fn reduce<F: Field>(
    ring: &Ring<F>,
    f: &Polynomial<F::Elem>,
    g: &[Polynomial<F::Elem>],
) -> Polynomial<F::Elem> {
    let g: Vec<Polynomial<F::Elem>> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    reduce_with(ring, f, &g, &Leads::new(&g), None)
}

fn reduce_with<F: Field>(
    ring: &Ring<F>,
    f: &Polynomial<F::Elem>,
    g: &[Polynomial<F::Elem>],
    leads: &Leads,
    skip: Option<usize>,
) -> Polynomial<F::Elem> {
    let field = ring.field();
    let mut p = f.clone();
    let mut rest: Vec<(Monomial, F::Elem)> = Vec::new();
    while let Some((m, c)) = p.terms().last().cloned() {
        match leads.find(&m, skip) {
            Some(i) => {
                let q = m.quotient(&leads.monos[i]);
                let coef =
                    field.neg(&field.mul(&c, &field.inv(g[i].leading_coefficient().unwrap())));
                p = ring.add_scaled(&p, &coef, &q, &g[i]);
            }
            None => {
                p.pop_leading();
                rest.push((m, c));
            }
        }
    }
    ring.from_terms(rest)
}

pub fn s_polynomial<F: Field>(
    ring: &Ring<F>,
    f: &Polynomial<F::Elem>,
    g: &Polynomial<F::Elem>,
) -> Polynomial<F::Elem> {
    let field = ring.field();
    let (fm, gm) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = fm.lcm(gm);
    let fc = field.inv(f.leading_coefficient().unwrap());
    let gc = field.neg(&field.inv(g.leading_coefficient().unwrap()));
    let left = ring.add_scaled(&Polynomial::zero(), &fc, &l.quotient(fm), f);
    ring.add_scaled(&left, &gc, &l.quotient(gm), g)
}

/// Outcome of the Buchberger criterion.
#[derive(Debug, Clone)]
pub struct GroebnerCheck<E> {
    /// Pairs whose S-polynomial was reduced.
    pub spairs_checked: u64,
    /// Pairs skipped because their leading monomials are coprime.
    pub spairs_skipped: u64,
    /// First pair `(i, j)`, `i < j`, whose S-polynomial has a nonzero
    /// normal form, together with that remainder.
    pub failure: Option<(usize, usize, Polynomial<E>)>,
    basis: Option<GroebnerBasis<E>>,
}

impl<E: Clone> GroebnerCheck<E> {
    pub fn is_groebner(&self) -> bool {
        self.failure.is_none()
    }

    /// The certified basis, when the check passed.
    pub fn basis(&self) -> Option<&GroebnerBasis<E>> {
        self.basis.as_ref()
    }

    pub fn into_basis(self) -> Option<GroebnerBasis<E>> {
        self.basis
    }
}

/// Checks that every S-polynomial of `gens` reduces to zero. Pairs are
/// reduced in parallel against the fixed generator list; the reported
/// failure is the lexicographically first failing pair.
pub fn is_groebner<F: Field>(
    ring: &Ring<F>,
    gens: &[Polynomial<F::Elem>],
    budget: GroebnerBudget,
) -> Result<GroebnerCheck<F::Elem>> {
    let g: Vec<Polynomial<F::Elem>> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    budget.check_input(ring.nvars(), g.len())?;
    let leads = Leads::new(&g);
    let pairs: Vec<(usize, usize)> = (0..g.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| !leads.monos[i].is_coprime(&leads.monos[j]))
        .collect();
    let total = (g.len() * g.len().saturating_sub(1) / 2) as u64;
    let checked = pairs.len() as u64;
    if checked > budget.max_spairs {
        return Err(Error::Budget {
            what: "S-pairs".into(),
            limit: budget.max_spairs,
            estimate: Some(checked.to_string()),
        });
    }
    let mut sorted = pairs;
    sorted.sort_unstable();
    let failure = sorted
        .par_iter()
        .enumerate()
        .find_map_first(|(k, &(i, j))| {
            let s = s_polynomial(ring, &g[i], &g[j]);
            let r = reduce_with(ring, &s, &g, &leads, None);
            (!r.is_zero()).then_some((k, i, j, r))
        });
    Ok(match failure {
        Some((k, i, j, r)) => GroebnerCheck {
            spairs_checked: k as u64 + 1,
            spairs_skipped: total - checked,
            failure: Some((i, j, r)),
            basis: None,
        },
        None => GroebnerCheck {
            spairs_checked: checked,
            spairs_skipped: total - checked,
            failure: None,
            basis: Some(GroebnerBasis {
                polys: g,
                reduced: false,
                spairs: checked,
            }),
        },
    })
}

/// A generating set known to be a Gröbner basis, either certified by
/// [`is_groebner`] or produced by [`buchberger`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<E> {
    polys: Vec<Polynomial<E>>,
    reduced: bool,
    spairs: u64,
}

impl<E: Clone> GroebnerBasis<E> {
    pub fn polys(&self) -> &[Polynomial<E>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// S-pairs reduced while building or certifying this basis.
    pub fn spairs(&self) -> u64 {
        self.spairs
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_monomial().unwrap().clone())
            .collect()
    }
}

/// Minimal generators of the leading-term ideal.
pub fn initial_ideal<E: Clone>(basis: &GroebnerBasis<E>) -> MonomialIdeal {
    let nvars = basis
        .polys
        .first()
        .map_or(0, |p| p.leading_monomial().unwrap().nvars());
    MonomialIdeal::new(nvars, basis.leading_monomials())
}

/// Buchberger completion with the normal selection strategy (smallest lcm
/// by degree, then by the term order) and the product criterion. Returns
/// the reduced basis, monic and sorted by increasing leading monomial.
pub fn buchberger<F: Field>(
    ring: &Ring<F>,
    gens: &[Polynomial<F::Elem>],
    budget: GroebnerBudget,
) -> Result<GroebnerBasis<F::Elem>> {
    let mut g: Vec<Polynomial<F::Elem>> = Vec::new();
    for p in gens {
        if !p.is_zero() {
            let m = ring.monic(p);
            if !g.contains(&m) {
                g.push(m);
            }
        }
    }
    budget.check_input(ring.nvars(), g.len())?;
    let mut leads = Leads::new(&g);
    let mut queue: BTreeSet<(usize, Monomial, usize, usize)> = BTreeSet::new();
    let push_pairs = |queue: &mut BTreeSet<_>, leads: &Leads, j: usize| {
        for i in 0..j {
            let (mi, mj) = (&leads.monos[i], &leads.monos[j]);
            if !mi.is_coprime(mj) {
                let l = mi.lcm(mj);
                queue.insert((l.degree(), l, i, j));
            }
        }
    };
    for j in 0..g.len() {
        push_pairs(&mut queue, &leads, j);
    }
    let mut processed = 0u64;
    while let Some((_, _, i, j)) = queue.pop_first() {
        processed += 1;
        if processed > budget.max_spairs {
            return Err(Error::Budget {
                what: "S-pairs".into(),
                limit: budget.max_spairs,
                estimate: Some(format!(
                    "{} pairs queued, {} generators",
                    queue.len() + 1,
                    g.len()
                )),
            });
        }
        let s = s_polynomial(ring, &g[i], &g[j]);
        let r = reduce_with(ring, &s, &g, &leads, None);
        if r.is_zero() {
            continue;
        }
        g.push(ring.monic(&r));
        if g.len() > budget.max_generators {
            return Err(Error::budget("generators", budget.max_generators as u64));
        }
        leads = Leads::new(&g);
        push_pairs(&mut queue, &leads, g.len() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another kept leading monomial.
    let keep: Vec<bool> = (0..g.len())
        .map(|k| {
            let mk = &leads.monos[k];
            !(0..g.len())
                .any(|o| o != k && leads.monos[o].divides(mk) && (leads.monos[o] != *mk || o < k))
        })
        .collect();
    let minimal: Vec<Polynomial<F::Elem>> = g
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(p, _)| p)
        .collect();

    // Interreduce the tails.
    let leads = Leads::new(&minimal);
    let mut reduced: Vec<Polynomial<F::Elem>> = (0..minimal.len())
        .map(|k| ring.monic(&reduce_with(ring, &minimal[k], &minimal, &leads, Some(k))))
        .collect();
    reduced.sort_by(|x, y| x.leading_monomial().cmp(&y.leading_monomial()));
    Ok(GroebnerBasis {
        polys: reduced,
        reduced: true,
        spairs: processed,
    })
}
