//! Exact counting: binomials, Gessel–Viennot determinants, degrees.
//!
//! The degree of `σ_t(2,a,b)` (for `t < a`) is the number of facets of
//! `Δ_{t+1}`, i.e. the number of families of `t` vertex-disjoint paths
//! from `(1, b+h_i)` to `(a, h_i)`, summed over `1 <= h_1 < … < h_t <= b`.
//! For a fixed `h`-tuple that count is `det(g_ij)` with
//! `g_ij = C(a+b-h_j+h_i-1, a-1)`, the number of paths from `(1, b+h_i)`
//! to `(a, h_j)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::complex::{enumerate_paths, h_tuples};
use crate::error::{Error, Result};
use crate::linalg::bareiss_determinant;
use crate::params::SegreParams;
use crate::pointset::PointSet;

/// `C(n, k)`, zero when `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: &BigInt, k: &BigInt) -> BigInt {
    if n.is_negative() || k.is_negative() || k > n {
        return BigInt::zero();
    }
    let k = std::cmp::min(k.clone(), n - k);
    let k = k
        .to_u64()
        .expect("binomial lower index does not fit in u64");
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn binomial_u(n: i64, k: i64) -> BigInt {
    binomial(&BigInt::from(n), &BigInt::from(k))
}

/// Path-count matrix for one `h`-tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GvMatrix {
    pub h: Vec<usize>,
    pub entries: Vec<Vec<BigInt>>,
}

impl GvMatrix {
    pub fn new(params: SegreParams, h: &[usize]) -> Self {
        let (a, b) = (params.a() as i64, params.b() as i64);
        let entries = h
            .iter()
            .map(|&hi| {
                h.iter()
                    .map(|&hj| binomial_u(a + b - hj as i64 + hi as i64 - 1, a - 1))
                    .collect()
            })
            .collect();
        GvMatrix {
            h: h.to_vec(),
            entries,
        }
    }

    pub fn determinant(&self) -> BigInt {
        bareiss_determinant(&self.entries)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TupleDeterminant {
    pub h: Vec<usize>,
    pub determinant: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub degree: BigInt,
    pub per_tuple: Vec<TupleDeterminant>,
}

/// The degree together with each `h`-tuple's determinant.
pub fn degree_report(params: SegreParams) -> Result<DegreeReport> {
    params.require_path_regime()?;
    let per_tuple: Vec<TupleDeterminant> = h_tuples(params.b(), params.t())
        .into_iter()
        .map(|h| {
            let determinant = GvMatrix::new(params, &h).determinant();
            TupleDeterminant { h, determinant }
        })
        .collect();
    let degree = per_tuple.iter().map(|d| &d.determinant).sum();
    Ok(DegreeReport { degree, per_tuple })
}

/// Multiplicity of `R/I(a,b)^{t}`.
pub fn degree(params: SegreParams) -> Result<BigInt> {
    Ok(degree_report(params)?.degree)
}

/// Number of vertex-disjoint path families for one `h`-tuple, by direct
/// enumeration.
pub fn count_nonintersecting(params: SegreParams, h: &[usize]) -> Result<BigInt> {
    if h.is_empty() {
        return Err(Error::InvalidParams("empty h-tuple".into()));
    }
    for w in h.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::InvalidParams(format!(
                "h-tuple {h:?} must be strictly increasing"
            )));
        }
    }
    let shape = params.shape();
    let tables = h
        .iter()
        .map(|&x| enumerate_paths(shape, x))
        .collect::<Result<Vec<_>>>()?;
    let sets: Vec<Vec<PointSet>> = tables
        .iter()
        .map(|t| t.iter().map(|p| p.set()).collect())
        .collect();
    fn rec(sets: &[Vec<PointSet>], used: PointSet) -> u64 {
        match sets.split_first() {
            None => 1,
            Some((first, rest)) => first
                .iter()
                .filter(|s| s.is_disjoint(&used))
                .map(|s| rec(rest, used.union(*s)))
                .sum(),
        }
    }
    Ok(BigInt::from(rec(&sets, PointSet::EMPTY)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Dimension {
    /// Krull dimension `(a+b)t`.
    pub dimension: usize,
    /// `2ab - (a+b)t`.
    pub codimension: usize,
}

pub fn dimension(params: SegreParams) -> Result<Dimension> {
    params.require_path_regime()?;
    let dimension = params.dimension();
    Ok(Dimension {
        dimension,
        codimension: params.shape().num_variables() - dimension,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u64) -> BigInt {
        (1..=n).map(BigInt::from).product()
    }

    fn p(a: usize, b: usize, t: usize) -> SegreParams {
        SegreParams::new(a, b, t).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_u(3, 1), BigInt::from(3));
        assert_eq!(binomial_u(7, 0), BigInt::one());
        assert_eq!(
            binomial_u(11, 5),
            factorial(11) / (factorial(5) * factorial(6))
        );
        assert_eq!(binomial_u(11, 5), BigInt::from(462));
        assert_eq!(binomial_u(3, 4), BigInt::zero());
        assert_eq!(binomial_u(-1, 0), BigInt::zero());
        assert_eq!(binomial_u(5, -1), BigInt::zero());
        assert_eq!(binomial_u(200, 100).to_string().len(), 59);
    }

    #[test]
    fn gv_entries() {
        let m = GvMatrix::new(p(3, 3, 2), &[1, 3]);
        assert_eq!(
            m.entries,
            vec![
                vec![BigInt::from(10), BigInt::from(3)],
                vec![BigInt::from(21), BigInt::from(10)]
            ]
        );
        assert_eq!(m.determinant(), BigInt::from(37));
    }

    #[test]
    fn nonintersecting_counts() {
        assert_eq!(
            count_nonintersecting(p(3, 3, 2), &[1, 2]).unwrap(),
            BigInt::from(10)
        );
        assert_eq!(
            count_nonintersecting(p(3, 3, 2), &[1, 3]).unwrap(),
            BigInt::from(37)
        );
        assert_eq!(
            count_nonintersecting(p(3, 5, 1), &[4]).unwrap(),
            binomial_u(7, 2)
        );
        assert!(count_nonintersecting(p(3, 3, 2), &[2, 2]).is_err());
        for (a, b, t) in [(3, 4, 2), (4, 4, 3), (4, 5, 2), (5, 5, 3)] {
            for h in h_tuples(b, t) {
                assert_eq!(
                    count_nonintersecting(p(a, b, t), &h).unwrap(),
                    GvMatrix::new(p(a, b, t), &h).determinant(),
                    "({a},{b},{t}) h={h:?}"
                );
            }
        }
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(p(2, 2, 1)).unwrap(), BigInt::from(6));
        assert_eq!(degree(p(3, 3, 2)).unwrap(), BigInt::from(57));
        assert_eq!(degree(p(4, 4, 2)).unwrap(), BigInt::from(1830));
        assert_eq!(degree(p(6, 6, 3)).unwrap(), BigInt::from(28206234));
        assert!(matches!(
            degree(p(3, 4, 3)),
            Err(Error::UnsupportedRegime { .. })
        ));
        for a in 2..=8 {
            for b in a..=8 {
                let classical = factorial((a + b - 1) as u64)
                    / (factorial(a as u64 - 1) * factorial(b as u64 - 1));
                assert_eq!(degree(p(a, b, 1)).unwrap(), classical);
            }
        }
    }

    #[test]
    fn determinants_are_nonnegative() {
        for a in 2..=6 {
            for b in a..=7 {
                for t in 1..a {
                    for d in degree_report(p(a, b, t)).unwrap().per_tuple {
                        assert!(!d.determinant.is_negative());
                    }
                }
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(
            dimension(p(2, 2, 1)).unwrap(),
            Dimension {
                dimension: 4,
                codimension: 4
            }
        );
        assert_eq!(dimension(p(6, 6, 3)).unwrap().dimension, 36);
        assert_eq!(
            dimension(p(3, 3, 2)).unwrap(),
            Dimension {
                dimension: 12,
                codimension: 6
            }
        );
    }
}
