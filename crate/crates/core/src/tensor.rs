//! Exact rational `2 × a × b` tensors, their unfoldings and membership in
//! the zero set of the secant ideal.
//!
//! A tensor lies on the zero set of `I(a,b)^{t}` exactly when its second
//! and third unfoldings have rank at most `t`. Over `Q` such a point need
//! not be a sum of `t` rational rank-one tensors; [`membership`] decides
//! vanishing of the ideal only.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::groebner::{Polynomial, Rationals, Ring};
use crate::linalg::{bareiss_determinant, clear_denominators, integer_rank_profile};
use crate::params::Shape;
use crate::poset::VariableId;

/// Dense tensor with entry `x_{sij}` stored at the variable index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    shape: Shape,
    entries: Vec<BigRational>,
}

impl Tensor3 {
    pub fn zeros(shape: Shape) -> Self {
        Tensor3 {
            shape,
            entries: vec![BigRational::zero(); shape.num_variables()],
        }
    }

    pub fn from_fn(shape: Shape, mut f: impl FnMut(usize, usize, usize) -> BigRational) -> Self {
        let entries = (0..shape.num_variables())
            .map(|x| {
                let v = VariableId::from_index(x, shape);
                f(v.slice, v.second, v.third)
            })
            .collect();
        Tensor3 { shape, entries }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// Entry `x_{sij}`, 1-based.
    pub fn get(&self, s: usize, i: usize, j: usize) -> &BigRational {
        &self.entries[VariableId::new(s, i, j).index(self.shape)]
    }

    pub fn set(&mut self, s: usize, i: usize, j: usize, value: BigRational) {
        let k = VariableId::new(s, i, j).index(self.shape);
        self.entries[k] = value;
    }

    /// Entries in variable order `x_{111}, x_{112}, …, x_{2ab}`.
    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn add(&self, other: &Tensor3) -> Result<Tensor3> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(format!(
                "{} vs {}",
                self.shape, other.shape
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| x + y)
            .collect();
        Ok(Tensor3 {
            shape: self.shape,
            entries,
        })
    }

    /// `u ⊗ v ⊗ w` with `|u| = 2`, `|v| = a`, `|w| = b`.
    pub fn outer(u: &[BigRational], v: &[BigRational], w: &[BigRational]) -> Result<Tensor3> {
        if u.len() != 2 {
            return Err(Error::ShapeMismatch(format!(
                "first factor has length {}, expected 2",
                u.len()
            )));
        }
        let shape = Shape::new(v.len(), w.len())?;
        Ok(Tensor3::from_fn(shape, |s, i, j| {
            &u[s - 1] * &v[i - 1] * &w[j - 1]
        }))
    }

    /// Parses either a nested slice-major array `[[[x111, …], …], [[x211, …], …]]`
    /// or `{"shape": [2, a, b], "entries": …}` with nested or flat entries.
    /// Scalars are integers or strings `"p/q"`.
    pub fn from_json(text: &str) -> Result<Tensor3> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        match &value {
            Value::Array(_) => parse_nested(&value),
            Value::Object(obj) => {
                let shape = obj
                    .get("shape")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Parse("missing \"shape\"".into()))?;
                let dims: Vec<usize> = shape
                    .iter()
                    .map(|d| {
                        d.as_u64()
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Parse("bad shape entry".into()))
                    })
                    .collect::<Result<_>>()?;
                if dims.len() != 3 || dims[0] != 2 {
                    return Err(Error::Parse(format!("shape {dims:?} is not [2, a, b]")));
                }
                let shape = Shape::new(dims[1], dims[2])?;
                let entries = obj
                    .get("entries")
                    .ok_or_else(|| Error::Parse("missing \"entries\"".into()))?;
                let t = match entries {
                    Value::Array(items) if items.iter().all(|v| !v.is_array()) => {
                        if items.len() != shape.num_variables() {
                            return Err(Error::ShapeMismatch(format!(
                                "{} flat entries for shape {shape}",
                                items.len()
                            )));
                        }
                        let entries = items.iter().map(parse_scalar).collect::<Result<_>>()?;
                        Tensor3 { shape, entries }
                    }
                    _ => parse_nested(entries)?,
                };
                if t.shape != shape {
                    return Err(Error::ShapeMismatch(format!(
                        "entries have shape {}, declared {shape}",
                        t.shape
                    )));
                }
                Ok(t)
            }
            _ => Err(Error::Parse("expected an array or an object".into())),
        }
    }

    /// `{"shape": [2, a, b], "entries": nested}` with integer entries
    /// written as numbers and the rest as `"p/q"`.
    pub fn to_json(&self) -> Value {
        let nested: Vec<Value> = (1..=2)
            .map(|s| {
                Value::Array(
                    (1..=self.shape.a())
                        .map(|i| {
                            Value::Array(
                                (1..=self.shape.b())
                                    .map(|j| scalar_json(self.get(s, i, j)))
                                    .collect(),
                            )
                        })
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({ "shape": [2, self.shape.a(), self.shape.b()], "entries": nested })
    }
}

fn scalar_json(x: &BigRational) -> Value {
    if x.is_integer() {
        if let Ok(v) = i64::try_from(x.numer()) {
            return Value::from(v);
        }
    }
    Value::String(x.to_string())
}

fn parse_scalar(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::Parse(format!("{n} is not an integer; use \"p/q\"")))?;
            Ok(BigRational::from_integer(BigInt::from(i)))
        }
        Value::String(s) => {
            let s = s.trim();
            let parsed = match s.split_once('/') {
                Some((p, q)) => {
                    let p: BigInt = p
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
                    let q: BigInt = q
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
                    if q.is_zero() {
                        return Err(Error::Parse(format!("zero denominator in {s:?}")));
                    }
                    BigRational::new(p, q)
                }
                None => BigRational::from_integer(
                    s.parse()
                        .map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?,
                ),
            };
            Ok(parsed)
        }
        _ => Err(Error::Parse(format!("bad scalar {v}"))),
    }
}

fn parse_nested(v: &Value) -> Result<Tensor3> {
    let bad = || Error::Parse("nested entries must be a 2 x a x b array".into());
    let slices = v.as_array().ok_or_else(bad)?;
    if slices.len() != 2 {
        return Err(Error::ShapeMismatch(format!(
            "{} slices, expected 2",
            slices.len()
        )));
    }
    let rows: Vec<&Vec<Value>> = slices
        .iter()
        .map(|s| s.as_array().ok_or_else(bad))
        .collect::<Result<_>>()?;
    let a = rows[0].len();
    let b = rows[0]
        .first()
        .and_then(Value::as_array)
        .map_or(0, Vec::len);
    let shape = Shape::new(a, b)?;
    let mut t = Tensor3::zeros(shape);
    for (s, slice) in rows.iter().enumerate() {
        if slice.len() != a {
            return Err(Error::ShapeMismatch("slices of different heights".into()));
        }
        for (i, row) in slice.iter().enumerate() {
            let row = row.as_array().ok_or_else(bad)?;
            if row.len() != b {
                return Err(Error::ShapeMismatch("rows of different lengths".into()));
            }
            for (j, x) in row.iter().enumerate() {
                t.set(s + 1, i + 1, j + 1, parse_scalar(x)?);
            }
        }
    }
    Ok(t)
}

/// A rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigRational>>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Vec<BigRational>>) -> Result<Self> {
        if data.len() != rows || data.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!("data is not {rows} x {cols}")));
        }
        Ok(ExactMatrix { rows, cols, data })
    }

    pub fn from_i64(data: &[&[i64]]) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        let data = data
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect();
        ExactMatrix::new(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r][c]
    }

    pub fn data(&self) -> &[Vec<BigRational>] {
        &self.data
    }

    pub fn rank(&self) -> usize {
        integer_rank_profile(&clear_denominators(&self.data), self.cols).rank
    }

    /// Determinant of the submatrix on 0-based `rows` and `cols`.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> BigRational {
        let sub: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|&r| cols.iter().map(|&c| self.data[r][c].clone()).collect())
            .collect();
        let scaled = clear_denominators(&sub);
        let mut scale = BigRational::one();
        for (orig, ints) in sub.iter().zip(&scaled) {
            // each row was multiplied by ints[k] / orig[k] for any nonzero entry
            if let Some(k) = orig.iter().position(|x| !x.is_zero()) {
                scale *= BigRational::from_integer(ints[k].clone()) / &orig[k];
            }
        }
        BigRational::from_integer(bareiss_determinant(&scaled)) / scale
    }

    /// The first `k` rows and columns of the elimination pivots, which span
    /// a nonsingular `k × k` submatrix for every `k <= rank`.
    fn pivots(&self) -> (Vec<usize>, Vec<usize>) {
        let p = integer_rank_profile(&clear_denominators(&self.data), self.cols);
        (p.pivot_rows, p.pivot_cols)
    }
}

/// Flattening with rows indexed by the `k`-th tensor index and columns by
/// the other two in lexicographic order: `k = 1` is `2 × ab`, `k = 2` is
/// `[X | Y]` and `k = 3` is `[Xᵀ | Yᵀ]`.
pub fn unfold(t: &Tensor3, k: usize) -> Result<ExactMatrix> {
    let (a, b) = (t.shape.a(), t.shape.b());
    let data: Vec<Vec<BigRational>> = match k {
        1 => (1..=2)
            .map(|s| {
                (1..=a)
                    .flat_map(|i| (1..=b).map(move |j| (i, j)))
                    .map(|(i, j)| t.get(s, i, j).clone())
                    .collect()
            })
            .collect(),
        2 => (1..=a)
            .map(|i| {
                (1..=2)
                    .flat_map(|s| (1..=b).map(move |j| (s, j)))
                    .map(|(s, j)| t.get(s, i, j).clone())
                    .collect()
            })
            .collect(),
        3 => (1..=b)
            .map(|j| {
                (1..=2)
                    .flat_map(|s| (1..=a).map(move |i| (s, i)))
                    .map(|(s, i)| t.get(s, i, j).clone())
                    .collect()
            })
            .collect(),
        _ => {
            return Err(Error::InvalidParams(format!(
                "unfolding index {k} not in 1..=3"
            )))
        }
    };
    let rows = data.len();
    let cols = data[0].len();
    ExactMatrix::new(rows, cols, data)
}

/// Inverse of [`unfold`].
pub fn fold(m: &ExactMatrix, k: usize, shape: Shape) -> Result<Tensor3> {
    let (a, b) = (shape.a(), shape.b());
    let expected = match k {
        1 => (2, a * b),
        2 => (a, 2 * b),
        3 => (b, 2 * a),
        _ => {
            return Err(Error::InvalidParams(format!(
                "unfolding index {k} not in 1..=3"
            )))
        }
    };
    if (m.rows, m.cols) != expected {
        return Err(Error::ShapeMismatch(format!(
            "{} x {} matrix cannot be unfolding {k} of shape {shape}",
            m.rows, m.cols
        )));
    }
    Ok(Tensor3::from_fn(shape, |s, i, j| {
        let (r, c) = match k {
            1 => (s - 1, (i - 1) * b + j - 1),
            2 => (i - 1, (s - 1) * b + j - 1),
            _ => (j - 1, (s - 1) * a + i - 1),
        };
        m.data[r][c].clone()
    }))
}

pub fn rank(m: &ExactMatrix) -> usize {
    m.rank()
}

/// Inclusive range for sampled integer entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SampleRange {
    pub low: i64,
    pub high: i64,
}

impl Default for SampleRange {
    fn default() -> Self {
        SampleRange { low: -10, high: 10 }
    }
}

fn sample_vec(rng: &mut ChaCha8Rng, n: usize, range: SampleRange) -> Vec<BigRational> {
    (0..n)
        .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(range.low..=range.high))))
        .collect()
}

/// Sum of `r` outer products with integer factors drawn uniformly from
/// `range`, deterministic in `seed`.
pub fn random_rank_tensor(shape: Shape, r: usize, seed: u64, range: SampleRange) -> Tensor3 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tensor3::zeros(shape);
    for _ in 0..r {
        let u = sample_vec(&mut rng, 2, range);
        let v = sample_vec(&mut rng, shape.a(), range);
        let w = sample_vec(&mut rng, shape.b(), range);
        t = t
            .add(&Tensor3::outer(&u, &v, &w).expect("factor lengths match the shape"))
            .unwrap();
    }
    t
}

/// Independent uniform integer entries.
pub fn random_dense_tensor(shape: Shape, seed: u64, range: SampleRange) -> Tensor3 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = sample_vec(&mut rng, shape.num_variables(), range);
    Tensor3 { shape, entries }
}

/// A nonvanishing minor of an unfolding. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessMinor {
    pub unfolding: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub rank2: usize,
    pub rank3: usize,
    pub witness: Option<WitnessMinor>,
}

/// Whether every `(t+1)`-minor of both unfoldings vanishes at `t`. On
/// failure the certificate carries one nonzero `(t+1)`-minor.
pub fn membership(tensor: &Tensor3, t: usize) -> Result<Membership> {
    if t == 0 {
        return Err(Error::InvalidParams("t must be at least 1".into()));
    }
    let m2 = unfold(tensor, 2)?;
    let m3 = unfold(tensor, 3)?;
    let (rank2, rank3) = (m2.rank(), m3.rank());
    let member = rank2 <= t && rank3 <= t;
    let witness = if member {
        None
    } else {
        let (k, m) = if rank2 > t { (2, &m2) } else { (3, &m3) };
        let (pr, pc) = m.pivots();
        let mut rows = pr[..=t].to_vec();
        let cols = pc[..=t].to_vec();
        rows.sort_unstable();
        let value = m.minor(&rows, &cols);
        assert!(!value.is_zero(), "pivot minor vanished");
        Some(WitnessMinor {
            unfolding: k,
            rows,
            cols,
            value,
        })
    };
    Ok(Membership {
        member,
        rank2,
        rank3,
        witness,
    })
}

/// Substitutes the tensor entries for the variables.
pub fn evaluate(
    ring: &Ring<Rationals>,
    f: &Polynomial<BigRational>,
    tensor: &Tensor3,
) -> Result<BigRational> {
    if ring.shape() != tensor.shape {
        return Err(Error::ShapeMismatch(format!(
            "ring of shape {} at a tensor of shape {}",
            ring.shape(),
            tensor.shape
        )));
    }
    let mut total = BigRational::zero();
    for (m, c) in f.terms() {
        if m.nvars() != tensor.entries.len() {
            return Err(Error::ShapeMismatch(
                "polynomial from a different ring".into(),
            ));
        }
        let mut term = c.clone();
        for (x, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                term *= &tensor.entries[x];
            }
        }
        total += term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{hibi_generators, secant_generators, Field};

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    fn labelled(shape: Shape) -> Tensor3 {
        // x_{sij} = 100 s + 10 i + j
        Tensor3::from_fn(shape, |s, i, j| q((100 * s + 10 * i + j) as i64))
    }

    #[test]
    fn unfolding_layouts() {
        let t = labelled(Shape::new(3, 3).unwrap());
        let m1 = unfold(&t, 1).unwrap();
        assert_eq!((m1.rows(), m1.cols()), (2, 9));
        let row: Vec<BigRational> = [111, 112, 113, 121].iter().map(|&x| q(x)).collect();
        assert_eq!(&m1.data()[0][..4], &row[..]);
        let m2 = unfold(&t, 2).unwrap();
        assert_eq!((m2.rows(), m2.cols()), (3, 6));
        let row: Vec<BigRational> = [121, 122, 123, 221, 222, 223]
            .iter()
            .map(|&x| q(x))
            .collect();
        assert_eq!(m2.data()[1], row);
        let m3 = unfold(&t, 3).unwrap();
        // entry (j, a+i) = x_{2ij}
        assert_eq!(m3.get(0, 3 + 1), &q(221));
        assert_eq!(m3.get(2, 1), &q(123));
        assert!(unfold(&t, 4).is_err());
    }

    #[test]
    fn fold_round_trip() {
        let shape = Shape::new(2, 3).unwrap();
        let t = random_dense_tensor(shape, 7, SampleRange::default());
        for k in 1..=3 {
            assert_eq!(fold(&unfold(&t, k).unwrap(), k, shape).unwrap(), t);
        }
        assert!(fold(&unfold(&t, 2).unwrap(), 3, shape).is_err());
    }

    #[test]
    fn ranks() {
        assert_eq!(
            ExactMatrix::from_i64(&[&[0, 0], &[0, 0]]).unwrap().rank(),
            0
        );
        assert_eq!(
            ExactMatrix::from_i64(&[&[2, 4, -6], &[1, 2, -3]])
                .unwrap()
                .rank(),
            1
        );
        let m = unfold(
            &random_dense_tensor(Shape::new(3, 3).unwrap(), 1, SampleRange::default()),
            2,
        )
        .unwrap();
        assert_eq!(m.rank(), 3);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let m = ExactMatrix::new(2, 2, vec![vec![half.clone(), q(1)], vec![q(1), q(2)]]).unwrap();
        assert_eq!(m.rank(), 1);
        let m = ExactMatrix::new(2, 2, vec![vec![half.clone(), q(3)], vec![q(1), half]]).unwrap();
        // 1/4 - 3
        assert_eq!(
            m.minor(&[0, 1], &[0, 1]),
            BigRational::new(BigInt::from(-11), BigInt::from(4))
        );
    }

    #[test]
    fn sampling_is_deterministic() {
        let shape = Shape::new(3, 4).unwrap();
        let range = SampleRange::default();
        assert_eq!(
            random_rank_tensor(shape, 2, 5, range),
            random_rank_tensor(shape, 2, 5, range)
        );
        assert_ne!(
            random_rank_tensor(shape, 2, 5, range),
            random_rank_tensor(shape, 2, 6, range)
        );
        let t = random_rank_tensor(shape, 1, 3, range);
        for k in 1..=3 {
            assert!(unfold(&t, k).unwrap().rank() <= 1);
        }
    }

    #[test]
    fn membership_decisions() {
        let shape = Shape::new(3, 3).unwrap();
        let t = random_rank_tensor(shape, 2, 11, SampleRange::default());
        let m = membership(&t, 2).unwrap();
        assert!(m.member && m.witness.is_none());
        let dense = random_dense_tensor(shape, 11, SampleRange::default());
        let m = membership(&dense, 2).unwrap();
        assert!(!m.member);
        let w = m.witness.unwrap();
        assert_eq!(w.rows.len(), 3);
        let u = unfold(&dense, w.unfolding).unwrap();
        assert_eq!(u.minor(&w.rows, &w.cols), w.value);
        assert!(!w.value.is_zero());
        // t >= min(2a, b) = 3
        assert!(membership(&dense, 3).unwrap().member);
        assert!(membership(&dense, 0).is_err());
    }

    #[test]
    fn evaluation() {
        let shape = Shape::new(2, 3).unwrap();
        let ring = Ring::new(shape, Rationals).unwrap();
        let t = random_rank_tensor(shape, 1, 2, SampleRange::default());
        for f in hibi_generators(&ring)
            .iter()
            .chain(&secant_generators(&ring, 2))
        {
            assert!(evaluate(&ring, f, &t).unwrap().is_zero());
        }
        let c = ring.constant(ring.field().from_i64(-7));
        assert_eq!(evaluate(&ring, &c, &t).unwrap(), q(-7));
        let other = Tensor3::zeros(Shape::new(2, 2).unwrap());
        assert!(evaluate(&ring, &c, &other).is_err());
    }

    #[test]
    fn json_formats() {
        let nested = "[[[1, 2, 3], [4, 5, 6]], [[\"1/2\", 0, -1], [7, 8, \"9\"]]]";
        let t = Tensor3::from_json(nested).unwrap();
        assert_eq!(t.shape(), Shape::new(2, 3).unwrap());
        assert_eq!(
            t.get(2, 1, 1),
            &BigRational::new(BigInt::from(1), BigInt::from(2))
        );
        let flat = r#"{"shape": [2, 2, 3], "entries": [1, 2, 3, 4, 5, 6, "1/2", 0, -1, 7, 8, 9]}"#;
        assert_eq!(Tensor3::from_json(flat).unwrap(), t);
        let round = Tensor3::from_json(&t.to_json().to_string()).unwrap();
        assert_eq!(round, t);
        assert!(Tensor3::from_json("[[[1]]]").is_err());
        assert!(Tensor3::from_json(r#"{"shape": [2, 2, 3], "entries": [1, 2]}"#).is_err());
        assert!(Tensor3::from_json(r#"[[[1, "1/0"], [1, 1]], [[1, 1], [1, 1]]]"#).is_err());
        assert!(Tensor3::from_json(r#"[[[1.5, 1], [1, 1]], [[1, 1], [1, 1]]]"#).is_err());
    }
}
