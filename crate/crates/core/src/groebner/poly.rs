//! Dense-exponent polynomials in the `2ab` tensor variables under the
//! lexicographic order `x_{111} > x_{112} > … > x_{2ab}`.

use std::cmp::Ordering;
use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};
use crate::params::{Shape, MAX_VARIABLES};
use crate::pointset::PointSet;
use crate::poset::VariableId;

/// Exponent vector indexed by variable index. The derived `Ord` compares
/// exponents starting from the largest variable, which is exactly the lex
/// order on monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u8>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn from_set(nvars: usize, s: PointSet) -> Self {
        let mut e = vec![0u8; nvars];
        for i in s.iter() {
            e[i] = 1;
        }
        Monomial(e.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Support as a point set; `None` unless squarefree.
    pub fn to_set(&self) -> Option<PointSet> {
        if !self.is_squarefree() {
            return None;
        }
        Some(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e == 1)
                .map(|(i, _)| i)
                .collect(),
        )
    }

    pub fn display(&self, shape: Shape) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let v = VariableId::from_index(i, shape);
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Terms in increasing monomial order with nonzero coefficients; the
/// leading term is the last one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E: Clone> Polynomial<E> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing order.
    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&E> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, E)> {
        self.terms.pop()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }
}

/// Polynomial ring `K[x_{ijk}]` over the variables of a `(2, a, b)` tensor.
#[derive(Debug, Clone)]
pub struct Ring<F: Field> {
    shape: Shape,
    field: F,
}

impl<F: Field> Ring<F> {
    pub fn new(shape: Shape, field: F) -> Result<Self> {
        if shape.num_variables() > MAX_VARIABLES {
            return Err(Error::InvalidParams("too many variables".into()));
        }
        Ok(Ring { shape, field })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.shape.num_variables()
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (Monomial, F::Elem)>,
    ) -> Polynomial<F::Elem> {
        let mut v: Vec<(Monomial, F::Elem)> = terms.into_iter().collect();
        v.sort_by(|x, y| x.0.cmp(&y.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        Polynomial { terms: out }
    }

    pub fn var(&self, v: VariableId) -> Polynomial<F::Elem> {
        let mut e = vec![0u8; self.nvars()];
        e[v.index(self.shape)] = 1;
        Polynomial {
            terms: vec![(Monomial::from_exponents(e), self.field.one())],
        }
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(&c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: vec![(Monomial::one(self.nvars()), c)],
        }
    }

    /// Product of variables with coefficient `c`.
    pub fn term(&self, c: i64, vars: &[VariableId]) -> Polynomial<F::Elem> {
        let mut e = vec![0u8; self.nvars()];
        for v in vars {
            e[v.index(self.shape)] += 1;
        }
        self.from_terms([(Monomial::from_exponents(e), self.field.from_i64(c))])
    }

    pub fn add(&self, p: &Polynomial<F::Elem>, q: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let one = self.field.one();
        self.add_scaled(p, &one, &Monomial::one(self.nvars()), q)
    }

    pub fn sub(&self, p: &Polynomial<F::Elem>, q: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let minus_one = self.field.neg(&self.field.one());
        self.add_scaled(p, &minus_one, &Monomial::one(self.nvars()), q)
    }

    pub fn neg(&self, p: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        Polynomial {
            terms: p
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, p: &Polynomial<F::Elem>, c: &F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: p
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), self.field.mul(x, c)))
                .collect(),
        }
    }

    pub fn mul(&self, p: &Polynomial<F::Elem>, q: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let mut acc = Polynomial::zero();
        for (m, c) in &q.terms {
            acc = self.add_scaled(&acc, c, m, p);
        }
        acc
    }

    /// `p + c·m·q`, merging two sorted term lists.
    pub fn add_scaled(
        &self,
        p: &Polynomial<F::Elem>,
        c: &F::Elem,
        m: &Monomial,
        q: &Polynomial<F::Elem>,
    ) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return p.clone();
        }
        let mut out = Vec::with_capacity(p.terms.len() + q.terms.len());
        let mut shifted = q
            .terms
            .iter()
            .map(|(qm, qc)| (qm.mul(m), self.field.mul(qc, c)))
            .peekable();
        let mut left = p.terms.iter().peekable();
        loop {
            let ord = match (left.peek(), shifted.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some((lm, _)), Some((sm, _))) => lm.cmp(sm),
            };
            match ord {
                Ordering::Less => out.push(left.next().unwrap().clone()),
                Ordering::Greater => out.push(shifted.next().unwrap()),
                Ordering::Equal => {
                    let (lm, lc) = left.next().unwrap();
                    let (_, sc) = shifted.next().unwrap();
                    let s = self.field.add(lc, &sc);
                    if !self.field.is_zero(&s) {
                        out.push((lm.clone(), s));
                    }
                }
            }
        }
        Polynomial { terms: out }
    }

    /// Scales to leading coefficient one.
    pub fn monic(&self, p: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        match p.leading_coefficient() {
            None => Polynomial::zero(),
            Some(c) if self.field.is_one(c) => p.clone(),
            Some(c) => self.scale(p, &self.field.inv(c)),
        }
    }

    pub fn format(&self, p: &Polynomial<F::Elem>) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in p.terms.iter().rev().enumerate() {
            let neg_one = self.field.neg(&self.field.one());
            let mono = m.display(self.shape);
            let body = if self.field.is_one(c) {
                mono
            } else if *c == neg_one && self.field.characteristic() != 2 {
                format!("-{mono}")
            } else {
                format!("{}*{}", self.field.format(c), mono)
            };
            if k == 0 {
                s.push_str(&body);
            } else if let Some(rest) = body.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(&body);
            }
        }
        s
    }
}

impl<E: Clone> fmt::Display for Polynomial<E>
where
    E: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{:?}", m.exponents())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::{PrimeField, Rationals};
    use super::*;

    fn v(s: usize, i: usize, j: usize) -> VariableId {
        VariableId::new(s, i, j)
    }

    #[test]
    fn lex_order_on_variables() {
        let shape = Shape::new(2, 3).unwrap();
        let ring = Ring::new(shape, Rationals).unwrap();
        let lm = |p: &Polynomial<_>| p.leading_monomial().unwrap().clone();
        assert!(lm(&ring.var(v(1, 1, 1))) > lm(&ring.var(v(1, 1, 2))));
        assert!(lm(&ring.var(v(1, 2, 3))) > lm(&ring.var(v(2, 1, 1))));
        // x111*x222 > x112*x221 > x211*x212
        assert!(
            lm(&ring.term(1, &[v(1, 1, 1), v(2, 2, 2)]))
                > lm(&ring.term(1, &[v(1, 1, 2), v(1, 2, 1)]))
        );
        assert!(
            lm(&ring.term(1, &[v(1, 2, 3), v(1, 2, 3)]))
                > lm(&ring.term(1, &[v(1, 2, 3), v(2, 1, 1)]))
        );
    }

    #[test]
    fn arithmetic() {
        let shape = Shape::new(2, 2).unwrap();
        let ring = Ring::new(shape, Rationals).unwrap();
        let x = ring.var(v(1, 1, 1));
        let y = ring.var(v(2, 2, 2));
        let s = ring.add(&x, &y);
        let d = ring.sub(&x, &y);
        let prod = ring.mul(&s, &d);
        let expected = ring.sub(&ring.mul(&x, &x), &ring.mul(&y, &y));
        assert_eq!(prod, expected);
        assert!(ring.sub(&prod, &expected).is_zero());
        assert_eq!(ring.format(&d), "x111 - x222");
        assert_eq!(
            ring.format(&ring.scale(&d, &ring.field().from_i64(-3))),
            "-3*x111 + 3*x222"
        );
        let f2 = Ring::new(shape, PrimeField::new(2).unwrap()).unwrap();
        let sum = f2.add(&f2.var(v(1, 1, 1)), &f2.var(v(1, 1, 1)));
        assert!(sum.is_zero());
    }
}
