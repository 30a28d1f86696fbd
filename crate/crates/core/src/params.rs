//! Validated tensor shapes `(2, a, b)` and secant parameters.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of variables `2ab` representable by [`crate::PointSet`].
pub const MAX_VARIABLES: usize = 128;

/// The shape `(2, a, b)` with `2 <= a <= b` and `2ab <= 128`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape {
    a: usize,
    b: usize,
}

impl Shape {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a < 2 {
            return Err(Error::InvalidParams(format!("a = {a} violates a >= 2")));
        }
        if a > b {
            return Err(Error::InvalidParams(format!(
                "a = {a} > b = {b} violates a <= b"
            )));
        }
        if 2 * a * b > MAX_VARIABLES {
            return Err(Error::InvalidParams(format!(
                "2ab = {} exceeds the supported {MAX_VARIABLES} variables",
                2 * a * b
            )));
        }
        Ok(Shape { a, b })
    }

    #[inline]
    pub fn a(&self) -> usize {
        self.a
    }

    #[inline]
    pub fn b(&self) -> usize {
        self.b
    }

    /// Number of variables `2ab`.
    #[inline]
    pub fn num_variables(&self) -> usize {
        2 * self.a * self.b
    }
}

/// A shape together with the secant index `t >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SegreParams {
    shape: Shape,
    t: usize,
}

impl SegreParams {
    pub fn new(a: usize, b: usize, t: usize) -> Result<Self> {
        let shape = Shape::new(a, b)?;
        Self::with_shape(shape, t)
    }

    pub fn with_shape(shape: Shape, t: usize) -> Result<Self> {
        if t < 1 {
            return Err(Error::InvalidParams("t = 0 violates t >= 1".into()));
        }
        Ok(SegreParams { shape, t })
    }

    #[inline]
    pub fn shape(&self) -> Shape {
        self.shape
    }

    #[inline]
    pub fn a(&self) -> usize {
        self.shape.a
    }

    #[inline]
    pub fn b(&self) -> usize {
        self.shape.b
    }

    #[inline]
    pub fn t(&self) -> usize {
        self.t
    }

    /// Checks `t < a`, the range where `Δ_{t+1}` is described by
    /// non-intersecting lattice paths.
    pub fn require_path_regime(&self) -> Result<()> {
        let (a, b, t) = (self.a(), self.b(), self.t);
        let bound = (2 * a).min(b);
        if t >= bound {
            return Err(Error::TrivialIdeal { t, bound });
        }
        if t >= a {
            return Err(Error::UnsupportedRegime { a, b, t });
        }
        Ok(())
    }

    /// Krull dimension `(a+b)t` of the coordinate ring (valid for `t < a`).
    #[inline]
    pub fn dimension(&self) -> usize {
        (self.a() + self.b()) * self.t
    }

    /// Number of vertices of every facet of `Δ_{t+1}`.
    #[inline]
    pub fn facet_size(&self) -> usize {
        self.dimension()
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(2,{},{})", self.a, self.b)
    }
}

impl std::fmt::Display for SegreParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(a,b,t)=({},{},{})", self.a(), self.b(), self.t)
    }
}
