//! Fixtures shared by the benchmarks.

use secant_core::groebner::{secant_generators, Field, Polynomial, Rationals, Ring};
use secant_core::{SegreParams, Shape};

pub type QPoly = Polynomial<<Rationals as Field>::Elem>;

/// Instances small enough for every method, largest last.
pub const H_INSTANCES: [(usize, usize, usize); 4] = [(3, 3, 2), (3, 4, 2), (4, 4, 2), (4, 4, 3)];

pub const DEGREE_INSTANCES: [(usize, usize, usize); 3] = [(6, 6, 3), (7, 9, 5), (8, 8, 7)];

pub fn params(a: usize, b: usize, t: usize) -> SegreParams {
    SegreParams::new(a, b, t).expect("fixture parameters are valid")
}

/// The ring and the `(t+1)`-minor generators for `(a, b, t)` over `Q`.
pub fn minor_system(a: usize, b: usize, t: usize) -> (Ring<Rationals>, Vec<QPoly>) {
    let ring = Ring::new(Shape::new(a, b).expect("fixture shape"), Rationals).expect("ring");
    let gens = secant_generators(&ring, t + 1);
    (ring, gens)
}
