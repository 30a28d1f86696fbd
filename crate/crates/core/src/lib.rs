//! Combinatorial and algebraic invariants of the secant varieties
//! `σ_t(2,a,b)` of the Segre variety `Seg(2,a,b)`.
//!
//! The crate is organised around the poset `P` on the `2ab` variable
//! positions and the simplicial complex `Δ_{t+1}` whose faces are the
//! subsets of `P` without chains of `t+1` elements:
//!
//! * [`poset`]: the order on `P`, chains, Mirsky decompositions and the
//!   lattice `[2]×[a]×[b]`.
//! * [`complex`]: lattice-path facets of `Δ_{t+1}`, facet tests and the
//!   `P′` rendering.
//! * [`counting`]: binomials, Gessel–Viennot determinants and degrees.
//! * [`shelling`]: the facet order, shelling certificates, h-vectors,
//!   Hilbert series and regularity.
//! * [`groebner`]: exact polynomials, unfolding minors, Hibi relations and
//!   Buchberger certification.
//! * [`tensor`]: exact rational tensors, unfoldings, rank and membership.
//! * [`repro`]: the acceptance checks shared by the test suite and the CLI.

pub mod complex;
pub mod counting;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod params;
pub mod pointset;
pub mod poset;
pub mod repro;
pub mod shelling;
pub mod tensor;

pub use complex::{Facet, Path};
pub use error::{Error, Result};
pub use params::{SegreParams, Shape};
pub use pointset::PointSet;
pub use poset::{GridPoint, LatticeElement, Poset, VariableId};
