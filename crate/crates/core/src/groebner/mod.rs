//! Exact polynomial arithmetic over `Q` or `F_p` with the diagonal lex
//! order, unfolding minors, Hibi relations and Gröbner certification.

mod buchberger;
mod field;
mod ideal;
mod poly;
mod unfolding;

pub use buchberger::{
    buchberger, initial_ideal, is_groebner, reduce, s_polynomial, GroebnerBasis, GroebnerBudget,
    GroebnerCheck,
};
pub use field::{Field, FieldKind, PrimeField, Rationals};
pub use ideal::{divide_out_one_minus_x, MonomialIdeal};
pub use poly::{Monomial, Polynomial, Ring};
pub use unfolding::{
    hibi_generators, hibi_relation, secant_generators, subsets, unfolding_minors, Minor,
    SymbolicUnfolding, UnfoldingKind,
};
