//! Exact arithmetic: rationals, number fields, polynomials, row reduction.

pub mod bivariate;
pub mod field;
pub(crate) mod intpoly;
pub mod linalg;
pub mod multipoly;
pub mod rational;
pub mod roots_of_unity;
pub mod unipoly;

pub use bivariate::{resultant_t, BiPoly};
pub use field::{Field, FieldDescriptor, FieldElement};
pub use linalg::Echelon;
pub use multipoly::{resultant, MultiPoly};
pub use rational::{binomial, format_rational, parse_rational, rat, ratio, Rational};
pub use roots_of_unity::{
    is_root_of_unity, root_of_unity_order_bound, unit_root_probe, unit_root_witness,
};
pub use unipoly::{poly_gcd, poly_gcd_all, UniPoly};
