//! Finite posets and finite EI-category skeletons with exact Moebius
//! functions, weightings, coweightings and Euler characteristics.

mod action;
mod category;
mod json;
mod poset;
mod rational;

pub use action::{OrbitWeighting, Orbits, PosetAction, QuotientDeltaEuler};
pub use category::{sum_q, CategorySkeleton, EulerCharacteristic};
pub use json::{fractions_json, poset_to_json};
pub use poset::{DeltaSet, FinitePoset};
pub use rational::{fmt_q, inverse, parse_q, q, qi, solve, to_integer, Solution, Q};

pub use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("relation is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive: {0} <= {1} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("map is not an order automorphism")]
    NotAutomorphism,
    #[error("invalid category skeleton: {0}")]
    InvalidSkeleton(String),
    #[error("internal cross-check failed: {0}")]
    Inconsistent(String),
}
