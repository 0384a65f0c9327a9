//! Dense permutation groups: elements are enumerated up front and addressed
//! by index, which keeps multiplication, conjugation and subgroup membership
//! cheap for groups up to about a million elements.

mod arith;
mod catalog;
mod classes;
mod group;
mod perm;
mod quotient;
mod subgroup;

pub use arith::{euler_phi, is_pi_number, is_prime, p_part, pi_part, prime_divisors};
pub use catalog::{
    builtin_catalog, cyclic, group_by_name, matrix_group_as_permutations, parse_catalog, CatalogEntry, MatrixKind,
};
pub use classes::ConjugacyData;
pub use group::{PermGroup, DEFAULT_ELEMENT_CAP};
pub use perm::{parse_generators, Perm};
pub use quotient::CosetAction;
pub use subgroup::{Membership, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("image list is not a permutation")]
    NotAPermutation,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("degree {0} too large")]
    DegreeOverflow(usize),
    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group has more than {cap} elements")]
    TooLarge { cap: usize },
    #[error("element not in group")]
    NotInGroup,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("subgroup is not a {0}-group")]
    NotAPGroup(u64),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("internal cross-check failed: {0}")]
    Inconsistent(String),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("only prime fields are supported, got q = {0}")]
    UnsupportedField(u64),
}
