//! Equivariant Euler characteristics of subgroup posets with a group action:
//! commuting tuples, the counts `phi_r`, the characteristics `chi_r` by two
//! independent routes, Euler class functions and their Artin coefficients.

mod aposet;
mod artin;
mod chi;
mod classfn;
mod tuples;

pub use aposet::{BrownVariant, SubgroupAPoset};
pub use artin::{artin_decomposition, rational_classes, ArtinDecomposition, RationalClass};
pub use chi::{
    centralizer_euler_characteristics, chi_r, chi_r_by_abelian_subgroups, chi_r_by_recursion, chi_r_for_subgroup,
    euler_class_function, EquivariantChi,
};
pub use classfn::ClassFunction;
pub use tuples::{commuting_tuple_count, commuting_tuple_count_brute, phi_r, phi_r_brute, phi_r_by_sylow};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EquivariantError {
    #[error("internal cross-check failed: {0}")]
    Inconsistent(String),
    #[error("class function is not constant on rational classes: {0}")]
    NotRational(String),
    #[error("non-integral value: {0}")]
    NonIntegral(String),
    #[error("singular system: {0}")]
    Singular(String),
    #[error(transparent)]
    Subgroup(#[from] subgroups::SubgroupError),
    #[error(transparent)]
    Group(#[from] permcore::Error),
    #[error(transparent)]
    Poset(#[from] posetcat::PosetError),
}
