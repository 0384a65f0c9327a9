//! Subgroup families of permutation groups closed under conjugation:
//! p-subgroups, radical and elementary abelian filters, pi-subgroups,
//! abelian subgroups of bounded rank, class tables and acting groups.

mod enumerate;
mod family;
mod json;
mod pair;

pub use enumerate::{
    abelian_subgroups, all_subgroups, p_subgroups, pi_subgroups, prime_power_cyclic_generators, radical_p_subgroups,
    sylow_intersections,
};
pub use family::{abelian_rank, is_abelian, is_cyclic, is_elementary_abelian, SubgroupFamily, TableMode, DEFAULT_FAMILY_CAP};
pub use json::family_to_json;
pub use pair::GroupPair;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubgroupError {
    #[error("subgroup family exceeds the cap of {cap} members")]
    FamilyTooLarge { cap: usize },
    #[error("acting group does not normalize the group")]
    NotNormalizing,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal cross-check failed: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Group(#[from] permcore::Error),
    #[error(transparent)]
    Poset(#[from] posetcat::PosetError),
}
