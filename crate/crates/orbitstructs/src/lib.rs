//! Orbit categories of p-subgroups and the counting identities around them:
//! Euler characteristics of plain, centralized and transporter orbit
//! categories, weightings from Brown posets of normalizer quotients, Webb's
//! identity and ideal decompositions of centralized Brown posets.

mod centralized;
mod check;
mod ideals;
mod local;
mod orbit;
mod theorem;

pub use centralized::{centralized_orbit_category_euler, CentralizedOrbitReport, OrbitVariant};
pub use check::{checks_json, ensure, Check};
pub use ideals::{ideal_decomposition, IdealDecomposition};
pub use local::{local_reduced_euler, p_singular_count};
pub use orbit::{
    elementary_abelian_coweighting, frobenius_brown_bridge, global_identity, orbit_category_euler, orbit_skeleton,
    webb_identity, BridgeReport, GlobalIdentityReport, OrbitCategoryEuler, OrbitSkeleton, SkeletonKind, WebbReport,
};
pub use theorem::{theorem1_verify, Theorem1Report, Theorem1Row};

#[derive(Debug, thiserror::Error)]
pub enum OrbitError {
    #[error("{name}: {left} != {right}")]
    CheckFailed { name: String, left: String, right: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Subgroup(#[from] subgroups::SubgroupError),
    #[error(transparent)]
    Equivariant(#[from] equivariant::EquivariantError),
    #[error(transparent)]
    Poset(#[from] posetcat::PosetError),
    #[error(transparent)]
    Group(#[from] permcore::Error),
}
