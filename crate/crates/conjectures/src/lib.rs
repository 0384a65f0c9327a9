//! Checks of the Knörr-Robinson and Alperin weight conjectures against
//! bundled character degree data, the Artin-Hasse counts of p-singular
//! permutations, and the Gaussian multinomial identities.

mod awc;
mod degrees;
mod gaussian;
mod krc;
mod series;

pub use awc::{awc_assemble, AwcOutcome, AwcReport, AwcTerm, DegreeProvider};
pub use degrees::{builtin_degrees, parse_degree_data, z_p, CharacterDegreeData, DegreeLibrary};
pub use gaussian::{gaussian_identities, MAX_GAUSSIAN_M, gaussian_multinomial, ordered_partitions, GaussianReport, IntegerPolynomial};
pub use krc::{abelian_label, krc_check, AbelianColumn, KrcReport};
pub use series::{artin_hasse_counts, artin_hasse_counts_integral, MAX_SERIES_LENGTH};

#[derive(Debug, thiserror::Error)]
pub enum ConjectureError {
    #[error("invalid character degree data: {0}")]
    BadDegrees(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("internal cross-check failed: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Equivariant(#[from] equivariant::EquivariantError),
    #[error(transparent)]
    Subgroup(#[from] subgroups::SubgroupError),
    #[error(transparent)]
    Group(#[from] permcore::Error),
}
