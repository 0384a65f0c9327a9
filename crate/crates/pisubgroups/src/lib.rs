//! Posets and orbit categories of pi-subgroups for a set of primes pi:
//! weightings by Moebius sums and by the class-table system, the count of
//! pi-singular elements, and the divisibility of the weights.

mod cyclic;
mod weighting;

pub use cyclic::cyclic_orbit_coweight;
pub use weighting::{hio_divisibility, moebius_sum, pi_global_identity, pi_weighting, HioReport, PiGlobalReport, PiWeighting};

use permcore::{is_prime, PermGroup};
use subgroups::{pi_subgroups, SubgroupFamily};

#[derive(Debug, thiserror::Error)]
pub enum PiError {
    #[error("pi must be a nonempty set of primes")]
    BadPrimes,
    #[error(transparent)]
    Orbit(#[from] orbitstructs::OrbitError),
    #[error(transparent)]
    Subgroup(#[from] subgroups::SubgroupError),
    #[error(transparent)]
    Poset(#[from] posetcat::PosetError),
    #[error(transparent)]
    Group(#[from] permcore::Error),
}

/// A group with the family of its pi-subgroups.
pub struct PiContext<'g> {
    pub group: &'g PermGroup,
    /// sorted, without repetitions
    pub pi: Vec<u64>,
    pub family: SubgroupFamily<'g>,
    /// `|G_pi|`: elements whose order is a pi-number
    pub pi_singular: u64,
}

impl<'g> PiContext<'g> {
    pub fn new(group: &'g PermGroup, pi: &[u64], cap: usize) -> Result<Self, PiError> {
        let mut pi = pi.to_vec();
        pi.sort_unstable();
        pi.dedup();
        if pi.is_empty() || pi.iter().any(|&p| !is_prime(p)) {
            return Err(PiError::BadPrimes);
        }
        let family = pi_subgroups(group, &pi, cap)?;
        let pi_singular = group.count_pi_singular(&pi);
        Ok(PiContext { group, pi, family, pi_singular })
    }
}
