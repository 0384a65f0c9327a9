use num_bigint::BigInt;
use num_traits::One;
use orbitstructs::{orbit_skeleton, OrbitError, SkeletonKind};
use permcore::{euler_phi, PermGroup};
use posetcat::{CategorySkeleton, EulerCharacteristic, Q};
use subgroups::{all_subgroups, is_cyclic, DEFAULT_FAMILY_CAP};

use crate::PiError;

/// `-chi~` of the orbit category of proper subgroups of K: `phi(|K|)/|K|`
/// for cyclic K and 0 otherwise, checked against the solved skeleton.
pub fn cyclic_orbit_coweight(k: &PermGroup) -> Result<Q, PiError> {
    let n = k.order() as u64;
    let formula = if is_cyclic(k, &k.whole()) { Q::new(BigInt::from(euler_phi(n)), BigInt::from(n)) } else { Q::from_integer(0.into()) };
    let proper = all_subgroups(k, DEFAULT_FAMILY_CAP)?.restrict_classes(|h| h.order() < k.order());
    let chi = if proper.is_empty() {
        Q::from_integer(0.into())
    } else {
        let sk: CategorySkeleton = orbit_skeleton(&proper, SkeletonKind::AllPSubgroups)?.skeleton;
        match sk.euler_characteristic()? {
            EulerCharacteristic::Defined(q) => q,
            EulerCharacteristic::Undefined => unreachable!("skeletons of orbit categories are triangular"),
        }
    };
    let solved = Q::one() - chi;
    if solved != formula {
        return Err(OrbitError::CheckFailed {
            name: format!("-chi~ of the proper orbit category of a group of order {n}"),
            left: solved.to_string(),
            right: formula.to_string(),
        }
        .into());
    }
    Ok(formula)
}

#[cfg(test)]
mod tests {
    use super::*;
    use permcore::cyclic;
    use posetcat::q;

    #[test]
    fn small_cases() {
        assert_eq!(cyclic_orbit_coweight(&cyclic(6).unwrap()).unwrap(), q(1, 3));
        assert_eq!(cyclic_orbit_coweight(&cyclic(1).unwrap()).unwrap(), q(1, 1));
        let v4 = permcore::group_by_name("V4").unwrap();
        assert_eq!(cyclic_orbit_coweight(&v4).unwrap(), q(0, 1));
    }
}
