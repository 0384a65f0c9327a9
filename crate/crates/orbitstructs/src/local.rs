use equivariant::{BrownVariant, SubgroupAPoset};
use num_bigint::BigInt;
use permcore::{PermGroup, Subgroup};
use subgroups::GroupPair;

use crate::OrbitError;

/// Number of elements of p-power order in H, the identity included.
pub fn p_singular_count(g: &PermGroup, h: &Subgroup, p: u64) -> u64 {
    h.elements().iter().filter(|&&x| g.is_p_element(x, p)).count() as u64
}

/// `chi~(C_S(A))` for the Brown poset S of nonidentity p-subgroups of
/// `N_G(H)/H`, with A acting through the cosets. H must be A-invariant.
/// For H = 1 this is the centralized Brown poset of G itself.
pub fn local_reduced_euler(pair: &GroupPair<'_>, h: &Subgroup, p: u64, cap: usize) -> Result<BigInt, OrbitError> {
    if h.is_trivial() {
        return centralized_reduced(pair, p, cap);
    }
    let g = pair.group();
    let n = g.normalizer(h);
    let (q, perms) = pair.induced_on_quotient(&n, h)?;
    let perms = perms.into_iter().filter(|x| !x.is_identity()).collect();
    let qpair = GroupPair::new(&q.group, perms)?;
    centralized_reduced(&qpair, p, cap)
}

fn centralized_reduced(pair: &GroupPair<'_>, p: u64, cap: usize) -> Result<BigInt, OrbitError> {
    let ap = SubgroupAPoset::brown(pair, p, BrownVariant::Radical, cap)?;
    Ok(ap.centralized_euler(&pair.acting().whole())? - 1)
}

/// G acting trivially on itself.
pub(crate) fn trivial_pair(g: &PermGroup) -> GroupPair<'_> {
    GroupPair::from_elements(g, &[])
}

/// A subgroup as a permutation group in its own right.
pub(crate) fn as_group(g: &PermGroup, h: &Subgroup) -> Result<PermGroup, OrbitError> {
    let gens = h.generators().iter().filter(|&&x| x != 0).map(|&x| g.element(x)).collect();
    Ok(PermGroup::new(g.degree(), gens)?)
}
