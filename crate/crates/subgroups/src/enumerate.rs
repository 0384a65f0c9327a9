use permcore::{is_pi_number, is_prime, Membership, PermGroup, Subgroup};

use crate::family::{abelian_rank, FamilyBuilder, SubgroupFamily};
use crate::SubgroupError;

fn check_prime(p: u64) -> Result<(), SubgroupError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(permcore::Error::NotPrime(p).into())
    }
}

/// One generator for each nontrivial cyclic subgroup of prime-power order:
/// the least element among the generators of that cyclic subgroup.
pub fn prime_power_cyclic_generators(g: &PermGroup) -> Vec<u32> {
    let mut out = Vec::new();
    for x in g.elements().skip(1) {
        let o = g.element_order(x);
        if permcore::prime_divisors(o).len() != 1 {
            continue;
        }
        let p = permcore::prime_divisors(o)[0];
        // generators of <x> are x^k with p not dividing k
        let mut y = x;
        let mut least = x;
        for k in 1..o {
            if k > 1 {
                y = g.mul(y, x);
            }
            if k % p != 0 {
                least = least.min(y);
            }
        }
        if least == x {
            out.push(x);
        }
    }
    out
}

/// All p-subgroups (the trivial subgroup included), by adjoining to each
/// class representative H the elements x of N_G(H) - H with x^p in H.
pub fn p_subgroups(g: &PermGroup, p: u64, cap: usize) -> Result<SubgroupFamily<'_>, SubgroupError> {
    check_prime(p)?;
    let mut b = FamilyBuilder::new(g, cap);
    b.insert_class(g.trivial())?;
    let mut c = 0;
    while c < b.class_count() {
        let h = b.some_member(c).clone();
        c += 1;
        let n = g.normalizer(&h);
        let mut covered = Membership::new(g.order(), h.elements());
        for &x in n.elements() {
            if covered.contains(x) || !g.is_p_element(x, p) || !h.contains(g.pow(x, p)) {
                continue;
            }
            let k = g.join_element(&h, x);
            for &e in k.elements() {
                covered.insert(e);
            }
            b.insert_class(k)?;
        }
    }
    Ok(b.finish())
}

/// Breadth-first closure over class representatives, adjoining one cyclic
/// subgroup at a time and keeping results that pass `accept`.
fn adjoin_closure<'g>(
    g: &'g PermGroup,
    candidates: &[u32],
    allowed: impl Fn(&Subgroup, u32) -> bool,
    accept: impl Fn(&Subgroup) -> bool,
    limit: usize,
    cap: usize,
) -> Result<SubgroupFamily<'g>, SubgroupError> {
    let mut b = FamilyBuilder::new(g, cap);
    b.insert_class(g.trivial())?;
    let mut c = 0;
    while c < b.class_count() {
        let h = b.some_member(c).clone();
        c += 1;
        for &x in candidates {
            if h.contains(x) || !allowed(&h, x) {
                continue;
            }
            let Some(k) = g.join_element_bounded(&h, x, limit) else { continue };
            if accept(&k) {
                b.insert_class(k)?;
            }
        }
    }
    Ok(b.finish())
}

/// All subgroups whose order involves only primes in `pi`.
pub fn pi_subgroups<'g>(g: &'g PermGroup, pi: &[u64], cap: usize) -> Result<SubgroupFamily<'g>, SubgroupError> {
    for &p in pi {
        check_prime(p)?;
    }
    let cands: Vec<u32> = prime_power_cyclic_generators(g)
        .into_iter()
        .filter(|&x| is_pi_number(g.element_order(x), pi))
        .collect();
    // a pi-subgroup has order dividing the pi-part of |G|
    let limit = permcore::pi_part(g.order() as u64, pi) as usize;
    adjoin_closure(g, &cands, |_, _| true, |k| is_pi_number(k.order() as u64, pi), limit, cap)
}

/// Every subgroup of the group. Meant for small groups.
pub fn all_subgroups(g: &PermGroup, cap: usize) -> Result<SubgroupFamily<'_>, SubgroupError> {
    let cands = prime_power_cyclic_generators(g);
    adjoin_closure(g, &cands, |_, _| true, |_| true, usize::MAX, cap)
}

/// Abelian subgroups generated by at most `max_gens` elements, optionally
/// only those of order prime to `p_regular_for`.
pub fn abelian_subgroups(
    g: &PermGroup,
    max_gens: usize,
    p_regular_for: Option<u64>,
    cap: usize,
) -> Result<SubgroupFamily<'_>, SubgroupError> {
    if let Some(p) = p_regular_for {
        check_prime(p)?;
    }
    let cands: Vec<u32> = prime_power_cyclic_generators(g)
        .into_iter()
        .filter(|&x| p_regular_for.map_or(true, |p| g.element_order(x) % p != 0))
        .collect();
    let commutes = |h: &Subgroup, x: u32| h.generators().iter().all(|&y| g.mul(x, y) == g.mul(y, x));
    let fam = adjoin_closure(g, &cands, commutes, |_| true, usize::MAX, cap)?;
    Ok(fam.restrict_classes(|h| abelian_rank(g, h) <= max_gens))
}

/// Intersections of Sylow p-subgroups (the Sylow subgroups included).
pub fn sylow_intersections(g: &PermGroup, p: u64, cap: usize) -> Result<SubgroupFamily<'_>, SubgroupError> {
    check_prime(p)?;
    let mut b = FamilyBuilder::new(g, cap);
    b.insert_class(g.sylow(p)?)?;
    let sylows: Vec<Subgroup> = b.class_members(0).cloned().collect();
    let mut c = 0;
    while c < b.class_count() {
        let r = b.some_member(c).clone();
        c += 1;
        for q in &sylows {
            let elems: Vec<u32> = r.elements().iter().copied().filter(|&x| q.contains(x)).collect();
            if !b.contains(&elems) {
                b.insert_class(g.subgroup_from_elements(elems))?;
            }
        }
    }
    Ok(b.finish())
}

/// Radical p-subgroups, found among the intersections of Sylow subgroups.
pub fn radical_p_subgroups(g: &PermGroup, p: u64, cap: usize) -> Result<SubgroupFamily<'_>, SubgroupError> {
    sylow_intersections(g, p, cap)?.filter_radical(p)
}
