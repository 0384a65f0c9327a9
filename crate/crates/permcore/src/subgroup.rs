use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::arith::{is_prime, p_part};
use crate::group::PermGroup;
use crate::Error;

/// A subgroup of a [`PermGroup`], identified by its sorted element indices.
///
/// Two handles are equal iff their element sets are equal; the stored
/// generators are only a convenience.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elems: Vec<u32>,
    gens: Vec<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}
impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elems.hash(state)
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elems.cmp(&other.elems)
    }
}

impl Subgroup {
    /// Caller guarantees `elems` is sorted and closed and `gens` generate it.
    pub fn from_parts(elems: Vec<u32>, gens: Vec<u32>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elems, gens }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn into_elements(self) -> Vec<u32> {
        self.elems
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }

    /// `self <= other`, tested on generators.
    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && other.order() % self.order() == 0 && self.gens.iter().all(|&g| other.contains(g))
    }
}

/// Dense membership bitmap over the elements of a group.
pub struct Membership {
    bits: Vec<u64>,
}

impl Membership {
    pub fn new(order: usize, elems: &[u32]) -> Self {
        let mut bits = vec![0u64; order.div_ceil(64)];
        for &e in elems {
            bits[e as usize >> 6] |= 1 << (e & 63);
        }
        Membership { bits }
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.bits[x as usize >> 6] >> (x & 63) & 1 == 1
    }

    pub fn insert(&mut self, x: u32) {
        self.bits[x as usize >> 6] |= 1 << (x & 63);
    }
}

impl PermGroup {
    /// The subgroup generated by the given element indices.
    pub fn closure(&self, gens: &[u32]) -> Subgroup {
        self.closure_bounded(gens, usize::MAX).expect("no bound")
    }

    /// The generated subgroup, or `None` as soon as it has more than
    /// `limit` elements.
    pub fn closure_bounded(&self, gens: &[u32], limit: usize) -> Option<Subgroup> {
        let gens: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut mem = Membership::new(self.order(), &[0]);
        let mut elems = vec![0u32];
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head];
            head += 1;
            for &s in &gens {
                let y = self.mul(x, s);
                if !mem.contains(y) {
                    mem.insert(y);
                    elems.push(y);
                    if elems.len() > limit {
                        return None;
                    }
                }
            }
        }
        elems.sort_unstable();
        Some(Subgroup { elems, gens })
    }

    /// `<h, extra>`
    pub fn join_element(&self, h: &Subgroup, extra: u32) -> Subgroup {
        if h.contains(extra) {
            return h.clone();
        }
        let mut gens = h.gens.clone();
        gens.push(extra);
        self.closure(&gens)
    }

    /// `<h, extra>` if it has at most `limit` elements.
    pub fn join_element_bounded(&self, h: &Subgroup, extra: u32, limit: usize) -> Option<Subgroup> {
        if h.contains(extra) {
            return Some(h.clone());
        }
        let mut gens = h.gens.clone();
        gens.push(extra);
        self.closure_bounded(&gens, limit)
    }

    /// Wraps a closed sorted element set, choosing generators greedily.
    pub fn subgroup_from_elements(&self, elems: Vec<u32>) -> Subgroup {
        let mut gens: Vec<u32> = Vec::new();
        let mut cur = self.trivial();
        // prefer elements of large order so few generators are needed
        let mut cand = elems.clone();
        cand.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        for x in cand {
            if cur.order() == elems.len() {
                break;
            }
            if !cur.contains(x) {
                gens.push(x);
                cur = self.closure(&gens);
            }
        }
        debug_assert_eq!(cur.elems, elems);
        Subgroup { elems, gens }
    }

    /// Checks that an element set is a subgroup.
    pub fn is_closed(&self, elems: &[u32]) -> bool {
        let mem = Membership::new(self.order(), elems);
        elems.contains(&0) && elems.iter().all(|&a| elems.iter().all(|&b| mem.contains(self.mul(a, b))))
    }

    pub fn conjugate_subgroup(&self, h: &Subgroup, g: u32) -> Subgroup {
        let mut elems: Vec<u32> = h.elems.iter().map(|&x| self.conj(x, g)).collect();
        elems.sort_unstable();
        Subgroup { elems, gens: h.gens.iter().map(|&x| self.conj(x, g)).collect() }
    }

    /// Conjugate by the k-th generator of the group using the precomputed table.
    pub fn conjugate_by_generator(&self, h: &Subgroup, k: usize) -> Subgroup {
        let t = self.conj_table(k);
        let mut elems: Vec<u32> = h.elems.iter().map(|&x| t[x as usize]).collect();
        elems.sort_unstable();
        Subgroup { elems, gens: h.gens.iter().map(|&x| t[x as usize]).collect() }
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let elems: Vec<u32> = a.elems.iter().copied().filter(|&x| b.contains(x)).collect();
        self.subgroup_from_elements(elems)
    }

    /// `N_C(H)` for a container subgroup `C`.
    pub fn normalizer_in(&self, container: &Subgroup, h: &Subgroup) -> Subgroup {
        let mem = Membership::new(self.order(), &h.elems);
        let elems: Vec<u32> = container
            .elems
            .iter()
            .copied()
            .filter(|&g| h.gens.iter().all(|&x| mem.contains(self.conj(x, g))))
            .collect();
        self.subgroup_from_elements(elems)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        if h.order() == 1 || h.order() == self.order() {
            return self.whole();
        }
        self.normalizer_in(&self.whole(), h)
    }

    /// `C_C(S)` for a set of elements `S`.
    pub fn centralizer_in(&self, container: &Subgroup, set: &[u32]) -> Subgroup {
        let elems: Vec<u32> =
            container.elems.iter().copied().filter(|&g| set.iter().all(|&x| self.mul(g, x) == self.mul(x, g))).collect();
        self.subgroup_from_elements(elems)
    }

    pub fn centralizer(&self, set: &[u32]) -> Result<Subgroup, Error> {
        if set.iter().any(|&x| x as usize >= self.order()) {
            return Err(Error::NotInGroup);
        }
        Ok(self.centralizer_in(&self.whole(), set))
    }

    /// Centralizer of a set of permutations that lie in the group.
    pub fn centralizer_of_perms(&self, set: &[crate::Perm]) -> Result<Subgroup, Error> {
        let idx = set.iter().map(|p| self.index_of(p).ok_or(Error::NotInGroup)).collect::<Result<Vec<_>, _>>()?;
        self.centralizer(&idx)
    }

    /// The transporter `N_G(H,K) = { g : H^g <= K }`.
    pub fn transporter(&self, h: &Subgroup, k: &Subgroup) -> Vec<u32> {
        let mem = Membership::new(self.order(), &k.elems);
        self.elements().filter(|&g| h.gens.iter().all(|&x| mem.contains(self.conj(x, g)))).collect()
    }

    pub fn is_normal_in(&self, n: &Subgroup, p: &Subgroup) -> bool {
        let mem = Membership::new(self.order(), &n.elems);
        n.is_subgroup_of(p) && p.gens.iter().all(|&g| n.gens.iter().all(|&x| mem.contains(self.conj(x, g))))
    }

    pub fn is_p_element(&self, x: u32, p: u64) -> bool {
        let mut o = self.element_order(x);
        while o % p == 0 {
            o /= p;
        }
        o == 1
    }

    /// A Sylow p-subgroup of the container, grown through normalizers.
    pub fn sylow_in(&self, container: &Subgroup, p: u64) -> Result<Subgroup, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let target = p_part(container.order() as u64, p) as usize;
        let mut s = self.trivial();
        while s.order() < target {
            let n = self.normalizer_in(container, &s);
            let x = n
                .elems
                .iter()
                .copied()
                .find(|&x| !s.contains(x) && self.is_p_element(x, p))
                .expect("a non-Sylow p-subgroup grows inside its normalizer");
            // push x down until x^p lands in s
            let mut y = x;
            loop {
                let z = self.pow(y, p);
                if s.contains(z) {
                    break;
                }
                y = z;
            }
            s = self.join_element(&s, y);
        }
        Ok(s)
    }

    pub fn sylow(&self, p: u64) -> Result<Subgroup, Error> {
        self.sylow_in(&self.whole(), p)
    }

    /// `O_p(C)`: intersection of the conjugates of a Sylow p-subgroup.
    pub fn p_core_in(&self, container: &Subgroup, p: u64) -> Result<Subgroup, Error> {
        let s = self.sylow_in(container, p)?;
        let mut core = s.elems.clone();
        let mut seen = std::collections::HashSet::new();
        seen.insert(s.elems.clone());
        let mut queue = vec![s];
        let mut head = 0;
        while head < queue.len() && core.len() > 1 {
            let cur = queue[head].clone();
            head += 1;
            for &g in &container.gens {
                let c = self.conjugate_subgroup(&cur, g);
                if seen.insert(c.elems.clone()) {
                    core.retain(|&x| c.contains(x));
                    queue.push(c);
                }
            }
        }
        Ok(self.subgroup_from_elements(core))
    }

    pub fn p_core(&self, p: u64) -> Result<Subgroup, Error> {
        self.p_core_in(&self.whole(), p)
    }

    /// `[K, A] = < k^-1 k^a >` where each map is an automorphism of the group
    /// given on element indices.
    pub fn commutator_with_maps(&self, k: &Subgroup, maps: &[&[u32]]) -> Subgroup {
        let mut gens = Vec::new();
        for &x in &k.elems {
            for m in maps {
                let c = self.mul(self.inv(x), m[x as usize]);
                if c != 0 {
                    gens.push(c);
                }
            }
        }
        gens.sort_unstable();
        gens.dedup();
        let all = self.closure(&gens);
        self.subgroup_from_elements(all.elems)
    }

    /// `[K, A]` for `A` given by elements of this group.
    pub fn commutator_subgroup(&self, k: &Subgroup, a: &[u32]) -> Subgroup {
        let mut gens = Vec::new();
        for &x in &k.elems {
            for &y in a {
                let c = self.commutator(x, y);
                if c != 0 {
                    gens.push(c);
                }
            }
        }
        gens.sort_unstable();
        gens.dedup();
        let all = self.closure(&gens);
        self.subgroup_from_elements(all.elems)
    }

    /// Frattini subgroup of a p-group: generated by p-th powers and commutators.
    pub fn frattini(&self, k: &Subgroup, p: u64) -> Result<Subgroup, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p_part(k.order() as u64, p) != k.order() as u64 {
            return Err(Error::NotAPGroup(p));
        }
        let mut gens: Vec<u32> = k.elems.iter().map(|&x| self.pow(x, p)).collect();
        for &x in &k.gens {
            for &y in &k.gens {
                gens.push(self.commutator(x, y));
            }
        }
        gens.sort_unstable();
        gens.dedup();
        Ok(self.normal_closure_in(k, &gens))
    }

    /// Smallest subgroup containing `gens` and normalized by `k`.
    pub fn normal_closure_in(&self, k: &Subgroup, gens: &[u32]) -> Subgroup {
        let mut gens: Vec<u32> = gens.to_vec();
        let mut cur = self.closure(&gens);
        loop {
            let extra = cur
                .gens
                .iter()
                .flat_map(|&x| k.gens.iter().map(move |&g| (x, g)))
                .map(|(x, g)| self.conj(x, g))
                .find(|&y| !cur.contains(y));
            match extra {
                Some(y) => {
                    gens.push(y);
                    cur = self.closure(&gens);
                }
                None => break,
            }
        }
        self.subgroup_from_elements(cur.elems)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Perm;

    fn s(n: usize) -> PermGroup {
        PermGroup::symmetric(n).unwrap()
    }

    #[test]
    fn sylow_orders() {
        let g = s(5);
        assert_eq!(g.sylow(2).unwrap().order(), 8);
        assert_eq!(g.sylow(3).unwrap().order(), 3);
        assert_eq!(g.sylow(7).unwrap().order(), 1);
        assert!(g.sylow(4).is_err());
    }

    #[test]
    fn core_of_s4() {
        let g = s(4);
        let o2 = g.p_core(2).unwrap();
        assert_eq!(o2.order(), 4);
        let n = g.normalizer(&o2);
        assert_eq!(n.order(), 24);
        assert_eq!(g.p_core(3).unwrap().order(), 1);
    }

    #[test]
    fn centralizer_in_s5() {
        let g = s(5);
        let c = g.centralizer_of_perms(&[Perm::parse(5, "(1,2,3)").unwrap()]).unwrap();
        assert_eq!(c.order(), 6);
        let trivial = g.trivial();
        assert_eq!(g.normalizer(&trivial).order(), 120);
    }

    #[test]
    fn frattini_of_d8() {
        let g = s(4);
        let p = g.sylow(2).unwrap();
        assert_eq!(g.frattini(&p, 2).unwrap().order(), 2);
        let v = g.p_core(2).unwrap();
        assert_eq!(g.frattini(&v, 2).unwrap().order(), 1);
    }

    #[test]
    fn commutators() {
        let g = s(4);
        let v = g.p_core(2).unwrap();
        let c3 = g.index_of(&Perm::parse(4, "(1,2,3)").unwrap()).unwrap();
        assert_eq!(g.commutator_subgroup(&v, &[c3]).order(), 4);
        let whole = g.whole();
        assert_eq!(g.commutator_subgroup(&whole, whole.elements()).order(), 12);
    }
}
