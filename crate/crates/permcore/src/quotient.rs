use crate::group::PermGroup;
use crate::perm::Perm;
use crate::subgroup::Subgroup;
use crate::Error;

/// The action of `P` on the right cosets of a normal subgroup `N`, which
/// realizes `P/N` as a permutation group of degree `|P:N|`.
pub struct CosetAction {
    pub group: PermGroup,
    /// coset index of each element of the ambient group lying in `P`
    coset_of: Vec<u32>,
    /// least element of each coset
    coset_reps: Vec<u32>,
}

impl CosetAction {
    pub fn degree(&self) -> usize {
        self.coset_reps.len()
    }

    pub fn coset_of(&self, x: u32) -> Option<usize> {
        match self.coset_of.get(x as usize) {
            Some(&c) if c != u32::MAX => Some(c as usize),
            _ => None,
        }
    }

    pub fn coset_representatives(&self) -> &[u32] {
        &self.coset_reps
    }

    /// Image in the quotient of an element of `P`.
    pub fn image(&self, ambient: &PermGroup, x: u32) -> Option<u32> {
        let p = self.permutation_of(ambient, x)?;
        self.group.index_of(&p)
    }

    fn permutation_of(&self, ambient: &PermGroup, x: u32) -> Option<Perm> {
        let imgs = self
            .coset_reps
            .iter()
            .map(|&r| self.coset_of(ambient.mul(r, x)).map(|c| c as u16))
            .collect::<Option<Vec<u16>>>()?;
        Perm::from_images(imgs).ok()
    }

    /// Permutation of the cosets induced by a map on ambient elements that
    /// preserves both `P` and `N` (for instance conjugation by an element of
    /// a group normalizing both).
    pub fn induced_permutation(&self, f: impl Fn(u32) -> u32) -> Result<Perm, Error> {
        let imgs = self
            .coset_reps
            .iter()
            .map(|&r| self.coset_of(f(r)).map(|c| c as u16).ok_or(Error::NotNormal))
            .collect::<Result<Vec<u16>, Error>>()?;
        let p = Perm::from_images(imgs).map_err(|_| Error::NotNormal)?;
        Ok(p)
    }
}

impl PermGroup {
    /// Realizes `P/N` through the right coset action. Errors if `N` is not
    /// normal in `P`.
    pub fn quotient_group(&self, p: &Subgroup, n: &Subgroup) -> Result<CosetAction, Error> {
        if !self.is_normal_in(n, p) {
            return Err(Error::NotNormal);
        }
        let deg = p.order() / n.order();
        if deg > u16::MAX as usize {
            return Err(Error::DegreeOverflow(deg));
        }
        let mut coset_of = vec![u32::MAX; self.order()];
        let mut coset_reps = Vec::with_capacity(deg);
        for &x in p.elements() {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = coset_reps.len() as u32;
            coset_reps.push(x);
            for &m in n.elements() {
                coset_of[self.mul(m, x) as usize] = c;
            }
        }
        let mut ca = CosetAction { group: PermGroup::new(1, vec![])?, coset_of, coset_reps };
        let gens: Vec<Perm> = p
            .generators()
            .iter()
            .map(|&g| ca.permutation_of(self, g).expect("generator of P permutes cosets"))
            .filter(|q| !q.is_identity())
            .collect();
        ca.group = PermGroup::new(deg, gens)?;
        debug_assert_eq!(ca.group.order(), deg);
        Ok(ca)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_mod_v4() {
        let g = PermGroup::symmetric(4).unwrap();
        let v = g.p_core(2).unwrap();
        let q = g.quotient_group(&g.whole(), &v).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian());
    }

    #[test]
    fn quotient_by_everything_is_trivial() {
        let g = PermGroup::symmetric(3).unwrap();
        let q = g.quotient_group(&g.whole(), &g.whole()).unwrap();
        assert_eq!(q.group.order(), 1);
    }

    #[test]
    fn non_normal_rejected() {
        let g = PermGroup::symmetric(3).unwrap();
        let t = g.closure(&[g.index_of(&Perm::parse(3, "(1,2)").unwrap()).unwrap()]);
        assert!(matches!(g.quotient_group(&g.whole(), &t), Err(Error::NotNormal)));
    }
}
