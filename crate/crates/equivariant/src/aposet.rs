use std::cell::RefCell;

use num_bigint::BigInt;
use permcore::Subgroup;
use posetcat::FinitePoset;
use rustc_hash::FxHashMap;
use subgroups::{p_subgroups, radical_p_subgroups, GroupPair, SubgroupError, SubgroupFamily};

use crate::EquivariantError;

/// Which members of the Brown poset of nonidentity p-subgroups to keep.
/// All three give the same Euler characteristics of centralized subposets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BrownVariant {
    Full,
    Radical,
    ElementaryAbelian,
}

/// A poset of subgroups of G, closed under the action of the acting group of
/// a [`GroupPair`]. Euler characteristics of fixed subposets are cached by
/// their member sets.
pub struct SubgroupAPoset<'p, 'g> {
    pair: &'p GroupPair<'g>,
    members: Vec<Subgroup>,
    poset: FinitePoset,
    cache: RefCell<FxHashMap<Vec<usize>, BigInt>>,
}

impl<'p, 'g> SubgroupAPoset<'p, 'g> {
    /// The members of a family, optionally without the trivial subgroup.
    /// Fails if the family is not closed under the action.
    pub fn from_family(
        pair: &'p GroupPair<'g>,
        fam: &SubgroupFamily<'_>,
        include_trivial: bool,
    ) -> Result<Self, EquivariantError> {
        let idx: Vec<usize> = (0..fam.len()).filter(|&i| include_trivial || !fam.member(i).is_trivial()).collect();
        for &i in &idx {
            let h = fam.member(i);
            for &a in pair.acting().generator_indices() {
                let mut img: Vec<u32> = h.elements().iter().map(|&x| pair.act(x, a)).collect();
                img.sort_unstable();
                if fam.index_of_elements(&img).is_none() {
                    return Err(SubgroupError::NotNormalizing.into());
                }
            }
        }
        let poset = fam.poset(Some(&idx));
        let members = idx.iter().map(|&i| fam.member(i).clone()).collect();
        Ok(SubgroupAPoset { pair, members, poset, cache: RefCell::new(FxHashMap::default()) })
    }

    /// The Brown poset of nonidentity p-subgroups of G, or one of its
    /// homotopy equivalent subposets.
    pub fn brown(pair: &'p GroupPair<'g>, p: u64, variant: BrownVariant, cap: usize) -> Result<Self, EquivariantError> {
        let g = pair.group();
        let fam = match variant {
            BrownVariant::Full => p_subgroups(g, p, cap)?,
            BrownVariant::Radical => radical_p_subgroups(g, p, cap)?,
            BrownVariant::ElementaryAbelian => p_subgroups(g, p, cap)?.filter_elementary_abelian(p),
        };
        Self::from_family(pair, &fam, false)
    }

    pub fn pair(&self) -> &'p GroupPair<'g> {
        self.pair
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Subgroup] {
        &self.members
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn all(&self) -> Vec<usize> {
        (0..self.members.len()).collect()
    }

    /// Members among `within` normalized by every given element of A.
    pub fn fixed_by(&self, within: &[usize], a_elems: &[u32]) -> Vec<usize> {
        within
            .iter()
            .copied()
            .filter(|&i| a_elems.iter().all(|&a| self.pair.normalizes(a, &self.members[i])))
            .collect()
    }

    /// Members among `within` satisfying a predicate.
    pub fn fixed_where(&self, within: &[usize], mut keep: impl FnMut(&Subgroup) -> bool) -> Vec<usize> {
        within.iter().copied().filter(|&i| keep(&self.members[i])).collect()
    }

    /// `chi` of the subposet on the given (sorted) members.
    pub fn euler(&self, fixed: &[usize]) -> Result<BigInt, EquivariantError> {
        if let Some(v) = self.cache.borrow().get(fixed) {
            return Ok(v.clone());
        }
        let v = self.poset.induced(fixed).euler_characteristic()?;
        self.cache.borrow_mut().insert(fixed.to_vec(), v.clone());
        Ok(v)
    }

    /// `chi` of the subposet of members normalized by a subgroup of A.
    pub fn centralized_euler(&self, b: &Subgroup) -> Result<BigInt, EquivariantError> {
        let fixed = self.fixed_by(&self.all(), b.generators());
        self.euler(&fixed)
    }
}
