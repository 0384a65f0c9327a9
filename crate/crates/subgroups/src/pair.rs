use permcore::{CosetAction, Perm, PermGroup, Subgroup};
use posetcat::FinitePoset;

use crate::family::SubgroupFamily;
use crate::SubgroupError;

/// Largest `|A| * |G|` for which the action of every element of an external
/// acting group is tabulated.
const TABLE_LIMIT: usize = 50_000_000;

enum Action {
    /// A lies in G; element i of A is element `in_g[i]` of G
    Internal { in_g: Vec<u32> },
    /// `maps[a][x]` = `x^a`
    External { maps: Vec<Vec<u32>> },
}

/// A group G together with a group A of permutations of the same degree
/// normalizing G, acting on G by conjugation.
pub struct GroupPair<'g> {
    g: &'g PermGroup,
    a: PermGroup,
    action: Action,
}

impl std::fmt::Debug for GroupPair<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupPair").field("g", &self.g.order()).field("a", &self.a.generators()).finish()
    }
}

impl<'g> GroupPair<'g> {
    pub fn new(g: &'g PermGroup, a_gens: Vec<Perm>) -> Result<Self, SubgroupError> {
        for a in &a_gens {
            if a.degree() != g.degree() {
                return Err(permcore::Error::DegreeMismatch { expected: g.degree(), found: a.degree() }.into());
            }
            for s in g.generators() {
                if g.index_of(&s.conjugate_by(a)).is_none() {
                    return Err(SubgroupError::NotNormalizing);
                }
            }
        }
        let a = PermGroup::new(g.degree(), a_gens)?;
        let in_g: Option<Vec<u32>> = a.elements().map(|i| g.index_of(&a.element(i))).collect();
        let action = match in_g {
            Some(in_g) => Action::Internal { in_g },
            None => {
                if a.order().saturating_mul(g.order()) > TABLE_LIMIT {
                    return Err(SubgroupError::Unsupported("acting group too large to tabulate".into()));
                }
                let maps = a
                    .elements()
                    .map(|i| {
                        let ai = a.element(i);
                        g.elements().map(|x| g.index_of(&g.element(x).conjugate_by(&ai)).expect("A normalizes G")).collect()
                    })
                    .collect();
                Action::External { maps }
            }
        };
        Ok(GroupPair { g, a, action })
    }

    /// G acting on itself by conjugation.
    pub fn inner(g: &'g PermGroup) -> Self {
        let a = PermGroup::new(g.degree(), g.generators().to_vec()).expect("copy of an enumerated group");
        let in_g = a.elements().map(|i| g.index_of(&a.element(i)).expect("same group")).collect();
        GroupPair { g, a, action: Action::Internal { in_g } }
    }

    /// A given by elements of G.
    pub fn from_elements(g: &'g PermGroup, elems: &[u32]) -> Self {
        let gens = elems.iter().filter(|&&x| x != 0).map(|&x| g.element(x)).collect();
        GroupPair::new(g, gens).expect("subgroups of G normalize G")
    }

    pub fn group(&self) -> &'g PermGroup {
        self.g
    }

    pub fn acting(&self) -> &PermGroup {
        &self.a
    }

    pub fn is_internal(&self) -> bool {
        matches!(self.action, Action::Internal { .. })
    }

    /// Element of G corresponding to element `a` of A, when A lies in G.
    pub fn acting_in_g(&self, a: u32) -> Option<u32> {
        match &self.action {
            Action::Internal { in_g } => Some(in_g[a as usize]),
            Action::External { .. } => None,
        }
    }

    /// `x^a` for x in G and a in A.
    #[inline]
    pub fn act(&self, x: u32, a: u32) -> u32 {
        match &self.action {
            Action::Internal { in_g } => self.g.conj(x, in_g[a as usize]),
            Action::External { maps } => maps[a as usize][x as usize],
        }
    }

    /// Whether the element `a` of A normalizes H.
    pub fn normalizes(&self, a: u32, h: &Subgroup) -> bool {
        h.generators().iter().all(|&x| h.contains(self.act(x, a)))
    }

    pub fn is_a_invariant(&self, h: &Subgroup) -> bool {
        self.a.generator_indices().iter().all(|&a| self.normalizes(a, h))
    }

    /// `C_H(A)`.
    pub fn centralizer_in(&self, h: &Subgroup) -> Subgroup {
        let gens = self.a.generator_indices();
        let elems: Vec<u32> = h.elements().iter().copied().filter(|&x| gens.iter().all(|&a| self.act(x, a) == x)).collect();
        self.g.subgroup_from_elements(elems)
    }

    /// `C_G(A)`.
    pub fn centralizer(&self) -> Subgroup {
        self.centralizer_in(&self.g.whole())
    }

    /// `N_G(A)`: elements g of G with `A^g = A`.
    pub fn normalizer_in_g(&self) -> Subgroup {
        let g = self.g;
        let elems: Vec<u32> = match &self.action {
            Action::Internal { in_g } => {
                let a = g.subgroup_from_elements({
                    let mut v = in_g.clone();
                    v.sort_unstable();
                    v
                });
                return g.normalizer(&a);
            }
            Action::External { .. } => g
                .elements()
                .filter(|&x| {
                    let xp = g.element(x);
                    self.a.generators().iter().all(|a| self.a.index_of(&a.conjugate_by(&xp)).is_some())
                })
                .collect(),
        };
        g.subgroup_from_elements(elems)
    }

    /// Sub-pair with acting group B, given by elements of A.
    pub fn restrict(&self, b: &[u32]) -> GroupPair<'g> {
        let gens = b.iter().filter(|&&x| x != 0).map(|&x| self.a.element(x)).collect();
        GroupPair::new(self.g, gens).expect("a subgroup of A still normalizes G")
    }

    /// `[K, A]`.
    pub fn commutator(&self, k: &Subgroup) -> Subgroup {
        let g = self.g;
        let mut gens: Vec<u32> = Vec::new();
        for &x in k.elements() {
            for a in self.a.elements() {
                let c = g.mul(g.inv(x), self.act(x, a));
                if c != 0 {
                    gens.push(c);
                }
            }
        }
        gens.sort_unstable();
        gens.dedup();
        let s = g.closure(&gens);
        g.subgroup_from_elements(s.into_elements())
    }

    /// Members of the family normalized by A, and their inclusion poset.
    pub fn centralized_subposet(&self, fam: &SubgroupFamily<'_>, include_trivial: bool) -> (FinitePoset, Vec<usize>) {
        let idx: Vec<usize> = (0..fam.len())
            .filter(|&i| (include_trivial || !fam.member(i).is_trivial()) && self.is_a_invariant(fam.member(i)))
            .collect();
        (fam.poset(Some(&idx)), idx)
    }

    /// The quotient `N/H` for an A-invariant H normal in an A-invariant N,
    /// with the permutations of the cosets induced by the generators of A.
    pub fn induced_on_quotient(&self, n: &Subgroup, h: &Subgroup) -> Result<(CosetAction, Vec<Perm>), SubgroupError> {
        if !self.is_a_invariant(h) || !self.is_a_invariant(n) {
            return Err(SubgroupError::NotNormalizing);
        }
        let q = self.g.quotient_group(n, h)?;
        let perms = self
            .a
            .generator_indices()
            .iter()
            .map(|&a| q.induced_permutation(|x| self.act(x, a)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((q, perms))
    }
}
