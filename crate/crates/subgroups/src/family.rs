use std::ops::Range;

use permcore::{PermGroup, Subgroup};
use posetcat::FinitePoset;
use rustc_hash::FxHashMap;

use crate::SubgroupError;

pub const DEFAULT_FAMILY_CAP: usize = 100_000;

/// A conjugation-closed set of subgroups of a group, grouped into
/// conjugacy classes.
///
/// Classes are ordered by decreasing order, then increasing class length,
/// then representative. Each class is stored contiguously and starts with its
/// representative, the lexicographically least member.
#[derive(Clone)]
pub struct SubgroupFamily<'g> {
    group: &'g PermGroup,
    members: Vec<Subgroup>,
    class_of: Vec<usize>,
    class_start: Vec<usize>,
    /// `conjugator[i]` conjugates the class representative onto member i
    conjugator: Vec<u32>,
    lookup: FxHashMap<Vec<u32>, usize>,
}

impl std::fmt::Debug for SubgroupFamily<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupFamily")
            .field("members", &self.members.len())
            .field("class_orders", &self.class_orders())
            .field("class_lengths", &self.class_lengths())
            .finish()
    }
}

/// Which incidence count a class table holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableMode {
    /// entry `[H][K]`: number of conjugates of K containing the representative H
    Successors,
    /// entry `[H][K]`: number of conjugates of H contained in the representative K
    Predecessors,
}

impl<'g> SubgroupFamily<'g> {
    pub fn group(&self) -> &'g PermGroup {
        self.group
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

    pub fn member(&self, i: usize) -> &Subgroup {
        &self.members[i]
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.lookup.get(h.elements()).copied()
    }

    pub fn index_of_elements(&self, elems: &[u32]) -> Option<usize> {
        self.lookup.get(elems).copied()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_count(&self) -> usize {
        self.class_start.len() - 1
    }

    pub fn class_members(&self, c: usize) -> Range<usize> {
        self.class_start[c]..self.class_start[c + 1]
    }

    pub fn representative_index(&self, c: usize) -> usize {
        self.class_start[c]
    }

    pub fn representative(&self, c: usize) -> &Subgroup {
        &self.members[self.class_start[c]]
    }

    pub fn class_len(&self, c: usize) -> usize {
        self.class_start[c + 1] - self.class_start[c]
    }

    pub fn class_orders(&self) -> Vec<usize> {
        (0..self.class_count()).map(|c| self.representative(c).order()).collect()
    }

    pub fn class_lengths(&self) -> Vec<usize> {
        (0..self.class_count()).map(|c| self.class_len(c)).collect()
    }

    /// `|N_G(H)|` for the representative of class c.
    pub fn normalizer_order(&self, c: usize) -> usize {
        self.group.order() / self.class_len(c)
    }

    pub fn normalizer(&self, c: usize) -> Subgroup {
        self.group.normalizer(self.representative(c))
    }

    /// An element g with `rep^g` equal to member i.
    pub fn conjugator(&self, i: usize) -> u32 {
        self.conjugator[i]
    }

    pub fn trivial_class(&self) -> Option<usize> {
        (0..self.class_count()).find(|&c| self.representative(c).is_trivial())
    }

    /// The subfamily made of the classes whose representative satisfies `keep`.
    pub fn restrict_classes(&self, mut keep: impl FnMut(&Subgroup) -> bool) -> SubgroupFamily<'g> {
        let mut members = Vec::new();
        let mut conjugator = Vec::new();
        let mut class_of = Vec::new();
        let mut class_start = vec![0];
        for c in 0..self.class_count() {
            if !keep(self.representative(c)) {
                continue;
            }
            let id = class_start.len() - 1;
            for i in self.class_members(c) {
                members.push(self.members[i].clone());
                conjugator.push(self.conjugator[i]);
                class_of.push(id);
            }
            class_start.push(members.len());
        }
        let lookup = members.iter().enumerate().map(|(i, m)| (m.elements().to_vec(), i)).collect();
        SubgroupFamily { group: self.group, members, class_of, class_start, conjugator, lookup }
    }

    /// Classes of radical p-subgroups: `H = O_p(N_G(H))`.
    pub fn filter_radical(&self, p: u64) -> Result<SubgroupFamily<'g>, SubgroupError> {
        let g = self.group;
        let mut keep = Vec::new();
        for c in 0..self.class_count() {
            let h = self.representative(c);
            let n = g.normalizer(h);
            keep.push(g.p_core_in(&n, p)? == *h);
        }
        let mut it = keep.into_iter();
        Ok(self.restrict_classes(|_| it.next().unwrap()))
    }

    pub fn filter_elementary_abelian(&self, p: u64) -> SubgroupFamily<'g> {
        let g = self.group;
        self.restrict_classes(|h| is_elementary_abelian(g, h, p))
    }

    pub fn filter_cyclic(&self) -> SubgroupFamily<'g> {
        let g = self.group;
        self.restrict_classes(|h| is_cyclic(g, h))
    }

    pub fn without_trivial(&self) -> SubgroupFamily<'g> {
        self.restrict_classes(|h| !h.is_trivial())
    }

    /// Inclusion poset on the given members (all members if `None`).
    pub fn poset(&self, subset: Option<&[usize]>) -> FinitePoset {
        let all: Vec<usize>;
        let idx = match subset {
            Some(s) => s,
            None => {
                all = (0..self.len()).collect();
                &all
            }
        };
        let labels = idx.iter().map(|&i| self.label(i)).collect();
        FinitePoset::new_unchecked(labels, |a, b| self.members[idx[a]].is_subgroup_of(&self.members[idx[b]]))
    }

    /// `H<class>.<position>` with the order, e.g. `H2.0|4|`.
    pub fn label(&self, i: usize) -> String {
        let c = self.class_of[i];
        format!("H{}.{}|{}|", c, i - self.class_start[c], self.members[i].order())
    }

    /// Class table indexed by class representatives. Lemma-style consistency
    /// `S(H,[K]) |N_G(K)| = S([H],K) |N_G(H)|` is checked for every entry.
    pub fn class_table(&self, mode: TableMode) -> Result<Vec<Vec<u64>>, SubgroupError> {
        let k = self.class_count();
        let mut succ = vec![vec![0u64; k]; k];
        let mut pred = vec![vec![0u64; k]; k];
        for h in 0..k {
            let rep = self.representative(h);
            for c in 0..k {
                succ[h][c] = self.class_members(c).filter(|&i| rep.is_subgroup_of(&self.members[i])).count() as u64;
                let rk = self.representative(c);
                pred[h][c] = self.class_members(h).filter(|&i| self.members[i].is_subgroup_of(rk)).count() as u64;
            }
        }
        for h in 0..k {
            for c in 0..k {
                let l = succ[h][c] * self.normalizer_order(c) as u64;
                let r = pred[h][c] * self.normalizer_order(h) as u64;
                if l != r {
                    return Err(SubgroupError::Inconsistent(format!("class table identity fails at ({h},{c}): {l} != {r}")));
                }
            }
        }
        Ok(match mode {
            TableMode::Successors => succ,
            TableMode::Predecessors => pred,
        })
    }
}

pub fn is_cyclic(g: &PermGroup, h: &Subgroup) -> bool {
    h.elements().iter().any(|&x| g.element_order(x) as usize == h.order())
}

pub fn is_abelian(g: &PermGroup, h: &Subgroup) -> bool {
    let s = h.generators();
    s.iter().all(|&a| s.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

pub fn is_elementary_abelian(g: &PermGroup, h: &Subgroup, p: u64) -> bool {
    is_abelian(g, h) && h.elements().iter().all(|&x| x == 0 || g.element_order(x) == p)
}

/// Minimal number of generators of an abelian group: the largest p-rank.
pub fn abelian_rank(g: &PermGroup, h: &Subgroup) -> usize {
    let mut rank = 0;
    for p in permcore::prime_divisors(h.order() as u64) {
        let omega = h.elements().iter().filter(|&&x| g.element_order(x) == p || x == 0).count();
        let mut r = 0;
        let mut n = 1;
        while n < omega {
            n *= p as usize;
            r += 1;
        }
        rank = rank.max(r);
    }
    rank
}

/// Accumulates conjugacy classes of subgroups, storing every member.
pub(crate) struct FamilyBuilder<'g> {
    g: &'g PermGroup,
    cap: usize,
    members: Vec<Subgroup>,
    conjugator: Vec<u32>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    lookup: FxHashMap<Vec<u32>, usize>,
}

impl<'g> FamilyBuilder<'g> {
    pub(crate) fn new(g: &'g PermGroup, cap: usize) -> Self {
        FamilyBuilder {
            g,
            cap,
            members: Vec::new(),
            conjugator: Vec::new(),
            class_of: Vec::new(),
            classes: Vec::new(),
            lookup: FxHashMap::default(),
        }
    }

    pub(crate) fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// A member of class c (the first one found).
    pub(crate) fn some_member(&self, c: usize) -> &Subgroup {
        &self.members[self.classes[c][0]]
    }

    pub(crate) fn class_members(&self, c: usize) -> impl Iterator<Item = &Subgroup> {
        self.classes[c].iter().map(|&i| &self.members[i])
    }

    pub(crate) fn contains(&self, elems: &[u32]) -> bool {
        self.lookup.contains_key(elems)
    }

    /// Adds the conjugacy class of `k` if new. Returns whether it was new.
    pub(crate) fn insert_class(&mut self, k: Subgroup) -> Result<bool, SubgroupError> {
        if self.lookup.contains_key(k.elements()) {
            return Ok(false);
        }
        let g = self.g;
        let id = self.classes.len();
        let first = self.members.len();
        self.push(k, 0, id)?;
        let mut head = first;
        while head < self.members.len() {
            let cur = self.members[head].clone();
            let cj = self.conjugator[head];
            head += 1;
            for (t, &s) in g.generator_indices().iter().enumerate() {
                let img = g.conjugate_by_generator(&cur, t);
                if !self.lookup.contains_key(img.elements()) {
                    self.push(img, g.mul(cj, s), id)?;
                }
            }
        }
        self.classes.push((first..self.members.len()).collect());
        Ok(true)
    }

    fn push(&mut self, k: Subgroup, conj: u32, class: usize) -> Result<(), SubgroupError> {
        if self.members.len() >= self.cap {
            return Err(SubgroupError::FamilyTooLarge { cap: self.cap });
        }
        self.lookup.insert(k.elements().to_vec(), self.members.len());
        self.members.push(k);
        self.conjugator.push(conj);
        self.class_of.push(class);
        Ok(())
    }

    pub(crate) fn finish(self) -> SubgroupFamily<'g> {
        let g = self.g;
        // pick the least member of each class as representative
        let mut classes: Vec<(Vec<usize>, usize)> = self
            .classes
            .into_iter()
            .map(|mut c| {
                c.sort_by(|&a, &b| self.members[a].cmp(&self.members[b]));
                let rep = c[0];
                (c, rep)
            })
            .collect();
        let members = &self.members;
        classes.sort_by(|(a, ra), (b, rb)| {
            members[*rb]
                .order()
                .cmp(&members[*ra].order())
                .then(a.len().cmp(&b.len()))
                .then_with(|| members[*ra].cmp(&members[*rb]))
        });
        let mut out_members = Vec::with_capacity(self.members.len());
        let mut conjugator = Vec::with_capacity(self.members.len());
        let mut class_of = Vec::with_capacity(self.members.len());
        let mut class_start = vec![0];
        for (id, (c, rep)) in classes.iter().enumerate() {
            // rep = first^h, member = first^c  =>  member = rep^(h^-1 c)
            let hinv = g.inv(self.conjugator[*rep]);
            for &i in c {
                out_members.push(self.members[i].clone());
                conjugator.push(g.mul(hinv, self.conjugator[i]));
                class_of.push(id);
            }
            class_start.push(out_members.len());
        }
        let lookup = out_members.iter().enumerate().map(|(i, m)| (m.elements().to_vec(), i)).collect();
        SubgroupFamily { group: g, members: out_members, class_of, class_start, conjugator, lookup }
    }
}
