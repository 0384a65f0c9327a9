use crate::group::PermGroup;
use crate::subgroup::{Membership, Subgroup};

/// Conjugacy classes of a group, ordered by (element order, class size,
/// representative). Representatives are the lexicographically least members.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    pub representatives: Vec<u32>,
    pub class_sizes: Vec<u64>,
    pub centralizer_orders: Vec<u64>,
    pub element_orders: Vec<u64>,
    pub class_of: Vec<u32>,
    pub members: Vec<Vec<u32>>,
}

impl ConjugacyData {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Classes of p-regular elements.
    pub fn p_regular(&self, p: u64) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.element_orders[i] % p != 0).collect()
    }
}

impl PermGroup {
    pub fn conjugacy_classes(&self) -> ConjugacyData {
        let n = self.order();
        let mut orbit_id = vec![u32::MAX; n];
        let mut orbits: Vec<Vec<u32>> = Vec::new();
        let ngens = self.generator_indices().len();
        for x in self.elements() {
            if orbit_id[x as usize] != u32::MAX {
                continue;
            }
            let id = orbits.len() as u32;
            orbit_id[x as usize] = id;
            let mut orb = vec![x];
            let mut head = 0;
            while head < orb.len() {
                let y = orb[head];
                head += 1;
                for k in 0..ngens {
                    let z = self.conj_table(k)[y as usize];
                    if orbit_id[z as usize] == u32::MAX {
                        orbit_id[z as usize] = id;
                        orb.push(z);
                    }
                }
            }
            orb.sort_unstable();
            orbits.push(orb);
        }
        // orbits were discovered in increasing order of least element
        let mut idx: Vec<usize> = (0..orbits.len()).collect();
        idx.sort_by_key(|&i| (self.element_order(orbits[i][0]), orbits[i].len(), orbits[i][0]));
        let mut rank = vec![0u32; orbits.len()];
        for (r, &i) in idx.iter().enumerate() {
            rank[i] = r as u32;
        }
        let members: Vec<Vec<u32>> = idx.iter().map(|&i| orbits[i].clone()).collect();
        ConjugacyData {
            representatives: members.iter().map(|m| m[0]).collect(),
            class_sizes: members.iter().map(|m| m.len() as u64).collect(),
            centralizer_orders: members.iter().map(|m| (n / m.len()) as u64).collect(),
            element_orders: members.iter().map(|m| self.element_order(m[0])).collect(),
            class_of: orbit_id.iter().map(|&o| rank[o as usize]).collect(),
            members,
        }
    }

    /// Conjugacy classes of a subgroup under its own conjugation, as sorted
    /// element lists ordered by least element.
    pub fn classes_of_subgroup(&self, h: &Subgroup) -> Vec<Vec<u32>> {
        let mut done = Membership::new(self.order(), &[]);
        let mut out = Vec::new();
        for &x in h.elements() {
            if done.contains(x) {
                continue;
            }
            done.insert(x);
            let mut orb = vec![x];
            let mut head = 0;
            while head < orb.len() {
                let y = orb[head];
                head += 1;
                for &g in h.generators() {
                    let z = self.conj(y, g);
                    if !done.contains(z) {
                        done.insert(z);
                        orb.push(z);
                    }
                }
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }
}
