use num_traits::{One, Zero};

use crate::poset::FinitePoset;
use crate::rational::{solve, Q};
use crate::PosetError;

/// Skeleton of a finite EI-category: one object per isomorphism class and
/// the sizes of hom-sets between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategorySkeleton {
    labels: Vec<String>,
    hom: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EulerCharacteristic {
    Defined(Q),
    /// no weighting or no coweighting exists
    Undefined,
}

impl EulerCharacteristic {
    pub fn value(&self) -> Option<&Q> {
        match self {
            EulerCharacteristic::Defined(q) => Some(q),
            EulerCharacteristic::Undefined => None,
        }
    }
}

impl CategorySkeleton {
    pub fn new(labels: Vec<String>, hom: Vec<Vec<u64>>) -> Result<Self, PosetError> {
        let n = labels.len();
        if hom.len() != n || hom.iter().any(|r| r.len() != n) {
            return Err(PosetError::InvalidSkeleton("hom matrix has the wrong shape".into()));
        }
        for a in 0..n {
            if hom[a][a] == 0 {
                return Err(PosetError::InvalidSkeleton(format!("object {} has no identity", labels[a])));
            }
            for b in a + 1..n {
                if hom[a][b] > 0 && hom[b][a] > 0 {
                    return Err(PosetError::InvalidSkeleton(format!(
                        "objects {} and {} map to each other and should be merged",
                        labels[a], labels[b]
                    )));
                }
            }
        }
        Ok(CategorySkeleton { labels, hom })
    }

    /// Merges objects that map to each other (isomorphic in an EI-category),
    /// keeping the first of each class. Returns the skeleton and the class
    /// of every input object.
    pub fn merging_isomorphic(labels: Vec<String>, hom: Vec<Vec<u64>>) -> Result<(Self, Vec<usize>), PosetError> {
        let n = labels.len();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            class_of[a] = reps.len();
            for b in a + 1..n {
                if class_of[b] == usize::MAX && hom[a][b] > 0 && hom[b][a] > 0 {
                    class_of[b] = reps.len();
                }
            }
            reps.push(a);
        }
        let sk_labels = reps.iter().map(|&a| labels[a].clone()).collect();
        let sk_hom = reps.iter().map(|&a| reps.iter().map(|&b| hom[a][b]).collect()).collect();
        Ok((Self::new(sk_labels, sk_hom)?, class_of))
    }

    pub fn from_poset(p: &FinitePoset) -> Self {
        let n = p.size();
        let hom = (0..n).map(|a| (0..n).map(|b| u64::from(p.leq(a, b))).collect()).collect();
        CategorySkeleton { labels: p.labels().to_vec(), hom }
    }

    pub fn object_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn hom(&self, a: usize, b: usize) -> u64 {
        self.hom[a][b]
    }

    fn zeta(&self, transpose: bool) -> Vec<Vec<Q>> {
        let n = self.object_count();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| Q::from_integer(if transpose { self.hom[b][a] } else { self.hom[a][b] }.into()))
                    .collect()
            })
            .collect()
    }

    /// A solution of `sum_b |Hom(a,b)| k^b = 1`, if one exists.
    pub fn weighting(&self) -> Option<Vec<Q>> {
        let ones = vec![Q::one(); self.object_count()];
        solve(&self.zeta(false), &ones).any().map(<[Q]>::to_vec)
    }

    /// A solution of `sum_a k_a |Hom(a,b)| = 1`, if one exists.
    pub fn coweighting(&self) -> Option<Vec<Q>> {
        let ones = vec![Q::one(); self.object_count()];
        solve(&self.zeta(true), &ones).any().map(<[Q]>::to_vec)
    }

    /// Leinster Euler characteristic: defined when both a weighting and a
    /// coweighting exist, in which case their sums must agree.
    pub fn euler_characteristic(&self) -> Result<EulerCharacteristic, PosetError> {
        let (Some(w), Some(c)) = (self.weighting(), self.coweighting()) else {
            return Ok(EulerCharacteristic::Undefined);
        };
        let sw: Q = w.iter().sum();
        let sc: Q = c.iter().sum();
        if sw != sc {
            return Err(PosetError::Inconsistent(format!(
                "weighting sum {} differs from coweighting sum {}",
                crate::fmt_q(&sw),
                crate::fmt_q(&sc)
            )));
        }
        Ok(EulerCharacteristic::Defined(sw))
    }

    /// Whether some pair of distinct objects has morphisms both ways.
    pub fn has_mutual_morphisms(&self) -> bool {
        let n = self.object_count();
        (0..n).any(|a| (a + 1..n).any(|b| self.hom[a][b] > 0 && self.hom[b][a] > 0))
    }
}

pub fn sum_q(v: &[Q]) -> Q {
    v.iter().fold(Q::zero(), |a, b| a + b)
}
