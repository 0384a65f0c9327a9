use num_bigint::BigInt;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use crate::poset::FinitePoset;
use crate::rational::{solve, to_integer, Solution, Q};
use crate::PosetError;

/// A finite group acting on a poset by order automorphisms.
///
/// `generators` drive orbit computations. `elements` lists every group
/// element up to multiplicity (for example one per conjugacy class with the
/// class size), which is all that fixed-point averages need.
#[derive(Clone, Debug)]
pub struct PosetAction {
    generators: Vec<Vec<u32>>,
    elements: Vec<(Vec<u32>, u64)>,
    order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbits {
    pub orbit_of: Vec<usize>,
    /// sorted members, orbits ordered by least member
    pub orbits: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientDeltaEuler {
    /// number of orbits of d-simplices
    pub simplex_orbits: Vec<u64>,
    pub chi: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitWeighting {
    pub orbits: Orbits,
    /// `successors[x][y]` = number of t in y above a fixed s in x
    pub successors: Vec<Vec<u64>>,
    /// `predecessors[x][y]` = number of s in x below a fixed t in y
    pub predecessors: Vec<Vec<u64>>,
    pub weighting: Vec<BigInt>,
    pub coweighting: Vec<BigInt>,
}

impl OrbitWeighting {
    pub fn euler_characteristic(&self) -> BigInt {
        self.weighting.iter().zip(&self.orbits.orbits).map(|(k, o)| k * BigInt::from(o.len())).sum()
    }
}

impl PosetAction {
    pub fn new(poset: &FinitePoset, generators: Vec<Vec<u32>>, elements: Vec<(Vec<u32>, u64)>) -> Result<Self, PosetError> {
        for g in generators.iter().chain(elements.iter().map(|(e, _)| e)) {
            if !poset.is_order_automorphism(g) {
                return Err(PosetError::NotAutomorphism);
            }
        }
        let order = elements.iter().map(|(_, m)| m).sum();
        if order == 0 {
            return Err(PosetError::Inconsistent("acting group has no elements".into()));
        }
        Ok(PosetAction { generators, elements, order })
    }

    pub fn trivial(poset: &FinitePoset) -> Self {
        let id: Vec<u32> = (0..poset.size() as u32).collect();
        PosetAction { generators: Vec::new(), elements: vec![(id, 1)], order: 1 }
    }

    pub fn group_order(&self) -> u64 {
        self.order
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn orbits(&self, n: usize) -> Orbits {
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for s in 0..n {
            if orbit_of[s] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            orbit_of[s] = id;
            let mut orb = vec![s];
            let mut head = 0;
            while head < orb.len() {
                let x = orb[head];
                head += 1;
                for g in &self.generators {
                    let y = g[x] as usize;
                    if orbit_of[y] == usize::MAX {
                        orbit_of[y] = id;
                        orb.push(y);
                    }
                }
            }
            orb.sort_unstable();
            orbits.push(orb);
        }
        Orbits { orbit_of, orbits }
    }

    /// Orbit poset: orbits ordered by `x <= y` iff some member of x lies
    /// below some member of y.
    pub fn orbit_poset(&self, poset: &FinitePoset) -> (FinitePoset, Orbits) {
        let o = self.orbits(poset.size());
        let labels = o.orbits.iter().map(|m| poset.labels()[m[0]].clone()).collect();
        let q = FinitePoset::new_unchecked(labels, |x, y| {
            let s = o.orbits[x][0];
            o.orbits[y].iter().any(|&t| poset.leq(s, t))
        });
        (q, o)
    }

    /// Euler characteristic of the orbit Delta-set, by enumerating simplex
    /// orbits and independently by averaging the Euler characteristics of
    /// fixed subposets; the two must agree.
    pub fn quotient_delta_euler(&self, poset: &FinitePoset) -> Result<QuotientDeltaEuler, PosetError> {
        let chains = poset.chains();
        let index: FxHashMap<&[u32], usize> = chains.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
        let mut seen = vec![false; chains.len()];
        let mut simplex_orbits: Vec<u64> = Vec::new();
        for i in 0..chains.len() {
            if seen[i] {
                continue;
            }
            seen[i] = true;
            let d = chains[i].len() - 1;
            if simplex_orbits.len() <= d {
                simplex_orbits.resize(d + 1, 0);
            }
            simplex_orbits[d] += 1;
            let mut stack = vec![i];
            while let Some(c) = stack.pop() {
                for g in &self.generators {
                    let img: Vec<u32> = chains[c].iter().map(|&x| g[x as usize]).collect();
                    let j = *index.get(img.as_slice()).ok_or(PosetError::NotAutomorphism)?;
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        let chi: BigInt = simplex_orbits
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { BigInt::from(c) } else { -BigInt::from(c) })
            .sum();
        let mut avg = BigInt::zero();
        for (g, m) in &self.elements {
            let fixed: Vec<usize> = (0..poset.size()).filter(|&s| g[s] as usize == s).collect();
            avg += poset.induced(&fixed).euler_characteristic()? * BigInt::from(*m);
        }
        if avg != &chi * BigInt::from(self.order) {
            return Err(PosetError::Inconsistent(format!(
                "orbit Delta-set gives {chi}, fixed-point average gives {avg}/{}",
                self.order
            )));
        }
        Ok(QuotientDeltaEuler { simplex_orbits, chi })
    }

    /// The weighting and coweighting on the orbit set, solved from the
    /// successor/predecessor tables and checked against the element-level
    /// weighting and coweighting of the poset.
    pub fn orbit_weighting(&self, poset: &FinitePoset) -> Result<OrbitWeighting, PosetError> {
        let orbits = self.orbits(poset.size());
        let m = orbits.orbits.len();
        let mut successors = vec![vec![0u64; m]; m];
        let mut predecessors = vec![vec![0u64; m]; m];
        for x in 0..m {
            let s = orbits.orbits[x][0];
            for t in poset.above(s) {
                successors[x][orbits.orbit_of[t]] += 1;
            }
            for t in poset.below(s) {
                // t in orbit y lies below s in x
                predecessors[orbits.orbit_of[t]][x] += 1;
            }
        }
        let to_q = |rows: &Vec<Vec<u64>>, transpose: bool| -> Vec<Vec<Q>> {
            (0..m)
                .map(|i| (0..m).map(|j| Q::from_integer(if transpose { rows[j][i] } else { rows[i][j] }.into())).collect())
                .collect()
        };
        let ones = vec![Q::one(); m];
        let integral = |s: Solution, what: &str| -> Result<Vec<BigInt>, PosetError> {
            match s {
                Solution::Unique(v) => v
                    .iter()
                    .map(|x| to_integer(x).ok_or_else(|| PosetError::Inconsistent(format!("non-integral orbit {what}"))))
                    .collect(),
                _ => Err(PosetError::Inconsistent(format!("orbit {what} system is singular"))),
            }
        };
        let weighting = integral(solve(&to_q(&successors, false), &ones), "weighting")?;
        let coweighting = integral(solve(&to_q(&predecessors, true), &ones), "coweighting")?;
        let w = poset.weighting();
        let c = poset.coweighting();
        for s in 0..poset.size() {
            let x = orbits.orbit_of[s];
            if w[s] != weighting[x] || c[s] != coweighting[x] {
                return Err(PosetError::Inconsistent(format!("orbit weighting differs from pullback at {}", poset.labels()[s])));
            }
        }
        Ok(OrbitWeighting { orbits, successors, predecessors, weighting, coweighting })
    }
}
