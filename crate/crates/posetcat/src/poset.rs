use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::PosetError;

/// Square bit matrix, row `a` holding the set of `b` with `a <= b`.
#[derive(Clone, PartialEq, Eq)]
struct BitRows {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitRows { n, words, bits: vec![0; n * words] }
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / 64] |= 1 << (b % 64);
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.words..(a + 1) * self.words]
    }

    fn iter_row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(a).iter().enumerate().flat_map(|(w, &word)| {
            let mut x = word;
            std::iter::from_fn(move || {
                if x == 0 {
                    return None;
                }
                let t = x.trailing_zeros() as usize;
                x &= x - 1;
                Some(w * 64 + t)
            })
        })
    }

    fn transpose(&self) -> BitRows {
        let mut t = BitRows::new(self.n);
        for a in 0..self.n {
            for b in self.iter_row(a) {
                t.set(b, a);
            }
        }
        t
    }
}

/// A finite poset on `0..n` with labels.
#[derive(Clone)]
pub struct FinitePoset {
    labels: Vec<String>,
    up: BitRows,
    down: BitRows,
    /// indices sorted so that `a < b` implies `a` comes first
    extension: Vec<usize>,
}

impl std::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FinitePoset").field("labels", &self.labels).field("covers", &self.cover_relations()).finish()
    }
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.up == other.up
    }
}

impl FinitePoset {
    /// Builds and validates a poset from a relation.
    pub fn new(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self, PosetError> {
        let p = Self::new_unchecked(labels, leq);
        p.validate()?;
        Ok(p)
    }

    /// Builds a poset from a relation known to be a partial order, such as
    /// inclusion of subgroups.
    pub fn new_unchecked(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Self {
        let n = labels.len();
        let mut up = BitRows::new(n);
        for a in 0..n {
            for b in 0..n {
                if a == b || leq(a, b) {
                    up.set(a, b);
                }
            }
        }
        Self::from_rows(labels, up)
    }

    fn from_rows(labels: Vec<String>, up: BitRows) -> Self {
        let down = up.transpose();
        let n = labels.len();
        let below: Vec<usize> = (0..n).map(|a| down.row(a).iter().map(|w| w.count_ones() as usize).sum()).collect();
        let mut extension: Vec<usize> = (0..n).collect();
        extension.sort_by_key(|&a| (below[a], a));
        FinitePoset { labels, up, down, extension }
    }

    fn validate(&self) -> Result<(), PosetError> {
        let n = self.size();
        for a in 0..n {
            for b in self.up.iter_row(a) {
                if b != a && self.up.get(b, a) {
                    return Err(PosetError::NotAntisymmetric(a, b));
                }
                // row(b) must be contained in row(a)
                for (w, (&x, &y)) in self.up.row(b).iter().zip(self.up.row(a)).enumerate() {
                    if x & !y != 0 {
                        let c = w * 64 + (x & !y).trailing_zeros() as usize;
                        return Err(PosetError::NotTransitive(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn empty() -> Self {
        Self::new_unchecked(Vec::new(), |_, _| false)
    }

    pub fn chain(n: usize) -> Self {
        Self::new_unchecked((0..n).map(|i| i.to_string()).collect(), |a, b| a <= b)
    }

    pub fn antichain(n: usize) -> Self {
        Self::new_unchecked((0..n).map(|i| i.to_string()).collect(), |a, b| a == b)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up.get(a, b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.up.get(a, b)
    }

    /// Elements `b >= a`.
    pub fn above(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.up.iter_row(a)
    }

    /// Elements `b <= a`.
    pub fn below(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.down.iter_row(a)
    }

    pub fn linear_extension(&self) -> &[usize] {
        &self.extension
    }

    pub fn zeta_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n).map(|a| (0..n).map(|b| i64::from(self.leq(a, b))).collect()).collect()
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size() {
            for b in self.above(a) {
                if b != a && !self.above(a).any(|c| c != a && c != b && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.size()).find(|&m| self.below(m).count() == self.size())
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.size()).find(|&m| self.above(m).count() == self.size())
    }

    /// Integer inverse of the zeta matrix: `mu(a,b) = -sum_{a<=c<b} mu(a,c)`.
    pub fn moebius_matrix(&self) -> Vec<Vec<BigInt>> {
        let n = self.size();
        let mut mu = vec![vec![BigInt::zero(); n]; n];
        for a in 0..n {
            mu[a][a] = BigInt::one();
            for &b in &self.extension {
                if b == a || !self.leq(a, b) {
                    continue;
                }
                let mut s = BigInt::zero();
                for c in self.below(b) {
                    if c != b && self.leq(a, c) {
                        s += &mu[a][c];
                    }
                }
                mu[a][b] = -s;
            }
        }
        mu
    }

    /// The weighting `k^a = sum_{b >= a} mu(a,b)`, computed as
    /// `k^a = 1 - sum_{b > a} k^b`.
    pub fn weighting(&self) -> Vec<BigInt> {
        let mut k = vec![BigInt::zero(); self.size()];
        for &a in self.extension.iter().rev() {
            let mut s = BigInt::one();
            for b in self.above(a) {
                if b != a {
                    s -= &k[b];
                }
            }
            k[a] = s;
        }
        k
    }

    /// The coweighting `k_b = 1 - sum_{a < b} k_a`.
    pub fn coweighting(&self) -> Vec<BigInt> {
        let mut k = vec![BigInt::zero(); self.size()];
        for &b in &self.extension {
            let mut s = BigInt::one();
            for a in self.below(b) {
                if a != b {
                    s -= &k[a];
                }
            }
            k[b] = s;
        }
        k
    }

    /// Euler characteristic as the sum of the weighting; the coweighting sum
    /// must agree.
    pub fn euler_characteristic(&self) -> Result<BigInt, PosetError> {
        let w: BigInt = self.weighting().iter().sum();
        let c: BigInt = self.coweighting().iter().sum();
        if w != c {
            return Err(PosetError::Inconsistent(format!("weighting sum {w} != coweighting sum {c}")));
        }
        Ok(w)
    }

    pub fn reduced_euler_characteristic(&self) -> Result<BigInt, PosetError> {
        Ok(self.euler_characteristic()? - 1)
    }

    /// Number of chains with `d + 1` elements, for each `d`.
    pub fn chain_counts(&self) -> Vec<BigInt> {
        let n = self.size();
        // ending[a][d] = number of chains of d+1 elements with top a
        let mut ending: Vec<Vec<BigInt>> = vec![Vec::new(); n];
        let mut total: Vec<BigInt> = Vec::new();
        for &a in &self.extension {
            let mut row = vec![BigInt::one()];
            for b in self.below(a) {
                if b == a {
                    continue;
                }
                for (d, c) in ending[b].iter().enumerate() {
                    if row.len() <= d + 1 {
                        row.push(BigInt::zero());
                    }
                    row[d + 1] += c;
                }
            }
            for (d, c) in row.iter().enumerate() {
                if total.len() <= d {
                    total.push(BigInt::zero());
                }
                total[d] += c;
            }
            ending[a] = row;
        }
        total
    }

    /// Alternating count of chains.
    pub fn euler_characteristic_via_chains(&self) -> BigInt {
        self.chain_counts()
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (d, c)| if d % 2 == 0 { acc + c } else { acc - c })
    }

    /// All nonempty chains, each listed bottom to top.
    pub fn chains(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut stack: Vec<Vec<u32>> = self.extension.iter().map(|&a| vec![a as u32]).collect();
        while let Some(c) = stack.pop() {
            let top = *c.last().unwrap() as usize;
            for b in self.above(top) {
                if b != top {
                    let mut d = c.clone();
                    d.push(b as u32);
                    stack.push(d);
                }
            }
            out.push(c);
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub fn delta_set(&self) -> DeltaSet {
        let mut dims: Vec<Vec<Vec<u32>>> = Vec::new();
        for c in self.chains() {
            let d = c.len() - 1;
            if dims.len() <= d {
                dims.resize(d + 1, Vec::new());
            }
            dims[d].push(c);
        }
        DeltaSet { simplices_by_dim: dims }
    }

    /// Poset of nonempty chains ordered by inclusion.
    pub fn subdivision(&self) -> FinitePoset {
        let chains = self.chains();
        let labels = chains
            .iter()
            .map(|c| c.iter().map(|&i| self.labels[i as usize].as_str()).collect::<Vec<_>>().join("<"))
            .collect();
        FinitePoset::new_unchecked(labels, |a, b| is_subsequence(&chains[a], &chains[b]))
    }

    /// Induced subposet on `elems` (in the given order).
    pub fn induced(&self, elems: &[usize]) -> FinitePoset {
        let labels = elems.iter().map(|&i| self.labels[i].clone()).collect();
        let mut up = BitRows::new(elems.len());
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                if self.leq(a, b) {
                    up.set(i, j);
                }
            }
        }
        Self::from_rows(labels, up)
    }

    pub fn is_up_closed(&self, elems: &[usize]) -> bool {
        let mut inside = vec![false; self.size()];
        elems.iter().for_each(|&e| inside[e] = true);
        elems.iter().all(|&a| self.above(a).all(|b| inside[b]))
    }

    pub fn is_down_closed(&self, elems: &[usize]) -> bool {
        let mut inside = vec![false; self.size()];
        elems.iter().for_each(|&e| inside[e] = true);
        elems.iter().all(|&a| self.below(a).all(|b| inside[b]))
    }

    /// Open interval `(a, b)`.
    pub fn open_interval(&self, a: usize, b: usize) -> Vec<usize> {
        self.above(a).filter(|&c| c != a && c != b && self.leq(c, b)).collect()
    }

    pub fn is_order_automorphism(&self, perm: &[u32]) -> bool {
        let n = self.size();
        if perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &x in perm {
            if x as usize >= n || std::mem::replace(&mut seen[x as usize], true) {
                return false;
            }
        }
        (0..n).all(|a| (0..n).all(|b| self.leq(a, b) == self.leq(perm[a] as usize, perm[b] as usize)))
    }
}

fn is_subsequence(a: &[u32], b: &[u32]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// Chains of a poset graded by dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSet {
    pub simplices_by_dim: Vec<Vec<Vec<u32>>>,
}

impl DeltaSet {
    pub fn counts(&self) -> Vec<usize> {
        self.simplices_by_dim.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.simplices_by_dim
            .iter()
            .enumerate()
            .map(|(d, s)| if d % 2 == 0 { BigInt::from(s.len()) } else { -BigInt::from(s.len()) })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean_lattice(k: usize) -> FinitePoset {
        FinitePoset::new((0..1usize << k).map(|i| format!("{i:b}")).collect(), |a, b| a & b == a).unwrap()
    }

    #[test]
    fn validation_rejects_non_orders() {
        let e = FinitePoset::new(vec!["a".into(), "b".into()], |_, _| true);
        assert!(matches!(e, Err(PosetError::NotAntisymmetric(..))));
        let rel = |a: usize, b: usize| a == b || (a, b) == (0, 1) || (a, b) == (1, 2);
        assert!(matches!(FinitePoset::new(vec!["a".into(), "b".into(), "c".into()], rel), Err(PosetError::NotTransitive(..))));
    }

    #[test]
    fn two_chain_moebius() {
        let c = FinitePoset::chain(2);
        let mu = c.moebius_matrix();
        assert_eq!(mu[0][1], BigInt::from(-1));
        assert_eq!(mu[1][1], BigInt::from(1));
    }

    #[test]
    fn boolean_lattice_moebius() {
        let b = boolean_lattice(3);
        assert_eq!(b.moebius_matrix()[0][7], BigInt::from(-1));
        // bottom removed: the rest has a maximum
        assert_eq!(b.euler_characteristic().unwrap(), BigInt::from(1));
        let proper: Vec<usize> = (1..7).collect();
        // boundary of a triangle, a circle
        assert_eq!(b.induced(&proper).euler_characteristic().unwrap(), BigInt::from(0));
    }

    #[test]
    fn empty_and_point() {
        let e = FinitePoset::empty();
        assert_eq!(e.euler_characteristic().unwrap(), BigInt::zero());
        assert_eq!(e.reduced_euler_characteristic().unwrap(), BigInt::from(-1));
        assert!(e.subdivision().is_empty());
        assert_eq!(FinitePoset::chain(1).euler_characteristic_via_chains(), BigInt::one());
    }

    #[test]
    fn subdivision_of_edge() {
        let sd = FinitePoset::chain(2).subdivision();
        assert_eq!(sd.size(), 3);
        assert_eq!(sd.euler_characteristic().unwrap(), BigInt::one());
        assert_eq!(sd.maximum().map(|m| sd.labels()[m].clone()), Some("0<1".to_string()));
    }

    #[test]
    fn antichain_delta_set() {
        let a = FinitePoset::antichain(4);
        assert_eq!(a.delta_set().counts(), vec![4]);
        assert_eq!(a.euler_characteristic_via_chains(), BigInt::from(4));
        assert!(a.cover_relations().is_empty());
    }
}
