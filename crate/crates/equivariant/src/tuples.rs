use num_bigint::BigInt;
use num_traits::{One, Zero};
use permcore::{prime_divisors, PermGroup, Subgroup};
use rustc_hash::FxHashMap;
use subgroups::{all_subgroups, is_abelian, DEFAULT_FAMILY_CAP};

use crate::EquivariantError;

/// `|C_r(A)|`, by the recursion over conjugacy classes and centralizers.
pub fn commuting_tuple_count(a: &PermGroup, r: usize) -> BigInt {
    let mut memo = FxHashMap::default();
    count_in(a, &a.whole(), r, &mut memo)
}

fn count_in(a: &PermGroup, k: &Subgroup, r: usize, memo: &mut FxHashMap<(Vec<u32>, usize), BigInt>) -> BigInt {
    if r == 0 {
        return BigInt::one();
    }
    if r == 1 {
        return BigInt::from(k.order());
    }
    let key = (k.elements().to_vec(), r);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for class in a.classes_of_subgroup(k) {
        let c = a.centralizer_in(k, &[class[0]]);
        total += count_in(a, &c, r - 1, memo) * class.len();
    }
    memo.insert(key, total.clone());
    total
}

/// `|C_r(A)|` by scanning `A^r`.
pub fn commuting_tuple_count_brute(a: &PermGroup, r: usize) -> u64 {
    fn go(a: &PermGroup, chosen: &mut Vec<u32>, r: usize) -> u64 {
        if chosen.len() == r {
            return 1;
        }
        let mut n = 0;
        for x in a.elements() {
            if chosen.iter().all(|&y| a.mul(x, y) == a.mul(y, x)) {
                chosen.push(x);
                n += go(a, chosen, r);
                chosen.pop();
            }
        }
        n
    }
    go(a, &mut Vec::new(), r)
}

/// Number of commuting r-tuples in B generating B, for a subgroup B of `g`.
/// Obtained by Moebius inversion of `sum_{D <= B} phi_r(D) = |B|^r` over the
/// subgroup lattice of B. Zero when B is not abelian.
pub fn phi_r(g: &PermGroup, b: &Subgroup, r: usize) -> Result<BigInt, EquivariantError> {
    if !is_abelian(g, b) {
        return Ok(BigInt::zero());
    }
    if b.is_trivial() {
        return Ok(BigInt::one());
    }
    let gens = b.generators().iter().map(|&x| g.element(x)).collect();
    let small = PermGroup::new(g.degree(), gens)?;
    let fam = all_subgroups(&small, DEFAULT_FAMILY_CAP)?;
    let mut order: Vec<usize> = (0..fam.len()).collect();
    order.sort_by_key(|&i| fam.member(i).order());
    let mut phi: Vec<BigInt> = vec![BigInt::zero(); fam.len()];
    for (pos, &i) in order.iter().enumerate() {
        let d = fam.member(i);
        let mut v = BigInt::from(d.order()).pow(r as u32);
        for &j in &order[..pos] {
            let e = fam.member(j);
            if e.order() < d.order() && e.is_subgroup_of(d) {
                v -= &phi[j];
            }
        }
        phi[i] = v;
    }
    Ok(phi[*order.last().expect("nonempty lattice")].clone())
}

/// The same count as a product over the Sylow subgroups: an abelian p-group
/// P with Frattini quotient of rank d has `(|P|/p^d)^r prod_{i<d} (p^r - p^i)`
/// generating r-tuples.
pub fn phi_r_by_sylow(g: &PermGroup, b: &Subgroup, r: usize) -> Result<BigInt, EquivariantError> {
    if !is_abelian(g, b) {
        return Ok(BigInt::zero());
    }
    let mut total = BigInt::one();
    for p in prime_divisors(b.order() as u64) {
        let sylow = g.sylow_in(b, p)?;
        let frattini = g.frattini(&sylow, p)?;
        let quotient = sylow.order() / frattini.order();
        let d = log_exact(quotient as u64, p);
        let pr = BigInt::from(p).pow(r as u32);
        let mut v = BigInt::from(frattini.order()).pow(r as u32);
        for i in 0..d {
            v *= &pr - BigInt::from(p).pow(i as u32);
        }
        total *= v;
    }
    Ok(total)
}

fn log_exact(mut n: u64, p: u64) -> usize {
    let mut k = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0);
        n /= p;
        k += 1;
    }
    k
}

/// Generating commuting r-tuples of B by direct enumeration of `B^r`.
pub fn phi_r_brute(g: &PermGroup, b: &Subgroup, r: usize) -> u64 {
    fn go(g: &PermGroup, b: &Subgroup, chosen: &mut Vec<u32>, r: usize) -> u64 {
        if chosen.len() == r {
            return u64::from(g.closure(chosen).order() == b.order());
        }
        let mut n = 0;
        for &x in b.elements() {
            if chosen.iter().all(|&y| g.mul(x, y) == g.mul(y, x)) {
                chosen.push(x);
                n += go(g, b, chosen, r);
                chosen.pop();
            }
        }
        n
    }
    go(g, b, &mut Vec::new(), r)
}
