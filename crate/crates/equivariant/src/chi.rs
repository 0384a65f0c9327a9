use num_bigint::BigInt;
use num_traits::One;
use permcore::{PermGroup, Subgroup};
use posetcat::{fmt_q, qi, to_integer, Q};
use rustc_hash::FxHashMap;
use subgroups::{abelian_subgroups, DEFAULT_FAMILY_CAP};

use crate::aposet::SubgroupAPoset;
use crate::classfn::ClassFunction;
use crate::tuples::{commuting_tuple_count, phi_r};
use crate::EquivariantError;

/// `chi_r` and its reduced form for one value of r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantChi {
    pub r: usize,
    pub chi: Q,
    pub reduced: Q,
}

/// Memoized `phi_r` keyed by the sorted element orders, which determine an
/// abelian group up to isomorphism.
struct PhiCache {
    r: usize,
    map: FxHashMap<Vec<u64>, BigInt>,
}

impl PhiCache {
    fn new(r: usize) -> Self {
        PhiCache { r, map: FxHashMap::default() }
    }

    fn get(&mut self, g: &PermGroup, b: &Subgroup) -> Result<BigInt, EquivariantError> {
        let mut key: Vec<u64> = b.elements().iter().map(|&x| g.element_order(x)).collect();
        key.sort_unstable();
        if let Some(v) = self.map.get(&key) {
            return Ok(v.clone());
        }
        let v = phi_r(g, b, self.r)?;
        self.map.insert(key, v.clone());
        Ok(v)
    }
}

fn shift(e: BigInt, reduced: bool) -> BigInt {
    if reduced {
        e - 1
    } else {
        e
    }
}

/// `(1/|A|) sum_B chi(C_P(B)) phi_r(B)` over the abelian subgroups B of A,
/// one term per conjugacy class of B weighted by the class length.
pub fn chi_r_by_abelian_subgroups(ap: &SubgroupAPoset<'_, '_>, r: usize, reduced: bool) -> Result<Q, EquivariantError> {
    let a = ap.pair().acting();
    let fam = abelian_subgroups(a, usize::MAX, None, DEFAULT_FAMILY_CAP)?;
    let mut phi = PhiCache::new(r);
    let all = ap.all();
    let mut total = BigInt::from(0);
    for c in 0..fam.class_count() {
        let b = fam.representative(c);
        let f = phi.get(a, b)?;
        if f == BigInt::from(0) {
            continue;
        }
        let fixed = ap.fixed_by(&all, b.generators());
        total += shift(ap.euler(&fixed)?, reduced) * f * fam.class_len(c);
    }
    Ok(Q::new(total, BigInt::from(a.order())))
}

struct Recursion<'x, 'p, 'g> {
    ap: &'x SubgroupAPoset<'p, 'g>,
    reduced: bool,
    memo: FxHashMap<(usize, Vec<usize>, Vec<u32>), Q>,
}

impl Recursion<'_, '_, '_> {
    /// `chi_r(C_P(D), K)` where `fixed` is the member set of `C_P(D)`.
    fn run(&mut self, fixed: &[usize], k: &Subgroup, r: usize) -> Result<Q, EquivariantError> {
        if r == 0 {
            let e = shift(self.ap.euler(fixed)?, self.reduced);
            return Ok(Q::new(e, BigInt::from(k.order())));
        }
        let key = (r, fixed.to_vec(), k.elements().to_vec());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let a = self.ap.pair().acting();
        let mut total = qi(0);
        for class in a.classes_of_subgroup(k) {
            let x = class[0];
            let sub = self.ap.fixed_by(fixed, &[x]);
            let c = a.centralizer_in(k, &[x]);
            total += self.run(&sub, &c, r - 1)?;
        }
        self.memo.insert(key, total.clone());
        Ok(total)
    }
}

/// `sum_{[x]} chi_{r-1}(C_P(x), C_A(x))`, recursively down to
/// `chi_0 = chi / |A|`.
pub fn chi_r_by_recursion(ap: &SubgroupAPoset<'_, '_>, r: usize, reduced: bool) -> Result<Q, EquivariantError> {
    let mut rec = Recursion { ap, reduced, memo: FxHashMap::default() };
    rec.run(&ap.all(), &ap.pair().acting().whole(), r)
}

/// `chi_r` and its reduced form, each computed along both routes, which must
/// agree, differ by `|C_r(A)|/|A|`, and be integers for r >= 1.
pub fn chi_r(ap: &SubgroupAPoset<'_, '_>, r: usize) -> Result<EquivariantChi, EquivariantError> {
    let mut out = Vec::with_capacity(2);
    for reduced in [false, true] {
        let x = chi_r_by_recursion(ap, r, reduced)?;
        let y = chi_r_by_abelian_subgroups(ap, r, reduced)?;
        if x != y {
            return Err(EquivariantError::Inconsistent(format!(
                "chi_{r} (reduced: {reduced}) is {} by recursion and {} by abelian subgroups",
                fmt_q(&x),
                fmt_q(&y)
            )));
        }
        if r >= 1 && !x.is_integer() {
            return Err(EquivariantError::NonIntegral(format!("chi_{r} = {}", fmt_q(&x))));
        }
        out.push(x);
    }
    let a = ap.pair().acting();
    let gap = Q::new(commuting_tuple_count(a, r), BigInt::from(a.order()));
    if &out[0] - &out[1] != gap {
        return Err(EquivariantError::Inconsistent(format!("chi_{r} - reduced chi_{r} != |C_r(A)|/|A|")));
    }
    let reduced = out.pop().expect("two entries");
    let chi = out.pop().expect("two entries");
    Ok(EquivariantChi { r, chi, reduced })
}

/// The Euler class function `alpha_r`, or its reduced form, on the classes of
/// the acting group: `x -> chi_{r-1}(C_P(x), C_A(x))`. For r >= 2 the values
/// must be integers.
pub fn euler_class_function(
    ap: &SubgroupAPoset<'_, '_>,
    r: usize,
    reduced: bool,
) -> Result<ClassFunction, EquivariantError> {
    assert!(r >= 1, "Euler class functions start at r = 1");
    let a = ap.pair().acting();
    let classes = a.conjugacy_classes();
    let all = ap.all();
    let mut rec = Recursion { ap, reduced, memo: FxHashMap::default() };
    let mut values = Vec::with_capacity(classes.len());
    for &x in &classes.representatives {
        let fixed = ap.fixed_by(&all, &[x]);
        let c = a.centralizer(&[x])?;
        let v = rec.run(&fixed, &c, r - 1)?;
        if r >= 2 && !v.is_integer() {
            return Err(EquivariantError::NonIntegral(format!("alpha_{r} at an element of order {}", a.element_order(x))));
        }
        values.push(v);
    }
    Ok(ClassFunction::new(&classes, values))
}

/// `x -> chi(C_P(x))` (or the reduced value) on the classes of the acting
/// group.
pub fn centralizer_euler_characteristics(
    ap: &SubgroupAPoset<'_, '_>,
    reduced: bool,
) -> Result<ClassFunction, EquivariantError> {
    let a = ap.pair().acting();
    let classes = a.conjugacy_classes();
    let all = ap.all();
    let values = classes
        .representatives
        .iter()
        .map(|&x| Ok(qi(shift(ap.euler(&ap.fixed_by(&all, &[x]))?, reduced))))
        .collect::<Result<Vec<_>, EquivariantError>>()?;
    Ok(ClassFunction::new(&classes, values))
}

/// Reduced `chi_r` of a poset of subgroups of G under conjugation by a
/// subgroup K of G, from the abelian p'-subgroups B of G:
/// `(1/|K|) sum_[B] chi~(C_P(B)) phi_r(B) S_G([B], K)` where `S_G([B], K)`
/// counts the conjugates of B inside K. `ap` must be built over the pair of
/// G acting on itself.
pub fn chi_r_for_subgroup(
    ap: &SubgroupAPoset<'_, '_>,
    p: u64,
    k: &Subgroup,
    r: usize,
) -> Result<BigInt, EquivariantError> {
    let g = ap.pair().group();
    let fam = abelian_subgroups(g, usize::MAX, Some(p), DEFAULT_FAMILY_CAP)?;
    let mut phi = PhiCache::new(r);
    let all = ap.all();
    let mut total = BigInt::from(0);
    for c in 0..fam.class_count() {
        let inside = fam.class_members(c).filter(|&i| fam.member(i).is_subgroup_of(k)).count();
        if inside == 0 {
            continue;
        }
        let b = fam.representative(c);
        let f = phi.get(g, b)?;
        if f == BigInt::from(0) {
            continue;
        }
        let gens = b.generators().to_vec();
        let fixed = ap.fixed_where(&all, |h| gens.iter().all(|&x| h.generators().iter().all(|&y| h.contains(g.conj(y, x)))));
        total += (ap.euler(&fixed)? - BigInt::one()) * f * inside;
    }
    let v = Q::new(total, BigInt::from(k.order()));
    to_integer(&v).ok_or_else(|| EquivariantError::NonIntegral(format!("reduced chi_{r} at K = {}", fmt_q(&v))))
}
