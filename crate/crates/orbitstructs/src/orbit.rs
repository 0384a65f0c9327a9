use equivariant::{centralizer_euler_characteristics, BrownVariant, SubgroupAPoset};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use permcore::{p_part, Perm, PermGroup};
use posetcat::{fractions_json, qi, CategorySkeleton, EulerCharacteristic, Q};
use serde_json::{json, Value};
use subgroups::{
    all_subgroups, is_cyclic, p_subgroups, prime_power_cyclic_generators, radical_p_subgroups, GroupPair,
    SubgroupError, SubgroupFamily, TableMode,
};

use crate::check::{checks_json, ensure, Check};
use crate::local::{local_reduced_euler, trivial_pair};
use crate::OrbitError;

/// Which objects a skeleton of the orbit category keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkeletonKind {
    AllPSubgroups,
    /// the full subcategory on radical subgroups, used when the family of all
    /// p-subgroups exceeds the cap; it carries the same weighting
    Radical,
}

/// Skeleton of an orbit category on the classes of a subgroup family.
pub struct OrbitSkeleton {
    pub kind: SkeletonKind,
    pub orders: Vec<usize>,
    pub lengths: Vec<usize>,
    pub skeleton: CategorySkeleton,
}

/// `|N_G(H,K)| / |K|` between class representatives, by scanning G. Each
/// entry is also checked against the class-table count
/// `S(H,[K]) |N_G(K)| / |K|`.
pub fn orbit_skeleton(fam: &SubgroupFamily<'_>, kind: SkeletonKind) -> Result<OrbitSkeleton, OrbitError> {
    let g = fam.group();
    let succ = fam.class_table(TableMode::Successors)?;
    let k = fam.class_count();
    let mut hom = vec![vec![0u64; k]; k];
    for a in 0..k {
        let h = fam.representative(a);
        for b in 0..k {
            let kk = fam.representative(b);
            let expected = succ[a][b] * fam.normalizer_order(b) as u64 / kk.order() as u64;
            if kk.order() % h.order() != 0 || succ[a][b] == 0 {
                hom[a][b] = expected;
                continue;
            }
            let scan = g.transporter(h, kk).len() as u64 / kk.order() as u64;
            if scan != expected {
                return Err(OrbitError::CheckFailed {
                    name: format!("hom count between classes {a} and {b}"),
                    left: scan.to_string(),
                    right: expected.to_string(),
                });
            }
            hom[a][b] = scan;
        }
    }
    let labels = (0..k).map(|c| format!("H{c}|{}|", fam.representative(c).order())).collect();
    Ok(OrbitSkeleton {
        kind,
        orders: fam.class_orders(),
        lengths: fam.class_lengths(),
        skeleton: CategorySkeleton::new(labels, hom)?,
    })
}

/// Radical classes with `w = -chi~(S_{N_G(H)/H})` for each.
struct RadicalWeights<'g> {
    fam: SubgroupFamily<'g>,
    w: Vec<BigInt>,
}

fn radical_weights(g: &PermGroup, p: u64, cap: usize) -> Result<RadicalWeights<'_>, OrbitError> {
    let fam = radical_p_subgroups(g, p, cap)?;
    let pair = trivial_pair(g);
    let w = (0..fam.class_count())
        .map(|c| local_reduced_euler(&pair, fam.representative(c), p, cap).map(|e| -e))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RadicalWeights { fam, w })
}

/// `chi(O_G^p)` computed from the density of p-singular elements, the
/// coweighting over cyclic p-subgroups, the weighting over radical classes,
/// and by solving the skeleton.
#[derive(Clone, Debug)]
pub struct OrbitCategoryEuler {
    pub density: Q,
    pub coweighting: Q,
    pub weighting: Q,
    pub zeta: Q,
    pub kind: SkeletonKind,
    pub checks: Vec<Check>,
}

impl OrbitCategoryEuler {
    pub fn value(&self) -> &Q {
        &self.density
    }

    pub fn to_json(&self) -> Value {
        json!({
            "chi": self.density.to_string(),
            "density": self.density.to_string(),
            "coweighting": self.coweighting.to_string(),
            "weighting": self.weighting.to_string(),
            "zeta": self.zeta.to_string(),
            "skeleton": match self.kind { SkeletonKind::AllPSubgroups => "all", SkeletonKind::Radical => "radical" },
            "checks": checks_json(&self.checks),
        })
    }
}

pub fn orbit_category_euler(g: &PermGroup, p: u64, cap: usize) -> Result<OrbitCategoryEuler, OrbitError> {
    let order = qi(g.order());
    let singular = g.count_p_singular(p)?;
    let density = qi(singular) / &order;

    let one_minus = Q::one() - Q::new(BigInt::one(), BigInt::from(p));
    let mut coweighting = Q::one() / &order;
    for x in prime_power_cyclic_generators(g) {
        let n = g.element_order(x);
        if p_part(n, p) == n {
            coweighting += &one_minus * qi(n) / &order;
        }
    }

    let rad = radical_weights(g, p, cap)?;
    let weight_of = |c: usize| {
        let h = rad.fam.representative(c).order();
        Q::new(&rad.w[c] * BigInt::from(h), BigInt::from(rad.fam.normalizer_order(c)))
    };
    let weighting: Q = (0..rad.fam.class_count()).map(weight_of).sum();

    let (fam, kind) = match p_subgroups(g, p, cap) {
        Ok(f) => (f, SkeletonKind::AllPSubgroups),
        Err(SubgroupError::FamilyTooLarge { .. }) => (rad.fam.clone(), SkeletonKind::Radical),
        Err(e) => return Err(e.into()),
    };
    let sk = orbit_skeleton(&fam, kind)?;
    let zeta = match sk.skeleton.euler_characteristic()? {
        EulerCharacteristic::Defined(q) => q,
        EulerCharacteristic::Undefined => {
            return Err(OrbitError::CheckFailed { name: "orbit category has a weighting".into(), left: "none".into(), right: "".into() })
        }
    };

    let mut checks = vec![
        Check::equal("coweighting sum = density", &coweighting, &density),
        Check::equal("radical weighting sum = density", &weighting, &density),
        Check::equal("skeleton zeta solve = density", &zeta, &density),
    ];
    // the solved weighting is the radical one, class by class
    let solved_w = sk.skeleton.weighting().expect("the Euler characteristic is defined");
    for c in 0..fam.class_count() {
        let want = match rad.fam.index_of_elements(fam.representative(c).elements()) {
            Some(i) => weight_of(rad.fam.class_of(i)),
            None => Q::zero(),
        };
        checks.push(Check::equal(format!("weighting at class {c}"), &solved_w[c], &want));
    }
    // and the solved coweighting is concentrated on cyclic subgroups
    if kind == SkeletonKind::AllPSubgroups {
        let solved_k = sk.skeleton.coweighting().expect("the Euler characteristic is defined");
        for c in 0..fam.class_count() {
            let h = fam.representative(c);
            let len = qi(fam.class_len(c));
            let want = if h.is_trivial() {
                Q::one() / &order
            } else if is_cyclic(g, h) {
                len * &one_minus * qi(h.order()) / &order
            } else {
                Q::zero()
            };
            checks.push(Check::equal(format!("coweighting at class {c}"), &solved_k[c], &want));
        }
    }
    ensure(&checks)?;
    Ok(OrbitCategoryEuler { density, coweighting, weighting, zeta, kind, checks })
}

/// Radical classes with the local weights `-chi~(S_{N_G(H)/H})`, the global
/// count of p-singular elements and the upward sums from every class.
#[derive(Clone, Debug)]
pub struct GlobalIdentityReport {
    pub orders: Vec<usize>,
    pub lengths: Vec<usize>,
    pub weights: Vec<BigInt>,
    /// `sum_[H] w(H) |[H]| |H|`
    pub total: BigInt,
    pub p_singular: BigInt,
    /// `sum_{K >= H} w(K)` for each class representative H
    pub upward_sums: Vec<BigInt>,
    pub checks: Vec<Check>,
}

impl GlobalIdentityReport {
    pub fn to_tsv(&self) -> String {
        let row = |name: &str, xs: Vec<String>| format!("{name}\t{}\n", xs.join("\t"));
        let mut s = row("|H|", self.orders.iter().map(usize::to_string).collect());
        s += &row("length", self.lengths.iter().map(usize::to_string).collect());
        s += &row("weight", self.weights.iter().map(BigInt::to_string).collect());
        s += &format!("total\t{}\n", self.total);
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "orders": self.orders,
            "lengths": self.lengths,
            "weights": self.weights.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            "total": self.total.to_string(),
            "p_singular": self.p_singular.to_string(),
            "upward_sums": self.upward_sums.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            "checks": checks_json(&self.checks),
        })
    }
}

pub fn global_identity(g: &PermGroup, p: u64, cap: usize) -> Result<GlobalIdentityReport, OrbitError> {
    let rad = radical_weights(g, p, cap)?;
    let fam = &rad.fam;
    let orders = fam.class_orders();
    let lengths = fam.class_lengths();
    let total: BigInt = (0..fam.class_count()).map(|c| &rad.w[c] * BigInt::from(lengths[c] * orders[c])).sum();
    let p_singular = BigInt::from(g.count_p_singular(p)?);
    let succ = fam.class_table(TableMode::Successors)?;
    let upward_sums: Vec<BigInt> = (0..fam.class_count())
        .map(|h| (0..fam.class_count()).map(|k| &rad.w[k] * BigInt::from(succ[h][k])).sum())
        .collect();
    let mut checks = vec![Check::equal("sum of w(H)|H| over radical H = |G_p|", &total, &p_singular)];
    for (c, s) in upward_sums.iter().enumerate() {
        checks.push(Check::equal(format!("upward sum from class {c}"), s, &BigInt::one()));
    }
    ensure(&checks)?;
    Ok(GlobalIdentityReport { orders, lengths, weights: rad.w, total, p_singular, upward_sums, checks })
}

/// The terms of `|G_p| + chi~(S_G) + sum_[H]≠1 chi~(S_{N/H})/|N/H|_p * |G|/|N/H|_p' = 0`.
#[derive(Clone, Debug)]
pub struct BridgeReport {
    pub p_singular: BigInt,
    pub brown: BigInt,
    /// per nonidentity radical class: order, `chi~/|N/H|_p`, `|G|/|N/H|_p'`
    pub terms: Vec<(usize, BigInt, BigInt)>,
    pub checks: Vec<Check>,
}

impl BridgeReport {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(o, a, b)| json!({ "order": o, "reduced_over_p_part": a.to_string(), "index_over_p_prime_part": b.to_string() }))
            .collect();
        json!({
            "p_singular": self.p_singular.to_string(),
            "brown": self.brown.to_string(),
            "terms": terms,
            "checks": checks_json(&self.checks),
        })
    }
}

pub fn frobenius_brown_bridge(g: &PermGroup, p: u64, cap: usize) -> Result<BridgeReport, OrbitError> {
    let rad = radical_weights(g, p, cap)?;
    let fam = &rad.fam;
    let gp = BigInt::from(p_part(g.order() as u64, p));
    let p_singular = BigInt::from(g.count_p_singular(p)?);
    let brown = local_reduced_euler(&trivial_pair(g), &g.trivial(), p, cap)?;
    let mut checks = vec![
        Check::divides("|G|_p divides |G_p|", &gp, &p_singular),
        Check::divides("|G|_p divides chi~(S_G)", &gp, &brown),
    ];
    let mut terms = Vec::new();
    let mut total = &p_singular + &brown;
    for c in 0..fam.class_count() {
        let h = fam.representative(c);
        if h.is_trivial() {
            continue;
        }
        let q = (fam.normalizer_order(c) / h.order()) as u64;
        let qp = p_part(q, p);
        let e = -&rad.w[c];
        let (first, rem) = e.div_rem(&BigInt::from(qp));
        checks.push(Check::divides(format!("|N/H|_p divides chi~(S_N/H) at class {c}"), &BigInt::from(qp), &e));
        let second = BigInt::from(g.order() as u64 / (q / qp));
        checks.push(Check::divides(format!("|G|_p divides |G|/|N/H|_p' at class {c}"), &gp, &second));
        if rem.is_zero() {
            total += &first * &second;
        }
        terms.push((h.order(), first, second));
    }
    checks.push(Check::equal("sum of all terms", &total, &BigInt::zero()));
    ensure(&checks)?;
    Ok(BridgeReport { p_singular, brown, terms, checks })
}

/// `chi(C_S(x))` on the classes of G, with `sum chi(C_S(x)) |x^G| = |G|`
/// and the reduced values summing to 0.
#[derive(Clone, Debug)]
pub struct WebbReport {
    pub element_orders: Vec<u64>,
    pub class_sizes: Vec<u64>,
    pub values: Vec<Q>,
    pub reduced: Vec<Q>,
    pub checks: Vec<Check>,
}

impl WebbReport {
    pub fn to_json(&self) -> Value {
        json!({
            "element_orders": self.element_orders,
            "class_sizes": self.class_sizes,
            "chi": fractions_json(&self.values),
            "reduced": fractions_json(&self.reduced),
            "checks": checks_json(&self.checks),
        })
    }
}

pub fn webb_identity(g: &PermGroup, p: u64, cap: usize) -> Result<WebbReport, OrbitError> {
    let pair = GroupPair::inner(g);
    let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, cap)?;
    let f = centralizer_euler_characteristics(&ap, false)?;
    let fr = centralizer_euler_characteristics(&ap, true)?;
    let weighted = |v: &[Q]| v.iter().zip(&f.class_sizes).map(|(x, &s)| x * qi(s)).sum::<Q>();
    let checks = vec![
        Check::equal("sum chi(C_S(x)) |G:C_G(x)| = |G|", &weighted(&f.values), &qi(g.order())),
        Check::equal("sum chi~(C_S(x)) |G:C_G(x)| = 0", &weighted(&fr.values), &Q::zero()),
    ];
    ensure(&checks)?;
    Ok(WebbReport {
        element_orders: f.element_orders.clone(),
        class_sizes: f.class_sizes.clone(),
        values: f.values,
        reduced: fr.values,
        checks,
    })
}

/// The coweighting of the orbit category of an elementary abelian group of
/// order `p^d`, indexed by the dimension of the subgroup. Every subgroup of
/// a given dimension must carry the same value.
pub fn elementary_abelian_coweighting(p: u64, d: usize) -> Result<Vec<Q>, OrbitError> {
    let deg = p as usize * d.max(1);
    let gens = (0..d)
        .map(|i| Perm::from_cycles(deg, &[(i * p as usize..(i + 1) * p as usize).collect()]))
        .collect::<Result<Vec<_>, _>>()?;
    let v = PermGroup::new(deg, gens)?;
    let fam = all_subgroups(&v, usize::MAX)?;
    let sk = orbit_skeleton(&fam, SkeletonKind::AllPSubgroups)?;
    let k = sk.skeleton.coweighting().expect("orbit categories of p-groups have coweightings");
    let dim = |mut n: usize| {
        let mut e = 0;
        while n > 1 {
            n /= p as usize;
            e += 1;
        }
        e
    };
    let mut by_dim: Vec<Option<Q>> = vec![None; d + 1];
    for c in 0..fam.class_count() {
        let slot = &mut by_dim[dim(sk.orders[c])];
        match slot {
            Some(x) if *x != k[c] => {
                return Err(OrbitError::CheckFailed {
                    name: format!("coweighting constant in dimension {}", dim(sk.orders[c])),
                    left: x.to_string(),
                    right: k[c].to_string(),
                })
            }
            _ => *slot = Some(k[c].clone()),
        }
    }
    Ok(by_dim.into_iter().map(|x| x.expect("every dimension occurs")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use posetcat::q;

    #[test]
    fn klein_four_coweighting() {
        assert_eq!(elementary_abelian_coweighting(2, 2).unwrap(), vec![q(1, 4), q(1, 4), q(0, 1)]);
        assert_eq!(elementary_abelian_coweighting(3, 1).unwrap(), vec![q(1, 3), q(2, 3)]);
    }

    #[test]
    fn s3_at_two() {
        let g = PermGroup::symmetric(3).unwrap();
        let e = orbit_category_euler(&g, 2, 1000).unwrap();
        assert_eq!(e.density, q(4, 6));
    }
}
