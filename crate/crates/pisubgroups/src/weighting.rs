use num_bigint::BigInt;
use num_traits::{One, Zero};
use orbitstructs::{checks_json, ensure, orbit_skeleton, Check, SkeletonKind};
use permcore::{pi_part, PermGroup};
use posetcat::{qi, solve, to_integer, EulerCharacteristic, Solution, Q};
use serde_json::{json, Value};
use subgroups::TableMode;

use crate::cyclic::cyclic_orbit_coweight;
use crate::{PiContext, PiError};

/// `-chi~(H // S_G^pi)` on the classes of pi-subgroups.
#[derive(Clone, Debug)]
pub struct PiWeighting {
    pub orders: Vec<usize>,
    pub lengths: Vec<usize>,
    pub weights: Vec<BigInt>,
    pub checks: Vec<Check>,
}

impl PiWeighting {
    pub fn to_tsv(&self) -> String {
        let row = |name: &str, xs: Vec<String>| format!("{name}\t{}\n", xs.join("\t"));
        let mut s = row("|H|", self.orders.iter().map(usize::to_string).collect());
        s += &row("weight", self.weights.iter().map(BigInt::to_string).collect());
        s += &row("length", self.lengths.iter().map(usize::to_string).collect());
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "orders": self.orders,
            "lengths": self.lengths,
            "weights": self.weights.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            "checks": checks_json(&self.checks),
        })
    }
}

/// `sum_{K >= H} mu(H,K)` over the pi-subgroups containing member `h`.
pub fn moebius_sum(ctx: &PiContext<'_>, h: usize) -> BigInt {
    let fam = &ctx.family;
    let base = fam.member(h);
    let mut up: Vec<usize> = (0..fam.len()).filter(|&i| base.is_subgroup_of(fam.member(i))).collect();
    up.sort_by_key(|&i| fam.member(i).order());
    let mut mu: Vec<BigInt> = Vec::with_capacity(up.len());
    for (j, &k) in up.iter().enumerate() {
        if j == 0 {
            mu.push(BigInt::one());
            continue;
        }
        let km = fam.member(k);
        let s: BigInt = (0..j)
            .filter(|&l| fam.member(up[l]).order() < km.order() && fam.member(up[l]).is_subgroup_of(km))
            .map(|l| &mu[l])
            .sum();
        mu.push(-s);
    }
    mu.into_iter().sum()
}

/// The weighting of the poset of pi-subgroups, class by class, from the
/// class-table system and from Moebius sums over overgroups.
pub fn pi_weighting(ctx: &PiContext<'_>) -> Result<PiWeighting, PiError> {
    let fam = &ctx.family;
    let n = fam.class_count();
    let succ = fam.class_table(TableMode::Successors)?;
    let matrix: Vec<Vec<Q>> = succ.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
    let sol = match solve(&matrix, &vec![Q::one(); n]) {
        Solution::Unique(x) => x,
        _ => unreachable!("the class table is unitriangular"),
    };
    let mut checks = Vec::new();
    let mut weights = Vec::with_capacity(n);
    for (c, x) in sol.iter().enumerate() {
        let via_moebius = moebius_sum(ctx, fam.representative_index(c));
        match to_integer(x) {
            Some(v) => {
                checks.push(Check::equal(format!("Moebius sum at class {c}"), &via_moebius, &v));
                weights.push(v);
            }
            None => {
                checks.push(Check::equal(format!("integral weight at class {c}"), &x.to_string(), &via_moebius.to_string()));
                weights.push(via_moebius);
            }
        }
    }
    ensure(&checks)?;
    Ok(PiWeighting { orders: fam.class_orders(), lengths: fam.class_lengths(), weights, checks })
}

#[derive(Clone, Debug)]
pub struct PiGlobalReport {
    pub weighting: PiWeighting,
    /// `sum_[H] w(H) |[H]| |H|`
    pub total: BigInt,
    pub pi_singular: u64,
    /// `chi(O_G^pi)` from the solved skeleton
    pub orbit_euler: Q,
    pub checks: Vec<Check>,
}

impl PiGlobalReport {
    pub fn to_json(&self) -> Value {
        json!({
            "weighting": self.weighting.to_json(),
            "total": self.total.to_string(),
            "pi_singular": self.pi_singular,
            "orbit_euler": self.orbit_euler.to_string(),
            "checks": checks_json(&self.checks),
        })
    }
}

/// The global count `sum_H w(H)|H| = |G_pi|`, the upward sums, and the
/// orbit category of pi-subgroups with its weighting and coweighting.
pub fn pi_global_identity(ctx: &PiContext<'_>) -> Result<PiGlobalReport, PiError> {
    let g: &PermGroup = ctx.group;
    let fam = &ctx.family;
    let weighting = pi_weighting(ctx)?;
    let w = &weighting.weights;
    let n = fam.class_count();
    let total: BigInt = (0..n).map(|c| &w[c] * BigInt::from(weighting.lengths[c] * weighting.orders[c])).sum();
    let mut checks = vec![Check::equal("sum w(H)|H| = |G_pi|", &total, &BigInt::from(ctx.pi_singular))];
    let succ = fam.class_table(TableMode::Successors)?;
    for h in 0..n {
        let up: BigInt = (0..n).map(|k| &w[k] * BigInt::from(succ[h][k])).sum();
        checks.push(Check::equal(format!("upward sum from class {h}"), &up, &BigInt::one()));
    }

    let sk = orbit_skeleton(fam, SkeletonKind::AllPSubgroups)?.skeleton;
    let order = qi(g.order());
    let density = qi(ctx.pi_singular) / &order;
    let orbit_euler = match sk.euler_characteristic()? {
        EulerCharacteristic::Defined(q) => q,
        EulerCharacteristic::Undefined => unreachable!("skeletons of orbit categories are triangular"),
    };
    checks.push(Check::equal("chi(O_G^pi) = |G_pi|/|G|", &orbit_euler, &density));
    let solved_w = sk.weighting().expect("defined above");
    let solved_k = sk.coweighting().expect("defined above");
    for c in 0..n {
        let h = fam.representative(c);
        let want_w = Q::new(&w[c] * BigInt::from(h.order()), BigInt::from(fam.normalizer_order(c)));
        checks.push(Check::equal(format!("orbit category weighting at class {c}"), &solved_w[c], &want_w));
        let hg = as_group(g, h)?;
        let want_k = qi(fam.class_len(c)) * cyclic_orbit_coweight(&hg)? * qi(h.order()) / &order;
        checks.push(Check::equal(format!("orbit category coweighting at class {c}"), &solved_k[c], &want_k));
    }
    ensure(&checks)?;
    Ok(PiGlobalReport { weighting, total, pi_singular: ctx.pi_singular, orbit_euler, checks })
}

fn as_group(g: &PermGroup, h: &permcore::Subgroup) -> Result<PermGroup, PiError> {
    let gens = h.generators().iter().filter(|&&x| x != 0).map(|&x| g.element(x)).collect();
    Ok(PermGroup::new(g.degree(), gens)?)
}

#[derive(Clone, Debug)]
pub struct HioReport {
    pub orders: Vec<usize>,
    pub weights: Vec<BigInt>,
    /// `|N_G(H):H|_pi`
    pub index_pi_parts: Vec<u64>,
    pub checks: Vec<Check>,
}

impl HioReport {
    pub fn to_tsv(&self) -> String {
        let row = |name: &str, xs: Vec<String>| format!("{name}\t{}\n", xs.join("\t"));
        let mut s = row("|H|", self.orders.iter().map(usize::to_string).collect());
        s += &row("weight", self.weights.iter().map(BigInt::to_string).collect());
        s += &row("|N:H|_pi", self.index_pi_parts.iter().map(u64::to_string).collect());
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "orders": self.orders,
            "weights": self.weights.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            "index_pi_parts": self.index_pi_parts,
            "checks": checks_json(&self.checks),
        })
    }
}

/// `|N_G(H):H|_pi` divides `-chi~(H // S_G^pi)` for every class. Hall
/// subgroups get weight 1, and H gets weight 0 whenever a larger
/// pi-subgroup normalizes every pi-subgroup above H.
pub fn hio_divisibility(ctx: &PiContext<'_>) -> Result<HioReport, PiError> {
    let g = ctx.group;
    let fam = &ctx.family;
    let wt = pi_weighting(ctx)?;
    let hall = pi_part(g.order() as u64, &ctx.pi) as usize;
    let mut checks = Vec::new();
    let mut index_pi_parts = Vec::new();
    let mut normalizers: Vec<Option<permcore::Subgroup>> = vec![None; fam.len()];
    let mut class_normalizers: Vec<Option<permcore::Subgroup>> = vec![None; fam.class_count()];
    for c in 0..fam.class_count() {
        let h = fam.representative(c);
        let q = pi_part((fam.normalizer_order(c) / h.order()) as u64, &ctx.pi);
        index_pi_parts.push(q);
        checks.push(Check::divides(format!("|N_G(H):H|_pi divides the weight at class {c}"), &BigInt::from(q), &wt.weights[c]));
        if h.order() == hall {
            checks.push(Check::equal(format!("Hall subgroup weight at class {c}"), &wt.weights[c], &BigInt::one()));
            continue;
        }
        // O = intersection of N_G(K) over pi-subgroups K > H
        let mut o = g.whole();
        for i in 0..fam.len() {
            let k = fam.member(i);
            if k.order() > h.order() && h.is_subgroup_of(k) {
                let n = normalizers[i].get_or_insert_with(|| {
                    // N_G(rep^x) = N_G(rep)^x
                    let c = fam.class_of(i);
                    let rep_n = class_normalizers[c].get_or_insert_with(|| fam.normalizer(c));
                    g.conjugate_subgroup(rep_n, fam.conjugator(i))
                });
                o = g.intersection(&o, n);
            }
        }
        let grows = (0..fam.len()).any(|i| {
            let l = fam.member(i);
            l.order() > h.order() && h.is_subgroup_of(l) && l.is_subgroup_of(&o)
        });
        if grows {
            checks.push(Check::equal(format!("vanishing weight at class {c}"), &wt.weights[c], &BigInt::zero()));
        }
    }
    ensure(&checks)?;
    Ok(HioReport { orders: wt.orders, weights: wt.weights, index_pi_parts, checks })
}
