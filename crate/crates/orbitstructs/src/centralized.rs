use num_bigint::BigInt;
use num_traits::{One, Zero};
use permcore::Subgroup;
use posetcat::{qi, CategorySkeleton, EulerCharacteristic, Q};
use serde_json::{json, Value};
use subgroups::{is_cyclic, p_subgroups, GroupPair};

use crate::check::{checks_json, ensure, Check};
use crate::local::p_singular_count;
use crate::OrbitError;

/// Morphisms H -> K of the two orbit categories attached to an action of A.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitVariant {
    /// the A-fixed points of `N_G(H,K)/K`: cosets gK with `[g,A] <= K`
    Centralized,
    /// `C_{N_G(H,K)}(A) / C_K(A)`
    Transporter,
}

#[derive(Clone, Debug)]
pub struct CentralizedOrbitReport {
    pub variant: OrbitVariant,
    /// A-invariant p-subgroups
    pub objects: usize,
    /// isomorphism classes of objects
    pub classes: usize,
    pub euler: EulerCharacteristic,
    /// `|C_G(A)_p| / |C_G(A)|`
    pub density: Q,
    pub checks: Vec<Check>,
}

impl CentralizedOrbitReport {
    pub fn to_json(&self) -> Value {
        json!({
            "variant": match self.variant { OrbitVariant::Centralized => "centralized", OrbitVariant::Transporter => "transporter" },
            "objects": self.objects,
            "classes": self.classes,
            "chi": match &self.euler { EulerCharacteristic::Defined(q) => q.to_string(), EulerCharacteristic::Undefined => "undefined".into() },
            "density": self.density.to_string(),
            "checks": checks_json(&self.checks),
        })
    }
}

/// Per element g of G: the commutators `[g,a]` with the generators of A.
fn commutators(pair: &GroupPair<'_>) -> Vec<Vec<u32>> {
    let g = pair.group();
    let gens = pair.acting().generator_indices();
    g.elements().map(|x| gens.iter().map(|&a| g.mul(g.inv(x), pair.act(x, a))).collect()).collect()
}

/// Euler characteristic of the orbit category of A-invariant p-subgroups,
/// either centralized or with A-fixed transporters. Undefined results are
/// reported for the centralized variant; the transporter variant must give
/// the density of p-singular elements in `C_G(A)`.
pub fn centralized_orbit_category_euler(
    pair: &GroupPair<'_>,
    p: u64,
    variant: OrbitVariant,
    cap: usize,
) -> Result<CentralizedOrbitReport, OrbitError> {
    let g = pair.group();
    let fam = p_subgroups(g, p, cap)?;
    let objs: Vec<&Subgroup> = fam.members().iter().filter(|h| pair.is_a_invariant(h)).collect();
    let n = objs.len();
    let comm = commutators(pair);
    let fixed = |x: u32| comm[x as usize].iter().all(|&c| c == 0);
    let in_k = |x: u32, k: &Subgroup| comm[x as usize].iter().all(|&c| k.contains(c));
    let cent_orders: Vec<u64> = objs.iter().map(|k| pair.centralizer_in(k).order() as u64).collect();

    let mut hom_c = vec![vec![0u64; n]; n];
    let mut hom_t = vec![vec![0u64; n]; n];
    let mut checks = Vec::new();
    for (a, h) in objs.iter().enumerate() {
        for (b, k) in objs.iter().enumerate() {
            if k.order() % h.order() != 0 {
                continue;
            }
            let tr = g.transporter(h, k);
            let c = tr.iter().filter(|&&x| in_k(x, k)).count() as u64;
            let t = tr.iter().filter(|&&x| fixed(x)).count() as u64;
            if c % k.order() as u64 != 0 {
                checks.push(Check::divides(format!("|K| divides the centralized count {a} -> {b}"), &BigInt::from(k.order()), &BigInt::from(c)));
            }
            if t % cent_orders[b] != 0 {
                checks.push(Check::divides(format!("|C_K(A)| divides the fixed count {a} -> {b}"), &BigInt::from(cent_orders[b]), &BigInt::from(t)));
            }
            hom_c[a][b] = c / k.order() as u64;
            hom_t[a][b] = t / cent_orders[b];
        }
    }

    let cg = pair.centralizer();
    let density = Q::new(BigInt::from(p_singular_count(g, &cg, p)), BigInt::from(cg.order()));
    let p_regular = pair.acting().order() as u64 % p != 0;
    if p_regular {
        checks.push(Check::equal("centralized and transporter hom counts agree", &(hom_c == hom_t), &true));
    }

    let hom = match variant {
        OrbitVariant::Centralized => hom_c.clone(),
        OrbitVariant::Transporter => hom_t,
    };
    let labels = objs.iter().enumerate().map(|(i, k)| format!("K{i}|{}|", k.order())).collect();
    let (sk, class_of) = CategorySkeleton::merging_isomorphic(labels, hom)?;
    let mut class_size = vec![0usize; sk.object_count()];
    for &c in &class_of {
        class_size[c] += 1;
    }

    for (i, k) in objs.iter().enumerate() {
        let nk = g.normalizer(k);
        let (moved, stable) = match variant {
            OrbitVariant::Centralized => (
                g.elements().filter(|&x| in_k(x, k)).count(),
                nk.elements().iter().filter(|&&x| in_k(x, k)).count(),
            ),
            OrbitVariant::Transporter => (cg.order(), nk.elements().iter().filter(|&&x| fixed(x)).count()),
        };
        checks.push(Check::equal(format!("size of the class of object {i}"), &class_size[class_of[i]], &(moved / stable)));
        let centralized = comm_trivial_on(&comm, k);
        if variant == OrbitVariant::Centralized && centralized && p_regular {
            let left = class_size[class_of[i]] as u64 * hom_c[i][i];
            checks.push(Check::equal(format!("|[K]| |hom(K,K)| = |C_G(A):K| at object {i}"), &left, &((cg.order() / k.order()) as u64)));
        }
    }

    let euler = sk.euler_characteristic()?;
    if variant == OrbitVariant::Transporter || p_regular {
        let got = euler.value().map_or_else(|| "undefined".to_string(), ToString::to_string);
        checks.push(Check::equal("chi = density of p-singular elements in C_G(A)", &got, &density.to_string()));
    }
    if variant == OrbitVariant::Transporter {
        if let Some(k) = sk.coweighting() {
            let one_minus = Q::one() - Q::new(BigInt::one(), BigInt::from(p));
            let c_order = qi(cg.order());
            let mut want = vec![Q::zero(); sk.object_count()];
            for (i, h) in objs.iter().enumerate() {
                if h.is_trivial() {
                    want[class_of[i]] += Q::one() / &c_order;
                } else if is_cyclic(g, h) && comm_trivial_on(&comm, h) {
                    want[class_of[i]] += &one_minus * qi(h.order()) / &c_order;
                }
            }
            for c in 0..sk.object_count() {
                checks.push(Check::equal(format!("coweighting at class {c}"), &k[c], &want[c]));
            }
        }
    }
    ensure(&checks)?;
    Ok(CentralizedOrbitReport { variant, objects: n, classes: sk.object_count(), euler, density, checks })
}

/// Whether A centralizes K.
fn comm_trivial_on(comm: &[Vec<u32>], k: &Subgroup) -> bool {
    k.generators().iter().all(|&x| comm[x as usize].iter().all(|&c| c == 0))
}
