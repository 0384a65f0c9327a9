use std::collections::{BTreeSet, HashMap};

use equivariant::{chi_r, euler_class_function, phi_r, phi_r_brute, BrownVariant, SubgroupAPoset};
use num_bigint::BigInt;
use orbitstructs::ideal_decomposition;
use permcore::{cyclic, group_by_name, is_pi_number, p_part, prime_divisors, Perm, PermGroup};
use pisubgroups::cyclic_orbit_coweight;
use posetcat::{CategorySkeleton, EulerCharacteristic, FinitePoset, Q};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subgroups::{abelian_subgroups, all_subgroups, p_subgroups, GroupPair, DEFAULT_FAMILY_CAP as CAP};

use super::{eq, Outcome};

const CASES: usize = 100;

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Perm {
    let mut v: Vec<u16> = (0..n as u16).collect();
    v.shuffle(rng);
    Perm::from_images(v).unwrap()
}

fn random_group(rng: &mut ChaCha8Rng, max_degree: usize) -> PermGroup {
    let n = rng.gen_range(3..=max_degree);
    let k = rng.gen_range(1..=2);
    PermGroup::new(n, (0..k).map(|_| random_perm(rng, n)).collect()).unwrap()
}

fn random_prime(rng: &mut ChaCha8Rng, g: &PermGroup) -> Option<u64> {
    prime_divisors(g.order() as u64).choose(rng).copied()
}

/// A random subgroup of G, given by up to two random elements, acting by
/// conjugation.
fn random_pair<'g>(rng: &mut ChaCha8Rng, g: &'g PermGroup) -> GroupPair<'g> {
    let k = rng.gen_range(0..=2);
    let elems: Vec<u32> = (0..k).map(|_| rng.gen_range(0..g.order() as u32)).collect();
    GroupPair::from_elements(g, &elems)
}

fn random_poset(rng: &mut ChaCha8Rng) -> FinitePoset {
    let n = rng.gen_range(1..12);
    let mut r = vec![vec![false; n]; n];
    for i in 0..n {
        r[i][i] = true;
        for j in i + 1..n {
            r[i][j] = rng.gen_bool(0.3);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    FinitePoset::new((0..n).map(|i| i.to_string()).collect(), |a, b| r[a][b]).unwrap()
}

/// Runs `case` until `CASES` of them apply; a case returns `Ok(false)` when
/// its random input does not meet the preconditions.
fn suite(name: &str, seed: u64, mut case: impl FnMut(&mut ChaCha8Rng) -> Result<bool, String>) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    let mut tries = 0;
    while done < CASES {
        tries += 1;
        if tries > 20 * CASES {
            return Err(format!("{name}: only {done} applicable cases"));
        }
        if case(&mut rng).map_err(|e| format!("{name}, case {tries}: {e}"))? {
            done += 1;
        }
    }
    println!("    {name}: {done} cases");
    Ok(())
}

fn moebius_inverts_zeta() -> Outcome {
    suite("Moebius and zeta are inverse", 1, |rng| {
        let p = random_poset(rng);
        let (z, mu) = (p.zeta_matrix(), p.moebius_matrix());
        let n = p.size();
        for i in 0..n {
            for j in 0..n {
                let s: BigInt = (0..n).map(|k| BigInt::from(z[i][k]) * &mu[k][j]).sum();
                eq("zeta * mu", s, BigInt::from((i == j) as u8))?;
            }
        }
        Ok(true)
    })
}

fn invariance_under_the_action() -> Outcome {
    suite("Moebius function and weights are A-invariant", 2, |rng| {
        let g = random_group(rng, 6);
        let Some(p) = random_prime(rng, &g) else { return Ok(false) };
        let pair = random_pair(rng, &g);
        let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Full, CAP).unwrap();
        let index: HashMap<&[u32], usize> = ap.members().iter().enumerate().map(|(i, h)| (h.elements(), i)).collect();
        let (mu, w, c) = (ap.poset().moebius_matrix(), ap.poset().weighting(), ap.poset().coweighting());
        for &a in pair.acting().generator_indices() {
            let sigma: Vec<usize> = ap
                .members()
                .iter()
                .map(|h| {
                    let mut img: Vec<u32> = h.elements().iter().map(|&x| pair.act(x, a)).collect();
                    img.sort_unstable();
                    index[img.as_slice()]
                })
                .collect();
            for i in 0..ap.len() {
                eq("weighting", &w[i], &w[sigma[i]])?;
                eq("coweighting", &c[i], &c[sigma[i]])?;
                for j in 0..ap.len() {
                    eq("mu", &mu[i][j], &mu[sigma[i]][sigma[j]])?;
                }
            }
        }
        Ok(true)
    })
}

fn weighting_restricts_to_ideals() -> Outcome {
    suite("weightings restrict to up-closed sets", 3, |rng| {
        let p = random_poset(rng);
        let start = rng.gen_range(0..p.size());
        let up: Vec<usize> = p.above(start).collect();
        let (w, wi) = (p.weighting(), p.induced(&up).weighting());
        for (i, &a) in up.iter().enumerate() {
            eq("weighting", &wi[i], &w[a])?;
        }
        let down: Vec<usize> = p.below(start).collect();
        let (c, ci) = (p.coweighting(), p.induced(&down).coweighting());
        for (i, &a) in down.iter().enumerate() {
            eq("coweighting", &ci[i], &c[a])?;
        }
        Ok(true)
    })
}

fn chi_paths_agree() -> Outcome {
    suite("Euler characteristic paths agree", 4, |rng| {
        let g = random_group(rng, 6);
        let Some(p) = random_prime(rng, &g) else { return Ok(false) };
        let pair = random_pair(rng, &g);
        let full = SubgroupAPoset::brown(&pair, p, BrownVariant::Full, CAP).unwrap();
        let rad = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, CAP).unwrap();
        let poset = full.poset();
        let chi = poset.euler_characteristic().unwrap();
        eq("chains", &chi, &poset.euler_characteristic_via_chains())?;
        eq("weighting sum", &chi, &poset.weighting().iter().sum())?;
        eq("coweighting sum", &chi, &poset.coweighting().iter().sum())?;
        let acting = pair.acting().whole();
        eq("radical subposet", full.centralized_euler(&acting).unwrap(), rad.centralized_euler(&acting).unwrap())?;
        // chi_r runs two routes internally; compare with the class functions
        for r in 1..=2 {
            let c = chi_r(&rad, r).unwrap();
            let f = euler_class_function(&rad, r, false).unwrap();
            eq("alpha_r against chi_r", f.inner_product_with_conjugation_character(), c.chi)?;
        }
        Ok(true)
    })
}

fn integrality() -> Outcome {
    suite("chi_r and alpha_r are integral", 5, |rng| {
        let g = random_group(rng, 5);
        let Some(p) = random_prime(rng, &g) else { return Ok(false) };
        let pair = random_pair(rng, &g);
        let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, CAP).unwrap();
        for r in 1..=3 {
            let c = chi_r(&ap, r).unwrap();
            eq("chi_r integral", (c.chi.is_integer(), c.reduced.is_integer()), (true, true))?;
        }
        for r in 2..=3 {
            for reduced in [false, true] {
                eq("alpha_r integral", euler_class_function(&ap, r, reduced).unwrap().is_integral(), true)?;
            }
        }
        Ok(true)
    })
}

fn vanishing_off_p_regular() -> Outcome {
    suite("alpha~_r vanishes off p-regular classes", 6, |rng| {
        let g = random_group(rng, 6);
        let Some(p) = random_prime(rng, &g) else { return Ok(false) };
        let pair = GroupPair::inner(&g);
        let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, CAP).unwrap();
        for r in 2..=3 {
            eq("vanishes", euler_class_function(&ap, r, true).unwrap().vanishes_off_p_regular(p), true)?;
        }
        Ok(true)
    })
}

fn frobenius_and_brown() -> Outcome {
    suite("Frobenius and Brown divisibility", 7, |rng| {
        let g = random_group(rng, 7);
        let Some(p) = random_prime(rng, &g) else { return Ok(false) };
        let gp = p_part(g.order() as u64, p);
        eq("Frobenius", g.count_p_singular(p).unwrap() % gp, 0)?;
        let inner = GroupPair::inner(&g);
        let ap = SubgroupAPoset::brown(&inner, p, BrownVariant::Radical, CAP).unwrap();
        let reduced = ap.euler(&ap.all()).unwrap() - 1;
        eq("Brown", reduced % BigInt::from(gp), BigInt::from(0))?;
        Ok(true)
    })
}

fn centralized_congruence() -> Outcome {
    suite("chi~(C_S(A)) = chi~(S_{C_G(A)}) mod |C_G(A)|_p", 8, |rng| {
        let g = random_group(rng, 6);
        let Some(p) = random_prime(rng, &g) else { return Ok(false) };
        let pair = random_pair(rng, &g);
        if pair.acting().order() as u64 % p == 0 {
            return Ok(false);
        }
        let d = ideal_decomposition(&pair, p, BrownVariant::Radical, CAP).unwrap();
        eq("congruence", (&d.centralized - &d.centralizer_brown) % &d.centralizer_p_part, BigInt::from(0))?;
        Ok(true)
    })
}

fn normalizer_divides_centralizer_sum() -> Outcome {
    suite("|N_G(H)| divides the sum of |C_G(x)| over H", 9, |rng| {
        let g = random_group(rng, 7);
        let mut h = g.trivial();
        for _ in 0..rng.gen_range(1..=2) {
            h = g.join_element(&h, rng.gen_range(0..g.order() as u32));
        }
        let whole = g.whole();
        let sum: usize = h.elements().iter().map(|&x| g.centralizer_in(&whole, &[x]).order()).sum();
        eq("divides", sum % g.normalizer(&h).order(), 0)?;
        Ok(true)
    })
}

/// `1 - chi` of the orbit category of proper subgroups of K, solved from
/// hom counts over every proper subgroup.
fn proper_orbit_oracle(k: &PermGroup) -> Q {
    let subs: Vec<_> = all_subgroups(k, CAP).unwrap().members().iter().filter(|h| h.order() < k.order()).cloned().collect();
    if subs.is_empty() {
        // the empty category
        return Q::from_integer(1.into());
    }
    let hom: Vec<Vec<u64>> =
        subs.iter().map(|h| subs.iter().map(|l| (k.transporter(h, l).len() / l.order()) as u64).collect()).collect();
    let (sk, _) = CategorySkeleton::merging_isomorphic((0..subs.len()).map(|i| i.to_string()).collect(), hom).unwrap();
    match sk.euler_characteristic().unwrap() {
        EulerCharacteristic::Defined(chi) => Q::from_integer(1.into()) - chi,
        EulerCharacteristic::Undefined => panic!("orbit categories of subgroups have triangular skeletons"),
    }
}

fn cyclic_coweight_formula() -> Outcome {
    suite("proper orbit category coweight against the zeta solve", 10, |rng| {
        let k = if rng.gen_bool(0.4) { cyclic(rng.gen_range(1..=30)).unwrap() } else { random_group(rng, 5) };
        eq("formula", cyclic_orbit_coweight(&k).unwrap(), proper_orbit_oracle(&k))?;
        Ok(true)
    })
}

fn phi_against_brute_force() -> Outcome {
    suite("phi_r against brute force", 11, |rng| {
        let g = random_group(rng, 6);
        let fam = abelian_subgroups(&g, usize::MAX, None, CAP).unwrap();
        let r = rng.gen_range(1..=3);
        let mut checked = false;
        for c in 0..fam.class_count() {
            let b = fam.representative(c);
            if b.order() <= 24 {
                eq("phi_r", phi_r(&g, b, r).unwrap(), BigInt::from(phi_r_brute(&g, b, r)))?;
                checked = true;
            }
        }
        Ok(checked)
    })
}

/// Every subgroup, by closing the trivial group under adjoining elements.
fn oracle_subgroups(g: &PermGroup) -> BTreeSet<Vec<u32>> {
    let mut seen = BTreeSet::from([vec![0]]);
    let mut queue = vec![g.trivial()];
    while let Some(h) = queue.pop() {
        for x in g.elements().filter(|&x| !h.contains(x)) {
            let k = g.join_element(&h, x);
            if seen.insert(k.elements().to_vec()) {
                queue.push(k);
            }
        }
    }
    seen
}

fn subgroups_against_oracle() -> Outcome {
    let catalog = ["S4", "A4", "D8", "Q8", "F20", "F21", "SL(2,3)", "GL(2,3)", "A5", "S5"];
    let mut next = 0;
    suite("subgroup enumeration against the closure oracle", 12, |rng| {
        let g = match catalog.get(next) {
            Some(name) => group_by_name(name).unwrap(),
            None => random_group(rng, 6),
        };
        next += 1;
        if g.order() > 200 {
            return Ok(false);
        }
        let all = oracle_subgroups(&g);
        let got: BTreeSet<Vec<u32>> = all_subgroups(&g, CAP).unwrap().members().iter().map(|h| h.elements().to_vec()).collect();
        eq("all subgroups", &got, &all)?;
        for p in prime_divisors(g.order() as u64) {
            let want: BTreeSet<Vec<u32>> = all.iter().filter(|s| is_pi_number(s.len() as u64, &[p])).cloned().collect();
            let got: BTreeSet<Vec<u32>> =
                p_subgroups(&g, p, CAP).unwrap().members().iter().map(|h| h.elements().to_vec()).collect();
            eq("p-subgroups", got, want)?;
        }
        Ok(true)
    })
}

pub fn run_all() -> Outcome {
    moebius_inverts_zeta()?;
    invariance_under_the_action()?;
    weighting_restricts_to_ideals()?;
    chi_paths_agree()?;
    integrality()?;
    vanishing_off_p_regular()?;
    frobenius_and_brown()?;
    centralized_congruence()?;
    normalizer_divides_centralizer_sum()?;
    cyclic_coweight_formula()?;
    phi_against_brute_force()?;
    subgroups_against_oracle()
}
