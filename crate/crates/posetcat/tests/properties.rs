use num_traits::{One, Zero};
use posetcat::*;
use proptest::prelude::*;

/// Random poset on `n` points: a random DAG on 0..n (edges i -> j only for
/// i < j) closed transitively.
fn random_poset() -> impl Strategy<Value = FinitePoset> {
    (1usize..12).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.3), n * n).prop_map(move |bits| {
            let mut r = vec![vec![false; n]; n];
            for i in 0..n {
                r[i][i] = true;
                for j in i + 1..n {
                    r[i][j] = bits[i * n + j];
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
        })
    })
}

/// Rotation-closed family of subsets of Z_m ordered by inclusion, with the
/// cyclic group acting by rotation.
fn rotation_poset() -> impl Strategy<Value = (FinitePoset, PosetAction, Vec<u32>)> {
    (2u32..6).prop_flat_map(|m| {
        proptest::collection::vec(1u32..(1 << m), 1..5).prop_map(move |seeds| {
            let rot = |s: u32, k: u32| ((s << k) | (s >> (m - k))) & ((1 << m) - 1);
            let mut fam: Vec<u32> = seeds.iter().flat_map(|&s| (0..m).map(move |k| rot(s, k))).collect();
            fam.sort_unstable();
            fam.dedup();
            let p = FinitePoset::new(fam.iter().map(|s| format!("{s:b}")).collect(), |a, b| fam[a] & fam[b] == fam[a]).unwrap();
            let perm = |k: u32| -> Vec<u32> { fam.iter().map(|&s| fam.binary_search(&rot(s, k)).unwrap() as u32).collect() };
            let elements = (0..m).map(|k| (perm(k), 1)).collect();
            let act = PosetAction::new(&p, vec![perm(1 % m)], elements).unwrap();
            (p, act, fam)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn moebius_inverts_zeta(p in random_poset()) {
        let n = p.size();
        let z = p.zeta_matrix();
        let mu = p.moebius_matrix();
        for i in 0..n {
            for j in 0..n {
                let a: BigInt = (0..n).map(|k| BigInt::from(z[i][k]) * &mu[k][j]).sum();
                let b: BigInt = (0..n).map(|k| &mu[i][k] * BigInt::from(z[k][j])).sum();
                let e = if i == j { BigInt::one() } else { BigInt::zero() };
                prop_assert_eq!(&a, &e);
                prop_assert_eq!(&b, &e);
            }
        }
    }

    #[test]
    fn euler_characteristic_paths_agree(p in random_poset()) {
        let chi = p.euler_characteristic().unwrap();
        prop_assert_eq!(&chi, &p.euler_characteristic_via_chains());
        prop_assert_eq!(&chi, &p.delta_set().euler_characteristic());
        let mu = p.moebius_matrix();
        let w = p.weighting();
        for a in 0..p.size() {
            let s: BigInt = mu[a].iter().sum();
            prop_assert_eq!(&s, &w[a]);
        }
        let sk = CategorySkeleton::from_poset(&p);
        prop_assert_eq!(sk.euler_characteristic().unwrap(), EulerCharacteristic::Defined(Q::from_integer(chi.clone())));
        if p.size() <= 7 {
            prop_assert_eq!(p.subdivision().euler_characteristic().unwrap(), chi);
        }
    }

    #[test]
    fn weighting_restricts_to_up_closed_sets(p in random_poset(), seed in 0usize..64) {
        let n = p.size();
        let start = seed % n;
        let up: Vec<usize> = p.above(start).collect();
        prop_assert!(p.is_up_closed(&up));
        let w = p.weighting();
        let wi = p.induced(&up).weighting();
        for (i, &a) in up.iter().enumerate() {
            prop_assert_eq!(&wi[i], &w[a]);
        }
        let down: Vec<usize> = p.below(start).collect();
        prop_assert!(p.is_down_closed(&down));
        let c = p.coweighting();
        let ci = p.induced(&down).coweighting();
        for (i, &a) in down.iter().enumerate() {
            prop_assert_eq!(&ci[i], &c[a]);
        }
    }

    #[test]
    fn invariance_under_rotation((p, act, _fam) in rotation_poset()) {
        let mu = p.moebius_matrix();
        let w = p.weighting();
        let c = p.coweighting();
        for g in act.generators() {
            for a in 0..p.size() {
                let ga = g[a] as usize;
                prop_assert_eq!(&w[a], &w[ga]);
                prop_assert_eq!(&c[a], &c[ga]);
                for b in 0..p.size() {
                    prop_assert_eq!(&mu[a][b], &mu[ga][g[b] as usize]);
                }
            }
        }
        // orbit weighting pulls back, and orbit counting is consistent
        let ow = act.orbit_weighting(&p).unwrap();
        prop_assert_eq!(ow.euler_characteristic(), p.euler_characteristic().unwrap());
        act.quotient_delta_euler(&p).unwrap();
    }
}
