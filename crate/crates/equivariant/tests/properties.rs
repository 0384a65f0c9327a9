use equivariant::{
    artin_decomposition, chi_r, commuting_tuple_count, commuting_tuple_count_brute, euler_class_function, phi_r,
    phi_r_brute, phi_r_by_sylow, BrownVariant, SubgroupAPoset,
};
use num_bigint::BigInt;
use permcore::{prime_divisors, Perm, PermGroup};
use posetcat::qi;
use proptest::prelude::*;
use subgroups::{abelian_subgroups, GroupPair, DEFAULT_FAMILY_CAP as CAP};

fn random_group(max_degree: u16) -> impl Strategy<Value = PermGroup> {
    (4..=max_degree).prop_flat_map(|n| {
        proptest::collection::vec(Just((0..n).collect::<Vec<u16>>()).prop_shuffle(), 1..4).prop_map(move |imgs| {
            let gens = imgs.into_iter().map(|v| Perm::from_images(v).unwrap()).collect();
            PermGroup::new(n as usize, gens).unwrap()
        })
    })
}

/// Permutations of the same degree, which normalize the alternating group.
fn acting_on_alternating() -> impl Strategy<Value = (usize, Vec<Perm>)> {
    (4usize..6).prop_flat_map(|n| {
        let perm = Just((0..n as u16).collect::<Vec<u16>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap());
        (Just(n), proptest::collection::vec(perm, 1..3))
    })
}

fn pick_prime(g: &PermGroup, k: usize) -> Option<u64> {
    let ps = prime_divisors(g.order() as u64);
    (!ps.is_empty()).then(|| ps[k % ps.len()])
}

fn sub_pair<'g>(g: &'g PermGroup, picks: &[u32]) -> GroupPair<'g> {
    let elems: Vec<u32> = picks.iter().map(|&x| x % g.order() as u32).collect();
    GroupPair::from_elements(g, &elems)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn tuple_counts_match_brute_force(g in random_group(5)) {
        prop_assume!(g.order() <= 24);
        let k = g.conjugacy_classes().len();
        prop_assert_eq!(commuting_tuple_count(&g, 2), BigInt::from(g.order() * k));
        for r in 0..=3 {
            prop_assert_eq!(commuting_tuple_count(&g, r), BigInt::from(commuting_tuple_count_brute(&g, r)));
        }
    }

    #[test]
    fn phi_matches_brute_force_and_sylow_product(g in random_group(6), r in 1usize..4) {
        prop_assume!(g.order() <= 48);
        let fam = abelian_subgroups(&g, usize::MAX, None, CAP).unwrap();
        for c in 0..fam.class_count() {
            let b = fam.representative(c);
            let m = phi_r(&g, b, r).unwrap();
            prop_assert_eq!(&m, &phi_r_by_sylow(&g, b, r).unwrap());
            if b.order() <= 24 {
                prop_assert_eq!(&m, &BigInt::from(phi_r_brute(&g, b, r)));
            }
        }
        // sum over abelian subgroups of phi_r is |C_r|
        let total: BigInt = (0..fam.class_count())
            .map(|c| phi_r(&g, fam.representative(c), r).unwrap() * fam.class_len(c))
            .sum();
        prop_assert_eq!(total, commuting_tuple_count(&g, r));
    }

    #[test]
    fn chi_paths_agree_and_are_integral(g in random_group(6), k in 0usize..4, picks in proptest::collection::vec(any::<u32>(), 0..3)) {
        let Some(p) = pick_prime(&g, k) else { return Ok(()) };
        let pair = sub_pair(&g, &picks);
        let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, CAP).unwrap();
        for r in 0..=2 {
            let c = chi_r(&ap, r).unwrap();
            if r >= 1 {
                let f = euler_class_function(&ap, r, false).unwrap();
                prop_assert_eq!(f.inner_product_with_conjugation_character(), c.chi.clone());
                let fr = euler_class_function(&ap, r, true).unwrap();
                prop_assert_eq!(fr.inner_product_with_conjugation_character(), c.reduced.clone());
            }
        }
    }

    #[test]
    fn external_actions_agree((n, gens) in acting_on_alternating(), k in 0usize..3) {
        let g = PermGroup::alternating(n).unwrap();
        let pair = GroupPair::new(&g, gens).unwrap();
        let p = pick_prime(&g, k).unwrap();
        let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, CAP).unwrap();
        for r in 0..=2 {
            chi_r(&ap, r).unwrap();
        }
    }

    #[test]
    fn brown_variants_give_equal_centralized_euler(g in random_group(5), k in 0usize..4, picks in proptest::collection::vec(any::<u32>(), 0..3)) {
        let Some(p) = pick_prime(&g, k) else { return Ok(()) };
        let pair = sub_pair(&g, &picks);
        let acting = pair.acting().whole();
        let full = SubgroupAPoset::brown(&pair, p, BrownVariant::Full, CAP).unwrap();
        let rad = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, CAP).unwrap();
        let eab = SubgroupAPoset::brown(&pair, p, BrownVariant::ElementaryAbelian, CAP).unwrap();
        let e = full.centralized_euler(&acting).unwrap();
        prop_assert_eq!(&e, &rad.centralized_euler(&acting).unwrap());
        prop_assert_eq!(&e, &eab.centralized_euler(&acting).unwrap());
    }

    #[test]
    fn reduced_class_functions_decompose(g in random_group(6), k in 0usize..4) {
        let Some(p) = pick_prime(&g, k) else { return Ok(()) };
        let pair = GroupPair::inner(&g);
        let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, CAP).unwrap();
        for r in 2..=3 {
            let f = euler_class_function(&ap, r, true).unwrap();
            prop_assert!(f.is_integral());
            prop_assert!(f.vanishes_off_p_regular(p));
            let d = artin_decomposition(&f, &g, Some(p)).unwrap();
            prop_assert_eq!(qi(d.inner_product.clone()), chi_r(&ap, r).unwrap().reduced);
            if r == 2 {
                // Webb: the value at 1 is chi~_1 = 0
                prop_assert_eq!(f.values[0].clone(), qi(0));
            }
        }
    }
}
