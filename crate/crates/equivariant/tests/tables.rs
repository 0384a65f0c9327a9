use equivariant::{
    artin_decomposition, centralizer_euler_characteristics, chi_r, chi_r_by_recursion, chi_r_for_subgroup,
    euler_class_function, BrownVariant, SubgroupAPoset,
};
use num_bigint::BigInt;
use permcore::group_by_name;
use posetcat::{qi, Q};
use subgroups::{all_subgroups, GroupPair, DEFAULT_FAMILY_CAP as CAP};

fn ints(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| qi(x)).collect()
}

fn bigs(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn gl32_reduced_chi3() {
    let g = group_by_name("GL(3,2)").unwrap();
    let pair = GroupPair::inner(&g);
    for (p, want) in [(2, -12), (3, -24), (7, -7)] {
        let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, CAP).unwrap();
        let c = chi_r(&ap, 3).unwrap();
        assert_eq!(c.reduced, qi(want), "p = {p}");
        // Webb: chi~_1 vanishes when p divides |G|
        assert_eq!(chi_r(&ap, 1).unwrap().reduced, qi(0));
    }
}

#[test]
fn gl32_centralizer_rows_and_webb() {
    let g = group_by_name("GL(3,2)").unwrap();
    let pair = GroupPair::inner(&g);
    let rows = [(2, [-8, 0, 1, 0, -1, -1]), (3, [27, 3, 0, -1, -1, -1]), (7, [7, -1, 1, -1, 0, 0])];
    for (p, row) in rows {
        let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, CAP).unwrap();
        let f = centralizer_euler_characteristics(&ap, true).unwrap();
        assert_eq!(f.element_orders, vec![1, 2, 3, 4, 7, 7]);
        assert_eq!(f.values, ints(&row), "p = {p}");
        let webb: Q = f.values.iter().zip(&f.class_sizes).map(|(v, &s)| v * qi(s)).sum();
        assert_eq!(webb, qi(0));
    }
}

#[test]
fn m11_table_one_and_two() {
    let g = group_by_name("M11").unwrap();
    let pair = GroupPair::inner(&g);
    let alpha = [
        (2, [0, 0, 1, 0, -1, 0, 0, 0, -1, -1], -2),
        (3, [0, 1, 0, 1, -1, 0, 0, 0, -1, -1], -1),
        (5, [0, 0, -1, 1, 0, -1, -1, -1, -1, -1], -5),
        (11, [0, -1, -1, -1, 3, -1, -1, -1, 0, 0], -3),
    ];
    let artin = [
        (2, [320, 0, 1, 0, -1, 0, 0, -1]),
        (3, [375, -2, 0, 1, -1, 0, 0, -1]),
        (5, [-296, 1, 2, 2, 0, -1, -1, -1]),
        (11, [-1463, 6, 2, 0, 3, -1, -1, 0]),
    ];
    for ((p, row, sum), (_, coeffs)) in alpha.into_iter().zip(artin) {
        let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, CAP).unwrap();
        let f = euler_class_function(&ap, 2, true).unwrap();
        assert_eq!(f.values, ints(&row), "p = {p}");
        assert_eq!(f.inner_product_with_conjugation_character(), qi(sum));
        assert_eq!(chi_r(&ap, 2).unwrap().reduced, qi(sum));
        let d = artin_decomposition(&f, &g, Some(p)).unwrap();
        let want_orders: Vec<u64> = [1, 2, 3, 4, 5, 6, 8, 11].into_iter().filter(|o| o % p != 0).collect();
        assert_eq!(d.cyclic_orders, want_orders);
        let want: Vec<i64> = [1, 2, 3, 4, 5, 6, 8, 11].iter().zip(coeffs).filter(|(o, _)| *o % p != 0).map(|(_, c)| c).collect();
        assert_eq!(d.coefficients, bigs(&want), "p = {p}");
        let weights: Vec<i64> = [1, 2, 3, 4, 5, 6, 8, 11].iter().zip([0, 1, 1, 4, 1, 8, 6, 2]).filter(|(o, _)| *o % p != 0).map(|(_, w)| w).collect();
        assert_eq!(d.weights_nonidentity, bigs(&weights));
        assert_eq!(d.inner_product, BigInt::from(sum));
    }
}

#[test]
fn m11_reduced_chi3() {
    let g = group_by_name("M11").unwrap();
    let pair = GroupPair::inner(&g);
    for (p, want) in [(2, -29), (3, -19), (5, -62), (11, -35)] {
        let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, CAP).unwrap();
        assert_eq!(chi_r(&ap, 3).unwrap().reduced, qi(want), "p = {p}");
    }
}

#[test]
fn per_subgroup_tables() {
    // value of -chi~_r(S, K) for r = 1, 2, 3, determined by |K| in both groups
    let cases: [(&str, &[(usize, [i64; 3])]); 2] = [
        (
            "A5",
            &[
                (1, [-4, -4, -4]),
                (2, [-2, -2, -2]),
                (3, [-2, -4, -10]),
                (5, [0, 4, 24]),
                (4, [-1, -1, -1]),
                (6, [-1, -2, -5]),
                (10, [0, 2, 12]),
                (12, [-1, -3, -9]),
                (60, [0, 1, 8]),
            ],
        ),
        (
            "GL(3,2)",
            &[
                (1, [8, 8, 8]),
                (2, [4, 4, 4]),
                (3, [2, 0, -6]),
                (7, [2, 8, 50]),
                (4, [2, 2, 2]),
                (6, [1, 0, -3]),
                (21, [0, 0, 8]),
                (8, [1, 1, 1]),
                (12, [0, -2, -8]),
                (24, [0, -1, -4]),
                (168, [0, 1, 12]),
            ],
        ),
    ];
    for (name, table) in cases {
        let g = group_by_name(name).unwrap();
        let pair = GroupPair::inner(&g);
        let ap = SubgroupAPoset::brown(&pair, 2, BrownVariant::Radical, CAP).unwrap();
        let subs = all_subgroups(&g, CAP).unwrap();
        let mut seen = 0;
        for c in 0..subs.class_count() {
            let k = subs.representative(c);
            let Some((_, row)) = table.iter().find(|(o, _)| *o == k.order()) else { continue };
            seen += 1;
            for r in 1..=3 {
                let v = chi_r_for_subgroup(&ap, 2, k, r).unwrap();
                assert_eq!(-v.clone(), BigInt::from(row[r - 1]), "{name} |K| = {} r = {r}", k.order());
                // the same number from K acting on the poset directly
                let sub_pair = GroupPair::from_elements(&g, k.elements());
                let sub_ap = SubgroupAPoset::brown(&sub_pair, 2, BrownVariant::Radical, CAP).unwrap();
                assert_eq!(chi_r_by_recursion(&sub_ap, r, true).unwrap(), qi(v));
            }
        }
        assert!(seen >= table.len());
    }
}

#[test]
fn m11_centralizer_rows_and_webb() {
    let g = group_by_name("M11").unwrap();
    let pair = GroupPair::inner(&g);
    let rows = [
        (2, [-496, 0, 8, 0, -1, 0, 0, 0, -1, -1]),
        (3, [54, 6, 0, 2, -1, 0, 0, 0, -1, -1]),
        (5, [395, 11, -1, 3, 0, -1, -1, -1, -1, -1]),
        (11, [143, -1, -1, -1, 3, -1, -1, -1, 0, 0]),
    ];
    for (p, row) in rows {
        let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, CAP).unwrap();
        let f = centralizer_euler_characteristics(&ap, true).unwrap();
        assert_eq!(f.class_sizes, vec![1, 165, 440, 990, 1584, 1320, 990, 990, 720, 720]);
        assert_eq!(f.values, ints(&row), "p = {p}");
        let webb: Q = f.values.iter().zip(&f.class_sizes).map(|(v, &s)| v * qi(s)).sum();
        assert_eq!(webb, qi(0));
    }
}

#[test]
fn symmetric_and_alternating_chi3() {
    let alt = [0, 8, 24, -2];
    let sym = [0, 2, 12, -2];
    for n in 4..=7usize {
        for (name, want) in [(format!("A{n}"), alt[n - 4]), (format!("S{n}"), sym[n - 4])] {
            let g = group_by_name(&name).unwrap();
            let pair = GroupPair::inner(&g);
            let ap = SubgroupAPoset::brown(&pair, 2, BrownVariant::Radical, CAP).unwrap();
            assert_eq!(chi_r(&ap, 3).unwrap().reduced, qi(-want), "{name}");
        }
    }
}
