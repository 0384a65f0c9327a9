use equivariant::BrownVariant;
use num_bigint::BigInt;
use orbitstructs::{
    frobenius_brown_bridge, global_identity, ideal_decomposition, orbit_category_euler, theorem1_verify, webb_identity,
    SkeletonKind,
};
use permcore::{group_by_name, parse_generators, PermGroup};
use posetcat::{q, qi};
use subgroups::{GroupPair, DEFAULT_FAMILY_CAP as CAP};

fn bigs(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn pair_from<'g>(g: &'g PermGroup, gens: &str) -> GroupPair<'g> {
    GroupPair::new(g, parse_generators(g.degree(), gens).unwrap()).unwrap()
}

#[test]
fn gl32_orbit_category() {
    let g = group_by_name("GL(3,2)").unwrap();
    let e = orbit_category_euler(&g, 2, CAP).unwrap();
    assert_eq!(e.density, q(8, 21));
    assert_eq!(e.kind, SkeletonKind::AllPSubgroups);
    for p in [3, 7] {
        orbit_category_euler(&g, p, CAP).unwrap();
    }
    let gi = global_identity(&g, 2, CAP).unwrap();
    assert_eq!(gi.total, BigInt::from(64));
}

#[test]
fn trivial_and_coprime() {
    let g = PermGroup::new(3, vec![]).unwrap();
    assert_eq!(orbit_category_euler(&g, 2, CAP).unwrap().density, qi(1));
    let s3 = PermGroup::symmetric(3).unwrap();
    let b = frobenius_brown_bridge(&s3, 5, CAP).unwrap();
    assert_eq!((b.p_singular.clone(), b.brown.clone()), (BigInt::from(1), BigInt::from(-1)));
    assert!(b.terms.is_empty());
}

#[test]
fn p_group_has_one_radical_class() {
    let g = group_by_name("D8").unwrap();
    let gi = global_identity(&g, 2, CAP).unwrap();
    assert_eq!(gi.orders, vec![8]);
    assert_eq!(gi.total, BigInt::from(8));
}

#[test]
fn sigma8_global_identity() {
    let g = PermGroup::symmetric(8).unwrap();
    let gi = global_identity(&g, 2, CAP).unwrap();
    assert_eq!(gi.orders, vec![128, 64, 32, 32, 16, 8, 2, 1]);
    assert_eq!(gi.lengths, vec![315, 105, 210, 210, 35, 30, 28, 1]);
    assert_eq!(gi.weights, bigs(&[1, -2, -2, -2, 16, 8, 16, -512]));
    assert_eq!(gi.total, BigInt::from(11264));
}

#[test]
fn sigma5_theorem1_example() {
    let g = PermGroup::symmetric(5).unwrap();
    let pair = pair_from(&g, "(1,2,3)");
    let r = theorem1_verify(&pair, 2, CAP).unwrap();
    assert_eq!(r.total, BigInt::from(2));
    let mut terms: Vec<(i64, usize, usize)> = r
        .rows
        .iter()
        .filter(|row| row.weight != BigInt::from(0))
        .map(|row| (i64::try_from(&row.weight).unwrap(), row.orbit_len, row.centralizer_order))
        .collect();
    terms.sort();
    assert_eq!(terms, vec![(-2, 1, 1), (1, 1, 2), (1, 2, 1)]);
}

#[test]
fn sigma7_with_sigma3() {
    let g = PermGroup::symmetric(7).unwrap();
    let pair = pair_from(&g, "(1,2);(1,2,3)");
    let r = theorem1_verify(&pair, 2, CAP).unwrap();
    assert_eq!(r.reduced, BigInt::from(-8));
    assert_eq!(r.centralizer_p_part, BigInt::from(8));
}

#[test]
fn sigma7_ideal_table() {
    let g = PermGroup::symmetric(7).unwrap();
    let table: [(&str, [i64; 5]); 6] = [
        ("", [160, 160, -1, -1, 16]),
        ("(1,2,3)", [-8, 0, 3, 11, 8]),
        ("(1,2,3)(4,5,6)", [4, 2, 4, 2, 2]),
        ("(1,2,3,4,5)", [0, 0, -1, -1, 2]),
        ("(1,2,3,4,5,6,7)", [-1, -1, -1, -1, 1]),
        ("(1,2,3);(4,5,6)", [1, -1, 1, -1, 1]),
    ];
    for (gens, row) in table {
        let pair = if gens.is_empty() { GroupPair::from_elements(&g, &[]) } else { pair_from(&g, gens) };
        let d = ideal_decomposition(&pair, 2, BrownVariant::Radical, CAP).unwrap();
        assert_eq!(d.row().to_vec(), bigs(&row), "A = <{gens}>");
    }
}

#[test]
fn webb_tables() {
    let g = group_by_name("GL(3,2)").unwrap();
    let w = webb_identity(&g, 2, CAP).unwrap();
    assert_eq!(w.reduced, [-8, 0, 1, 0, -1, -1].iter().map(|&x| qi(x)).collect::<Vec<_>>());
    assert_eq!(w.class_sizes, vec![1, 21, 56, 42, 24, 24]);
    let m = group_by_name("M11").unwrap();
    let w = webb_identity(&m, 5, CAP).unwrap();
    assert_eq!(w.reduced[0], qi(395));
}

#[test]
fn bridge_endpoints() {
    let g = group_by_name("GL(3,2)").unwrap();
    let b = frobenius_brown_bridge(&g, 2, CAP).unwrap();
    assert_eq!((b.p_singular.clone(), b.brown.clone()), (BigInt::from(64), BigInt::from(-8)));
    let m = group_by_name("M11").unwrap();
    let b = frobenius_brown_bridge(&m, 2, CAP).unwrap();
    assert_eq!(b.brown, BigInt::from(-496));
}

#[test]
fn sigma8_orbit_category() {
    let g = PermGroup::symmetric(8).unwrap();
    let e = orbit_category_euler(&g, 2, CAP).unwrap();
    assert_eq!(e.density, q(11264, 40320));
    assert_eq!(e.kind, SkeletonKind::AllPSubgroups);
}

#[test]
fn elementary_abelian_coweightings_by_dimension() {
    for (p, dmax) in [(2u64, 4usize), (3, 3), (5, 2)] {
        for d in 0..=dmax {
            let k = orbitstructs::elementary_abelian_coweighting(p, d).unwrap();
            let v = qi(p.pow(d as u32));
            let mut want = vec![qi(1) / &v];
            if d >= 1 {
                want.push(qi(p - 1) / &v);
            }
            want.extend((2..=d).map(|_| qi(0)));
            assert_eq!(k, want, "p = {p}, d = {d}");
        }
    }
}
