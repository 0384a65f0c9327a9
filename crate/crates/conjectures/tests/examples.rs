use conjectures::{
    artin_hasse_counts, awc_assemble, gaussian_identities, krc_check, z_p, AwcOutcome, DegreeLibrary, IntegerPolynomial,
};
use num_bigint::BigInt;
use permcore::{group_by_name, PermGroup};
use subgroups::DEFAULT_FAMILY_CAP as CAP;

fn bigs(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

struct Figure {
    labels: &'static [&'static str],
    cp: &'static [u64],
    neg_chi: &'static [i64],
    phi2: &'static [i64],
    lengths: &'static [usize],
    products: &'static [i64],
}

// columns in the order: cyclic by order, then noncyclic by order
fn m11_figures() -> [(u64, Figure); 4] {
    [
        (
            2,
            Figure {
                labels: &["1", "3", "5", "11", "3x3"],
                cp: &[16, 2, 1, 1, 1],
                neg_chi: &[496, -8, 1, 1, 1],
                phi2: &[1, 8, 24, 120, 48],
                lengths: &[1, 220, 396, 144, 55],
                products: &[496, -14080, 9504, 17280, 2640],
            },
        ),
        (
            3,
            Figure {
                labels: &["1", "2", "4", "5", "8", "11", "2x2"],
                cp: &[9, 3, 1, 1, 1, 1, 1],
                neg_chi: &[-54, -6, -2, 1, 0, 1, -2],
                phi2: &[1, 3, 12, 24, 48, 120, 6],
                lengths: &[1, 165, 495, 396, 495, 144, 330],
                products: &[-54, -2970, -11880, 9504, 0, 17280, -3960],
            },
        ),
        (
            5,
            Figure {
                labels: &["1", "2", "3", "4", "6", "8", "11", "2x2", "3x3"],
                cp: &[5, 1, 1, 1, 1, 1, 1, 1, 1],
                neg_chi: &[-395, -11, 1, -3, 1, 1, 1, 1, 1],
                phi2: &[1, 3, 8, 12, 24, 48, 120, 6, 48],
                lengths: &[1, 165, 220, 495, 660, 495, 144, 330, 55],
                products: &[-395, -5445, 1760, -17820, 15840, 23760, 17280, 1980, 2640],
            },
        ),
        (
            11,
            Figure {
                labels: &["1", "2", "3", "4", "5", "6", "8", "2x2", "3x3"],
                cp: &[11, 1, 1, 1, 1, 1, 1, 1, 1],
                neg_chi: &[-143, 1, 1, 1, -3, 1, 1, 1, 1],
                phi2: &[1, 3, 8, 12, 24, 24, 48, 6, 48],
                lengths: &[1, 165, 220, 495, 396, 660, 495, 330, 55],
                // the last entry is 1 * 48 * 55
                products: &[-143, 495, 1760, 5940, -28512, 15840, 23760, 1980, 2640],
            },
        ),
    ]
}

#[test]
fn m11_knoerr_robinson() {
    let g = group_by_name("M11").unwrap();
    let lib = DegreeLibrary::builtin();
    let data = lib.get("M11").unwrap();
    let sums = [(2, -2), (3, -1), (5, -5), (11, -3)];
    for ((p, fig), (_, sum)) in m11_figures().into_iter().zip(sums) {
        let r = krc_check(&g, p, Some(data), CAP).unwrap();
        assert_eq!((r.sum01.clone(), r.sum02.clone(), r.sum03.clone()), (sum.into(), sum.into(), sum.into()), "p = {p}");
        assert_eq!(r.z_p, Some(-sum as usize));
        assert_eq!(r.holds, Some(true));
        let labels: Vec<&str> = r.abelian.iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels, fig.labels, "p = {p}");
        assert_eq!(r.abelian.iter().map(|c| c.centralizer_p_part).collect::<Vec<_>>(), fig.cp);
        assert_eq!(r.abelian.iter().map(|c| c.neg_reduced_euler.clone()).collect::<Vec<_>>(), bigs(fig.neg_chi), "p = {p}");
        assert_eq!(r.abelian.iter().map(|c| c.phi2.clone()).collect::<Vec<_>>(), bigs(fig.phi2));
        assert_eq!(r.abelian.iter().map(|c| c.length).collect::<Vec<_>>(), fig.lengths);
        assert_eq!(r.abelian.iter().map(|c| c.product.clone()).collect::<Vec<_>>(), bigs(fig.products));
        assert_eq!(r.product_sum(), BigInt::from(-sum * 7920));
    }
}

#[test]
fn cyclic_sylow_and_normal_p_subgroup() {
    let lib = DegreeLibrary::builtin();
    // cyclic Sylow 7-subgroup; O_2(S4) != 1
    for (name, p) in [("GL(3,2)", 7), ("A5", 5), ("S5", 5), ("S4", 2), ("S4", 3), ("A4", 2)] {
        let g = group_by_name(name).unwrap();
        let r = krc_check(&g, p, lib.get(name), CAP).unwrap();
        assert_eq!(r.holds, Some(true), "{name} at {p}");
    }
}

#[test]
fn krc_across_the_library() {
    let lib = DegreeLibrary::builtin();
    for name in ["S5", "S6", "A6", "A7", "GL(3,2)", "GL(2,3)", "SL(2,3)", "F20", "F21"] {
        let g = group_by_name(name).unwrap();
        for p in permcore::prime_divisors(g.order() as u64) {
            let r = krc_check(&g, p, lib.get(name), CAP).unwrap();
            assert_eq!(r.holds, Some(true), "{name} at {p}: {} vs z = {:?}", r.sum01, r.z_p);
        }
    }
}

#[test]
fn defect_zero_counts() {
    let lib = DegreeLibrary::builtin();
    let g = group_by_name("SL(3,3)").unwrap();
    let d = lib.get("SL(3,3)").unwrap();
    let z: Vec<usize> = [2, 3, 13].iter().map(|&p| z_p(d, &g, p).unwrap()).collect();
    // degrees 16 (four), 27, and 13, 26, 26, 26, 39
    assert_eq!(z, vec![4, 1, 5]);
    let gl = group_by_name("GL(3,2)").unwrap();
    assert_eq!(z_p(lib.get("GL(3,2)").unwrap(), &gl, 5).unwrap(), 6);
}

#[test]
fn alperin_weights() {
    let lib = DegreeLibrary::builtin();
    let gl = group_by_name("GL(3,2)").unwrap();
    let r = awc_assemble(&gl, 2, &lib, CAP).unwrap();
    // classes of elements of orders 1, 3, 7, 7
    assert_eq!(r.p_regular_classes, 4);
    assert_eq!(r.outcome, AwcOutcome::Holds);
    let m11 = group_by_name("M11").unwrap();
    let r = awc_assemble(&m11, 11, &lib, CAP).unwrap();
    assert_eq!(r.p_regular_classes, 8);
    assert_eq!(r.outcome, AwcOutcome::Holds);
    for (name, p) in [("S5", 2), ("S5", 3), ("A5", 2), ("S6", 3), ("GL(2,3)", 2)] {
        let g = group_by_name(name).unwrap();
        let r = awc_assemble(&g, p, &lib, CAP).unwrap();
        assert_eq!(r.outcome, AwcOutcome::Holds, "{name} at {p}: {}", r.to_tsv());
    }
}

#[test]
fn artin_hasse_matches_permutation_counts() {
    for p in [2, 3, 5, 7] {
        let series = artin_hasse_counts(p, 8).unwrap();
        for n in 1..=8usize {
            let g = PermGroup::symmetric(n).unwrap();
            assert_eq!(series[n - 1], BigInt::from(g.count_p_singular(p).unwrap()), "n = {n}, p = {p}");
        }
    }
    let s = artin_hasse_counts(2, 400).unwrap();
    assert_eq!(s.len(), 400);
}

#[test]
fn gaussian_up_to_twelve() {
    for m in 1..=12 {
        let r = gaussian_identities(m).unwrap();
        assert_eq!(r.first, IntegerPolynomial::monomial(m * (m - 1) / 2));
        assert_eq!(r.second, IntegerPolynomial::one());
        assert_eq!(r.partitions, 1 << (m - 1));
    }
}
