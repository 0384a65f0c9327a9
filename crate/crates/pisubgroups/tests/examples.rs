use num_bigint::BigInt;
use permcore::{group_by_name, PermGroup};
use pisubgroups::{hio_divisibility, pi_global_identity, pi_weighting, PiContext};
use posetcat::q;
use subgroups::DEFAULT_FAMILY_CAP as CAP;

fn bigs(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn gl32_two_three() {
    let g = group_by_name("GL(3,2)").unwrap();
    let ctx = PiContext::new(&g, &[2, 3], CAP).unwrap();
    assert_eq!(ctx.pi_singular, 120);
    let w = pi_weighting(&ctx).unwrap();
    assert_eq!(w.orders, vec![24, 24, 12, 12, 8, 6, 4, 4, 4, 3, 2, 1]);
    assert_eq!(w.lengths, vec![7, 7, 7, 7, 21, 28, 7, 7, 21, 28, 21, 1]);
    assert_eq!(w.weights, bigs(&[1, 1, 0, 0, -1, -1, 0, 0, 0, 0, 4, -48]));
    // chi of the poset of nonidentity pi-subgroups is 1 - (-48)
    assert_eq!(BigInt::from(1) - &w.weights[11], BigInt::from(49));
    let r = pi_global_identity(&ctx).unwrap();
    assert_eq!(r.total, BigInt::from(120));
    assert_eq!(r.orbit_euler, q(120, 168));
    let h = hio_divisibility(&ctx).unwrap();
    assert_eq!(h.index_pi_parts, vec![1, 1, 2, 2, 1, 1, 6, 6, 2, 2, 4, 24]);
}

#[test]
fn gl32_single_prime_is_brown() {
    let g = group_by_name("GL(3,2)").unwrap();
    let ctx = PiContext::new(&g, &[2], CAP).unwrap();
    let h = hio_divisibility(&ctx).unwrap();
    let last = h.orders.len() - 1;
    assert_eq!(h.orders[last], 1);
    assert_eq!(h.weights[last], BigInt::from(8));
    assert_eq!(h.index_pi_parts[last], 8);
}

#[test]
fn m11_two_three() {
    let g = group_by_name("M11").unwrap();
    let ctx = PiContext::new(&g, &[2, 3], CAP).unwrap();
    let r = pi_global_identity(&ctx).unwrap();
    assert_eq!(r.pi_singular, 4896);
    assert_eq!(r.weighting.weights.last().unwrap(), &BigInt::from(-3024));
    hio_divisibility(&ctx).unwrap();
}

#[test]
fn all_primes_counts_every_element() {
    for n in 3..=5 {
        let g = PermGroup::symmetric(n).unwrap();
        let pi = permcore::prime_divisors(g.order() as u64);
        let ctx = PiContext::new(&g, &pi, CAP).unwrap();
        let r = pi_global_identity(&ctx).unwrap();
        assert_eq!(r.total, BigInt::from(g.order()));
        assert_eq!(r.orbit_euler, q(1, 1));
    }
}

#[test]
fn trivial_group() {
    let g = PermGroup::new(2, vec![]).unwrap();
    let ctx = PiContext::new(&g, &[2], CAP).unwrap();
    let r = pi_global_identity(&ctx).unwrap();
    assert_eq!(r.total, BigInt::from(1));
}
