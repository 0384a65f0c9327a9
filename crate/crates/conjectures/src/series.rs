use num_bigint::BigInt;
use num_traits::{One, Zero};
use permcore::is_prime;
use posetcat::{to_integer, Q};

use crate::ConjectureError;

pub const MAX_SERIES_LENGTH: usize = 400;

fn check_args(p: u64, n_max: usize) -> Result<(), ConjectureError> {
    if !is_prime(p) {
        return Err(ConjectureError::Unsupported(format!("{p} is not prime")));
    }
    if n_max > MAX_SERIES_LENGTH {
        return Err(ConjectureError::Unsupported(format!("series length {n_max} exceeds {MAX_SERIES_LENGTH}")));
    }
    Ok(())
}

/// `n! [x^n] exp(x + x^p/p + x^{p^2}/p^2 + ...)` for `n = 1..=n_max`, the
/// number of permutations of n points whose order is a power of p.
/// The exponential is expanded over the rationals through `E' = f'E`.
pub fn artin_hasse_counts(p: u64, n_max: usize) -> Result<Vec<BigInt>, ConjectureError> {
    check_args(p, n_max)?;
    // f' = sum_k x^{p^k - 1}
    let mut powers = Vec::new();
    let mut pk = 1usize;
    while pk <= n_max.max(1) {
        powers.push(pk);
        pk = match pk.checked_mul(p as usize) {
            Some(v) => v,
            None => break,
        };
    }
    let mut e: Vec<Q> = vec![Q::one()];
    let mut fact = BigInt::one();
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let s: Q = powers.iter().filter(|&&k| k <= n).map(|&k| e[n - k].clone()).sum();
        e.push(s / Q::from_integer(BigInt::from(n)));
        fact *= n;
        let v = &e[n] * Q::from_integer(fact.clone());
        let v = to_integer(&v).ok_or_else(|| ConjectureError::Inconsistent(format!("coefficient {n} is not integral")))?;
        out.push(v);
    }
    let fast = artin_hasse_counts_integral(p, n_max)?;
    if fast != out {
        return Err(ConjectureError::Inconsistent("rational and integral recurrences disagree".into()));
    }
    // Frobenius: |Sigma_n|_p divides the count
    let mut pp = BigInt::one();
    for (i, v) in out.iter().enumerate() {
        let mut n = i + 1;
        while n % p as usize == 0 {
            pp *= p;
            n /= p as usize;
        }
        if !(v % &pp).is_zero() {
            return Err(ConjectureError::Inconsistent(format!("|Sigma_{}|_{p} does not divide {v}", i + 1)));
        }
    }
    Ok(out)
}

/// The same numbers from `a_n = sum_{p^k <= n} (n-1)!/(n-p^k)! a_{n-p^k}`.
pub fn artin_hasse_counts_integral(p: u64, n_max: usize) -> Result<Vec<BigInt>, ConjectureError> {
    check_args(p, n_max)?;
    let mut a: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=n_max {
        let mut total = BigInt::zero();
        let mut k = 1usize;
        while k <= n {
            let falling: BigInt = (n - k + 1..n).map(BigInt::from).product();
            total += falling * &a[n - k];
            k *= p as usize;
        }
        a.push(total);
    }
    Ok(a.split_off(1))
}
