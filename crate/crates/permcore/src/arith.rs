use crate::group::PermGroup;
use crate::subgroup::Subgroup;
use crate::Error;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest power of `p` dividing `n` (`n > 0`).
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut r = 1;
    while n > 0 && n % p == 0 {
        n /= p;
        r *= p;
    }
    r
}

/// The part of `n` whose prime factors lie in `pi`.
pub fn pi_part(n: u64, pi: &[u64]) -> u64 {
    pi.iter().map(|&p| p_part(n, p)).product()
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_pi_number(n: u64, pi: &[u64]) -> bool {
    pi_part(n, pi) == n
}

pub fn euler_phi(n: u64) -> u64 {
    prime_divisors(n).iter().fold(n, |acc, &p| acc / p * (p - 1))
}

impl PermGroup {
    /// Number of p-singular elements (orders a power of p, identity included).
    ///
    /// Counted by scanning element orders and again through the sum over
    /// cyclic p-subgroups `1 + sum_{1 < C} (1 - 1/p)|C|`; the two must agree.
    pub fn count_p_singular(&self, p: u64) -> Result<u64, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let scan = self.elements().filter(|&x| self.is_p_element(x, p)).count() as u64;
        let mut seen = std::collections::HashSet::new();
        let mut via_cyclic = 1u64;
        for x in self.elements() {
            if x == 0 || !self.is_p_element(x, p) {
                continue;
            }
            let c = self.closure(&[x]);
            let n = c.order() as u64;
            if seen.insert(c.into_elements()) {
                via_cyclic += (p - 1) * (n / p);
            }
        }
        if scan != via_cyclic {
            return Err(Error::Inconsistent(format!("p-singular count {scan} by scan, {via_cyclic} by cyclic subgroups")));
        }
        Ok(scan)
    }

    /// Number of elements whose order involves only primes of `pi`.
    pub fn count_pi_singular(&self, pi: &[u64]) -> u64 {
        self.elements().filter(|&x| is_pi_number(self.element_order(x), pi)).count() as u64
    }

    pub fn is_pi_subgroup(&self, h: &Subgroup, pi: &[u64]) -> bool {
        is_pi_number(h.order() as u64, pi)
    }
}
