use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::ConjectureError;

/// Polynomial in X with integer coefficients, lowest degree first and no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `X^n`
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        IntegerPolynomial { coeffs: c }
    }

    /// `[m] = 1 + X + ... + X^{m-1}`
    pub fn bracket(m: usize) -> Self {
        IntegerPolynomial::new(vec![BigInt::one(); m])
    }

    /// `[1][2]...[m]`
    pub fn gauss_factorial(m: usize) -> Self {
        (1..=m).fold(Self::one(), |acc, j| &acc * &Self::bracket(j))
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exact quotient by a polynomial with leading coefficient 1; `None` if
    /// the division leaves a remainder.
    pub fn div_exact_monic(&self, d: &IntegerPolynomial) -> Option<IntegerPolynomial> {
        let dd = d.degree()?;
        if !d.coeffs[dd].is_one() {
            return None;
        }
        let Some(n) = self.degree() else { return Some(Self::zero()) };
        if n < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let c = rem[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quo[i] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| IntegerPolynomial::new(quo))
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn add(self, o: &IntegerPolynomial) -> IntegerPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |v: &[BigInt], i: usize| v.get(i).cloned().unwrap_or_default();
        IntegerPolynomial::new((0..n).map(|i| get(&self.coeffs, i) + get(&o.coeffs, i)).collect())
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn mul(self, o: &IntegerPolynomial) -> IntegerPolynomial {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return IntegerPolynomial::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(c)
    }
}

impl Neg for IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn neg(self) -> IntegerPolynomial {
        IntegerPolynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigInt::zero();
            let abs = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{i}")?,
            }
        }
        Ok(())
    }
}

/// The `2^{m-1}` ordered partitions (compositions) of m, for m >= 1.
pub fn ordered_partitions(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    (0..1u64 << (m - 1))
        .map(|cuts| {
            let mut parts = Vec::new();
            let mut run = 1;
            for i in 0..m - 1 {
                if cuts >> i & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts
        })
        .collect()
}

/// `[m]! / ([m_1]! ... [m_k]!)` for `m = m_1 + ... + m_k`.
pub fn gaussian_multinomial(parts: &[usize]) -> IntegerPolynomial {
    let m: usize = parts.iter().sum();
    parts.iter().fold(IntegerPolynomial::gauss_factorial(m), |acc, &mi| {
        acc.div_exact_monic(&IntegerPolynomial::gauss_factorial(mi)).expect("Gaussian multinomials are polynomials")
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianReport {
    pub m: usize,
    pub partitions: usize,
    /// `sum (-1)^{m-k} [m; m_1..m_k]`
    pub first: IntegerPolynomial,
    /// `sum (-1)^{m-k} [m; m_1..m_k] X^{sum C(m_i,2)}`
    pub second: IntegerPolynomial,
}

impl GaussianReport {
    pub fn to_tsv(&self) -> String {
        format!("m\t{}\npartitions\t{}\nfirst\t{}\nsecond\t{}\n", self.m, self.partitions, self.first, self.second)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "partitions": self.partitions,
            "first": self.first.to_string(),
            "second": self.second.to_string(),
        })
    }
}

pub const MAX_GAUSSIAN_M: usize = 12;

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Sums of signed Gaussian multinomials over the ordered partitions of m;
/// they must equal `X^{C(m,2)}` and 1.
pub fn gaussian_identities(m: usize) -> Result<GaussianReport, ConjectureError> {
    if m == 0 || m > MAX_GAUSSIAN_M {
        return Err(ConjectureError::Unsupported(format!("m = {m} must lie in 1..={MAX_GAUSSIAN_M}")));
    }
    let ops = ordered_partitions(m);
    let mut first = IntegerPolynomial::zero();
    let mut second = IntegerPolynomial::zero();
    for parts in &ops {
        let mut term = gaussian_multinomial(parts);
        if (m - parts.len()) % 2 == 1 {
            term = -term;
        }
        let shift = IntegerPolynomial::monomial(parts.iter().map(|&mi| choose2(mi)).sum());
        second = &second + &(&term * &shift);
        first = &first + &term;
    }
    if first != IntegerPolynomial::monomial(choose2(m)) {
        return Err(ConjectureError::Inconsistent(format!("m = {m}: first sum is {first}")));
    }
    if second != IntegerPolynomial::one() {
        return Err(ConjectureError::Inconsistent(format!("m = {m}: second sum is {second}")));
    }
    Ok(GaussianReport { m, partitions: ops.len(), first, second })
}
