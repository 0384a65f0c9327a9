use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: impl Into<BigInt>) -> Q {
    Q::from_integer(n.into())
}

/// `p/q` in lowest terms, or `p` for integers.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let n: BigInt = a.trim().parse().ok()?;
            let d: BigInt = b.trim().parse().ok()?;
            (!d.is_zero()).then(|| Q::new(n, d))
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Q>),
    /// one particular solution (free variables set to zero)
    Underdetermined { particular: Vec<Q>, rank: usize },
    Inconsistent,
}

impl Solution {
    pub fn any(&self) -> Option<&[Q]> {
        match self {
            Solution::Unique(v) | Solution::Underdetermined { particular: v, .. } => Some(v),
            Solution::Inconsistent => None,
        }
    }
}

/// Solves `a x = b` exactly. Rows are cleared of denominators, then reduced
/// by fraction-free (Bareiss) elimination with column skipping, so rank
/// deficient and inconsistent systems are detected exactly.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Solution {
    let m = a.len();
    assert_eq!(b.len(), m, "right-hand side length");
    let n = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "ragged matrix");
            let l = row.iter().chain(std::iter::once(rhs)).fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            row.iter().chain(std::iter::once(rhs)).map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in r + 1..m {
            for j in c + 1..=n {
                let v = &rows[r][c] * &rows[i][j] - &rows[i][c] * &rows[r][j];
                debug_assert!((&v % &prev).is_zero());
                rows[i][j] = v / &prev;
            }
            rows[i][c] = BigInt::zero();
        }
        prev = rows[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Q::zero(); n];
    for (k, &pc) in pivots.iter().enumerate().rev() {
        let mut acc = Q::from_integer(rows[k][n].clone());
        for j in pc + 1..n {
            if !rows[k][j].is_zero() && !x[j].is_zero() {
                acc -= &x[j] * Q::from_integer(rows[k][j].clone());
            }
        }
        x[pc] = acc / Q::from_integer(rows[k][pc].clone());
    }
    if r == n {
        Solution::Unique(x)
    } else {
        Solution::Underdetermined { particular: x, rank: r }
    }
}

/// Exact inverse of a square integer matrix, or `None` if singular.
pub fn inverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Q> = (0..n).map(|i| if i == j { Q::one() } else { Q::zero() }).collect();
        match solve(a, &e) {
            Solution::Unique(x) => cols.push(x),
            _ => return None,
        }
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

pub fn to_integer(x: &Q) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}
