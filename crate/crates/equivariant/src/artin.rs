use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use permcore::{ConjugacyData, PermGroup};
use posetcat::{fmt_q, qi, solve, to_integer, Solution, Q};

use crate::classfn::ClassFunction;
use crate::EquivariantError;

/// Conjugacy classes whose elements generate conjugate cyclic subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalClass {
    pub classes: Vec<usize>,
    pub element_order: u64,
    /// Representative of the first class; it generates the cyclic subgroup.
    pub generator: u32,
}

/// Rational classes ordered by their first conjugacy class.
pub fn rational_classes(g: &PermGroup, classes: &ConjugacyData) -> Vec<RationalClass> {
    let mut seen = vec![false; classes.len()];
    let mut out = Vec::new();
    for i in 0..classes.len() {
        if seen[i] {
            continue;
        }
        let x = classes.representatives[i];
        let n = classes.element_orders[i];
        let mut members: Vec<usize> = (1..=n.max(1))
            .filter(|k| k.gcd(&n) == 1)
            .map(|k| classes.class_of[g.pow(x, k) as usize] as usize)
            .collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            seen[m] = true;
        }
        out.push(RationalClass { classes: members, element_order: n, generator: x });
    }
    out
}

/// Coefficients of a class function in the basis `1_C^G / |N_G(C):C|` over
/// classes of cyclic subgroups C, with the identities they satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinDecomposition {
    pub cyclic_orders: Vec<u64>,
    pub generators: Vec<u32>,
    pub coefficients: Vec<BigInt>,
    pub normalizer_orders: Vec<u64>,
    /// `|N_G(C):C|`
    pub normalizer_indices: Vec<u64>,
    /// `sum_{x in C} |C_G(x)| / |N_G(C)|`
    pub weights: Vec<BigInt>,
    /// The same sum over the nonidentity elements of C.
    pub weights_nonidentity: Vec<BigInt>,
    /// `<f, |C_G|>`, equal to `sum_C a(C) weight(C)`.
    pub inner_product: BigInt,
}

impl ArtinDecomposition {
    /// Rows of cyclic orders, nonidentity weights and coefficients, with the
    /// inner product in the last column of the coefficient row.
    pub fn to_tsv(&self) -> String {
        let row = |name: &str, xs: Vec<String>, tail: &str| format!("{name}\t{}\t{tail}\n", xs.join("\t"));
        let mut s = row("|C|", self.cyclic_orders.iter().map(u64::to_string).collect(), "sum");
        s += &row("weight", self.weights_nonidentity.iter().map(BigInt::to_string).collect(), "");
        s += &row("coefficient", self.coefficients.iter().map(BigInt::to_string).collect(), &self.inner_product.to_string());
        s
    }
}

/// Artin coefficients of `f` over the cyclic subgroups of order prime to
/// `p` (all cyclic subgroups if `p` is `None`). `f` must be constant on
/// rational classes and vanish on the other classes. The solution must be
/// integral and reconstruct `f` exactly.
pub fn artin_decomposition(f: &ClassFunction, g: &PermGroup, p: Option<u64>) -> Result<ArtinDecomposition, EquivariantError> {
    let classes = g.conjugacy_classes();
    if classes.len() != f.len() || classes.class_sizes != f.class_sizes {
        return Err(EquivariantError::Inconsistent("class function belongs to another group".into()));
    }
    let regular = |o: u64| p.map_or(true, |p| o % p != 0);
    let rcs = rational_classes(g, &classes);
    for rc in &rcs {
        let v = &f.values[rc.classes[0]];
        if rc.classes.iter().any(|&c| &f.values[c] != v) {
            return Err(EquivariantError::NotRational(format!("elements of order {}", rc.element_order)));
        }
        if !regular(rc.element_order) && !v.is_zero() {
            return Err(EquivariantError::NotRational(format!(
                "nonzero value {} on elements of order {}",
                fmt_q(v),
                rc.element_order
            )));
        }
    }
    let sel: Vec<&RationalClass> = rcs.iter().filter(|rc| regular(rc.element_order)).collect();
    let n = sel.len();
    let mut induced: Vec<Vec<Q>> = Vec::with_capacity(n);
    let mut normalizer_orders = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let mut weights_nonidentity = Vec::with_capacity(n);
    for rc in &sel {
        let c = g.closure(&[rc.generator]);
        let norm = g.normalizer(&c).order() as u64;
        // 1_C^G(x) = |C ∩ x^G| |C_G(x)| / |C|
        let mut hits = vec![0u64; classes.len()];
        let mut wsum = BigInt::zero();
        for &y in c.elements() {
            let k = classes.class_of[y as usize] as usize;
            hits[k] += 1;
            wsum += classes.centralizer_orders[k];
        }
        let col: Vec<Q> = (0..classes.len())
            .map(|k| Q::new(BigInt::from(hits[k] * classes.centralizer_orders[k]), BigInt::from(c.order())))
            .collect();
        let (w, rem) = wsum.div_rem(&BigInt::from(norm));
        if !rem.is_zero() {
            return Err(EquivariantError::Inconsistent(format!("|N_G(C)| does not divide sum |C_G(x)| for |C| = {}", c.order())));
        }
        let w1 = (wsum - BigInt::from(g.order())) / BigInt::from(norm);
        induced.push(col);
        normalizer_orders.push(norm);
        weights.push(w);
        weights_nonidentity.push(w1);
    }
    let cyclic_orders: Vec<u64> = sel.iter().map(|rc| rc.element_order).collect();
    let normalizer_indices: Vec<u64> = normalizer_orders.iter().zip(&cyclic_orders).map(|(&nn, &c)| nn / c).collect();
    let basis = |j: usize, k: usize| &induced[j][k] / qi(normalizer_indices[j]);
    let matrix: Vec<Vec<Q>> = sel.iter().map(|rc| (0..n).map(|j| basis(j, rc.classes[0])).collect()).collect();
    let rhs: Vec<Q> = sel.iter().map(|rc| f.values[rc.classes[0]].clone()).collect();
    let sol = match solve(&matrix, &rhs) {
        Solution::Unique(x) => x,
        _ => return Err(EquivariantError::Singular(format!("{n} x {n} Artin system"))),
    };
    let coefficients = sol
        .iter()
        .zip(&cyclic_orders)
        .map(|(a, o)| to_integer(a).ok_or_else(|| EquivariantError::NonIntegral(format!("coefficient {} at |C| = {o}", fmt_q(a)))))
        .collect::<Result<Vec<_>, _>>()?;
    for k in 0..classes.len() {
        let v: Q = (0..n).map(|j| &sol[j] * basis(j, k)).sum();
        if v != f.values[k] {
            return Err(EquivariantError::Inconsistent(format!("reconstruction differs at class {k}")));
        }
    }
    let degree: Q = (0..n).map(|j| &sol[j] / qi(normalizer_orders[j])).sum::<Q>() * qi(g.order());
    if degree != f.values[0] {
        return Err(EquivariantError::Inconsistent("virtual degree differs from the value at 1".into()));
    }
    let inner_product: BigInt = coefficients.iter().zip(&weights).map(|(a, w)| a * w).sum();
    if qi(inner_product.clone()) != f.inner_product_with_conjugation_character() {
        return Err(EquivariantError::Inconsistent("weighted coefficient sum differs from <f, |C_G|>".into()));
    }
    Ok(ArtinDecomposition {
        cyclic_orders,
        generators: sel.iter().map(|rc| rc.generator).collect(),
        coefficients,
        normalizer_orders,
        normalizer_indices,
        weights,
        weights_nonidentity,
        inner_product,
    })
}
