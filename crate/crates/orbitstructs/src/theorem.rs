use num_bigint::BigInt;
use num_traits::One;
use permcore::p_part;
use serde_json::{json, Value};
use subgroups::{radical_p_subgroups, GroupPair};

use crate::check::{checks_json, ensure, Check};
use crate::local::{local_reduced_euler, p_singular_count};
use crate::OrbitError;

/// One `N_G(A)`-orbit of A-invariant radical p-subgroups H.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Row {
    pub order: usize,
    pub orbit_len: usize,
    /// `-chi~(C_S(A))` for the Brown poset S of `N_G(H)/H`
    pub weight: BigInt,
    /// `|C_H(A)|`
    pub centralizer_order: usize,
}

#[derive(Clone, Debug)]
pub struct Theorem1Report {
    pub rows: Vec<Theorem1Row>,
    /// `sum_H w(H) |C_H(A)|`
    pub total: BigInt,
    /// `|C_G(A)_p|`
    pub p_singular: BigInt,
    /// `chi~(C_S(A))` for the Brown poset of G
    pub reduced: BigInt,
    /// `|C_G(A)|_p`
    pub centralizer_p_part: BigInt,
    pub checks: Vec<Check>,
}

impl Theorem1Report {
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("|H|\torbit\tweight\t|C_H(A)|\n");
        for r in &self.rows {
            s += &format!("{}\t{}\t{}\t{}\n", r.order, r.orbit_len, r.weight, r.centralizer_order);
        }
        s += &format!("total\t{}\n", self.total);
        s
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| json!({ "order": r.order, "orbit": r.orbit_len, "weight": r.weight.to_string(), "centralizer": r.centralizer_order }))
            .collect();
        json!({
            "rows": rows,
            "total": self.total.to_string(),
            "p_singular": self.p_singular.to_string(),
            "reduced": self.reduced.to_string(),
            "centralizer_p_part": self.centralizer_p_part.to_string(),
            "checks": checks_json(&self.checks),
        })
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// The three parts of the counting theorem for A acting on G:
/// the weighted count of A-invariant radical subgroups gives `|C_G(A)_p|`,
/// the weights above each such subgroup sum to 1, and `|C_G(A)|_p` divides
/// `chi~(C_S(A))`. Weights are computed once per `N_G(A)`-orbit.
pub fn theorem1_verify(pair: &GroupPair<'_>, p: u64, cap: usize) -> Result<Theorem1Report, OrbitError> {
    let g = pair.group();
    let fam = radical_p_subgroups(g, p, cap)?;
    let inv: Vec<usize> = (0..fam.len()).filter(|&i| pair.is_a_invariant(fam.member(i))).collect();
    let pos = |i: usize| inv.binary_search(&i).ok();

    let mut parent: Vec<usize> = (0..inv.len()).collect();
    let norm = pair.normalizer_in_g();
    for (j, &i) in inv.iter().enumerate() {
        for &x in norm.generators() {
            let img = g.conjugate_subgroup(fam.member(i), x);
            let k = fam.index_of_elements(img.elements()).and_then(pos).ok_or_else(|| OrbitError::CheckFailed {
                name: "N_G(A) permutes the A-invariant radical subgroups".into(),
                left: fam.label(i),
                right: "outside".into(),
            })?;
            let (a, b) = (find(&mut parent, j), find(&mut parent, k));
            parent[a.max(b)] = a.min(b);
        }
    }

    let mut weight = vec![BigInt::from(0); inv.len()];
    let mut rows = Vec::new();
    for j in 0..inv.len() {
        if find(&mut parent, j) != j {
            continue;
        }
        let h = fam.member(inv[j]);
        let w = -local_reduced_euler(pair, h, p, cap)?;
        let members: Vec<usize> = (0..inv.len()).filter(|&k| find(&mut parent, k) == j).collect();
        for &k in &members {
            weight[k] = w.clone();
        }
        rows.push(Theorem1Row { order: h.order(), orbit_len: members.len(), weight: w, centralizer_order: pair.centralizer_in(h).order() });
    }

    let total: BigInt = rows.iter().map(|r| &r.weight * BigInt::from(r.orbit_len * r.centralizer_order)).sum();
    let cg = pair.centralizer();
    let p_singular = BigInt::from(p_singular_count(g, &cg, p));
    let reduced = local_reduced_euler(pair, &g.trivial(), p, cap)?;
    let centralizer_p_part = BigInt::from(p_part(cg.order() as u64, p));

    let mut checks = vec![Check::equal("sum w(H) |C_H(A)| = |C_G(A)_p|", &total, &p_singular)];
    // the weights are the weighting of the poset of A-invariant radical subgroups
    let poset_w = fam.poset(Some(&inv)).weighting();
    for (j, &i) in inv.iter().enumerate() {
        let up: BigInt = (0..inv.len()).filter(|&k| fam.member(i).is_subgroup_of(fam.member(inv[k]))).map(|k| &weight[k]).sum();
        checks.push(Check::equal(format!("upward sum from {}", fam.label(i)), &up, &BigInt::one()));
        checks.push(Check::equal(format!("poset weighting at {}", fam.label(i)), &poset_w[j], &weight[j]));
    }
    checks.push(Check::divides("|C_G(A)|_p divides chi~(C_S(A))", &centralizer_p_part, &reduced));
    ensure(&checks)?;
    Ok(Theorem1Report { rows, total, p_singular, reduced, centralizer_p_part, checks })
}
