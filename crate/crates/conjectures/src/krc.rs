use equivariant::{artin_decomposition, euler_class_function, phi_r, ArtinDecomposition, BrownVariant, SubgroupAPoset};
use num_bigint::BigInt;
use num_traits::Zero;
use permcore::{p_part, prime_divisors, PermGroup, Subgroup};
use posetcat::{fmt_q, to_integer, Q};
use serde_json::{json, Value};
use subgroups::{abelian_subgroups, abelian_rank, GroupPair};

use crate::degrees::{z_p, CharacterDegreeData};
use crate::ConjectureError;

/// One class of abelian p'-subgroups A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianColumn {
    pub label: String,
    pub order: usize,
    pub rank: usize,
    /// `|C_G(A)|_p`
    pub centralizer_p_part: u64,
    /// `-chi~(C_S(A))`
    pub neg_reduced_euler: BigInt,
    /// generating pairs of A
    pub phi2: BigInt,
    /// `|G:N_G(A)|`
    pub length: usize,
    pub product: BigInt,
}

#[derive(Clone, Debug)]
pub struct KrcReport {
    pub p: u64,
    pub group_order: usize,
    /// `z_p(G)` when degree data was supplied
    pub z_p: Option<usize>,
    pub class_orders: Vec<u64>,
    /// reduced `alpha_2` on the conjugacy classes
    pub alpha2: Vec<BigInt>,
    pub sum01: BigInt,
    pub artin: ArtinDecomposition,
    pub sum02: BigInt,
    pub abelian: Vec<AbelianColumn>,
    /// `sum_A chi~(C_S(A)) phi_2(A)/|N_G(A)|`
    pub sum03: BigInt,
    /// whether the common value equals `-z_p(G)`
    pub holds: Option<bool>,
}

impl KrcReport {
    /// Sum of the bottom row of the abelian table, `z_p(G)|G|` exactly when
    /// the conjecture holds.
    pub fn product_sum(&self) -> BigInt {
        self.abelian.iter().map(|c| &c.product).sum()
    }

    pub fn verdict(&self) -> &'static str {
        match self.holds {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "insufficient data",
        }
    }

    pub fn to_tsv(&self) -> String {
        let line = |name: &str, xs: Vec<String>| format!("{name}\t{}\n", xs.join("\t"));
        let strs = |xs: &[BigInt]| xs.iter().map(BigInt::to_string).collect::<Vec<_>>();
        let mut s = line("|x|", self.class_orders.iter().map(u64::to_string).chain(["sum".into()]).collect());
        s += &line("alpha~_2", strs(&self.alpha2).into_iter().chain([self.sum01.to_string()]).collect());
        s += "\n";
        s += &self.artin.to_tsv();
        s += "\n";
        let col = |f: &dyn Fn(&AbelianColumn) -> String| self.abelian.iter().map(f).collect::<Vec<_>>();
        s += &line("A", col(&|c| c.label.clone()));
        s += &line(&format!("|C_G(A)|_{}", self.p), col(&|c| c.centralizer_p_part.to_string()));
        s += &line("-chi~(C_S(A))", col(&|c| c.neg_reduced_euler.to_string()));
        s += &line("phi_2(A)", col(&|c| c.phi2.to_string()));
        s += &line("|G:N_G(A)|", col(&|c| c.length.to_string()));
        s += &line("product", col(&|c| c.product.to_string()).into_iter().chain([self.product_sum().to_string()]).collect());
        s += "\n";
        s += &format!("z_{}\t{}\n", self.p, self.z_p.map_or("?".to_string(), |z| z.to_string()));
        s += &format!("verdict\t{}\n", self.verdict());
        s
    }

    pub fn to_json(&self) -> Value {
        let strs = |xs: &[BigInt]| xs.iter().map(BigInt::to_string).collect::<Vec<_>>();
        let cols: Vec<Value> = self
            .abelian
            .iter()
            .map(|c| {
                json!({
                    "label": c.label,
                    "order": c.order,
                    "centralizer_p_part": c.centralizer_p_part,
                    "neg_reduced_euler": c.neg_reduced_euler.to_string(),
                    "phi2": c.phi2.to_string(),
                    "length": c.length,
                    "product": c.product.to_string(),
                })
            })
            .collect();
        json!({
            "p": self.p,
            "z_p": self.z_p,
            "class_orders": self.class_orders,
            "alpha2": strs(&self.alpha2),
            "sum01": self.sum01.to_string(),
            "artin": {
                "cyclic_orders": self.artin.cyclic_orders,
                "weights": strs(&self.artin.weights_nonidentity),
                "coefficients": strs(&self.artin.coefficients),
            },
            "sum02": self.sum02.to_string(),
            "abelian": cols,
            "sum03": self.sum03.to_string(),
            "product_sum": self.product_sum().to_string(),
            "verdict": self.verdict(),
        })
    }
}

/// Invariant factors of an abelian subgroup, joined by `x`; `1` for the
/// trivial group.
pub fn abelian_label(g: &PermGroup, a: &Subgroup) -> String {
    let n = a.order() as u64;
    if n == 1 {
        return "1".into();
    }
    // exponents of the cyclic factors of each Sylow subgroup, largest first
    let mut factors: Vec<u64> = Vec::new();
    for q in prime_divisors(n) {
        let mut exps = Vec::new();
        let mut prev = 0u32;
        let mut k = 1u32;
        loop {
            let qk = q.pow(k);
            let count = a.elements().iter().filter(|&&x| qk % g.element_order(x) == 0).count() as u64;
            let s = count.ilog(q);
            if s == prev {
                break;
            }
            // factors of order at least q^k
            exps.push(s - prev);
            prev = s;
            k += 1;
        }
        // exps[k-1] = number of factors with exponent >= k
        let rank = exps[0] as usize;
        let mut per_factor = vec![0u32; rank];
        for (k, &m) in exps.iter().enumerate() {
            for e in per_factor.iter_mut().take(m as usize) {
                *e = k as u32 + 1;
            }
        }
        if factors.len() < rank {
            factors.resize(rank, 1);
        }
        for (f, e) in factors.iter_mut().zip(per_factor) {
            *f *= q.pow(e);
        }
    }
    factors.reverse();
    factors.iter().map(u64::to_string).collect::<Vec<_>>().join("x")
}

/// Evaluates the three equivalent forms of the Knörr-Robinson condition at
/// p: the sum of the reduced `alpha_2`, the Artin coefficient sum, and the
/// sum over classes of abelian p'-subgroups. The three must agree; the
/// report says whether the common value is `-z_p(G)` when degree data is
/// given.
pub fn krc_check(g: &PermGroup, p: u64, data: Option<&CharacterDegreeData>, cap: usize) -> Result<KrcReport, ConjectureError> {
    if g.order() as u64 % p != 0 {
        return Err(ConjectureError::Unsupported(format!("{p} does not divide |G| = {}", g.order())));
    }
    let z = data.map(|d| z_p(d, g, p)).transpose()?;
    let pair = GroupPair::inner(g);
    let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, cap)?;

    let f = euler_class_function(&ap, 2, true)?;
    let alpha2 = f.integer_values().ok_or_else(|| ConjectureError::Inconsistent("alpha~_2 is not integral".into()))?;
    let sum01: BigInt = alpha2.iter().sum();

    let artin = artin_decomposition(&f, g, Some(p))?;
    let sum02: BigInt = artin.coefficients.iter().zip(&artin.weights_nonidentity).map(|(a, w)| a * w).sum();

    let fam = abelian_subgroups(g, usize::MAX, Some(p), cap)?;
    let all = ap.all();
    let mut abelian = Vec::with_capacity(fam.class_count());
    let mut sum03 = Q::zero();
    for c in 0..fam.class_count() {
        let a = fam.representative(c);
        let chi: BigInt = ap.euler(&ap.fixed_by(&all, a.generators()))? - 1;
        let phi2 = phi_r(g, a, 2)?;
        let norm = fam.normalizer_order(c);
        sum03 += Q::new(&chi * &phi2, BigInt::from(norm));
        let cent = g.centralizer_in(&g.whole(), a.generators());
        let length = fam.class_len(c);
        abelian.push(AbelianColumn {
            label: abelian_label(g, a),
            order: a.order(),
            rank: abelian_rank(g, a),
            centralizer_p_part: p_part(cent.order() as u64, p),
            neg_reduced_euler: -chi.clone(),
            product: -chi * &phi2 * BigInt::from(length),
            phi2,
            length,
        });
    }
    abelian.sort_by_key(|c| (c.rank > 1, c.order, c.label.clone()));
    let sum03 = to_integer(&sum03).ok_or_else(|| ConjectureError::Inconsistent(format!("abelian sum {} is not integral", fmt_q(&sum03))))?;
    if sum01 != sum02 || sum01 != sum03 {
        return Err(ConjectureError::Inconsistent(format!("the three forms disagree: {sum01}, {sum02}, {sum03}")));
    }
    let holds = z.map(|z| sum01 == -BigInt::from(z));
    Ok(KrcReport {
        p,
        group_order: g.order(),
        z_p: z,
        class_orders: f.element_orders.clone(),
        alpha2,
        sum01,
        artin,
        sum02,
        abelian,
        sum03,
        holds,
    })
}
