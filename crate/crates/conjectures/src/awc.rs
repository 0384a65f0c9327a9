use permcore::PermGroup;
use serde_json::{json, Value};
use subgroups::radical_p_subgroups;

use crate::degrees::{z_p, CharacterDegreeData, DegreeLibrary};
use crate::ConjectureError;

/// Supplies character degrees for the quotients `N_G(P)/P`.
pub trait DegreeProvider {
    fn degrees(&self, q: &PermGroup) -> Option<CharacterDegreeData>;
}

impl DegreeProvider for DegreeLibrary {
    fn degrees(&self, q: &PermGroup) -> Option<CharacterDegreeData> {
        self.identify(q)
    }
}

impl<F: Fn(&PermGroup) -> Option<CharacterDegreeData>> DegreeProvider for F {
    fn degrees(&self, q: &PermGroup) -> Option<CharacterDegreeData> {
        self(q)
    }
}

/// One class of radical p-subgroups P.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AwcTerm {
    pub order: usize,
    pub quotient_order: usize,
    /// `z_p(N_G(P)/P)`, if known
    pub z: Option<usize>,
    /// where the degrees came from
    pub source: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AwcOutcome {
    Holds,
    Fails,
    InsufficientData,
}

#[derive(Clone, Debug)]
pub struct AwcReport {
    pub p: u64,
    /// number of classes of p-regular elements
    pub p_regular_classes: usize,
    pub terms: Vec<AwcTerm>,
    pub total: Option<usize>,
    pub outcome: AwcOutcome,
}

impl AwcReport {
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("|P|\t|N_G(P)/P|\tz_p\tsource\n");
        for t in &self.terms {
            let z = t.z.map_or("?".to_string(), |z| z.to_string());
            s += &format!("{}\t{}\t{}\t{}\n", t.order, t.quotient_order, z, t.source);
        }
        s += &format!("sum\t\t{}\n", self.total.map_or("?".to_string(), |z| z.to_string()));
        s += &format!("k_p'\t\t{}\n", self.p_regular_classes);
        s
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|t| json!({ "order": t.order, "quotient_order": t.quotient_order, "z": t.z, "source": t.source }))
            .collect();
        let outcome = match self.outcome {
            AwcOutcome::Holds => "PASS",
            AwcOutcome::Fails => "FAIL",
            AwcOutcome::InsufficientData => "insufficient data",
        };
        json!({ "p": self.p, "p_regular_classes": self.p_regular_classes, "terms": terms, "total": self.total, "verdict": outcome })
    }
}

/// Compares the number of p-regular classes with `sum_[P] z_p(N_G(P)/P)`
/// over the classes of radical p-subgroups. Quotients of order prime to p
/// need no data: all their characters have defect zero.
pub fn awc_assemble(g: &PermGroup, p: u64, provider: &dyn DegreeProvider, cap: usize) -> Result<AwcReport, ConjectureError> {
    let fam = radical_p_subgroups(g, p, cap)?;
    let p_regular_classes = g.conjugacy_classes().p_regular(p).len();
    let mut terms = Vec::with_capacity(fam.class_count());
    for c in 0..fam.class_count() {
        let h = fam.representative(c);
        let quotient_order = fam.normalizer_order(c) / h.order();
        let term = if quotient_order as u64 % p != 0 {
            let k = if quotient_order == 1 {
                1
            } else {
                with_quotient(g, h, &fam.normalizer(c), |q| q.conjugacy_classes().len())?
            };
            AwcTerm { order: h.order(), quotient_order, z: Some(k), source: "order prime to p".into() }
        } else {
            let z = with_quotient(g, h, &fam.normalizer(c), |q| {
                provider.degrees(q).map(|data| z_p(&data, q, p).map(|z| (z, data.name.clone()))).transpose()
            })??;
            match z {
                Some((z, name)) => AwcTerm { order: h.order(), quotient_order, z: Some(z), source: name },
                None => AwcTerm { order: h.order(), quotient_order, z: None, source: "missing".into() },
            }
        };
        terms.push(term);
    }
    let total: Option<usize> = terms.iter().map(|t| t.z).sum();
    let outcome = match total {
        None => AwcOutcome::InsufficientData,
        Some(t) if t == p_regular_classes => AwcOutcome::Holds,
        Some(_) => AwcOutcome::Fails,
    };
    Ok(AwcReport { p, p_regular_classes, terms, total, outcome })
}

/// Runs `f` on `N/P` as a permutation group, which is N itself when P is
/// trivial.
fn with_quotient<T>(
    g: &PermGroup,
    p: &permcore::Subgroup,
    n: &permcore::Subgroup,
    f: impl FnOnce(&PermGroup) -> T,
) -> Result<T, ConjectureError> {
    if p.is_trivial() && n.order() == g.order() {
        return Ok(f(g));
    }
    if p.is_trivial() {
        let gens = n.generators().iter().filter(|&&x| x != 0).map(|&x| g.element(x)).collect();
        return Ok(f(&PermGroup::new(g.degree(), gens)?));
    }
    Ok(f(&g.quotient_group(n, p)?.group))
}
