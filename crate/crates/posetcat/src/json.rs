use serde_json::{json, Value};

use crate::poset::FinitePoset;
use crate::rational::{fmt_q, Q};

/// Debug dump: labels, cover relations and optional weights as `p/q` strings.
pub fn poset_to_json(p: &FinitePoset, weights: Option<&[Q]>) -> Value {
    let covers: Vec<[usize; 2]> = p.cover_relations().into_iter().map(|(a, b)| [a, b]).collect();
    let mut v = json!({ "labels": p.labels(), "covers": covers });
    if let Some(w) = weights {
        v["weights"] = json!(w.iter().map(fmt_q).collect::<Vec<_>>());
    }
    v
}

pub fn fractions_json(values: &[Q]) -> Value {
    json!(values.iter().map(fmt_q).collect::<Vec<_>>())
}
