use serde_json::{json, Value};

use crate::family::SubgroupFamily;

/// Class-level dump: representative generators in cycle notation, order,
/// class length.
pub fn family_to_json(f: &SubgroupFamily<'_>) -> Value {
    let g = f.group();
    let classes: Vec<Value> = (0..f.class_count())
        .map(|c| {
            let rep = f.representative(c);
            json!({
                "class": c,
                "order": rep.order(),
                "length": f.class_len(c),
                "generators": rep.generators().iter().map(|&x| g.element(x).to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "group_order": g.order(), "members": f.len(), "classes": classes })
}
