use std::cell::OnceCell;

use permcore::{group_by_name, p_part, PermGroup};

use crate::ConjectureError;

const BUILTIN: &str = include_str!("../data/degrees.txt");

/// Degrees of the irreducible complex characters of a named group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterDegreeData {
    pub name: String,
    pub order: u64,
    /// sorted ascending
    pub degrees: Vec<u64>,
}

impl CharacterDegreeData {
    /// Checks `sum d^2 = |G|`; the count is checked when parsing.
    pub fn new(name: impl Into<String>, order: u64, mut degrees: Vec<u64>) -> Result<Self, ConjectureError> {
        let name = name.into();
        degrees.sort_unstable();
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(ConjectureError::BadDegrees(format!("{name}: degrees must be positive")));
        }
        let squares: u128 = degrees.iter().map(|&d| (d as u128) * (d as u128)).sum();
        if squares != order as u128 {
            return Err(ConjectureError::BadDegrees(format!("{name}: sum of squares {squares} differs from |G| = {order}")));
        }
        Ok(CharacterDegreeData { name, order, degrees })
    }

    /// Degree data of an abelian group of the given order.
    pub fn abelian(order: u64) -> Self {
        CharacterDegreeData { name: format!("abelian({order})"), order, degrees: vec![1; order as usize] }
    }

    pub fn class_count(&self) -> usize {
        self.degrees.len()
    }

    /// Rejects data whose order or number of classes disagrees with `g`.
    pub fn validate_for(&self, g: &PermGroup) -> Result<(), ConjectureError> {
        let k = g.conjugacy_classes().len();
        if self.order != g.order() as u64 || self.class_count() != k {
            return Err(ConjectureError::BadDegrees(format!(
                "{}: data for |G| = {}, k = {} but the group has |G| = {}, k = {k}",
                self.name,
                self.order,
                self.class_count(),
                g.order()
            )));
        }
        Ok(())
    }

    pub fn to_line(&self) -> String {
        let ds: Vec<String> = self.degrees.iter().map(u64::to_string).collect();
        format!("{} {} {} {}", self.name, self.order, self.class_count(), ds.join(" "))
    }
}

/// Parses lines `name |G| k d1 ... dk`; `#` starts a comment.
pub fn parse_degree_data(text: &str) -> Result<Vec<CharacterDegreeData>, ConjectureError> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |what: &str| ConjectureError::BadDegrees(format!("line {}: {what}", ln + 1));
        let mut words = line.split_whitespace();
        let name = words.next().ok_or_else(|| bad("missing name"))?;
        let nums = words.map(|w| w.parse::<u64>().map_err(|_| bad(&format!("bad number {w:?}")))).collect::<Result<Vec<_>, _>>()?;
        let [order, k, degrees @ ..] = nums.as_slice() else { return Err(bad("expected |G| and k")) };
        if degrees.len() as u64 != *k {
            return Err(bad(&format!("{name} lists {} degrees, expected k = {k}", degrees.len())));
        }
        out.push(CharacterDegreeData::new(name, *order, degrees.to_vec())?);
    }
    Ok(out)
}

pub fn builtin_degrees() -> Vec<CharacterDegreeData> {
    parse_degree_data(BUILTIN).expect("bundled degree data parses")
}

/// Number of irreducible characters of p-defect zero: the degrees divisible
/// by `|G|_p`. The data is validated against `g` first.
pub fn z_p(data: &CharacterDegreeData, g: &PermGroup, p: u64) -> Result<usize, ConjectureError> {
    data.validate_for(g)?;
    let pp = p_part(data.order, p);
    Ok(data.degrees.iter().filter(|&&d| d % pp == 0).count())
}

type Fingerprint = Vec<(u64, u64)>;

/// Element orders and sizes of the conjugacy classes.
fn fingerprint(g: &PermGroup) -> Fingerprint {
    let c = g.conjugacy_classes();
    let mut f: Fingerprint = c.element_orders.iter().copied().zip(c.class_sizes.iter().copied()).collect();
    f.sort_unstable();
    f
}

/// Degree data looked up by name, or by matching the class statistics of a
/// group against the named groups of the same order.
pub struct DegreeLibrary {
    entries: Vec<CharacterDegreeData>,
    prints: Vec<OnceCell<Option<Fingerprint>>>,
}

impl DegreeLibrary {
    pub fn new(entries: Vec<CharacterDegreeData>) -> Self {
        let prints = entries.iter().map(|_| OnceCell::new()).collect();
        DegreeLibrary { entries, prints }
    }

    pub fn builtin() -> Self {
        Self::new(builtin_degrees())
    }

    pub fn entries(&self) -> &[CharacterDegreeData] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&CharacterDegreeData> {
        let name = name.trim();
        self.entries.iter().find(|e| e.name.eq_ignore_ascii_case(name))
    }

    /// Data for `g`: all ones for abelian groups, otherwise the first named
    /// group with the same order, class count and class statistics.
    pub fn identify(&self, g: &PermGroup) -> Option<CharacterDegreeData> {
        if g.is_abelian() {
            return Some(CharacterDegreeData::abelian(g.order() as u64));
        }
        let k = g.conjugacy_classes().len();
        let mut mine: Option<Fingerprint> = None;
        for (e, cell) in self.entries.iter().zip(&self.prints) {
            if e.order != g.order() as u64 || e.class_count() != k {
                continue;
            }
            let theirs = cell.get_or_init(|| group_by_name(&e.name).ok().map(|h| fingerprint(&h)));
            let mine = mine.get_or_insert_with(|| fingerprint(g));
            if theirs.as_ref() == Some(mine) {
                return Some(e.clone());
            }
        }
        None
    }
}
