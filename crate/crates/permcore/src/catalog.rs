use crate::group::PermGroup;
use crate::perm::{parse_generators, Perm};
use crate::Error;

const BUILTIN: &str = include_str!("../data/catalog.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Perm>,
    pub comment: Option<String>,
}

/// Parses catalog text: one group per line, `name degree gens [# comment]`.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, Error> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (body, comment) = match line.split_once('#') {
            Some((b, c)) => (b.trim(), Some(c.trim().to_string())),
            None => (line, None),
        };
        let (name, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim_start();
        let (deg, gens) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
        let degree: usize = deg.parse().map_err(|_| Error::Parse(format!("line {}: bad degree {deg:?}", ln + 1)))?;
        let gens = parse_generators(degree, gens).map_err(|e| Error::Parse(format!("line {}: {e}", ln + 1)))?;
        let name = name.to_string();
        out.push(CatalogEntry { name, degree, generators: gens, comment });
    }
    Ok(out)
}

pub fn builtin_catalog() -> Vec<CatalogEntry> {
    parse_catalog(BUILTIN).expect("bundled catalog parses")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    General,
    Special,
}

fn primitive_root(q: u64) -> u64 {
    let phi = q - 1;
    let fs = crate::arith::prime_divisors(phi);
    (1..q).find(|&w| fs.iter().all(|&f| mod_pow(w, phi / f, q) != 1)).unwrap_or(1)
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// GL or SL of dimension `n` over the prime field of order `q`, acting on the
/// `q^n - 1` nonzero row vectors.
pub fn matrix_group_as_permutations(n: usize, q: u64, kind: MatrixKind) -> Result<PermGroup, Error> {
    if n == 0 || !crate::arith::is_prime(q) {
        return Err(Error::UnsupportedField(q));
    }
    let size = (q as u128).checked_pow(n as u32).filter(|&s| s - 1 <= u16::MAX as u128);
    let size = size.ok_or(Error::DegreeOverflow(usize::MAX))? as u64;
    let degree = (size - 1) as usize;
    let decode = |mut v: u64| -> Vec<u64> {
        (0..n)
            .map(|_| {
                let d = v % q;
                v /= q;
                d
            })
            .collect()
    };
    let encode = |w: &[u64]| -> u64 { w.iter().rev().fold(0, |acc, &d| acc * q + d) };
    let as_perm = |m: &Vec<Vec<u64>>| -> Result<Perm, Error> {
        let imgs = (1..size)
            .map(|v| {
                let x = decode(v);
                let y: Vec<u64> = (0..n).map(|j| (0..n).map(|i| x[i] * m[i][j]).sum::<u64>() % q).collect();
                (encode(&y) - 1) as u16
            })
            .collect();
        Perm::from_images(imgs)
    };
    let ident = |k: usize| -> Vec<Vec<u64>> { (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect() };
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = ident(n);
                m[i][j] = 1;
                mats.push(m);
            }
        }
    }
    if kind == MatrixKind::General && q > 2 {
        let mut m = ident(n);
        m[0][0] = primitive_root(q);
        mats.push(m);
    }
    let gens = mats.iter().map(as_perm).collect::<Result<Vec<_>, _>>()?;
    let gens = gens.into_iter().filter(|p| !p.is_identity()).collect();
    PermGroup::new(degree, gens)
}

fn parse_matrix_name(name: &str) -> Option<(MatrixKind, usize, u64)> {
    let (kind, rest) = if let Some(r) = name.strip_prefix("GL(") {
        (MatrixKind::General, r)
    } else if let Some(r) = name.strip_prefix("SL(") {
        (MatrixKind::Special, r)
    } else {
        return None;
    };
    let (a, b) = rest.strip_suffix(')')?.split_once(',')?;
    Some((kind, a.trim().parse().ok()?, b.trim().parse().ok()?))
}

fn parse_indexed(name: &str, prefixes: &[&str]) -> Option<usize> {
    prefixes.iter().find_map(|p| {
        let r = name.strip_prefix(p)?;
        let r = r.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(r);
        r.parse().ok()
    })
}

pub fn cyclic(n: usize) -> Result<PermGroup, Error> {
    let gens = if n > 1 { vec![Perm::from_cycles(n, &[(0..n).collect()])?] } else { vec![] };
    PermGroup::new(n.max(1), gens)
}

/// Resolves a catalog name: bundled entries, `S<n>`/`Sym(<n>)`,
/// `A<n>`/`Alt(<n>)`, `C<n>`, `GL(n,q)` and `SL(n,q)`.
pub fn group_by_name(name: &str) -> Result<PermGroup, Error> {
    let name = name.trim();
    if let Some(e) = builtin_catalog().into_iter().find(|e| e.name.eq_ignore_ascii_case(name)) {
        return PermGroup::new(e.degree, e.generators);
    }
    if let Some((kind, n, q)) = parse_matrix_name(name) {
        return matrix_group_as_permutations(n, q, kind);
    }
    if let Some(n) = parse_indexed(name, &["Sym", "Sigma", "S"]).filter(|&n| n >= 1) {
        return PermGroup::symmetric(n);
    }
    if let Some(n) = parse_indexed(name, &["Alt", "A"]).filter(|&n| n >= 1) {
        return PermGroup::alternating(n);
    }
    if let Some(n) = parse_indexed(name, &["C"]).filter(|&n| n >= 1) {
        return cyclic(n);
    }
    Err(Error::UnknownGroup(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_catalog_orders() {
        for (name, order) in [("D8", 8), ("Q8", 8), ("V4", 4), ("F20", 20), ("F21", 21), ("PSL(2,7)", 168), ("A6", 360)] {
            assert_eq!(group_by_name(name).unwrap().order(), order, "{name}");
        }
    }

    #[test]
    fn named_families() {
        assert_eq!(group_by_name("S5").unwrap().order(), 120);
        assert_eq!(group_by_name("Sym(4)").unwrap().order(), 24);
        assert_eq!(group_by_name("A4").unwrap().order(), 12);
        assert_eq!(group_by_name("C6").unwrap().order(), 6);
        assert!(group_by_name("nonsense").is_err());
    }

    #[test]
    fn small_matrix_groups() {
        assert_eq!(matrix_group_as_permutations(1, 2, MatrixKind::General).unwrap().order(), 1);
        assert_eq!(matrix_group_as_permutations(2, 3, MatrixKind::General).unwrap().order(), 48);
        assert_eq!(matrix_group_as_permutations(2, 3, MatrixKind::Special).unwrap().order(), 24);
        assert_eq!(matrix_group_as_permutations(2, 5, MatrixKind::Special).unwrap().order(), 120);
        assert!(matrix_group_as_permutations(2, 4, MatrixKind::General).is_err());
    }

    #[test]
    fn catalog_parser_tolerates_layout() {
        let e = parse_catalog("# c\n\nX 3 (1,2) ; (2, 3)   # sym\n").unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].generators.len(), 2);
        assert_eq!(e[0].comment.as_deref(), Some("sym"));
    }
}
