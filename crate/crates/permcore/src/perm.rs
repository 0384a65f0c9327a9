use std::fmt;

use crate::Error;

/// A permutation of `{0, .., degree-1}` stored as its image array.
///
/// Products compose left to right: `(a * b)(i) = b(a(i))`, so groups act
/// on the right like the conjugation `x^g = g^-1 x g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree as u16).collect() }
    }

    pub fn from_images(images: Vec<u16>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation);
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 0-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, Error> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut touched = vec![false; degree];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                if a >= degree {
                    return Err(Error::PointOutOfRange { point: a + 1, degree });
                }
                if touched[a] {
                    return Err(Error::Parse(format!("point {} repeated in cycles", a + 1)));
                }
                touched[a] = true;
                images[a] = c[(k + 1) % c.len()] as u16;
            }
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation with 1-based points, e.g. `(1,2,3)(4,5)`.
    /// Fixed points may be omitted; `()` is the identity.
    pub fn parse(degree: usize, s: &str) -> Result<Self, Error> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::Parse(format!("expected '(' in {s:?}")));
            }
            let close = rest.find(')').ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let body = rest[1..close].trim();
            if !body.is_empty() {
                let mut cyc = Vec::new();
                for tok in body.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                    let v: usize = tok.parse().map_err(|_| Error::Parse(format!("bad point {tok:?}")))?;
                    if v == 0 {
                        return Err(Error::Parse("points are numbered from 1".into()));
                    }
                    cyc.push(v - 1);
                }
                cycles.push(cyc);
            }
            rest = rest[close + 1..].trim_start();
        }
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u16;
        }
        Perm { images: inv }
    }

    /// `other^-1 * self * other`
    pub fn conjugate_by(&self, other: &Perm) -> Perm {
        other.inverse().compose(self).compose(other)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut j = self.apply(s);
            while j != s {
                seen[j] = true;
                c.push(j);
                j = self.apply(j);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

/// Parses a `;`-separated generator list.
pub fn parse_generators(degree: usize, s: &str) -> Result<Vec<Perm>, Error> {
    s.split(';').map(str::trim).filter(|t| !t.is_empty()).map(|t| Perm::parse(degree, t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Perm::parse(5, "(1,2,3)(4,5)").unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(p.order(), 6);
        assert_eq!(Perm::parse(3, "()").unwrap(), Perm::identity(3));
        assert_eq!(Perm::parse(4, " (1 3) ").unwrap().apply(2), 0);
    }

    #[test]
    fn rejects_garbage() {
        assert!(Perm::parse(3, "(1,4)").is_err());
        assert!(Perm::parse(3, "(1,2").is_err());
        assert!(Perm::parse(3, "(1,1)").is_err());
        assert!(Perm::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Perm::parse(3, "(1,2)").unwrap();
        let b = Perm::parse(3, "(2,3)").unwrap();
        // 1 -> 2 -> 3
        assert_eq!(a.compose(&b).apply(0), 2);
        assert!(a.compose(&a.inverse()).is_identity());
    }
}
