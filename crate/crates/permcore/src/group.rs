use rustc_hash::FxHashMap;

use crate::perm::Perm;
use crate::subgroup::Subgroup;
use crate::Error;

pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// Element lookup keyed on the images of a base.
enum ElementIndex {
    Packed { base: Vec<u16>, bits: u32, map: FxHashMap<u128, u32> },
    Full { map: FxHashMap<Box<[u16]>, u32> },
}

/// A fully enumerated permutation group.
///
/// Elements are stored in lexicographic order of their image arrays, so
/// element `0` is always the identity and comparing element indices is
/// comparing permutations.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    flat: Vec<u16>,
    order: usize,
    index: ElementIndex,
    inv: Vec<u32>,
    elem_order: Vec<u32>,
    gen_idx: Vec<u32>,
    conj_tables: Vec<Vec<u32>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("gens", &self.gens)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self, Error> {
        Self::with_cap(degree, gens, DEFAULT_ELEMENT_CAP)
    }

    pub fn with_cap(degree: usize, gens: Vec<Perm>, cap: usize) -> Result<Self, Error> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if degree > u16::MAX as usize {
            return Err(Error::DegreeOverflow(degree));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let id: Box<[u16]> = (0..degree as u16).collect();
        let mut seen: FxHashMap<Box<[u16]>, ()> = FxHashMap::default();
        let mut queue: Vec<Box<[u16]>> = vec![id.clone()];
        seen.insert(id, ());
        let mut head = 0;
        while head < queue.len() {
            let cur = queue[head].clone();
            head += 1;
            for g in &gens {
                let next: Box<[u16]> = cur.iter().map(|&i| g.images()[i as usize]).collect();
                if !seen.contains_key(&next) {
                    if queue.len() >= cap {
                        return Err(Error::TooLarge { cap });
                    }
                    seen.insert(next.clone(), ());
                    queue.push(next);
                }
            }
        }
        drop(seen);
        queue.sort_unstable();
        let order = queue.len();
        let mut flat = Vec::with_capacity(order * degree);
        for e in &queue {
            flat.extend_from_slice(e);
        }
        drop(queue);
        let index = build_index(degree, &flat, order);
        let mut g = PermGroup {
            degree,
            gens,
            flat,
            order,
            index,
            inv: Vec::new(),
            elem_order: Vec::new(),
            gen_idx: Vec::new(),
            conj_tables: Vec::new(),
        };
        g.inv = (0..order as u32)
            .map(|i| {
                let p = Perm::from_images(g.images(i).to_vec()).expect("stored element").inverse();
                g.lookup(p.images()).expect("inverse lies in the group")
            })
            .collect();
        g.elem_order = (0..order as u32).map(|i| g.element(i).order() as u32).collect();
        g.gen_idx = g.gens.iter().map(|p| g.lookup(p.images()).expect("generator lies in the group")).collect();
        g.conj_tables = g
            .gen_idx
            .iter()
            .map(|&s| {
                let si = g.inv[s as usize];
                (0..order as u32).map(|x| g.mul(g.mul(si, x), s)).collect()
            })
            .collect();
        Ok(g)
    }

    pub fn symmetric(n: usize) -> Result<Self, Error> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[vec![0, 1]])?);
        }
        if n >= 3 {
            gens.push(Perm::from_cycles(n, &[(0..n).collect()])?);
        }
        PermGroup::new(n, gens)
    }

    pub fn alternating(n: usize) -> Result<Self, Error> {
        let gens = (2..n).map(|k| Perm::from_cycles(n, &[vec![0, 1, k]])).collect::<Result<Vec<_>, _>>()?;
        PermGroup::new(n, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    /// Element indices of the generators.
    pub fn generator_indices(&self) -> &[u32] {
        &self.gen_idx
    }

    pub fn identity(&self) -> u32 {
        0
    }

    #[inline]
    pub fn images(&self, i: u32) -> &[u16] {
        let s = i as usize * self.degree;
        &self.flat[s..s + self.degree]
    }

    pub fn element(&self, i: u32) -> Perm {
        Perm::from_images(self.images(i).to_vec()).expect("stored element")
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        if p.degree() != self.degree {
            return None;
        }
        self.lookup(p.images())
    }

    fn lookup(&self, images: &[u16]) -> Option<u32> {
        let idx = match &self.index {
            ElementIndex::Packed { base, bits, map } => {
                let mut k = 0u128;
                for (t, &b) in base.iter().enumerate() {
                    k |= (images[b as usize] as u128) << (t as u32 * bits);
                }
                *map.get(&k)?
            }
            ElementIndex::Full { map } => *map.get(images)?,
        };
        (self.images(idx) == images).then_some(idx)
    }

    #[inline]
    pub fn mul(&self, i: u32, j: u32) -> u32 {
        let a = self.images(i);
        let b = self.images(j);
        match &self.index {
            ElementIndex::Packed { base, bits, map } => {
                let mut k = 0u128;
                for (t, &p) in base.iter().enumerate() {
                    k |= (b[a[p as usize] as usize] as u128) << (t as u32 * bits);
                }
                map[&k]
            }
            ElementIndex::Full { map } => {
                let prod: Box<[u16]> = a.iter().map(|&x| b[x as usize]).collect();
                map[&prod]
            }
        }
    }

    #[inline]
    pub fn inv(&self, i: u32) -> u32 {
        self.inv[i as usize]
    }

    /// `g^-1 x g`
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv[g as usize], x), g)
    }

    /// `x^-1 y^-1 x y`
    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        self.mul(self.inv(x), self.conj(x, y))
    }

    pub fn pow(&self, x: u32, k: u64) -> u32 {
        let mut acc = 0u32;
        let mut base = x;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn element_order(&self, i: u32) -> u64 {
        self.elem_order[i as usize] as u64
    }

    /// Conjugation by the k-th generator as a table on element indices.
    pub fn conj_table(&self, k: usize) -> &[u32] {
        &self.conj_tables[k]
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order as u32
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_parts((0..self.order as u32).collect(), self.gen_idx.clone())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_parts(vec![0], Vec::new())
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gen_idx;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn build_index(degree: usize, flat: &[u16], order: usize) -> ElementIndex {
    // greedy base: keep a point whenever it refines the partition of elements
    let mut part = vec![0u32; order];
    let mut classes = 1usize;
    let mut base: Vec<u16> = Vec::new();
    for b in 0..degree {
        if classes == order {
            break;
        }
        let mut ids: FxHashMap<(u32, u16), u32> = FxHashMap::default();
        let mut next = vec![0u32; order];
        for e in 0..order {
            let key = (part[e], flat[e * degree + b]);
            let n = ids.len() as u32;
            next[e] = *ids.entry(key).or_insert(n);
        }
        if ids.len() > classes {
            classes = ids.len();
            part = next;
            base.push(b as u16);
        }
    }
    let bits = usize::BITS - (degree.max(2) - 1).leading_zeros();
    if base.len() as u32 * bits <= 128 {
        let mut map = FxHashMap::with_capacity_and_hasher(order, Default::default());
        for e in 0..order {
            let mut k = 0u128;
            for (t, &b) in base.iter().enumerate() {
                k |= (flat[e * degree + b as usize] as u128) << (t as u32 * bits);
            }
            map.insert(k, e as u32);
        }
        ElementIndex::Packed { base, bits, map }
    } else {
        let mut map = FxHashMap::with_capacity_and_hasher(order, Default::default());
        for e in 0..order {
            map.insert(flat[e * degree..(e + 1) * degree].into(), e as u32);
        }
        ElementIndex::Full { map }
    }
}
