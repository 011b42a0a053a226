use std::fmt;

use crate::lattice::{Elem, PlanarLattice};

/// An equivalence relation on the elements, stored as a block index per element.
///
/// Block indices are normalised by first occurrence (element 0 is in block 0, the next
/// element outside block 0 opens block 1, …), so two values are equal iff the partitions are.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Congruence {
    class: Vec<u32>,
    blocks: usize,
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.blocks()).finish()
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                format!(
                    "{{{}}}",
                    b.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `x` and `y` were already together.
    pub(crate) fn union(&mut self, x: usize, y: usize) -> bool {
        let (a, b) = (self.find(x), self.find(y));
        if a == b {
            return false;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
        true
    }

    pub(crate) fn into_congruence(mut self) -> Congruence {
        let n = self.parent.len();
        let roots: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        Congruence::from_labels(&roots)
    }
}

impl Congruence {
    /// Normalises arbitrary block labels.
    pub fn from_labels<T: Copy + Eq + std::hash::Hash>(labels: &[T]) -> Self {
        let mut map = std::collections::HashMap::new();
        let class: Vec<u32> = labels
            .iter()
            .map(|l| {
                let next = map.len() as u32;
                *map.entry(*l).or_insert(next)
            })
            .collect();
        Congruence {
            blocks: map.len(),
            class,
        }
    }

    pub fn identity(n: usize) -> Self {
        Congruence {
            class: (0..n as u32).collect(),
            blocks: n,
        }
    }

    pub fn full(n: usize) -> Self {
        Congruence {
            class: vec![0; n],
            blocks: usize::from(n > 0),
        }
    }

    pub fn len(&self) -> usize {
        self.class.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.blocks
    }

    pub fn block_of(&self, x: Elem) -> usize {
        self.class[x] as usize
    }

    pub fn labels(&self) -> &[u32] {
        &self.class
    }

    pub fn same(&self, x: Elem, y: Elem) -> bool {
        self.class[x] == self.class[y]
    }

    pub fn blocks(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (x, &c) in self.class.iter().enumerate() {
            out[c as usize].push(x);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.blocks == self.class.len()
    }

    pub fn is_full(&self) -> bool {
        self.blocks <= 1
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &Congruence) -> bool {
        let mut image = vec![u32::MAX; self.blocks];
        for (x, &c) in self.class.iter().enumerate() {
            let slot = &mut image[c as usize];
            if *slot == u32::MAX {
                *slot = other.class[x];
            } else if *slot != other.class[x] {
                return false;
            }
        }
        true
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        let pairs: Vec<(u32, u32)> = self
            .class
            .iter()
            .copied()
            .zip(other.class.iter().copied())
            .collect();
        Congruence::from_labels(&pairs)
    }

    /// Join as equivalence relations; for congruences this is again a congruence.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let n = self.len();
        let mut uf = UnionFind::new(n);
        for rel in [self, other] {
            let mut first = vec![usize::MAX; rel.blocks];
            for x in 0..n {
                let c = rel.class[x] as usize;
                if first[c] == usize::MAX {
                    first[c] = x;
                } else {
                    uf.union(first[c], x);
                }
            }
        }
        uf.into_congruence()
    }

    /// Substitution property under all translations `· ∧ z`, `· ∨ z`; returns a failing
    /// `(x, y, z)` if any.
    pub fn compatibility_witness(&self, l: &PlanarLattice) -> Option<(Elem, Elem, Elem)> {
        let blocks = self.blocks();
        for b in &blocks {
            for (i, &x) in b.iter().enumerate() {
                for &y in &b[i + 1..] {
                    for z in l.elements() {
                        if !self.same(l.meet(x, z), l.meet(y, z))
                            || !self.same(l.join(x, z), l.join(y, z))
                        {
                            return Some((x, y, z));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_compatible(&self, l: &PlanarLattice) -> bool {
        self.compatibility_witness(l).is_none()
    }

    /// Bottom and top of every block, if every block is an interval of `l`.
    pub fn block_intervals(&self, l: &PlanarLattice) -> Option<Vec<(Elem, Elem)>> {
        self.blocks()
            .iter()
            .map(|b| {
                let lo = b.iter().copied().reduce(|a, x| l.meet(a, x))?;
                let hi = b.iter().copied().reduce(|a, x| l.join(a, x))?;
                let interval = l
                    .elements()
                    .filter(|&z| l.leq(lo, z) && l.leq(z, hi))
                    .count();
                (self.same(lo, b[0]) && self.same(hi, b[0]) && interval == b.len())
                    .then_some((lo, hi))
            })
            .collect()
    }
}
