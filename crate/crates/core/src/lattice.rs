//! Finite lattices stored as cover diagrams with ordered (left-to-right) cover lists.

use std::fmt;

use crate::error::LatticeError;

/// Element identifier. Elements of a lattice with `n` elements are `0..n`.
pub type Elem = usize;

/// Dense square bit matrix; row `x` holds the set `{y : rel(x, y)}`.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    #[inline]
    pub(crate) fn get(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.words + y / 64] >> (y % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, x: usize, y: usize) {
        self.bits[x * self.words + y / 64] |= 1 << (y % 64);
    }

    #[inline]
    pub(crate) fn row(&self, x: usize) -> &[u64] {
        &self.bits[x * self.words..(x + 1) * self.words]
    }

    fn or_row_into(&mut self, dst: usize, src: usize) {
        let w = self.words;
        for i in 0..w {
            let v = self.bits[src * w + i];
            self.bits[dst * w + i] |= v;
        }
    }

    fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for x in 0..self.n {
            for y in iter_bits(self.row(x)) {
                t.set(y, x);
            }
        }
        t
    }
}

pub(crate) fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// A validated finite lattice given by its cover diagram.
///
/// `up(x)` lists the upper covers of `x` from left to right and `down(x)` the lower
/// covers from left to right. For lattices produced by grids and fork insertion the
/// lists carry a planar embedding; for abstract lattices (quotients, congruence
/// lattices) they are simply sorted by id.
///
/// Values are immutable once built, so they can be shared across threads freely.
#[derive(Clone)]
pub struct PlanarLattice {
    up: Vec<Vec<Elem>>,
    down: Vec<Vec<Elem>>,
    bottom: Elem,
    top: Elem,
    above: BitMatrix,
    below: BitMatrix,
    meet: Vec<u32>,
    join: Vec<u32>,
    height: Vec<usize>,
}

impl fmt::Debug for PlanarLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PlanarLattice")
            .field("up", &self.up)
            .field("down", &self.down)
            .field("bottom", &self.bottom)
            .field("top", &self.top)
            .finish()
    }
}

impl PartialEq for PlanarLattice {
    fn eq(&self, other: &Self) -> bool {
        self.up == other.up && self.down == other.down
    }
}

impl Eq for PlanarLattice {}

impl PlanarLattice {
    /// Validates raw ordered cover lists and builds the meet/join tables.
    pub fn build_diagram(up: Vec<Vec<Elem>>, down: Vec<Vec<Elem>>) -> Result<Self, LatticeError> {
        let n = up.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if down.len() != n {
            return Err(LatticeError::LengthMismatch {
                up: n,
                down: down.len(),
            });
        }
        for (x, list) in up.iter().chain(down.iter()).enumerate() {
            let x = x % n;
            for (i, &y) in list.iter().enumerate() {
                if y >= n {
                    return Err(LatticeError::OutOfRange { element: y, len: n });
                }
                if y == x || list[..i].contains(&y) {
                    return Err(LatticeError::DuplicateCover {
                        element: x,
                        cover: y,
                    });
                }
            }
        }
        for x in 0..n {
            for &y in &up[x] {
                if !down[y].contains(&x) {
                    return Err(LatticeError::Inconsistent { lower: x, upper: y });
                }
            }
            for &y in &down[x] {
                if !up[y].contains(&x) {
                    return Err(LatticeError::Inconsistent { lower: y, upper: x });
                }
            }
        }

        // Kahn's algorithm from the minimal elements upwards.
        let mut indeg: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut topo: Vec<Elem> = (0..n).filter(|&x| indeg[x] == 0).collect();
        let minima = topo.len();
        let mut head = 0;
        while head < topo.len() {
            let x = topo[head];
            head += 1;
            for &y in &up[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    topo.push(y);
                }
            }
        }
        if topo.len() != n {
            return Err(LatticeError::Cyclic);
        }
        let maxima = (0..n).filter(|&x| up[x].is_empty()).count();
        if minima != 1 || maxima != 1 {
            return Err(LatticeError::NoBounds { minima, maxima });
        }
        let bottom = topo[0];
        let top = (0..n).find(|&x| up[x].is_empty()).unwrap();

        let mut above = BitMatrix::new(n);
        for &x in topo.iter().rev() {
            above.set(x, x);
            for &y in &up[x] {
                above.or_row_into(x, y);
            }
        }
        for (x, ups) in up.iter().enumerate() {
            for &y in ups {
                if ups.iter().any(|&z| z != y && above.get(z, y)) {
                    return Err(LatticeError::NotReduced { lower: x, upper: y });
                }
            }
        }
        let below = above.transpose();

        let mut height = vec![0usize; n];
        for &x in &topo {
            for &y in &up[x] {
                height[y] = height[y].max(height[x] + 1);
            }
        }

        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        let words = below.words;
        let mut common = vec![0u64; words];
        for x in 0..n {
            for y in x..n {
                let m = if above.get(x, y) {
                    x
                } else if above.get(y, x) {
                    y
                } else {
                    for (c, (a, b)) in common.iter_mut().zip(below.row(x).iter().zip(below.row(y)))
                    {
                        *c = a & b;
                    }
                    iter_bits(&common)
                        .find(|&z| is_subset(&common, below.row(z)))
                        .ok_or(LatticeError::NotALattice {
                            x,
                            y,
                            missing: "meet",
                        })?
                };
                let j = if above.get(x, y) {
                    y
                } else if above.get(y, x) {
                    x
                } else {
                    for (c, (a, b)) in common.iter_mut().zip(above.row(x).iter().zip(above.row(y)))
                    {
                        *c = a & b;
                    }
                    iter_bits(&common)
                        .find(|&z| is_subset(&common, above.row(z)))
                        .ok_or(LatticeError::NotALattice {
                            x,
                            y,
                            missing: "join",
                        })?
                };
                meet[x * n + y] = m as u32;
                meet[y * n + x] = m as u32;
                join[x * n + y] = j as u32;
                join[y * n + x] = j as u32;
            }
        }

        Ok(PlanarLattice {
            up,
            down,
            bottom,
            top,
            above,
            below,
            meet,
            join,
            height,
        })
    }

    /// Builds a lattice from upper-cover lists only; lower-cover lists are sorted by id.
    pub fn from_upper_covers(up: Vec<Vec<Elem>>) -> Result<Self, LatticeError> {
        let n = up.len();
        let mut down = vec![Vec::new(); n];
        for (x, list) in up.iter().enumerate() {
            for &y in list {
                if y < n {
                    down[y].push(x);
                }
            }
        }
        Self::build_diagram(up, down)
    }

    /// Builds a lattice from an order relation on `0..n`; cover lists are sorted by id.
    pub fn from_order<F>(n: usize, leq: F) -> Result<Self, LatticeError>
    where
        F: Fn(Elem, Elem) -> bool,
    {
        let mut up = vec![Vec::new(); n];
        for (x, ups) in up.iter_mut().enumerate() {
            ups.extend((0..n).filter(|&y| {
                x != y && leq(x, y) && !(0..n).any(|z| z != x && z != y && leq(x, z) && leq(z, y))
            }));
        }
        Self::from_upper_covers(up)
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.len()
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn up(&self, x: Elem) -> &[Elem] {
        &self.up[x]
    }

    pub fn down(&self, x: Elem) -> &[Elem] {
        &self.down[x]
    }

    pub fn upper_cover_lists(&self) -> &[Vec<Elem>] {
        &self.up
    }

    pub fn lower_cover_lists(&self) -> &[Vec<Elem>] {
        &self.down
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.above.get(x, y)
    }

    #[inline]
    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: Elem, y: Elem) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `x ≺ y`.
    #[inline]
    pub fn covers(&self, x: Elem, y: Elem) -> bool {
        self.up[x].contains(&y)
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.len() + y] as Elem
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.len() + y] as Elem
    }

    /// Length of the longest chain from the bottom to `x`.
    pub fn height(&self, x: Elem) -> usize {
        self.height[x]
    }

    pub fn length(&self) -> usize {
        self.height[self.top]
    }

    /// Elements of the principal ideal `↓x`, ascending by id.
    pub fn ideal(&self, x: Elem) -> Vec<Elem> {
        iter_bits(self.below.row(x)).collect()
    }

    /// Elements of the principal filter `↑x`, ascending by id.
    pub fn filter(&self, x: Elem) -> Vec<Elem> {
        iter_bits(self.above.row(x)).collect()
    }

    /// All cover pairs `(x, y)` with `x ≺ y`, ordered by `x` then by position in `up(x)`.
    pub fn cover_pairs(&self) -> Vec<(Elem, Elem)> {
        self.elements()
            .flat_map(|x| self.up[x].iter().map(move |&y| (x, y)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    /// Length of the interval `[x, y]`. In a semimodular lattice all maximal chains of an
    /// interval have this length; the value returned is the longest one in general.
    pub fn interval_length(&self, x: Elem, y: Elem) -> Option<usize> {
        if !self.leq(x, y) {
            return None;
        }
        // Longest path from x to y in the cover graph, by increasing height.
        let mut best: Vec<Option<usize>> = vec![None; self.len()];
        best[x] = Some(0);
        let mut order: Vec<Elem> = self
            .elements()
            .filter(|&z| self.leq(x, z) && self.leq(z, y))
            .collect();
        order.sort_by_key(|&z| self.height[z]);
        for &z in &order {
            if let Some(d) = best[z] {
                for &w in &self.up[z] {
                    if self.leq(w, y) {
                        best[w] = Some(best[w].map_or(d + 1, |b| b.max(d + 1)));
                    }
                }
            }
        }
        best[y]
    }

    /// A pair `(x, y)` with `x ∧ y ≺ x` but not `y ≺ x ∨ y`, if one exists.
    pub fn semimodularity_witness(&self) -> Option<(Elem, Elem)> {
        for x in self.elements() {
            for y in self.elements() {
                let m = self.meet(x, y);
                if m != x && self.covers(m, x) && !self.covers(y, self.join(x, y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_semimodular(&self) -> bool {
        self.semimodularity_witness().is_none()
    }

    /// Three pairwise incomparable elements with a common pairwise meet and join,
    /// i.e. the atoms of an `M3` sublattice.
    pub fn m3_witness(&self) -> Option<[Elem; 3]> {
        let n = self.len();
        for x in 0..n {
            for y in x + 1..n {
                if self.comparable(x, y) {
                    continue;
                }
                let (m, j) = (self.meet(x, y), self.join(x, y));
                for z in y + 1..n {
                    if !self.comparable(x, z)
                        && !self.comparable(y, z)
                        && self.meet(x, z) == m
                        && self.meet(y, z) == m
                        && self.join(x, z) == j
                        && self.join(y, z) == j
                    {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn is_slim(&self) -> bool {
        self.m3_witness().is_none()
    }

    /// A triple violating `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`.
    pub fn distributivity_witness(&self) -> Option<[Elem; 3]> {
        for x in self.elements() {
            for y in self.elements() {
                for z in self.elements() {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Exactly one upper and exactly one lower cover.
    pub fn is_doubly_irreducible(&self, x: Elem) -> bool {
        self.up[x].len() == 1 && self.down[x].len() == 1
    }

    pub fn is_chain(&self) -> bool {
        self.up.iter().all(|u| u.len() <= 1)
    }

    /// Closure of `seed` under meets and joins.
    pub fn generated_sublattice(&self, seed: &[Elem]) -> Vec<Elem> {
        let mut inside = vec![false; self.len()];
        let mut members: Vec<Elem> = Vec::new();
        for &x in seed {
            if !inside[x] {
                inside[x] = true;
                members.push(x);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for j in 0..=i {
                let y = members[j];
                for z in [self.meet(x, y), self.join(x, y)] {
                    if !inside[z] {
                        inside[z] = true;
                        members.push(z);
                    }
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }
}
