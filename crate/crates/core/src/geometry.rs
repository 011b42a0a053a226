//! Boundary chains, corners and cells of a planar diagram.

use crate::error::LatticeError;
use crate::lattice::{Elem, PlanarLattice};

/// A covering square `{o, a_l, a_r, t}` that bounds an empty region of the diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FourCell {
    pub o: Elem,
    pub a_l: Elem,
    pub a_r: Elem,
    pub t: Elem,
}

impl FourCell {
    pub fn elements(&self) -> [Elem; 4] {
        [self.o, self.a_l, self.a_r, self.t]
    }

    /// Checks the covers and the adjacency of `a_l`, `a_r` in both `up(o)` and `down(t)`.
    pub fn is_valid_in(&self, l: &PlanarLattice) -> bool {
        let n = l.len();
        if [self.o, self.a_l, self.a_r, self.t].iter().any(|&x| x >= n) || self.a_l == self.a_r {
            return false;
        }
        adjacent(l.up(self.o), self.a_l, self.a_r) && adjacent(l.down(self.t), self.a_l, self.a_r)
    }

    /// Index `k` with `down(t)[k] = a_l`.
    pub fn position_in(&self, l: &PlanarLattice) -> Option<usize> {
        l.down(self.t).iter().position(|&x| x == self.a_l)
    }
}

fn adjacent(list: &[Elem], left: Elem, right: Elem) -> bool {
    list.windows(2).any(|w| w[0] == left && w[1] == right)
}

/// Left-most maximal chain, traced from the bottom through first upper covers.
pub fn left_boundary(l: &PlanarLattice) -> Vec<Elem> {
    trace(l, |l, x| l.up(x).first().copied())
}

/// Right-most maximal chain, traced from the bottom through last upper covers.
pub fn right_boundary(l: &PlanarLattice) -> Vec<Elem> {
    trace(l, |l, x| l.up(x).last().copied())
}

fn trace(l: &PlanarLattice, step: impl Fn(&PlanarLattice, Elem) -> Option<Elem>) -> Vec<Elem> {
    let mut chain = vec![l.bottom()];
    let mut x = l.bottom();
    while let Some(y) = step(l, x) {
        chain.push(y);
        x = y;
    }
    chain
}

fn trace_down(l: &PlanarLattice, step: impl Fn(&PlanarLattice, Elem) -> Option<Elem>) -> Vec<Elem> {
    let mut chain = vec![l.top()];
    let mut x = l.top();
    while let Some(y) = step(l, x) {
        chain.push(y);
        x = y;
    }
    chain.reverse();
    chain
}

/// Boundary chains and corners of a slim rectangular lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryProfile {
    /// Bottom to `c_l`.
    pub lower_left: Vec<Elem>,
    /// Bottom to `c_r`.
    pub lower_right: Vec<Elem>,
    /// `c_l` to top.
    pub upper_left: Vec<Elem>,
    /// `c_r` to top.
    pub upper_right: Vec<Elem>,
    pub c_l: Elem,
    pub c_r: Elem,
    /// `length[c_l, 1] + length[c_r, 1]`.
    pub t_len: usize,
}

impl BoundaryProfile {
    pub fn length_bottom_to_cl(&self) -> usize {
        self.lower_left.len() - 1
    }

    pub fn length_bottom_to_cr(&self) -> usize {
        self.lower_right.len() - 1
    }

    pub fn length_cl_to_top(&self) -> usize {
        self.upper_left.len() - 1
    }

    pub fn length_cr_to_top(&self) -> usize {
        self.upper_right.len() - 1
    }

    /// Elements of either upper boundary chain (the top included), ascending by id.
    pub fn upper_boundary(&self) -> Vec<Elem> {
        let mut v: Vec<Elem> = self
            .upper_left
            .iter()
            .chain(&self.upper_right)
            .copied()
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Boundary chains, corners and `t` of a slim rectangular lattice.
pub fn rectangular_profile(l: &PlanarLattice) -> Result<BoundaryProfile, LatticeError> {
    if l.len() < 4 {
        return Err(LatticeError::NotRectangular(format!(
            "{} elements",
            l.len()
        )));
    }
    let left = left_boundary(l);
    let right = right_boundary(l);
    if left != trace_down(l, |l, x| l.down(x).first().copied())
        || right != trace_down(l, |l, x| l.down(x).last().copied())
    {
        return Err(LatticeError::BoundaryMismatch);
    }
    let corner = |chain: &[Elem], side: &str| -> Result<usize, LatticeError> {
        let hits: Vec<usize> = (0..chain.len())
            .filter(|&i| l.is_doubly_irreducible(chain[i]))
            .collect();
        match hits.as_slice() {
            [i] => Ok(*i),
            _ => Err(LatticeError::NotRectangular(format!(
                "{} doubly-irreducible elements on the {side} boundary",
                hits.len()
            ))),
        }
    };
    let il = corner(&left, "left")?;
    let ir = corner(&right, "right")?;
    let (c_l, c_r) = (left[il], right[ir]);
    if l.meet(c_l, c_r) != l.bottom() || l.join(c_l, c_r) != l.top() {
        return Err(LatticeError::NotRectangular(format!(
            "corners {c_l} and {c_r} are not complementary"
        )));
    }
    let upper_left = left[il..].to_vec();
    let upper_right = right[ir..].to_vec();
    let t_len = upper_left.len() - 1 + upper_right.len() - 1;
    Ok(BoundaryProfile {
        lower_left: left[..=il].to_vec(),
        lower_right: right[..=ir].to_vec(),
        upper_left,
        upper_right,
        c_l,
        c_r,
        t_len,
    })
}

/// Every cell of the diagram, one per adjacent pair of lower covers.
///
/// Returns [`LatticeError::NonQuadCell`] for the first cell whose sides are longer than one
/// edge, which cannot happen in a planar semimodular lattice.
pub fn four_cells(l: &PlanarLattice) -> Result<Vec<FourCell>, LatticeError> {
    let mut cells = Vec::new();
    for t in l.elements() {
        for w in l.down(t).windows(2) {
            let (a_l, a_r) = (w[0], w[1]);
            let bad = LatticeError::NonQuadCell {
                top: t,
                left: a_l,
                right: a_r,
            };
            // Walk down the facing sides of the region until they can meet.
            let mut left_side = a_l;
            while !l.leq(left_side, a_r) {
                left_side = *l.down(left_side).last().ok_or(bad.clone())?;
            }
            let mut right_side = a_r;
            while !l.leq(right_side, a_l) {
                right_side = *l.down(right_side).first().ok_or(bad.clone())?;
            }
            let o = l.meet(a_l, a_r);
            let cell = FourCell { o, a_l, a_r, t };
            if left_side != o
                || right_side != o
                || !l.covers(o, a_l)
                || !l.covers(o, a_r)
                || !cell.is_valid_in(l)
            {
                return Err(bad);
            }
            cells.push(cell);
        }
    }
    Ok(cells)
}

/// Checks the properties an SPS claim entails: slim, semimodular, at most two upper
/// covers everywhere and only 4-cells.
pub fn validate_sps(l: &PlanarLattice) -> Result<(), LatticeError> {
    if !l.is_slim() {
        return Err(LatticeError::ClaimFailed("slim"));
    }
    if !l.is_semimodular() {
        return Err(LatticeError::ClaimFailed("semimodular"));
    }
    if l.elements().any(|x| l.up(x).len() > 2) {
        return Err(LatticeError::ClaimFailed("at most two upper covers"));
    }
    four_cells(l)?;
    Ok(())
}
