//! Fork insertion `L[S]` at a 4-cell of a slim rectangular lattice.
//!
//! The fork adds an apex `m` inside `S` directly below `t`, then two legs that descend to
//! the lower boundaries. The left leg follows the walk of cells `C_1 = S, C_2, …, C_n`
//! where `C_{j+1}` is the cell whose upper-right edge is the lower-left edge of `C_j`;
//! the new element `w_j` subdivides the lower-left edge of `C_j`, so `C_j` is split in two
//! by the edge `w_j ≺ w_{j-1}` (with `w_0 = m`). The walk stops once the lower-left edge
//! lies on the lower-left boundary. The right leg is the mirror image.

use crate::error::{ConstructionError, LatticeError};
use crate::geometry::{four_cells, rectangular_profile, BoundaryProfile, FourCell};
use crate::lattice::{Elem, PlanarLattice};

/// Result of a fork insertion together with the ids of the new elements.
#[derive(Debug, Clone)]
pub struct ForkExtension {
    pub lattice: PlanarLattice,
    pub apex: Elem,
    /// New elements of the left leg, top-down.
    pub left_leg: Vec<Elem>,
    /// New elements of the right leg, top-down.
    pub right_leg: Vec<Elem>,
}

impl ForkExtension {
    pub fn added(&self) -> usize {
        1 + self.left_leg.len() + self.right_leg.len()
    }
}

/// `L[S]`.
pub fn insert_fork(l: &PlanarLattice, cell: FourCell) -> Result<PlanarLattice, ConstructionError> {
    fork_extension(l, cell).map(|f| f.lattice)
}

fn is_chain_edge(chain: &[Elem], lo: Elem, hi: Elem) -> bool {
    chain.windows(2).any(|w| w[0] == lo && w[1] == hi)
}

fn walk_err(msg: String) -> ConstructionError {
    ConstructionError::LegWalk(msg)
}

fn left_walk(
    l: &PlanarLattice,
    prof: &BoundaryProfile,
    start: FourCell,
) -> Result<Vec<FourCell>, ConstructionError> {
    let mut cells = vec![start];
    loop {
        let cur = *cells.last().unwrap();
        let (u, v) = (cur.o, cur.a_l);
        if is_chain_edge(&prof.lower_left, u, v) {
            return Ok(cells);
        }
        if cells.len() > l.len() {
            return Err(walk_err("left walk does not terminate".into()));
        }
        let i = l.down(v).iter().position(|&x| x == u).unwrap();
        if i == 0 {
            return Err(walk_err(format!(
                "edge {u} < {v} has no cell to its lower left and is off the boundary"
            )));
        }
        let left = l.down(v)[i - 1];
        let next = FourCell {
            o: l.meet(left, u),
            a_l: left,
            a_r: u,
            t: v,
        };
        if !next.is_valid_in(l) {
            return Err(walk_err(format!(
                "no 4-cell has upper-right edge {u} < {v}"
            )));
        }
        cells.push(next);
    }
}

fn right_walk(
    l: &PlanarLattice,
    prof: &BoundaryProfile,
    start: FourCell,
) -> Result<Vec<FourCell>, ConstructionError> {
    let mut cells = vec![start];
    loop {
        let cur = *cells.last().unwrap();
        let (u, v) = (cur.o, cur.a_r);
        if is_chain_edge(&prof.lower_right, u, v) {
            return Ok(cells);
        }
        if cells.len() > l.len() {
            return Err(walk_err("right walk does not terminate".into()));
        }
        let down = l.down(v);
        let i = down.iter().position(|&x| x == u).unwrap();
        if i + 1 >= down.len() {
            return Err(walk_err(format!(
                "edge {u} < {v} has no cell to its lower right and is off the boundary"
            )));
        }
        let right = down[i + 1];
        let next = FourCell {
            o: l.meet(u, right),
            a_l: u,
            a_r: right,
            t: v,
        };
        if !next.is_valid_in(l) {
            return Err(walk_err(format!("no 4-cell has upper-left edge {u} < {v}")));
        }
        cells.push(next);
    }
}

fn replace(list: &mut [Elem], old: Elem, new: Elem) {
    let slot = list.iter_mut().find(|x| **x == old).expect("edge present");
    *slot = new;
}

/// Profile of a slim rectangular input, or the reason it is not one.
pub(crate) fn slim_rectangular_profile(l: &PlanarLattice) -> Result<BoundaryProfile, String> {
    if let Some(w) = l.m3_witness() {
        return Err(format!("M3 on {w:?}"));
    }
    if let Some(w) = l.semimodularity_witness() {
        return Err(format!("not semimodular at {w:?}"));
    }
    rectangular_profile(l).map_err(|e| e.to_string())
}

/// `L[S]` plus the ids of the inserted elements. New ids are appended in the order apex,
/// left leg top-down, right leg top-down; old ids are unchanged.
pub fn fork_extension(
    l: &PlanarLattice,
    cell: FourCell,
) -> Result<ForkExtension, ConstructionError> {
    if !cell.is_valid_in(l) || l.meet(cell.a_l, cell.a_r) != cell.o {
        return Err(ConstructionError::NotAFourCell(cell.elements()));
    }
    let before = slim_rectangular_profile(l).map_err(ConstructionError::InputNotSlimRectangular)?;
    let left_cells = left_walk(l, &before, cell)?;
    let right_cells = right_walk(l, &before, cell)?;

    let n = l.len();
    let mut up = l.upper_cover_lists().to_vec();
    let mut down = l.lower_cover_lists().to_vec();
    let apex = n;
    let left_leg: Vec<Elem> = (0..left_cells.len()).map(|j| n + 1 + j).collect();
    let right_leg: Vec<Elem> = (0..right_cells.len())
        .map(|j| n + 1 + left_cells.len() + j)
        .collect();
    up.resize(n + 1 + left_leg.len() + right_leg.len(), Vec::new());
    down.resize(up.len(), Vec::new());

    let k = cell.position_in(l).unwrap();
    down[cell.t].insert(k + 1, apex);
    up[apex] = vec![cell.t];
    down[apex] = vec![left_leg[0], right_leg[0]];

    for (j, c) in left_cells.iter().enumerate() {
        let w = left_leg[j];
        let above_right = if j == 0 { apex } else { left_leg[j - 1] };
        up[w] = vec![c.a_l, above_right];
        down[w] = match left_leg.get(j + 1) {
            Some(&next) => vec![next, c.o],
            None => vec![c.o],
        };
        replace(&mut up[c.o], c.a_l, w);
        replace(&mut down[c.a_l], c.o, w);
    }
    for (j, c) in right_cells.iter().enumerate() {
        let w = right_leg[j];
        let above_left = if j == 0 { apex } else { right_leg[j - 1] };
        up[w] = vec![above_left, c.a_r];
        down[w] = match right_leg.get(j + 1) {
            Some(&next) => vec![c.o, next],
            None => vec![c.o],
        };
        replace(&mut up[c.o], c.a_r, w);
        replace(&mut down[c.a_r], c.o, w);
    }

    let lattice = PlanarLattice::build_diagram(up, down).map_err(post)?;
    let ext = ForkExtension {
        lattice,
        apex,
        left_leg,
        right_leg,
    };
    check_postconditions(l, &before, &ext)?;
    Ok(ext)
}

fn post(e: LatticeError) -> ConstructionError {
    ConstructionError::Postcondition(e.to_string())
}

fn check_postconditions(
    old: &PlanarLattice,
    before: &BoundaryProfile,
    ext: &ForkExtension,
) -> Result<(), ConstructionError> {
    let l = &ext.lattice;
    let fail = |m: &str| Err(ConstructionError::Postcondition(m.to_string()));
    if l.len() != old.len() + ext.added() {
        return fail("element count");
    }
    let after = slim_rectangular_profile(l).map_err(ConstructionError::Postcondition)?;
    if l.elements().any(|x| l.up(x).len() > 2) {
        return fail("element with three upper covers");
    }
    four_cells(l).map_err(post)?;
    if after.c_l != before.c_l || after.c_r != before.c_r {
        return fail("corners moved");
    }
    if after.upper_left != before.upper_left || after.upper_right != before.upper_right {
        return fail("upper boundary changed");
    }
    if after.lower_left.len() != before.lower_left.len() + 1
        || after.lower_right.len() != before.lower_right.len() + 1
    {
        return fail("lower boundary chains did not grow by exactly one");
    }
    Ok(())
}
