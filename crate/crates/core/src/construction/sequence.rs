use crate::construction::fork::{fork_extension, ForkExtension};
use crate::construction::grid::make_grid;
use crate::error::ConstructionError;
use crate::geometry::FourCell;
use crate::lattice::{Elem, PlanarLattice};

/// Addresses the 4-cell `{a_l ∧ a_r, a_l, a_r, t}` with `(a_l, a_r) = (down(t)[k], down(t)[k + 1])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ForkSite {
    pub t: Elem,
    pub k: usize,
}

impl ForkSite {
    pub fn of_cell(l: &PlanarLattice, cell: &FourCell) -> Option<ForkSite> {
        cell.position_in(l).map(|k| ForkSite { t: cell.t, k })
    }

    pub fn resolve(&self, l: &PlanarLattice) -> Result<FourCell, ConstructionError> {
        let bad = ConstructionError::BadForkSite {
            t: self.t,
            k: self.k,
        };
        if self.t >= l.len() {
            return Err(bad);
        }
        let down = l.down(self.t);
        if self.k + 1 >= down.len() {
            return Err(bad);
        }
        let (a_l, a_r) = (down[self.k], down[self.k + 1]);
        let cell = FourCell {
            o: l.meet(a_l, a_r),
            a_l,
            a_r,
            t: self.t,
        };
        if cell.is_valid_in(l) {
            Ok(cell)
        } else {
            Err(bad)
        }
    }
}

/// A grid `C_p × C_q` and the fork sites `S^1, …, S^{s-1}`, each addressed in the numbering
/// of the lattice produced by the previous steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CzedliSchmidtSequence {
    pub p: usize,
    pub q: usize,
    pub forks: Vec<ForkSite>,
}

impl CzedliSchmidtSequence {
    pub fn grid(p: usize, q: usize) -> Self {
        CzedliSchmidtSequence {
            p,
            q,
            forks: Vec::new(),
        }
    }

    pub fn with_fork(mut self, t: Elem, k: usize) -> Self {
        self.forks.push(ForkSite { t, k });
        self
    }

    /// The `s` of `D = L_1, …, L_s = L`.
    pub fn s(&self) -> usize {
        self.forks.len() + 1
    }
}

/// The grid followed by the lattices after each fork, `L_1, …, L_s`, plus the extension
/// data of every fork step.
pub fn replay_steps(
    seq: &CzedliSchmidtSequence,
) -> Result<(Vec<PlanarLattice>, Vec<ForkExtension>), ConstructionError> {
    let mut lattices = vec![make_grid(seq.p, seq.q)?];
    let mut exts = Vec::with_capacity(seq.forks.len());
    for (i, site) in seq.forks.iter().enumerate() {
        let step = |e: ConstructionError| ConstructionError::Replay {
            step: i + 1,
            source: Box::new(e),
        };
        let cur = lattices.last().unwrap();
        let cell = site.resolve(cur).map_err(step)?;
        let ext = fork_extension(cur, cell).map_err(step)?;
        lattices.push(ext.lattice.clone());
        exts.push(ext);
    }
    Ok((lattices, exts))
}

/// Folds fork insertion over the grid.
pub fn replay(seq: &CzedliSchmidtSequence) -> Result<PlanarLattice, ConstructionError> {
    let mut l = make_grid(seq.p, seq.q)?;
    for (i, site) in seq.forks.iter().enumerate() {
        let step = |e: ConstructionError| ConstructionError::Replay {
            step: i + 1,
            source: Box::new(e),
        };
        let cell = site.resolve(&l).map_err(step)?;
        l = fork_extension(&l, cell).map_err(step)?.lattice;
    }
    Ok(l)
}
