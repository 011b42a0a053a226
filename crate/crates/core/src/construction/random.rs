use rand::seq::SliceRandom;
use rand::Rng;

use crate::construction::fork::insert_fork;
use crate::construction::grid::make_grid;
use crate::construction::sequence::{CzedliSchmidtSequence, ForkSite};
use crate::error::ConstructionError;
use crate::geometry::four_cells;

/// A sequence on a random grid with `2 <= p, q <= max_grid` and `forks` fork steps at
/// uniformly chosen 4-cells.
pub fn random_sequence<R: Rng>(
    rng: &mut R,
    max_grid: usize,
    forks: usize,
) -> Result<CzedliSchmidtSequence, ConstructionError> {
    let p = rng.gen_range(2..=max_grid.max(2));
    let q = rng.gen_range(2..=max_grid.max(2));
    let mut seq = CzedliSchmidtSequence::grid(p, q);
    let mut l = make_grid(p, q)?;
    for _ in 0..forks {
        let cells = four_cells(&l)?;
        let cell = *cells
            .choose(rng)
            .expect("rectangular lattices have a 4-cell");
        seq.forks.push(ForkSite::of_cell(&l, &cell).unwrap());
        l = insert_fork(&l, cell)?;
    }
    Ok(seq)
}
