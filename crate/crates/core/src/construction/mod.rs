//! Grids, fork insertion, replay of fork sequences and isomorph-free enumeration.

mod enumerate;
mod fork;
mod grid;
mod random;
mod sequence;

pub use enumerate::{
    enumerate_slim_rectangular, EnumeratedLattice, Enumeration, EnumerationBounds, MAX_ELEMENTS_CAP,
};
pub use fork::{fork_extension, insert_fork, ForkExtension};
pub use grid::make_grid;
pub use random::random_sequence;
pub use sequence::{replay, replay_steps, CzedliSchmidtSequence, ForkSite};
