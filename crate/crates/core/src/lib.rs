//! Slim rectangular lattices built by fork insertion, their congruence lattices, and
//! executable checks of their structure.

pub mod analysis;
pub mod canon;
pub mod classify;
pub mod congruence;
pub mod construction;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod io;
pub mod lattice;

pub use canon::{canonical_form, isomorphic, CanonicalForm};
pub use classify::{classify_elements, ElementClass};
pub use error::{CongruenceError, ConstructionError, IoError, LatticeError, ParseError};
pub use geometry::{four_cells, rectangular_profile, BoundaryProfile, FourCell};
pub use lattice::{Elem, PlanarLattice};
