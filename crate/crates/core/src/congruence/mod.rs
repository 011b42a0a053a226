//! Congruences, the congruence lattice, quotients and distributive reflections.

mod con;
mod partition;
mod prime;
mod quotient;

pub use con::{
    all_congruences, all_congruences_from, congruence_lattice, dual_atoms, dual_atoms_from,
    generated_congruence, join_irreducible_congruences, meet_all, principal_congruence, ConCaps,
    ConSummary, JoinIrreducibles,
};
pub use partition::Congruence;
pub use prime::{
    is_prime_congruence, least_distributive_congruence,
    least_distributive_congruence_by_dual_atoms, least_distributive_congruence_by_search,
    prime_congruence_of, prime_ideal_violation,
};
pub use quotient::quotient;
