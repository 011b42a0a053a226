use crate::congruence::partition::Congruence;
use crate::error::CongruenceError;
use crate::lattice::PlanarLattice;

/// `L/θ` as an abstract lattice; element `i` of the result is block `i` of `θ`.
pub fn quotient(l: &PlanarLattice, theta: &Congruence) -> Result<PlanarLattice, CongruenceError> {
    let reps: Vec<usize> = theta.blocks().iter().map(|b| b[0]).collect();
    Ok(PlanarLattice::from_order(reps.len(), |a, b| {
        theta.same(l.join(reps[a], reps[b]), reps[b])
    })?)
}
