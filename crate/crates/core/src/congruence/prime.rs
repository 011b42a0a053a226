use crate::congruence::con::{all_congruences, dual_atoms, meet_all, ConCaps};
use crate::congruence::partition::Congruence;
use crate::congruence::quotient::quotient;
use crate::error::CongruenceError;
use crate::lattice::{Elem, PlanarLattice};

/// A congruence with exactly two blocks.
pub fn is_prime_congruence(theta: &Congruence) -> bool {
    theta.block_count() == 2
}

/// Whether `set` is a prime ideal: a proper non-empty ideal whose complement is a filter.
pub fn prime_ideal_violation(l: &PlanarLattice, set: &[Elem]) -> Option<String> {
    let mut inside = vec![false; l.len()];
    for &x in set {
        inside[x] = true;
    }
    if set.is_empty() || inside[l.top()] {
        return Some("not proper and non-empty".into());
    }
    for x in l.elements() {
        for y in l.elements() {
            if inside[x] && l.leq(y, x) && !inside[y] {
                return Some(format!("{y} <= {x} but {y} is missing"));
            }
            if inside[x] && inside[y] && !inside[l.join(x, y)] {
                return Some(format!("join of {x} and {y} is missing"));
            }
            if !inside[x] && !inside[y] && inside[l.meet(x, y)] {
                return Some(format!("complement is not meet-closed at {x}, {y}"));
            }
        }
    }
    None
}

/// `π(P)`: the congruence with blocks `P` and `L \ P`.
pub fn prime_congruence_of(
    l: &PlanarLattice,
    ideal: &[Elem],
) -> Result<Congruence, CongruenceError> {
    if let Some(why) = prime_ideal_violation(l, ideal) {
        return Err(CongruenceError::NotPrimeIdeal(why));
    }
    let labels: Vec<bool> = l.elements().map(|x| ideal.contains(&x)).collect();
    let pi = Congruence::from_labels(&labels);
    if let Some(w) = pi.compatibility_witness(l) {
        return Err(CongruenceError::NotPrimeIdeal(format!(
            "partition not compatible at {w:?}"
        )));
    }
    Ok(pi)
}

/// Meet of the dual atoms whose quotient is the two-element chain (the prime ones).
pub fn least_distributive_congruence_by_dual_atoms(l: &PlanarLattice) -> Congruence {
    let atoms = dual_atoms(l);
    meet_all(l.len(), atoms.iter().filter(|d| is_prime_congruence(d)))
}

/// The unique minimal congruence with a distributive quotient, found by scanning `all`.
/// `None` if the minimal ones are not unique.
pub fn least_distributive_congruence_by_search(
    l: &PlanarLattice,
    all: &[Congruence],
) -> Option<Congruence> {
    let dist: Vec<&Congruence> = all
        .iter()
        .filter(|c| quotient(l, c).map(|q| q.is_distributive()).unwrap_or(false))
        .collect();
    let minimal: Vec<&Congruence> = dist
        .iter()
        .copied()
        .filter(|c| !dist.iter().any(|d| d != c && d.leq(c)))
        .collect();
    match minimal.as_slice() {
        [one] => Some((*one).clone()),
        _ => None,
    }
}

/// The least congruence `δ` with `L/δ` distributive.
///
/// Computed as the meet of the two-block dual atoms; when `Con L` is small enough to
/// enumerate, also by direct search, and the two results must agree.
pub fn least_distributive_congruence(l: &PlanarLattice) -> Result<Congruence, CongruenceError> {
    let delta = least_distributive_congruence_by_dual_atoms(l);
    if let Ok(all) = all_congruences(l, ConCaps::default()) {
        if least_distributive_congruence_by_search(l, &all).as_ref() != Some(&delta) {
            return Err(CongruenceError::RouteMismatch);
        }
    }
    Ok(delta)
}
