use std::collections::HashMap;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::construction::fork::insert_fork;
use crate::construction::grid::make_grid;
use crate::construction::sequence::{CzedliSchmidtSequence, ForkSite};
use crate::error::ConstructionError;
use crate::geometry::four_cells;
use crate::lattice::PlanarLattice;

/// Largest `max_elements` accepted by [`enumerate_slim_rectangular`].
pub const MAX_ELEMENTS_CAP: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnumerationBounds {
    pub max_elements: usize,
    /// Largest chain length allowed for either grid factor.
    pub max_grid: usize,
    pub max_forks: usize,
}

impl EnumerationBounds {
    /// Only the element bound restricts the search.
    pub fn elements(max_elements: usize) -> Self {
        EnumerationBounds {
            max_elements,
            max_grid: max_elements,
            max_forks: max_elements,
        }
    }
}

#[derive(Debug, Clone)]
pub struct EnumeratedLattice {
    pub sequence: CzedliSchmidtSequence,
    pub lattice: PlanarLattice,
    pub form: CanonicalForm,
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub bounds: EnumerationBounds,
    /// One representative per isomorphism class, sorted by canonical form.
    pub lattices: Vec<EnumeratedLattice>,
    /// Isomorphic lattices reached with different `s` or different grids; must stay empty.
    pub invariant_violations: Vec<(CzedliSchmidtSequence, CzedliSchmidtSequence)>,
}

fn same_grid(a: &CzedliSchmidtSequence, b: &CzedliSchmidtSequence) -> bool {
    (a.p, a.q) == (b.p, b.q) || (a.p, a.q) == (b.q, b.p)
}

/// Every slim rectangular lattice within the bounds, once per isomorphism class.
///
/// Breadth-first over construction steps: level `k` holds the new lattices reachable with
/// `k` forks. Children are computed in parallel but merged in a fixed order, so the result
/// does not depend on the number of worker threads.
pub fn enumerate_slim_rectangular(
    bounds: EnumerationBounds,
) -> Result<Enumeration, ConstructionError> {
    if bounds.max_elements > MAX_ELEMENTS_CAP {
        return Err(ConstructionError::BoundsTooLarge(format!(
            "max_elements {} > {MAX_ELEMENTS_CAP}",
            bounds.max_elements
        )));
    }
    let mut seen: HashMap<CanonicalForm, usize> = HashMap::new();
    let mut found: Vec<EnumeratedLattice> = Vec::new();
    let mut violations = Vec::new();

    let mut level: Vec<usize> = Vec::new();
    for p in 2..=bounds.max_grid {
        for q in 2..=bounds.max_grid {
            if p * q > bounds.max_elements {
                continue;
            }
            let lattice = make_grid(p, q)?;
            let form = canonical_form(&lattice);
            if seen.contains_key(&form) {
                continue;
            }
            seen.insert(form.clone(), found.len());
            level.push(found.len());
            found.push(EnumeratedLattice {
                sequence: CzedliSchmidtSequence::grid(p, q),
                lattice,
                form,
            });
        }
    }

    let mut forks = 0;
    while !level.is_empty() && forks < bounds.max_forks {
        forks += 1;
        let children: Vec<Vec<(CzedliSchmidtSequence, PlanarLattice, CanonicalForm)>> = level
            .par_iter()
            .map(|&idx| {
                let parent = &found[idx];
                let cells = four_cells(&parent.lattice)?;
                let mut out = Vec::new();
                for cell in cells {
                    let child = insert_fork(&parent.lattice, cell)?;
                    if child.len() > bounds.max_elements {
                        continue;
                    }
                    let mut seq = parent.sequence.clone();
                    seq.forks
                        .push(ForkSite::of_cell(&parent.lattice, &cell).unwrap());
                    let form = canonical_form(&child);
                    out.push((seq, child, form));
                }
                Ok(out)
            })
            .collect::<Result<_, ConstructionError>>()?;

        let mut next = Vec::new();
        for (seq, lattice, form) in children.into_iter().flatten() {
            match seen.get(&form) {
                Some(&i) => {
                    let prior = &found[i].sequence;
                    if prior.s() != seq.s() || !same_grid(prior, &seq) {
                        violations.push((prior.clone(), seq));
                    }
                }
                None => {
                    seen.insert(form.clone(), found.len());
                    next.push(found.len());
                    found.push(EnumeratedLattice {
                        sequence: seq,
                        lattice,
                        form,
                    });
                }
            }
        }
        level = next;
    }

    found.sort_by(|a, b| a.form.cmp(&b.form));
    Ok(Enumeration {
        bounds,
        lattices: found,
        invariant_violations: violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;
    use crate::fixtures;

    #[test]
    fn up_to_four_elements_only_b2() {
        let e = enumerate_slim_rectangular(EnumerationBounds::elements(4)).unwrap();
        assert_eq!(e.lattices.len(), 1);
        assert!(isomorphic(&e.lattices[0].lattice, &fixtures::boolean(2)));
    }

    #[test]
    fn up_to_seven_elements() {
        // B2, C2 x C3 and S7; C2 x C4 has eight elements
        let e = enumerate_slim_rectangular(EnumerationBounds::elements(7)).unwrap();
        let sizes: Vec<usize> = e.lattices.iter().map(|x| x.lattice.len()).collect();
        assert_eq!(e.lattices.len(), 3, "{sizes:?}");
        assert!(e
            .lattices
            .iter()
            .any(|x| isomorphic(&x.lattice, &fixtures::s7())));
        assert!(e
            .lattices
            .iter()
            .any(|x| isomorphic(&x.lattice, &make_grid(3, 2).unwrap())));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_slim_rectangular(EnumerationBounds::elements(MAX_ELEMENTS_CAP + 1)),
            Err(ConstructionError::BoundsTooLarge(_))
        ));
    }
}
