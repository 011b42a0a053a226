use crate::analysis::report::{CheckReport, Witnesses};
use crate::classify::is_middle;
use crate::congruence::prime_ideal_violation;
use crate::geometry::rectangular_profile;
use crate::lattice::{Elem, PlanarLattice};

/// Elements `a` for which `↓a` is a prime ideal, by the definition.
pub fn prime_ideals(l: &PlanarLattice) -> Vec<Elem> {
    l.elements()
        .filter(|&a| a != l.top() && prime_ideal_violation(l, &l.ideal(a)).is_none())
        .collect()
}

/// The non-top elements of the upper boundary chains, ascending.
pub fn prime_ideals_by_boundary(l: &PlanarLattice) -> Option<Vec<Elem>> {
    let p = rectangular_profile(l).ok()?;
    Some(
        p.upper_boundary()
            .into_iter()
            .filter(|&a| a != l.top())
            .collect(),
    )
}

/// Prime ideals by brute force against the upper-boundary characterisation; a middle
/// element never gives a prime ideal.
pub fn check_prime_ideals(l: &PlanarLattice) -> CheckReport {
    CheckReport::run("prime-ideals", l, || {
        let mut w = Witnesses::default();
        let brute = prime_ideals(l);
        let Some(boundary) = prime_ideals_by_boundary(l) else {
            return (
                String::new(),
                vec!["lattice is not slim rectangular".into()],
            );
        };
        if brute != boundary {
            w.push(format!(
                "definition gives {brute:?}, boundary gives {boundary:?}"
            ));
        }
        for &a in &brute {
            if is_middle(l, a) {
                w.push(format!("middle element {a} gives a prime ideal"));
            }
        }
        (format!("prime={}", brute.len()), w.finish())
    })
}
