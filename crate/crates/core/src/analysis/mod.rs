//! Swings, ladders, prime ideals and every structural claim as an executable check.

mod ladder;
mod prime_ideals;
mod report;
mod search;
mod structural;
mod swing;
mod theorems;

use rayon::prelude::*;

pub use ladder::{check_ladders, ladders, Ladder};
pub use prime_ideals::{check_prime_ideals, prime_ideals, prime_ideals_by_boundary};
pub use report::CheckReport;
pub use search::{
    congruence_lattice_matches, corpus_hash, representability_search, search_corpus,
    ExhaustionCertificate, SearchOutcome,
};
pub use structural::{profile_violations, step_violations, structural_suite};
pub use swing::{
    check_swing_lemma, down_perspective, prime_intervals, swing_reachable, swing_witness_violation,
    swings, swings_to, up_perspective, PrimeInterval, SwingGraph,
};
pub use theorems::{
    check_c2_quotient, check_meet_sd, check_theorem_main, check_theorem_main_prime,
    check_two_cover, congruences_above, is_boolean_filter, meet_sd_witness,
};

use crate::classify::classify_elements;
use crate::lattice::PlanarLattice;

/// Every per-lattice check, in a fixed order.
pub fn battery(l: &PlanarLattice) -> Vec<CheckReport> {
    vec![
        CheckReport::run("classification", l, || match classify_elements(l) {
            Ok(c) => (
                format!("middles={}", c.iter().filter(|x| x.middle).count()),
                vec![],
            ),
            Err(e) => (String::new(), vec![e.to_string()]),
        }),
        check_theorem_main(l),
        check_prime_ideals(l),
        check_swing_lemma(l),
        check_two_cover(l),
        check_meet_sd(l),
        check_c2_quotient(l),
        check_theorem_main_prime(l),
        check_ladders(l),
    ]
}

/// [`battery`] over many lattices in parallel; output order follows the input.
pub fn run_battery(lattices: &[PlanarLattice]) -> Vec<Vec<CheckReport>> {
    lattices.par_iter().map(battery).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn s7_battery_passes() {
        for r in battery(&fixtures::s7()) {
            assert!(r.pass, "{r}");
            assert!(r.witness.is_empty());
        }
    }

    #[test]
    fn m3_battery_fails() {
        let reports = battery(&fixtures::m3());
        assert!(reports.iter().any(|r| !r.pass && !r.witness.is_empty()));
    }
}
