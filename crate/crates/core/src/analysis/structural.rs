use crate::analysis::report::{CheckReport, Witnesses};
use crate::construction::{replay_steps, CzedliSchmidtSequence};
use crate::geometry::{rectangular_profile, BoundaryProfile};
use crate::lattice::{Elem, PlanarLattice};

fn same_set(chain: &[Elem], mut set: Vec<Elem>) -> bool {
    let mut c = chain.to_vec();
    c.sort_unstable();
    set.sort_unstable();
    c == set
}

/// Properties of a single slim rectangular lattice: lower chains are ideals, upper chains
/// filters, joins with a corner land on the facing upper chain, and the length identity.
pub fn profile_violations(l: &PlanarLattice, p: &BoundaryProfile) -> Vec<String> {
    let mut w = Vec::new();
    if !same_set(&p.lower_left, l.ideal(p.c_l)) || !same_set(&p.lower_right, l.ideal(p.c_r)) {
        w.push("a lower boundary chain is not an ideal".to_string());
    }
    if !same_set(&p.upper_left, l.filter(p.c_l)) || !same_set(&p.upper_right, l.filter(p.c_r)) {
        w.push("an upper boundary chain is not a filter".to_string());
    }
    for x in l.elements() {
        if !p.upper_right.contains(&l.join(x, p.c_r)) {
            w.push(format!("{x} ∨ c_r is off the upper right chain"));
        }
        if !p.upper_left.contains(&l.join(x, p.c_l)) {
            w.push(format!("{x} ∨ c_l is off the upper left chain"));
        }
    }
    let lhs = p.length_bottom_to_cl() as i64 - p.length_bottom_to_cr() as i64;
    let rhs = p.length_cr_to_top() as i64 - p.length_cl_to_top() as i64;
    if lhs != rhs {
        w.push(format!("length identity fails: {lhs} != {rhs}"));
    }
    w
}

/// How one fork step changed the boundary, compared with the claims: same corners, same
/// upper chains, both lower chains one element longer.
pub fn step_violations(before: &BoundaryProfile, after: &BoundaryProfile) -> Vec<String> {
    let mut w = Vec::new();
    if (before.c_l, before.c_r) != (after.c_l, after.c_r) {
        w.push(format!(
            "corners moved from ({}, {}) to ({}, {})",
            before.c_l, before.c_r, after.c_l, after.c_r
        ));
    }
    if before.upper_left != after.upper_left || before.upper_right != after.upper_right {
        w.push("upper boundary changed".to_string());
    }
    if after.lower_left.len() != before.lower_left.len() + 1
        || after.lower_right.len() != before.lower_right.len() + 1
    {
        w.push(format!(
            "lower chains went from ({}, {}) to ({}, {}) elements",
            before.lower_left.len(),
            before.lower_right.len(),
            after.lower_left.len(),
            after.lower_right.len()
        ));
    }
    w
}

/// Replays `seq` and checks every intermediate lattice and every step.
pub fn structural_suite(seq: &CzedliSchmidtSequence) -> CheckReport {
    let (steps, err) = match replay_steps(seq) {
        Ok((steps, _)) => (steps, None),
        Err(e) => (Vec::new(), Some(e)),
    };
    let last = steps
        .last()
        .cloned()
        .unwrap_or_else(|| crate::fixtures::chain(1));
    CheckReport::run("structural", &last, || {
        if let Some(e) = err {
            return (String::new(), vec![e.to_string()]);
        }
        let mut w = Witnesses::default();
        let mut prev: Option<BoundaryProfile> = None;
        for (i, l) in steps.iter().enumerate() {
            let p = match rectangular_profile(l) {
                Ok(p) => p,
                Err(e) => {
                    w.push(format!("L_{}: {e}", i + 1));
                    break;
                }
            };
            for v in profile_violations(l, &p) {
                w.push(format!("L_{}: {v}", i + 1));
            }
            if let Some(before) = &prev {
                for v in step_violations(before, &p) {
                    w.push(format!("step {i}: {v}"));
                }
            }
            prev = Some(p);
        }
        (format!("s={}", seq.s()), w.finish())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_sequence_passes() {
        let r = structural_suite(&CzedliSchmidtSequence::grid(3, 3));
        assert!(r.pass, "{r}");
        assert_eq!(r.detail, "s=1");
    }

    #[test]
    fn one_fork_on_b2() {
        let r = structural_suite(&CzedliSchmidtSequence::grid(2, 2).with_fork(3, 0));
        assert!(r.pass, "{r}");
    }

    #[test]
    fn bad_sequence_fails_with_step() {
        let r = structural_suite(&CzedliSchmidtSequence::grid(2, 2).with_fork(9, 0));
        assert!(!r.pass);
        assert!(r.witness[0].starts_with("step 1"), "{r}");
    }
}
