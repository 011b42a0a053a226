use std::collections::HashSet;

use crate::analysis::report::{CheckReport, Witnesses};
use crate::congruence::{
    dual_atoms_from, join_irreducible_congruences, least_distributive_congruence, meet_all,
    quotient, Congruence, JoinIrreducibles,
};
use crate::geometry::rectangular_profile;
use crate::lattice::{Elem, PlanarLattice};

/// Every congruence above `base`: the join-closure of `base` with the join-irreducibles.
pub fn congruences_above(base: &Congruence, ji: &JoinIrreducibles) -> Vec<Congruence> {
    let mut seen: HashSet<Congruence> = HashSet::from([base.clone()]);
    let mut out = vec![base.clone()];
    let mut i = 0;
    while i < out.len() {
        let cur = out[i].clone();
        i += 1;
        for j in &ji.congruences {
            if !j.leq(&cur) {
                let next = cur.join(j);
                if seen.insert(next.clone()) {
                    out.push(next);
                }
            }
        }
    }
    out.sort_by(|a, b| b.block_count().cmp(&a.block_count()).then_with(|| a.cmp(b)));
    out
}

/// Whether `family` (with least element `base`) is a Boolean lattice with `t` atoms:
/// it has `2^t` members, `t` atoms, and distinct subsets of atoms have distinct joins.
pub fn is_boolean_filter(base: &Congruence, family: &[Congruence], t: usize) -> Result<(), String> {
    if t >= usize::BITS as usize - 1 || family.len() != 1 << t {
        return Err(format!(
            "{} congruences above the meet, expected 2^{t}",
            family.len()
        ));
    }
    let atoms: Vec<&Congruence> = family
        .iter()
        .filter(|c| *c != base && !family.iter().any(|d| d != base && d != *c && d.leq(c)))
        .collect();
    if atoms.len() != t {
        return Err(format!(
            "{} atoms above the meet, expected {t}",
            atoms.len()
        ));
    }
    let mut joins = HashSet::new();
    for mask in 0usize..1 << t {
        let j = (0..t)
            .filter(|b| mask >> b & 1 == 1)
            .fold(base.clone(), |acc, b| acc.join(atoms[b]));
        if !joins.insert(j) {
            return Err(format!("subset {mask:#b} of atoms repeats a join"));
        }
    }
    Ok(())
}

/// `|dual atoms| = t`, each dual atom has two blocks, and the filter of `Con L` above
/// their meet is `B_t`.
pub fn check_theorem_main(l: &PlanarLattice) -> CheckReport {
    CheckReport::run("dual-atoms", l, || {
        let profile = match rectangular_profile(l) {
            Ok(p) => p,
            Err(e) => return (String::new(), vec![e.to_string()]),
        };
        let t = profile.t_len;
        let ji = join_irreducible_congruences(l);
        let atoms = dual_atoms_from(l, &ji);
        let mut w = Witnesses::default();
        if atoms.len() != t {
            w.push(format!("{} dual atoms, t = {t}", atoms.len()));
        }
        for d in &atoms {
            if d.block_count() != 2 {
                w.push(format!("dual atom {d} has {} blocks", d.block_count()));
            }
        }
        let base = meet_all(l.len(), &atoms);
        if w.is_empty() {
            let filter = congruences_above(&base, &ji);
            if let Err(why) = is_boolean_filter(&base, &filter, t) {
                w.push(why);
            }
        }
        (format!("t={t} dual_atoms={}", atoms.len()), w.finish())
    })
}

/// Every join-irreducible congruence has at most two covers among the join-irreducibles.
pub fn check_two_cover(l: &PlanarLattice) -> CheckReport {
    CheckReport::run("two-cover", l, || {
        let ji = join_irreducible_congruences(l);
        let mut w = Witnesses::default();
        for (i, ups) in ji.upper_covers.iter().enumerate() {
            if ups.len() > 2 {
                let (a, b) = ji.generators[i];
                w.push(format!("con({a},{b}) has {} covers", ups.len()));
            }
        }
        let most = ji.upper_covers.iter().map(Vec::len).max().unwrap_or(0);
        (
            format!("join_irreducibles={} max_covers={most}", ji.len()),
            w.finish(),
        )
    })
}

/// A triple violating `x ∧ y = x ∧ z ⇒ x ∧ y = x ∧ (y ∨ z)`.
pub fn meet_sd_witness(l: &PlanarLattice) -> Option<[Elem; 3]> {
    for x in l.elements() {
        for y in l.elements() {
            let xy = l.meet(x, y);
            for z in y + 1..l.len() {
                if l.meet(x, z) == xy && l.meet(x, l.join(y, z)) != xy {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

pub fn check_meet_sd(l: &PlanarLattice) -> CheckReport {
    CheckReport::run("meet-sd", l, || {
        let w = match meet_sd_witness(l) {
            Some([x, y, z]) => vec![format!("x={x} y={y} z={z}")],
            None => vec![],
        };
        (String::new(), w)
    })
}

/// Some congruence has the two-element chain as quotient (the dual atoms suffice).
pub fn check_c2_quotient(l: &PlanarLattice) -> CheckReport {
    CheckReport::run("c2-quotient", l, || {
        let atoms = dual_atoms_from(l, &join_irreducible_congruences(l));
        let two = atoms.iter().filter(|d| d.block_count() == 2).count();
        let w = if two == 0 {
            vec!["no congruence with two blocks".to_string()]
        } else {
            vec![]
        };
        (format!("two_block_dual_atoms={two}"), w)
    })
}

/// The meet of all dual atoms is the least congruence with distributive quotient, and
/// every dual atom has the two-element chain as quotient.
pub fn check_theorem_main_prime(l: &PlanarLattice) -> CheckReport {
    CheckReport::run("least-distributive", l, || {
        let atoms = dual_atoms_from(l, &join_irreducible_congruences(l));
        let mut w = Witnesses::default();
        for d in &atoms {
            let q = quotient(l, d).map(|q| q.len());
            if q != Ok(2) {
                w.push(format!("dual atom {d} has quotient of size {q:?}"));
            }
        }
        let meet = meet_all(l.len(), &atoms);
        match least_distributive_congruence(l) {
            Ok(delta) if delta == meet => {}
            Ok(delta) => w.push(format!("meet of dual atoms {meet} differs from {delta}")),
            Err(e) => w.push(e.to_string()),
        }
        (format!("delta_blocks={}", meet.block_count()), w.finish())
    })
}
