//! Deterministic text reports.

use std::fmt::Write;

use crate::analysis::{prime_ideals, CheckReport};
use crate::canon::canonical_form;
use crate::classify::classify_elements;
use crate::congruence::{dual_atoms_from, join_irreducible_congruences};
use crate::construction::Enumeration;
use crate::geometry::rectangular_profile;
use crate::io::script::sequence_one_line;
use crate::lattice::{Elem, PlanarLattice};

fn list(v: &[Elem]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Boundary profile, `t`, `Con L` statistics, dual atoms, prime ideals and element labels.
pub fn analysis_report(l: &PlanarLattice) -> String {
    let mut s = String::new();
    writeln!(s, "lattice {}", canonical_form(l).digest()).unwrap();
    writeln!(s, "elements {}", l.len()).unwrap();
    writeln!(s, "covers {}", l.edge_count()).unwrap();
    writeln!(s, "length {}", l.length()).unwrap();
    writeln!(s, "slim {}", l.is_slim()).unwrap();
    writeln!(s, "semimodular {}", l.is_semimodular()).unwrap();
    match rectangular_profile(l) {
        Ok(p) => {
            writeln!(s, "rectangular true").unwrap();
            writeln!(s, "c_l {}", p.c_l).unwrap();
            writeln!(s, "c_r {}", p.c_r).unwrap();
            writeln!(s, "lower_left {}", list(&p.lower_left)).unwrap();
            writeln!(s, "lower_right {}", list(&p.lower_right)).unwrap();
            writeln!(s, "upper_left {}", list(&p.upper_left)).unwrap();
            writeln!(s, "upper_right {}", list(&p.upper_right)).unwrap();
            writeln!(s, "t {}", p.t_len).unwrap();
        }
        Err(e) => writeln!(s, "rectangular false ({e})").unwrap(),
    }
    let ji = join_irreducible_congruences(l);
    writeln!(s, "con_size {}", ji.downset_count()).unwrap();
    writeln!(s, "join_irreducible_congruences {}", ji.len()).unwrap();
    for (i, c) in ji.congruences.iter().enumerate() {
        let (a, b) = ji.generators[i];
        let ups: Vec<String> = ji.upper_covers[i].iter().map(|j| format!("j{j}")).collect();
        writeln!(
            s,
            "  j{i} = con({a},{b}) covers [{}] blocks {c}",
            ups.join(" ")
        )
        .unwrap();
    }
    let atoms = dual_atoms_from(l, &ji);
    writeln!(s, "dual_atoms {}", atoms.len()).unwrap();
    for d in &atoms {
        writeln!(s, "  {d}").unwrap();
    }
    writeln!(s, "prime_ideals {}", list(&prime_ideals(l))).unwrap();
    match classify_elements(l) {
        Ok(c) => {
            writeln!(s, "classification").unwrap();
            for (x, class) in c.iter().enumerate() {
                writeln!(s, "  {x} {}", class.labels()).unwrap();
            }
        }
        Err(e) => writeln!(s, "classification unavailable ({e})").unwrap(),
    }
    s
}

/// One line per report plus a summary line.
pub fn format_reports(reports: &[CheckReport]) -> String {
    let mut s = String::new();
    for r in reports {
        writeln!(s, "{}", r.line()).unwrap();
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    writeln!(
        s,
        "checks {} passed {} failed {failed}",
        reports.len(),
        reports.len() - failed
    )
    .unwrap();
    s
}

/// One line per enumerated lattice: digest, size, `s` and the construction script.
pub fn format_enumeration(e: &Enumeration) -> String {
    let mut s = String::new();
    let b = e.bounds;
    writeln!(
        s,
        "bounds max_elements={} max_grid={} max_forks={}",
        b.max_elements, b.max_grid, b.max_forks
    )
    .unwrap();
    for x in &e.lattices {
        writeln!(
            s,
            "{} {} s={} {}",
            x.form.digest(),
            x.lattice.len(),
            x.sequence.s(),
            sequence_one_line(&x.sequence)
        )
        .unwrap();
    }
    writeln!(s, "count {}", e.lattices.len()).unwrap();
    writeln!(s, "invariant_violations {}", e.invariant_violations.len()).unwrap();
    for (a, b) in &e.invariant_violations {
        writeln!(s, "  {} | {}", sequence_one_line(a), sequence_one_line(b)).unwrap();
    }
    s
}
