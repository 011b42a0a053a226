//! Acceptance criteria 1 to 10. Each test writes one `criterion N: PASS|FAIL` line to
//! stderr (unaffected by output capture) before asserting.

mod common;

use std::io::Write;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use slimlat::analysis::{
    check_swing_lemma, check_theorem_main, check_theorem_main_prime, check_two_cover,
    meet_sd_witness, profile_violations, representability_search, run_battery, step_violations,
    SearchOutcome,
};
use slimlat::congruence::{
    all_congruences, least_distributive_congruence_by_search, ConCaps, Congruence,
};
use slimlat::construction::{
    enumerate_slim_rectangular, replay, replay_steps, CzedliSchmidtSequence, EnumerationBounds,
};
use slimlat::io::{format_enumeration, format_reports};
use slimlat::{fixtures, isomorphic, rectangular_profile, PlanarLattice};

/// Exact criteria have no numeric tolerance; these are the only pinned limits.
const S7_REPLAY_LIMIT: Duration = Duration::from_millis(1);
const CORPUS_MAX_ELEMENTS: usize = 16;
const RANDOM_SEQUENCES: usize = 500;
const RANDOM_MAX_GRID: usize = 4;
const RANDOM_MAX_FORKS: usize = 5;
const RANDOM_SEED: u64 = 0x5eed_1a77;
const SWING_MAX_ELEMENTS: usize = 14;
const ORACLE_MAX_ELEMENTS: usize = 12;
const STRUCTURAL_FORKS: usize = 1000;

fn report(n: usize, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr().lock(), "criterion {n}: {status} {detail}");
    assert!(pass, "criterion {n} failed: {detail}");
}

struct Entry {
    name: String,
    lattice: PlanarLattice,
}

/// Enumerated lattices with at most 16 elements followed by the seeded random sequences.
fn corpus() -> &'static [Entry] {
    static CORPUS: OnceLock<Vec<Entry>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let e =
            enumerate_slim_rectangular(EnumerationBounds::elements(CORPUS_MAX_ELEMENTS)).unwrap();
        let mut out: Vec<Entry> = e
            .lattices
            .into_iter()
            .map(|x| Entry {
                name: format!("enum {}", x.form.digest()),
                lattice: x.lattice,
            })
            .collect();
        for (i, seq) in common::random_corpus(
            RANDOM_SEED,
            RANDOM_SEQUENCES,
            RANDOM_MAX_GRID,
            RANDOM_MAX_FORKS,
        )
        .iter()
        .enumerate()
        {
            out.push(Entry {
                name: format!("random #{i}"),
                lattice: replay(seq).unwrap(),
            });
        }
        out
    })
}

fn enumerated_count() -> usize {
    corpus()
        .iter()
        .filter(|e| e.name.starts_with("enum"))
        .count()
}

/// `S7` drawn directly: 0 bottom, 1 = b_l, 2 = b_r, 3 = a_l, 4 = m, 5 = a_r, 6 top.
fn s7_by_hand() -> PlanarLattice {
    PlanarLattice::from_upper_covers(vec![
        vec![1, 2],
        vec![3, 4],
        vec![4, 5],
        vec![6],
        vec![6],
        vec![6],
        vec![],
    ])
    .unwrap()
}

#[test]
fn criterion_01_fork_base_case() {
    let seq = CzedliSchmidtSequence::grid(2, 2).with_fork(3, 0);
    let mut best = Duration::MAX;
    let mut l = None;
    for _ in 0..25 {
        let start = Instant::now();
        let r = replay(&seq).unwrap();
        best = best.min(start.elapsed());
        l = Some(r);
    }
    let l = l.unwrap();
    let ok = l.len() == 7 && isomorphic(&l, &s7_by_hand()) && best < S7_REPLAY_LIMIT;
    report(
        1,
        ok,
        &format!("7-element S7, best replay {best:?} (limit {S7_REPLAY_LIMIT:?})"),
    );
}

#[test]
fn criterion_02_dual_atoms() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cross_checked = 0;
    for e in corpus() {
        let r = check_theorem_main(&e.lattice);
        if !r.pass {
            failures.push(format!("{}: {}", e.name, r.line()));
        }
        // independent count of coatoms from the naive congruence enumeration
        if e.lattice.len() <= ORACLE_MAX_ELEMENTS {
            cross_checked += 1;
            let t = rectangular_profile(&e.lattice).unwrap().t_len;
            let all = common::naive_congruences(&e.lattice);
            let full = all.iter().position(|c| c.iter().all(|&x| x == 0)).unwrap();
            let below_full_only = |c: &Vec<u32>| {
                let blocks = *c.iter().max().unwrap() + 1;
                blocks == 2
                    || (blocks > 1
                        && !all.iter().enumerate().any(|(i, d)| {
                            i != full
                                && d != c
                                && (0..c.len())
                                    .all(|x| (0..c.len()).all(|y| c[x] != c[y] || d[x] == d[y]))
                        }))
            };
            let coatoms: Vec<&Vec<u32>> = all.iter().filter(|c| below_full_only(c)).collect();
            if coatoms.len() != t || coatoms.iter().any(|c| *c.iter().max().unwrap() != 1) {
                failures.push(format!(
                    "{}: naive coatoms {} vs t {t}",
                    e.name,
                    coatoms.len()
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    report(
        2,
        failures.is_empty(),
        &format!(
            "{} lattices ({} enumerated, {} random), {cross_checked} against naive Con L, {elapsed:.1?} {}",
            corpus().len(),
            enumerated_count(),
            RANDOM_SEQUENCES,
            failures.first().cloned().unwrap_or_default()
        ),
    );
}

#[test]
fn criterion_03_prime_ideals() {
    let mut failures = Vec::new();
    for e in corpus() {
        let l = &e.lattice;
        // prime: the complement of ↓a is closed under meets
        let brute: Vec<usize> = l
            .elements()
            .filter(|&a| {
                a != l.top()
                    && l.elements().all(|x| {
                        l.elements()
                            .all(|y| l.leq(x, a) || l.leq(y, a) || !l.leq(l.meet(x, y), a))
                    })
            })
            .collect();
        let p = rectangular_profile(l).unwrap();
        let mut boundary: Vec<usize> = p
            .upper_left
            .iter()
            .chain(&p.upper_right)
            .copied()
            .filter(|&a| a != l.top())
            .collect();
        boundary.sort_unstable();
        boundary.dedup();
        if brute != boundary {
            failures.push(format!("{}: {brute:?} vs {boundary:?}", e.name));
        }
    }
    report(
        3,
        failures.is_empty(),
        &format!("{} lattices {}", corpus().len(), failures.join("; ")),
    );
}

#[test]
fn criterion_04_swing_lemma() {
    let small: Vec<&Entry> = corpus()
        .iter()
        .filter(|e| e.lattice.len() <= SWING_MAX_ELEMENTS)
        .collect();
    let mut failures = Vec::new();
    let mut pairs = 0;
    for e in &small {
        let r = check_swing_lemma(&e.lattice);
        pairs += e.lattice.edge_count().pow(2);
        if !r.pass {
            failures.push(format!("{}: {}", e.name, r.line()));
        }
    }
    report(
        4,
        failures.is_empty(),
        &format!(
            "{} lattices with <= {SWING_MAX_ELEMENTS} elements, {pairs} interval pairs {}",
            small.len(),
            failures.join("; ")
        ),
    );
}

#[test]
fn criterion_05_two_cover() {
    let failures: Vec<String> = corpus()
        .iter()
        .filter_map(|e| {
            let r = check_two_cover(&e.lattice);
            (!r.pass).then(|| format!("{}: {}", e.name, r.line()))
        })
        .collect();
    report(
        5,
        failures.is_empty(),
        &format!("{} lattices {}", corpus().len(), failures.join("; ")),
    );
}

#[test]
fn criterion_06_meet_sd_and_least_distributive() {
    let mut failures = Vec::new();
    let mut searched = 0;
    for e in corpus() {
        let l = &e.lattice;
        if let Some(w) = meet_sd_witness(l) {
            failures.push(format!("{}: SD fails at {w:?}", e.name));
        }
        let r = check_theorem_main_prime(l);
        if !r.pass {
            failures.push(format!("{}: {}", e.name, r.line()));
        }
        if all_congruences(l, ConCaps::default()).is_ok() {
            searched += 1;
        }
    }
    // M3: x ∧ y = x ∧ z = 0 but x ∧ (y ∨ z) = x
    let m3 = fixtures::m3();
    let control = meet_sd_witness(&m3);
    if control != Some([1, 2, 3]) {
        failures.push(format!("M3 control gave {control:?}"));
    }
    let all = all_congruences(&m3, ConCaps::default()).unwrap();
    if least_distributive_congruence_by_search(&m3, &all) != Some(Congruence::full(5)) {
        failures.push("M3 least distributive congruence is not full".into());
    }
    report(
        6,
        failures.is_empty(),
        &format!(
            "{} lattices, {searched} also by exhaustive search, M3 witness {control:?} {}",
            corpus().len(),
            failures.join("; ")
        ),
    );
}

#[test]
fn criterion_07_non_representability() {
    let bounds = EnumerationBounds::elements(CORPUS_MAX_ELEMENTS);
    let d8 = fixtures::d8();
    // the fixture: distributive, eight elements, join-irreducibles with at most two covers
    let ji: Vec<usize> = d8.elements().filter(|&x| d8.down(x).len() == 1).collect();
    let covers = |a: usize| {
        ji.iter()
            .filter(|&&b| d8.lt(a, b) && !ji.iter().any(|&c| d8.lt(a, c) && d8.lt(c, b)))
            .count()
    };
    let fixture_ok = d8.len() == 8 && d8.is_distributive() && ji.iter().all(|&a| covers(a) <= 2);
    let mut lines = Vec::new();
    let mut ok = fixture_ok;
    for (name, target) in [("C3", fixtures::chain(3)), ("D8", d8.clone())] {
        match representability_search(&target, bounds).unwrap() {
            SearchOutcome::Exhausted(c) => lines.push(format!(
                "{name} exhausted (<= {} elements, corpus {}, hash {})",
                c.bounds.max_elements,
                c.corpus_size,
                &c.corpus_hash[..16]
            )),
            SearchOutcome::Witness { sequence, .. } => {
                ok = false;
                lines.push(format!("{name} represented by {sequence:?}"));
            }
        }
    }
    report(
        7,
        ok,
        &format!("fixture ok {fixture_ok}; {}", lines.join("; ")),
    );
}

#[test]
fn criterion_08_structural_invariants() {
    let mut forks = 0;
    let mut failures = Vec::new();
    let mut seed = RANDOM_SEED;
    while forks < STRUCTURAL_FORKS {
        seed += 1;
        for seq in common::random_corpus(seed, 50, RANDOM_MAX_GRID, RANDOM_MAX_FORKS) {
            let take = seq.forks.len().min(STRUCTURAL_FORKS - forks);
            let seq = CzedliSchmidtSequence {
                forks: seq.forks[..take].to_vec(),
                ..seq
            };
            let (steps, _) = replay_steps(&seq).unwrap();
            let profiles: Vec<_> = steps
                .iter()
                .map(|l| rectangular_profile(l).unwrap())
                .collect();
            for (l, p) in steps.iter().zip(&profiles) {
                failures.extend(profile_violations(l, p));
            }
            for w in profiles.windows(2) {
                failures.extend(step_violations(&w[0], &w[1]));
            }
            forks += take;
            if forks == STRUCTURAL_FORKS {
                break;
            }
        }
    }
    report(
        8,
        failures.is_empty() && forks == STRUCTURAL_FORKS,
        &format!("{forks} fork insertions {}", failures.join("; ")),
    );
}

#[test]
fn criterion_09_con_oracle() {
    let mut lattices: Vec<(String, &PlanarLattice)> = corpus()
        .iter()
        .filter(|e| e.lattice.len() <= ORACLE_MAX_ELEMENTS)
        .map(|e| (e.name.clone(), &e.lattice))
        .collect();
    let controls = [
        fixtures::m3(),
        fixtures::pentagon(),
        fixtures::d8(),
        fixtures::boolean(3),
        fixtures::chain(5),
    ];
    for (i, l) in controls.iter().enumerate() {
        lattices.push((format!("control #{i}"), l));
    }
    let mut failures = Vec::new();
    for (name, l) in &lattices {
        let mut naive: Vec<Congruence> = common::naive_congruences(l)
            .iter()
            .map(|c| Congruence::from_labels(c))
            .collect();
        let mut ours = all_congruences(l, ConCaps::default()).unwrap();
        naive.sort();
        ours.sort();
        if naive != ours {
            failures.push(format!("{name}: naive {} vs {}", naive.len(), ours.len()));
        }
    }
    report(
        9,
        failures.is_empty(),
        &format!(
            "{} lattices with <= {ORACLE_MAX_ELEMENTS} elements {}",
            lattices.len(),
            failures.join("; ")
        ),
    );
}

#[test]
fn criterion_10_determinism() {
    let bounds = EnumerationBounds::elements(12);
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            let e = enumerate_slim_rectangular(bounds).unwrap();
            let lattices: Vec<PlanarLattice> =
                e.lattices.iter().map(|x| x.lattice.clone()).collect();
            let verify: String = run_battery(&lattices)
                .iter()
                .map(|r| format_reports(r))
                .collect();
            (format_enumeration(&e), verify)
        })
    };
    let outputs: Vec<(String, String)> = [1, 4, 1, 3].iter().map(|&t| run(t)).collect();
    let ok = outputs.windows(2).all(|w| w[0] == w[1]);
    report(
        10,
        ok,
        &format!(
            "enumerate and verify over 4 runs with 1, 4, 1, 3 workers, {} bytes",
            outputs[0].0.len() + outputs[0].1.len()
        ),
    );
}
