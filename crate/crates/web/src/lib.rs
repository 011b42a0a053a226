//! WebAssembly entry points for the browser demo. Every function takes a sequence script
//! and returns JSON, so the page needs no bindings beyond strings.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use slimlat::analysis::{battery, swing_reachable, PrimeInterval};
use slimlat::congruence::{dual_atoms_from, join_irreducible_congruences, principal_congruence};
use slimlat::construction::replay;
use slimlat::io::{parse_sequence, ranks};
use slimlat::{canonical_form, classify_elements, rectangular_profile, PlanarLattice};

#[derive(Serialize)]
struct Node {
    id: usize,
    /// Rank (height) and position within the rank, both from 0.
    rank: usize,
    slot: usize,
    rank_size: usize,
    labels: String,
}

#[derive(Serialize)]
struct Diagram {
    digest: String,
    nodes: Vec<Node>,
    edges: Vec<(usize, usize)>,
    c_l: Option<usize>,
    c_r: Option<usize>,
    t: Option<usize>,
}

#[derive(Serialize)]
struct Check {
    name: String,
    pass: bool,
    detail: String,
    witness: Vec<String>,
}

#[derive(Serialize)]
struct Analysis {
    con_size: u64,
    join_irreducibles: Vec<JoinIrreducible>,
    dual_atoms: Vec<Vec<Vec<usize>>>,
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct JoinIrreducible {
    generator: (usize, usize),
    covers: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct Collapse {
    interval: (usize, usize),
    blocks: Vec<Vec<usize>>,
    /// Every prime interval collapsed by `con(p)` with a swing sequence reaching it.
    collapsed: Vec<Reached>,
}

#[derive(Serialize)]
struct Reached {
    interval: (usize, usize),
    sequence: Vec<(usize, usize)>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Reply<T> {
    Ok { ok: bool, result: T },
    Err { ok: bool, error: String },
}

fn reply<T: Serialize>(r: Result<T, String>) -> String {
    let r = match r {
        Ok(result) => Reply::Ok { ok: true, result },
        Err(error) => Reply::Err { ok: false, error },
    };
    serde_json::to_string(&r).expect("plain data serialises")
}

fn load(script: &str) -> Result<PlanarLattice, String> {
    let seq = parse_sequence(script).map_err(|e| e.to_string())?;
    // keeps the page responsive; the analysis is brute force
    if seq.p > 5 || seq.q > 5 || seq.forks.len() > 8 {
        return Err("the demo accepts grids up to 5 x 5 and at most 8 forks".into());
    }
    replay(&seq).map_err(|e| e.to_string())
}

fn diagram(l: &PlanarLattice) -> Diagram {
    let classes = classify_elements(l).ok();
    let mut nodes = Vec::with_capacity(l.len());
    for (rank, members) in ranks(l).into_iter().enumerate() {
        for (slot, &id) in members.iter().enumerate() {
            let labels = classes.as_ref().map(|c| c[id].labels()).unwrap_or_default();
            nodes.push(Node {
                id,
                rank,
                slot,
                rank_size: members.len(),
                labels,
            });
        }
    }
    nodes.sort_by_key(|n| n.id);
    let profile = rectangular_profile(l).ok();
    Diagram {
        digest: canonical_form(l).digest(),
        nodes,
        edges: l.cover_pairs(),
        c_l: profile.as_ref().map(|p| p.c_l),
        c_r: profile.as_ref().map(|p| p.c_r),
        t: profile.map(|p| p.t_len),
    }
}

/// Replays a script and lays out its diagram.
#[wasm_bindgen]
pub fn build(script: &str) -> String {
    reply(load(script).map(|l| diagram(&l)))
}

/// `Con L` summary and the check battery.
#[wasm_bindgen]
pub fn analyze(script: &str) -> String {
    reply(load(script).map(|l| {
        let ji = join_irreducible_congruences(&l);
        let dual_atoms = dual_atoms_from(&l, &ji)
            .iter()
            .map(|d| d.blocks())
            .collect();
        let join_irreducibles = (0..ji.len())
            .map(|i| JoinIrreducible {
                generator: ji.generators[i],
                covers: ji.upper_covers[i].clone(),
                blocks: ji.congruences[i].blocks(),
            })
            .collect();
        let checks = battery(&l)
            .into_iter()
            .map(|r| Check {
                name: r.name,
                pass: r.pass,
                detail: r.detail,
                witness: r.witness,
            })
            .collect();
        Analysis {
            con_size: ji.downset_count(),
            join_irreducibles,
            dual_atoms,
            checks,
        }
    }))
}

/// Blocks of `con(lo, hi)` and a swing sequence to every prime interval it collapses.
#[wasm_bindgen]
pub fn collapse(script: &str, lo: usize, hi: usize) -> String {
    reply(load(script).and_then(|l| {
        if lo >= l.len() || hi >= l.len() {
            return Err(format!("no element {}", lo.max(hi)));
        }
        let p =
            PrimeInterval::new(&l, lo, hi).ok_or_else(|| format!("{lo} is not covered by {hi}"))?;
        let con = principal_congruence(&l, lo, hi);
        let collapsed = l
            .cover_pairs()
            .into_iter()
            .filter(|&(a, b)| con.same(a, b))
            .map(|(a, b)| {
                let q = PrimeInterval { lo: a, hi: b };
                let sequence = swing_reachable(&l, p, q).unwrap_or_default();
                Reached {
                    interval: (a, b),
                    sequence: sequence.iter().map(|r| (r.lo, r.hi)).collect(),
                }
            })
            .collect();
        Ok(Collapse {
            interval: (lo, hi),
            blocks: con.blocks(),
            collapsed,
        })
    }))
}
