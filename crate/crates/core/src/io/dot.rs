use std::fmt::Write;

use crate::lattice::{Elem, PlanarLattice};

/// Position of every element in a depth-first walk from the bottom that takes upper
/// covers left to right; elements of equal height appear left to right in this order.
pub fn embedding_order(l: &PlanarLattice) -> Vec<usize> {
    let mut pos = vec![usize::MAX; l.len()];
    let mut next = 0;
    let mut stack = vec![l.bottom()];
    while let Some(x) = stack.pop() {
        if pos[x] != usize::MAX {
            continue;
        }
        pos[x] = next;
        next += 1;
        stack.extend(l.up(x).iter().rev().copied());
    }
    pos
}

/// Elements grouped by height, each group in embedding order.
pub fn ranks(l: &PlanarLattice) -> Vec<Vec<Elem>> {
    let pos = embedding_order(l);
    let mut ranks = vec![Vec::new(); l.length() + 1];
    for x in l.elements() {
        ranks[l.height(x)].push(x);
    }
    for r in &mut ranks {
        r.sort_by_key(|&x| pos[x]);
    }
    ranks
}

/// Hasse diagram in Graphviz syntax, bottom at the bottom.
pub fn export_dot(l: &PlanarLattice) -> String {
    let mut s = String::from(
        "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n  edge [arrowhead=none];\n",
    );
    for r in ranks(l) {
        let ids: Vec<String> = r.iter().map(|x| format!("n{x}")).collect();
        writeln!(s, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
    }
    for x in l.elements() {
        writeln!(s, "  n{x} [label=\"{x}\"];").unwrap();
    }
    for x in l.elements() {
        for &y in l.up(x) {
            writeln!(s, "  n{x} -> n{y};").unwrap();
        }
    }
    s.push_str("}\n");
    s
}
