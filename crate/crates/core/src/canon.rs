//! Canonical labeling of lattices up to (abstract) isomorphism.
//!
//! Colour refinement on the directed cover graph followed by individualisation of the
//! first non-singleton cell; the lexicographically smallest leaf encoding is the canonical
//! form. The embedding is ignored.

use std::fmt;

use sha2::{Digest, Sha256};

use crate::lattice::{Elem, PlanarLattice};

/// Byte string that is equal for two lattices iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Short stable identifier (first 16 hex digits of the SHA-256 of the form).
    pub fn digest(&self) -> String {
        let h = Sha256::digest(&self.0);
        h.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.digest())
    }
}

fn push_u16(buf: &mut Vec<u8>, v: usize) {
    buf.extend_from_slice(&(v as u16).to_le_bytes());
}

struct Canonizer<'a> {
    l: &'a PlanarLattice,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl<'a> Canonizer<'a> {
    fn refine(&self, colors: &mut Vec<u32>) {
        let n = self.l.len();
        let mut classes = count_classes(colors);
        loop {
            let mut sigs: Vec<(u32, Vec<u32>, Vec<u32>, usize)> = (0..n)
                .map(|x| {
                    let mut u: Vec<u32> = self.l.up(x).iter().map(|&y| colors[y]).collect();
                    let mut d: Vec<u32> = self.l.down(x).iter().map(|&y| colors[y]).collect();
                    u.sort_unstable();
                    d.sort_unstable();
                    (colors[x], u, d, x)
                })
                .collect();
            sigs.sort();
            let mut next = vec![0u32; n];
            let mut c = 0u32;
            for i in 0..n {
                if i > 0
                    && (sigs[i].0, &sigs[i].1, &sigs[i].2)
                        != (sigs[i - 1].0, &sigs[i - 1].1, &sigs[i - 1].2)
                {
                    c += 1;
                }
                next[sigs[i].3] = c;
            }
            *colors = next;
            let now = c as usize + 1;
            if now == classes {
                return;
            }
            classes = now;
        }
    }

    fn encode(&self, colors: &[u32]) -> Vec<u8> {
        let n = self.l.len();
        let mut inv = vec![0usize; n];
        for x in 0..n {
            inv[colors[x] as usize] = x;
        }
        let mut buf = Vec::with_capacity(2 + 4 * n);
        push_u16(&mut buf, n);
        for &x in &inv {
            let mut ups: Vec<usize> = self.l.up(x).iter().map(|&y| colors[y] as usize).collect();
            ups.sort_unstable();
            push_u16(&mut buf, ups.len());
            for u in ups {
                push_u16(&mut buf, u);
            }
        }
        buf
    }

    fn search(&mut self, mut colors: Vec<u32>) {
        self.refine(&mut colors);
        let n = self.l.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = match (0..n).find(|&c| sizes[c] > 1) {
            None => {
                let code = self.encode(&colors);
                let better = match &self.best {
                    None => true,
                    Some((b, _)) => code < *b,
                };
                if better {
                    let perm = colors.iter().map(|&c| c as usize).collect();
                    self.best = Some((code, perm));
                }
                return;
            }
            Some(c) => c as u32,
        };
        for v in 0..n {
            if colors[v] != target {
                continue;
            }
            let child: Vec<u32> = (0..n)
                .map(|x| 2 * colors[x] + u32::from(colors[x] == target && x != v))
                .collect();
            self.search(child);
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn initial_colors(l: &PlanarLattice) -> Vec<u32> {
    let n = l.len();
    let depth: Vec<usize> = {
        let mut d = vec![0usize; n];
        let mut order: Vec<Elem> = l.elements().collect();
        order.sort_by_key(|&x| std::cmp::Reverse(l.height(x)));
        for &x in &order {
            for &y in l.down(x) {
                d[y] = d[y].max(d[x] + 1);
            }
        }
        d
    };
    let keys: Vec<(usize, usize, usize, usize)> = (0..n)
        .map(|x| (l.height(x), depth[x], l.up(x).len(), l.down(x).len()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap() as u32)
        .collect()
}

fn run(l: &PlanarLattice) -> (Vec<u8>, Vec<usize>) {
    let mut c = Canonizer { l, best: None };
    c.search(initial_colors(l));
    c.best.expect("at least one leaf")
}

pub fn canonical_form(l: &PlanarLattice) -> CanonicalForm {
    CanonicalForm(run(l).0)
}

/// `labeling[x]` is the canonical position of element `x`.
pub fn canonical_labeling(l: &PlanarLattice) -> Vec<usize> {
    run(l).1
}

pub fn isomorphic(a: &PlanarLattice, b: &PlanarLattice) -> bool {
    a.len() == b.len() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}
