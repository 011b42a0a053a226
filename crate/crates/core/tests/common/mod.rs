//! Independent oracles shared by the integration tests. Nothing here calls the library's
//! congruence code.

#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use slimlat::construction::{random_sequence, CzedliSchmidtSequence};
use slimlat::PlanarLattice;

/// Every compatible partition, by backtracking over restricted growth strings.
///
/// Elements are assigned in id order; as soon as `x ≡ y` is fixed, every translation
/// `x ∧ z`, `y ∧ z` (and joins) whose two ends are already assigned must agree.
pub fn naive_congruences(l: &PlanarLattice) -> Vec<Vec<u32>> {
    let n = l.len();
    let mut out = Vec::new();
    let mut class = vec![u32::MAX; n];
    fn consistent(l: &PlanarLattice, class: &[u32], i: usize) -> bool {
        let assigned = |x: usize| x <= i;
        for x in 0..=i {
            for y in 0..x + 1 {
                if class[x] != class[y] || (x != i && y != i) {
                    continue;
                }
                for z in 0..l.len() {
                    for (u, v) in [(l.meet(x, z), l.meet(y, z)), (l.join(x, z), l.join(y, z))] {
                        if assigned(u) && assigned(v) && class[u] != class[v] {
                            return false;
                        }
                    }
                }
            }
        }
        // pairs fixed earlier whose translations land on the new element
        for x in 0..i {
            for y in 0..x {
                if class[x] != class[y] {
                    continue;
                }
                for z in 0..l.len() {
                    for (u, v) in [(l.meet(x, z), l.meet(y, z)), (l.join(x, z), l.join(y, z))] {
                        if (u == i || v == i) && assigned(u) && assigned(v) && class[u] != class[v]
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
    fn go(l: &PlanarLattice, i: usize, used: u32, class: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == l.len() {
            out.push(class.clone());
            return;
        }
        for c in 0..=used {
            class[i] = c;
            if consistent(l, class, i) {
                go(l, i + 1, used.max(c + 1), class, out);
            }
        }
        class[i] = u32::MAX;
    }
    go(l, 0, 0, &mut class, &mut out);
    out
}

/// Plain compatibility test of a labelling.
pub fn is_compatible(l: &PlanarLattice, class: &[u32]) -> bool {
    for x in l.elements() {
        for y in l.elements() {
            if class[x] != class[y] {
                continue;
            }
            for z in l.elements() {
                if class[l.meet(x, z)] != class[l.meet(y, z)]
                    || class[l.join(x, z)] != class[l.join(y, z)]
                {
                    return false;
                }
            }
        }
    }
    true
}

/// `count` random sequences with grids up to `max_grid` and up to `max_forks` forks.
pub fn random_corpus(
    seed: u64,
    count: usize,
    max_grid: usize,
    max_forks: usize,
) -> Vec<CzedliSchmidtSequence> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let forks = rng.gen_range(0..=max_forks);
            random_sequence(&mut rng, max_grid, forks).expect("random sequence replays")
        })
        .collect()
}
