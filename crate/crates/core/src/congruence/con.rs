use std::collections::{HashMap, HashSet};

use crate::congruence::partition::{Congruence, UnionFind};
use crate::error::CongruenceError;
use crate::lattice::{Elem, PlanarLattice};

/// Smallest congruence containing all `pairs`.
///
/// Worklist closure: every pair that merges two classes is queued, and each queued pair
/// `(x, y)` merges `x ∧ z` with `y ∧ z` and `x ∨ z` with `y ∨ z` for every `z`.
pub fn generated_congruence(l: &PlanarLattice, pairs: &[(Elem, Elem)]) -> Congruence {
    let mut uf = UnionFind::new(l.len());
    let mut work: Vec<(Elem, Elem)> = Vec::new();
    for &(a, b) in pairs {
        if uf.union(a, b) {
            work.push((a, b));
        }
    }
    while let Some((x, y)) = work.pop() {
        for z in l.elements() {
            for (u, v) in [(l.meet(x, z), l.meet(y, z)), (l.join(x, z), l.join(y, z))] {
                if uf.union(u, v) {
                    work.push((u, v));
                }
            }
        }
    }
    uf.into_congruence()
}

/// `con(a, b)`; an incomparable pair is replaced by `(a ∧ b, a ∨ b)`.
pub fn principal_congruence(l: &PlanarLattice, a: Elem, b: Elem) -> Congruence {
    generated_congruence(l, &[(l.meet(a, b), l.join(a, b))])
}

/// The poset of join-irreducible congruences: the distinct `con(p)` over prime intervals.
#[derive(Debug, Clone)]
pub struct JoinIrreducibles {
    pub congruences: Vec<Congruence>,
    /// First prime interval (in cover-pair order) generating each congruence.
    pub generators: Vec<(Elem, Elem)>,
    /// `upper_covers[i]`: indices `j` with `congruences[i] ≺ congruences[j]` in the poset.
    pub upper_covers: Vec<Vec<usize>>,
    leq: Vec<Vec<bool>>,
}

impl JoinIrreducibles {
    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.upper_covers[i].is_empty())
            .collect()
    }

    pub fn index_of(&self, c: &Congruence) -> Option<usize> {
        self.congruences.iter().position(|x| x == c)
    }

    /// Number of down-sets of the poset, i.e. `|Con L|` by Birkhoff duality.
    pub fn downset_count(&self) -> u64 {
        // Count antichains by recursion over elements in a linear extension order.
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (0..n).filter(|&j| self.leq[j][i]).count());
        fn count(
            j: &JoinIrreducibles,
            order: &[usize],
            idx: usize,
            chosen: &mut Vec<usize>,
        ) -> u64 {
            if idx == order.len() {
                return 1;
            }
            let x = order[idx];
            let mut total = count(j, order, idx + 1, chosen);
            if chosen.iter().all(|&y| !j.leq[x][y] && !j.leq[y][x]) {
                chosen.push(x);
                total += count(j, order, idx + 1, chosen);
                chosen.pop();
            }
            total
        }
        count(self, &order, 0, &mut Vec::new())
    }
}

pub fn join_irreducible_congruences(l: &PlanarLattice) -> JoinIrreducibles {
    let mut congruences: Vec<Congruence> = Vec::new();
    let mut generators = Vec::new();
    let mut seen: HashMap<Congruence, usize> = HashMap::new();
    for (a, b) in l.cover_pairs() {
        let c = principal_congruence(l, a, b);
        if !seen.contains_key(&c) {
            seen.insert(c.clone(), congruences.len());
            congruences.push(c);
            generators.push((a, b));
        }
    }
    let k = congruences.len();
    let leq: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| congruences[i].leq(&congruences[j]))
                .collect()
        })
        .collect();
    let upper_covers = (0..k)
        .map(|i| {
            (0..k)
                .filter(|&j| {
                    i != j
                        && leq[i][j]
                        && !(0..k).any(|m| m != i && m != j && leq[i][m] && leq[m][j])
                })
                .collect()
        })
        .collect();
    JoinIrreducibles {
        congruences,
        generators,
        upper_covers,
        leq,
    }
}

/// Limits for enumerating all of `Con L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConCaps {
    pub max_elements: usize,
    pub max_join_irreducibles: usize,
}

impl Default for ConCaps {
    fn default() -> Self {
        ConCaps {
            max_elements: 40,
            max_join_irreducibles: 20,
        }
    }
}

/// Every congruence, as joins of join-irreducibles, sorted by decreasing block count and
/// then by labels (identity first, full congruence last).
pub fn all_congruences(
    l: &PlanarLattice,
    caps: ConCaps,
) -> Result<Vec<Congruence>, CongruenceError> {
    let ji = join_irreducible_congruences(l);
    all_congruences_from(l, &ji, caps)
}

pub fn all_congruences_from(
    l: &PlanarLattice,
    ji: &JoinIrreducibles,
    caps: ConCaps,
) -> Result<Vec<Congruence>, CongruenceError> {
    if l.len() > caps.max_elements || ji.len() > caps.max_join_irreducibles {
        return Err(CongruenceError::TooLarge(format!(
            "{} elements, {} join-irreducible congruences",
            l.len(),
            ji.len()
        )));
    }
    let mut seen: HashSet<Congruence> = HashSet::new();
    let mut queue = vec![Congruence::identity(l.len())];
    seen.insert(queue[0].clone());
    let mut i = 0;
    while i < queue.len() {
        let cur = queue[i].clone();
        i += 1;
        for j in &ji.congruences {
            if j.leq(&cur) {
                continue;
            }
            let next = cur.join(j);
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    queue.sort_by(|a, b| b.block_count().cmp(&a.block_count()).then_with(|| a.cmp(b)));
    Ok(queue)
}

/// The congruences ordered by refinement, as an abstract lattice (element `i` is `all[i]`).
pub fn congruence_lattice(all: &[Congruence]) -> Result<PlanarLattice, CongruenceError> {
    Ok(PlanarLattice::from_order(all.len(), |a, b| {
        all[a].leq(&all[b])
    })?)
}

/// The coatoms of `Con L`: for each maximal join-irreducible `γ`, the join of all
/// join-irreducibles not above `γ`.
pub fn dual_atoms_from(l: &PlanarLattice, ji: &JoinIrreducibles) -> Vec<Congruence> {
    let mut out: Vec<Congruence> = ji
        .maximal()
        .into_iter()
        .map(|g| {
            (0..ji.len())
                .filter(|&j| !ji.leq(g, j))
                .fold(Congruence::identity(l.len()), |acc, j| {
                    acc.join(&ji.congruences[j])
                })
        })
        .collect();
    out.sort();
    out
}

pub fn dual_atoms(l: &PlanarLattice) -> Vec<Congruence> {
    dual_atoms_from(l, &join_irreducible_congruences(l))
}

/// Meet of a family; the empty meet is the full congruence.
pub fn meet_all<'a>(n: usize, it: impl IntoIterator<Item = &'a Congruence>) -> Congruence {
    it.into_iter()
        .fold(Congruence::full(n), |acc, c| acc.meet(c))
}

/// Summary of `Con L`.
#[derive(Debug, Clone)]
pub struct ConSummary {
    pub join_irreducibles: JoinIrreducibles,
    /// `None` when the lattice exceeds the enumeration caps.
    pub all_congruences: Option<Vec<Congruence>>,
    pub dual_atoms: Vec<Congruence>,
    /// `t` of the boundary profile, when the lattice is slim rectangular.
    pub t_expected: Option<usize>,
}

impl ConSummary {
    pub fn compute(l: &PlanarLattice, caps: ConCaps) -> ConSummary {
        let ji = join_irreducible_congruences(l);
        let all = all_congruences_from(l, &ji, caps).ok();
        let dual_atoms = dual_atoms_from(l, &ji);
        let t_expected = crate::geometry::rectangular_profile(l)
            .ok()
            .map(|p| p.t_len);
        ConSummary {
            join_irreducibles: ji,
            all_congruences: all,
            dual_atoms,
            t_expected,
        }
    }

    pub fn congruence_count(&self) -> u64 {
        self.join_irreducibles.downset_count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::make_grid;
    use crate::fixtures;

    #[test]
    fn principal_extremes() {
        let l = fixtures::s7();
        assert!(principal_congruence(&l, 4, 4).is_identity());
        assert!(principal_congruence(&l, l.bottom(), l.top()).is_full());
    }

    #[test]
    fn b2_atom_congruence() {
        let b2 = fixtures::boolean(2);
        let c = principal_congruence(&b2, 0, 1);
        assert_eq!(c.blocks(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn chain_has_independent_join_irreducibles() {
        let ji = join_irreducible_congruences(&fixtures::chain(5));
        assert_eq!(ji.len(), 4);
        assert!(ji.upper_covers.iter().all(Vec::is_empty));
        assert_eq!(
            all_congruences(&fixtures::chain(2), ConCaps::default())
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn grid_congruence_lattice_is_boolean() {
        for (p, q) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
            let g = make_grid(p, q).unwrap();
            let all = all_congruences(&g, ConCaps::default()).unwrap();
            assert_eq!(all.len(), 1 << (p + q - 2));
            let con = congruence_lattice(&all).unwrap();
            assert!(crate::isomorphic(&con, &fixtures::boolean(p + q - 2)));
            assert_eq!(dual_atoms(&g).len(), p + q - 2);
        }
    }

    #[test]
    fn s7_join_irreducibles() {
        let s7 = fixtures::s7();
        let ji = join_irreducible_congruences(&s7);
        assert_eq!(ji.len(), 3);
        // exactly one join-irreducible (the fork's) sits below the other two
        let below_both: Vec<usize> = (0..3).filter(|&i| ji.upper_covers[i].len() == 2).collect();
        assert_eq!(below_both.len(), 1);
        let da = dual_atoms(&s7);
        assert_eq!(da.len(), 2);
        assert!(da.iter().all(|d| d.block_count() == 2));
        assert_eq!(ji.downset_count(), 5);
    }

    #[test]
    fn too_large_is_reported() {
        let caps = ConCaps {
            max_elements: 3,
            max_join_irreducibles: 20,
        };
        assert!(matches!(
            all_congruences(&fixtures::boolean(2), caps),
            Err(CongruenceError::TooLarge(_))
        ));
    }
}
