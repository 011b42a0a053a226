use crate::analysis::report::{CheckReport, Witnesses};
use crate::congruence::{join_irreducible_congruences, quotient, Congruence};
use crate::lattice::{Elem, PlanarLattice};

/// The facing chains of two adjacent blocks `A ≺ B` of a congruence.
///
/// `s_a` runs from `1_A ∧ 0_B` to `1_A` along a boundary of `A`, `s_b` from `0_B` to
/// `1_A ∨ 0_B`; `s_b[i] = s_a[i] ∨ 0_B` and `s_a[i] = s_b[i] ∧ 1_A`. The second map is
/// written with `0_B` in the source text, which cannot land in `A`; `1_A` is used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ladder {
    /// `(0_A, 1_A)`.
    pub a: (Elem, Elem),
    /// `(0_B, 1_B)`.
    pub b: (Elem, Elem),
    pub s_a: Vec<Elem>,
    pub s_b: Vec<Elem>,
}

struct Blocks<'a> {
    l: &'a PlanarLattice,
    theta: &'a Congruence,
    bounds: Vec<(Elem, Elem)>,
}

impl Blocks<'_> {
    fn contains(&self, block: usize, x: Elem) -> bool {
        self.theta.block_of(x) == block
    }
}

/// Chain from `from` to `to` taking the leftmost (or rightmost) upper cover below `to`.
fn side_chain(l: &PlanarLattice, from: Elem, to: Elem, rightmost: bool) -> Vec<Elem> {
    let mut chain = vec![from];
    let mut x = from;
    while x != to {
        let mut ups = l.up(x).iter().copied().filter(|&y| l.leq(y, to));
        x = if rightmost {
            ups.next_back()
        } else {
            ups.next()
        }
        .expect("interval is connected");
        chain.push(x);
    }
    chain
}

/// Why `(s_a, s_b)` is not a ladder for `A ≺ B`, if it is not.
fn ladder_violation(bl: &Blocks, a: usize, b: usize, s_a: &[Elem], s_b: &[Elem]) -> Option<String> {
    let l = bl.l;
    let (one_a, zero_b) = (bl.bounds[a].1, bl.bounds[b].0);
    if s_a.len() != s_b.len() {
        return Some(format!("chains of lengths {} and {}", s_a.len(), s_b.len()));
    }
    for (i, (&x, &y)) in s_a.iter().zip(s_b).enumerate() {
        if !bl.contains(a, x) || !bl.contains(b, y) {
            return Some(format!("rung {i} ({x}, {y}) leaves its block"));
        }
        if l.join(x, zero_b) != y || l.meet(y, one_a) != x {
            return Some(format!("rung {i} ({x}, {y}) is not matched by the maps"));
        }
        if !l.covers(x, y) && !(s_a.len() == 1 && l.leq(x, y)) {
            return Some(format!("rung {i}: {x} is not covered by {y}"));
        }
        if i > 0 {
            let (x0, y0) = (s_a[i - 1], s_b[i - 1]);
            if !l.covers(x0, x) || !l.covers(y0, y) {
                return Some(format!("rung {i}: chains are not cover chains"));
            }
            if l.join(x, y0) != y || l.meet(x, y0) != x0 {
                return Some(format!("[{x0},{x}] is not up perspective to [{y0},{y}]"));
            }
        }
    }
    if s_b.last() != Some(&l.join(one_a, zero_b)) || s_b.first() != Some(&zero_b) {
        return Some("S_B does not span [0_B, 1_A ∨ 0_B]".into());
    }
    None
}

/// Covering pairs `A ≺ B` of `L/θ`, as block indices, in lexicographic order.
fn covering_blocks(l: &PlanarLattice, theta: &Congruence) -> Vec<(usize, usize)> {
    let q = quotient(l, theta).expect("quotient of a congruence is a lattice");
    let mut pairs: Vec<(usize, usize)> = q.cover_pairs();
    pairs.sort_unstable();
    pairs
}

fn block_bounds(l: &PlanarLattice, theta: &Congruence) -> Result<Vec<(Elem, Elem)>, String> {
    theta
        .block_intervals(l)
        .ok_or_else(|| format!("a block of {theta} is not an interval"))
}

/// The ladder of every covering pair of blocks of `θ`; an error names the first pair for
/// which neither boundary of `A` yields a ladder.
pub fn ladders(l: &PlanarLattice, theta: &Congruence) -> Result<Vec<Ladder>, String> {
    let bl = Blocks {
        l,
        theta,
        bounds: block_bounds(l, theta)?,
    };
    let mut out = Vec::new();
    for (a, b) in covering_blocks(l, theta) {
        let (one_a, zero_b) = (bl.bounds[a].1, bl.bounds[b].0);
        let a0 = l.meet(one_a, zero_b);
        let mut found = None;
        for rightmost in [true, false] {
            let s_a = side_chain(l, a0, one_a, rightmost);
            let s_b: Vec<Elem> = s_a.iter().map(|&x| l.join(x, zero_b)).collect();
            if ladder_violation(&bl, a, b, &s_a, &s_b).is_none() {
                found = Some(Ladder {
                    a: bl.bounds[a],
                    b: bl.bounds[b],
                    s_a,
                    s_b,
                });
                break;
            }
        }
        out.push(found.ok_or_else(|| {
            format!(
                "no ladder between blocks {:?} and {:?}",
                bl.bounds[a], bl.bounds[b]
            )
        })?);
    }
    Ok(out)
}

/// For `x ∈ A`: `x ∨ 0_B` is the least element of `B` above `x`, `(x ∨ 0_B) ∧ 1_A` is the
/// greatest element of `A` below it and is covered by it; dually for `y ∈ B`.
fn galois_violation(
    l: &PlanarLattice,
    theta: &Congruence,
    bounds: &[(Elem, Elem)],
    a: usize,
    b: usize,
) -> Option<String> {
    let (one_a, zero_b) = (bounds[a].1, bounds[b].0);
    let in_block = |blk: usize| l.elements().filter(move |&x| theta.block_of(x) == blk);
    for x in in_block(a) {
        let up = l.join(x, zero_b);
        let least = in_block(b)
            .filter(|&y| l.leq(x, y))
            .reduce(|m, y| if l.leq(y, m) { y } else { m });
        if least != Some(up) || in_block(b).any(|y| l.leq(x, y) && !l.leq(up, y)) {
            return Some(format!("{x}^B is not {up}"));
        }
        let back = l.meet(up, one_a);
        if !l.covers(back, up) {
            return Some(format!("({x}^B)_A = {back} is not covered by {up}"));
        }
    }
    for y in in_block(b) {
        let down = l.meet(y, one_a);
        if in_block(a).any(|x| l.leq(x, y) && !l.leq(x, down)) || theta.block_of(down) != a {
            return Some(format!("{y}_A is not {down}"));
        }
    }
    None
}

/// Ladders and the Galois properties for every join-irreducible congruence.
pub fn check_ladders(l: &PlanarLattice) -> CheckReport {
    CheckReport::run("ladders", l, || {
        let ji = join_irreducible_congruences(l);
        let mut w = Witnesses::default();
        let mut count = 0;
        for theta in &ji.congruences {
            let bounds = match block_bounds(l, theta) {
                Ok(b) => b,
                Err(e) => {
                    w.push(e);
                    continue;
                }
            };
            for (a, b) in covering_blocks(l, theta) {
                if let Some(why) = galois_violation(l, theta, &bounds, a, b) {
                    w.push(format!("{theta}: {why}"));
                }
            }
            match ladders(l, theta) {
                Ok(v) => count += v.len(),
                Err(e) => w.push(format!("{theta}: {e}")),
            }
        }
        (format!("ladders={count}"), w.finish())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::dual_atoms;
    use crate::construction::make_grid;
    use crate::fixtures;

    #[test]
    fn full_congruence_has_no_ladders() {
        let s7 = fixtures::s7();
        assert!(ladders(&s7, &Congruence::full(7)).unwrap().is_empty());
    }

    #[test]
    fn s7_dual_atom_ladders() {
        // π(↓a_l) has blocks ↓1 = {0, 1, 5} and {2, 3, 4, 6}
        let s7 = fixtures::s7();
        let atoms = dual_atoms(&s7);
        let pi = atoms
            .iter()
            .find(|d| d.same(0, 1) && d.same(0, 5) && !d.same(0, 2))
            .unwrap();
        let v = ladders(&s7, pi).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].a, (0, 1));
        assert_eq!(v[0].b, (6, 3));
        // 1_A ∧ 0_B = 0; rightmost chain of [0, 1] is 0 ≺ 5 ≺ 1
        assert_eq!(v[0].s_a, vec![0, 5, 1]);
        assert_eq!(v[0].s_b, vec![6, 4, 3]);
    }

    #[test]
    fn single_rung() {
        // chain: A = {0}, B = {1}; 1_A < 0_B
        let c2 = fixtures::chain(2);
        let v = ladders(&c2, &Congruence::identity(2)).unwrap();
        assert_eq!(
            v,
            vec![Ladder {
                a: (0, 0),
                b: (1, 1),
                s_a: vec![0],
                s_b: vec![1]
            }]
        );
    }

    #[test]
    fn check_passes_on_small_lattices() {
        for l in [fixtures::s7(), make_grid(3, 3).unwrap()] {
            let r = check_ladders(&l);
            assert!(r.pass, "{r}");
        }
    }
}
