use std::collections::VecDeque;
use std::fmt;

use crate::analysis::report::{CheckReport, Witnesses};
use crate::congruence::principal_congruence;
use crate::lattice::{Elem, PlanarLattice};

/// A covering pair `lo ≺ hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeInterval {
    pub lo: Elem,
    pub hi: Elem,
}

impl PrimeInterval {
    pub fn new(l: &PlanarLattice, lo: Elem, hi: Elem) -> Option<Self> {
        l.covers(lo, hi).then_some(PrimeInterval { lo, hi })
    }
}

impl fmt::Display for PrimeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

pub fn prime_intervals(l: &PlanarLattice) -> Vec<PrimeInterval> {
    l.cover_pairs()
        .into_iter()
        .map(|(lo, hi)| PrimeInterval { lo, hi })
        .collect()
}

/// `[a, b] ↗ [c, d]`: `b ∨ c = d` and `b ∧ c = a`.
pub fn up_perspective(l: &PlanarLattice, p: PrimeInterval, q: PrimeInterval) -> bool {
    l.join(p.hi, q.lo) == q.hi && l.meet(p.hi, q.lo) == p.lo
}

/// `[a, b] ↘ [c, d]`, i.e. `[c, d] ↗ [a, b]`.
pub fn down_perspective(l: &PlanarLattice, p: PrimeInterval, q: PrimeInterval) -> bool {
    up_perspective(l, q, p)
}

/// `p` swings to `q`: same top, the top covers at least three elements, and `0_q` is
/// neither the leftmost nor the rightmost of them.
pub fn swings_to(l: &PlanarLattice, p: PrimeInterval, q: PrimeInterval) -> bool {
    let down = l.down(p.hi);
    p.hi == q.hi && down.len() >= 3 && q.lo != down[0] && q.lo != down[down.len() - 1]
}

/// Every swinging pair `(p, q)` with `p ≠ q`.
pub fn swings(l: &PlanarLattice) -> Vec<(PrimeInterval, PrimeInterval)> {
    let all = prime_intervals(l);
    let mut out = Vec::new();
    for &p in &all {
        for &q in &all {
            if p != q && swings_to(l, p, q) {
                out.push((p, q));
            }
        }
    }
    out
}

/// Prime intervals with the step relation "down perspective to or swings to".
pub struct SwingGraph<'a> {
    l: &'a PlanarLattice,
    intervals: Vec<PrimeInterval>,
    step: Vec<Vec<usize>>,
    reverse: Vec<Vec<usize>>,
    index: std::collections::HashMap<PrimeInterval, usize>,
}

impl<'a> SwingGraph<'a> {
    pub fn new(l: &'a PlanarLattice) -> Self {
        let mut intervals = prime_intervals(l);
        intervals.sort();
        let step: Vec<Vec<usize>> = intervals
            .iter()
            .map(|&p| {
                (0..intervals.len())
                    .filter(|&j| {
                        let q = intervals[j];
                        p != q && (down_perspective(l, p, q) || swings_to(l, p, q))
                    })
                    .collect()
            })
            .collect();
        let index = intervals.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut reverse = vec![Vec::new(); intervals.len()];
        for (i, out) in step.iter().enumerate() {
            for &j in out {
                reverse[j].push(i);
            }
        }
        SwingGraph {
            l,
            intervals,
            step,
            reverse,
            index,
        }
    }

    pub fn intervals(&self) -> &[PrimeInterval] {
        &self.intervals
    }

    /// Length of the shortest step path from each interval to `target` (`usize::MAX` if none).
    pub fn distances_to(&self, target: PrimeInterval) -> Option<Vec<usize>> {
        let n = self.intervals.len();
        let target = *self.index.get(&target)?;
        let mut dist = vec![usize::MAX; n];
        dist[target] = 0;
        let mut queue = VecDeque::from([target]);
        while let Some(j) = queue.pop_front() {
            for &i in &self.reverse[j] {
                if dist[i] == usize::MAX {
                    dist[i] = dist[j] + 1;
                    queue.push_back(i);
                }
            }
        }
        Some(dist)
    }

    /// Walks down `dist` from the best start above `p`.
    fn path(&self, p: PrimeInterval, dist: &[usize]) -> Option<Vec<PrimeInterval>> {
        let start = (0..self.intervals.len())
            .filter(|&i| dist[i] != usize::MAX && up_perspective(self.l, p, self.intervals[i]))
            .min_by_key(|&i| (dist[i], i))?;
        let mut path = vec![start];
        let mut cur = start;
        while dist[cur] > 0 {
            cur = *self.step[cur]
                .iter()
                .filter(|&&j| dist[j] != usize::MAX && dist[j] + 1 == dist[cur])
                .min()
                .expect("BFS layer");
            path.push(cur);
        }
        Some(path.into_iter().map(|i| self.intervals[i]).collect())
    }

    /// A shortest sequence `r_0, …, r_n = q` with `p ↗ r_0` and each step a down
    /// perspectivity or a swing; among shortest ones the lexicographically least.
    pub fn reachable(&self, p: PrimeInterval, q: PrimeInterval) -> Option<Vec<PrimeInterval>> {
        self.path(p, &self.distances_to(q)?)
    }
}

pub fn swing_reachable(
    l: &PlanarLattice,
    p: PrimeInterval,
    q: PrimeInterval,
) -> Option<Vec<PrimeInterval>> {
    SwingGraph::new(l).reachable(p, q)
}

/// Why `seq` is not a valid swing sequence from `p` to `q`, if it is not.
pub fn swing_witness_violation(
    l: &PlanarLattice,
    p: PrimeInterval,
    q: PrimeInterval,
    seq: &[PrimeInterval],
) -> Option<String> {
    let (first, last) = (seq.first()?, seq.last()?);
    if !up_perspective(l, p, *first) {
        return Some(format!("{p} is not up perspective to {first}"));
    }
    if *last != q {
        return Some(format!("sequence ends at {last}, not {q}"));
    }
    for (i, a) in seq.iter().enumerate() {
        if seq[i + 1..].contains(a) {
            return Some(format!("{a} repeats"));
        }
    }
    for w in seq.windows(2) {
        if !(down_perspective(l, w[0], w[1]) || swings_to(l, w[0], w[1])) {
            return Some(format!("{} neither slides nor swings to {}", w[0], w[1]));
        }
        if !l.leq(w[1].hi, w[0].hi) {
            return Some(format!("tops not descending at {} -> {}", w[0], w[1]));
        }
    }
    None
}

fn render(seq: &[PrimeInterval]) -> String {
    seq.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// For every pair of prime intervals: `q` collapsed by `con(p)` iff a swing sequence
/// exists; every sequence found must be valid.
pub fn check_swing_lemma(l: &PlanarLattice) -> CheckReport {
    CheckReport::run("swing-lemma", l, || {
        let g = SwingGraph::new(l);
        let mut w = Witnesses::default();
        let mut collapsed = 0usize;
        let cons: Vec<_> = g
            .intervals()
            .iter()
            .map(|p| principal_congruence(l, p.lo, p.hi))
            .collect();
        for &q in g.intervals() {
            let dist = g.distances_to(q).expect("q is a prime interval");
            for (&p, con) in g.intervals().iter().zip(&cons) {
                let by_con = con.same(q.lo, q.hi);
                let seq = g.path(p, &dist);
                collapsed += usize::from(by_con);
                match (&seq, by_con) {
                    (Some(s), true) => {
                        if let Some(why) = swing_witness_violation(l, p, q, s) {
                            w.push(format!("{p} -> {q}: {why}"));
                        }
                    }
                    (None, false) => {}
                    (Some(s), false) => w.push(format!(
                        "{p} -> {q}: sequence {} but not collapsed",
                        render(s)
                    )),
                    (None, true) => w.push(format!("{p} -> {q}: collapsed but no sequence")),
                }
            }
        }
        (
            format!("pairs={} collapsed={collapsed}", g.intervals().len().pow(2)),
            w.finish(),
        )
    })
}
