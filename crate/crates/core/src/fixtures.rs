//! Small named lattices used as targets, controls and test inputs.

use crate::construction::{replay, CzedliSchmidtSequence};
use crate::lattice::PlanarLattice;

/// The chain `C_n`.
pub fn chain(n: usize) -> PlanarLattice {
    let up = (0..n)
        .map(|i| if i + 1 < n { vec![i + 1] } else { vec![] })
        .collect();
    PlanarLattice::from_upper_covers(up).expect("chain")
}

/// The Boolean lattice `B_k` on subsets of `{0, …, k-1}`; element ids are bit masks.
pub fn boolean(k: usize) -> PlanarLattice {
    let n = 1usize << k;
    let up = (0..n)
        .map(|x| {
            (0..k)
                .filter(|b| x >> b & 1 == 0)
                .map(|b| x | 1 << b)
                .collect()
        })
        .collect();
    PlanarLattice::from_upper_covers(up).expect("boolean lattice")
}

/// `M3`: bottom 0, atoms 1, 2, 3, top 4.
pub fn m3() -> PlanarLattice {
    PlanarLattice::from_upper_covers(vec![vec![1, 2, 3], vec![4], vec![4], vec![4], vec![]])
        .expect("M3")
}

/// `N5`: `0 < 1 < 2 < 4` and `0 < 3 < 4`.
pub fn pentagon() -> PlanarLattice {
    PlanarLattice::build_diagram(
        vec![vec![1, 3], vec![2], vec![4], vec![4], vec![]],
        vec![vec![], vec![0], vec![1], vec![0], vec![2, 3]],
    )
    .expect("N5")
}

/// `S7`: the grid `C_2 × C_2` with one fork. Ids: 0 bottom, 1 = a_l, 2 = a_r, 3 top,
/// 4 = m, 5 = b_l, 6 = b_r.
pub fn s7() -> PlanarLattice {
    replay(&CzedliSchmidtSequence::grid(2, 2).with_fork(3, 0)).expect("S7")
}

/// The lattice of down-sets of the poset `({0, …, n-1}, leq)`; element ids are bit masks
/// of down-sets in increasing order of the mask value.
pub fn downset_lattice<F: Fn(usize, usize) -> bool>(n: usize, leq: F) -> PlanarLattice {
    assert!(n < 24, "poset too large");
    let downsets: Vec<u32> = (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|y| s >> y & 1 == 0 || (0..n).all(|x| !leq(x, y) || s >> x & 1 == 1))
        })
        .collect();
    let m = downsets.len();
    PlanarLattice::from_order(m, |a, b| downsets[a] & !downsets[b] == 0)
        .expect("down-sets form a lattice")
}

/// The eight-element distributive lattice `D8`: down-sets of the poset `a < c`, `b < c`,
/// `b < d` (join-irreducibles 0 = a, 1 = b, 2 = c, 3 = d).
pub fn d8() -> PlanarLattice {
    downset_lattice(4, |x, y| {
        x == y || matches!((x, y), (0, 2) | (1, 2) | (1, 3))
    })
}
