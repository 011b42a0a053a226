//! Every element of a slim rectangular lattice lies on the upper boundary, is
//! meet-reducible, or is the middle element of an `S7` sublattice.

use crate::error::LatticeError;
use crate::geometry::rectangular_profile;
use crate::lattice::{Elem, PlanarLattice};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElementClass {
    pub upper_boundary: bool,
    pub meet_reducible: bool,
    pub middle: bool,
}

impl ElementClass {
    pub fn is_unlabelled(&self) -> bool {
        !(self.upper_boundary || self.meet_reducible || self.middle)
    }

    /// Short comma-separated label list, e.g. `upper,middle`.
    pub fn labels(&self) -> String {
        let mut v = Vec::new();
        if self.upper_boundary {
            v.push("upper");
        }
        if self.meet_reducible {
            v.push("meet-reducible");
        }
        if self.middle {
            v.push("middle");
        }
        v.join(",")
    }
}

/// `(a_l, a_r)` such that `{a_l, m, a_r}` generates an `S7` sublattice with middle `m`,
/// least in lexicographic order.
///
/// In `S7` the middle is the only join-reducible element below the top, so the test is:
/// the sublattice has seven elements, `a_l ∧ m` and `m ∧ a_r` join to `m`, `a_l ∧ a_r`
/// lies below both, and the three generators pairwise join to the same top.
pub fn middle_witness(l: &PlanarLattice, m: Elem) -> Option<(Elem, Elem)> {
    for a in l.elements() {
        if l.comparable(a, m) {
            continue;
        }
        let top = l.join(a, m);
        for b in a + 1..l.len() {
            if l.comparable(b, m)
                || l.comparable(a, b)
                || l.join(b, m) != top
                || l.join(a, b) != top
            {
                continue;
            }
            let (bl, br) = (l.meet(a, m), l.meet(b, m));
            if bl == br || l.join(bl, br) != m {
                continue;
            }
            let o = l.meet(a, b);
            if l.meet(bl, br) != o || l.join(bl, b) != top || l.join(a, br) != top {
                continue;
            }
            if l.generated_sublattice(&[a, m, b]).len() == 7 {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_middle(l: &PlanarLattice, m: Elem) -> bool {
    middle_witness(l, m).is_some()
}

/// Labels every element; fails with [`LatticeError::ClassificationGap`] on an element
/// that gets no label.
pub fn classify_elements(l: &PlanarLattice) -> Result<Vec<ElementClass>, LatticeError> {
    let profile = rectangular_profile(l)?;
    let upper = profile.upper_boundary();
    let classes: Vec<ElementClass> = l
        .elements()
        .map(|x| ElementClass {
            upper_boundary: upper.binary_search(&x).is_ok(),
            meet_reducible: l.up(x).len() >= 2,
            middle: is_middle(l, x),
        })
        .collect();
    match classes.iter().position(ElementClass::is_unlabelled) {
        Some(element) => Err(LatticeError::ClassificationGap { element }),
        None => Ok(classes),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::make_grid;
    use crate::fixtures;

    #[test]
    fn grid_has_no_middles() {
        let g = make_grid(3, 4).unwrap();
        let c = classify_elements(&g).unwrap();
        assert!(c.iter().all(|x| !x.middle));
    }

    #[test]
    fn s7_labels() {
        let s7 = fixtures::s7();
        let c = classify_elements(&s7).unwrap();
        let middles: Vec<Elem> = s7.elements().filter(|&x| c[x].middle).collect();
        assert_eq!(middles, vec![4]);
        assert!(c[5].meet_reducible && c[6].meet_reducible);
        for x in [1, 2, 3] {
            assert!(c[x].upper_boundary, "{x}");
        }
        assert_eq!(middle_witness(&s7, 4), Some((1, 2)));
    }

    #[test]
    fn pentagon_is_not_rectangular() {
        assert!(classify_elements(&fixtures::pentagon()).is_err());
    }
}
