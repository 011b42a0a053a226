mod common;

use proptest::prelude::*;
use slimlat::congruence::{all_congruences, principal_congruence, ConCaps, Congruence};
use slimlat::construction::{insert_fork, make_grid, replay, CzedliSchmidtSequence, ForkSite};
use slimlat::geometry::four_cells;
use slimlat::io::{parse_lattice, parse_sequence, serialize_lattice, serialize_sequence, Flags};
use slimlat::{
    canonical_form, classify_elements, fixtures, isomorphic, rectangular_profile, PlanarLattice,
};

/// A sequence on a grid up to 4 × 4 whose fork choices index the current cell list.
fn sequence() -> impl Strategy<Value = CzedliSchmidtSequence> {
    (
        2usize..=4,
        2usize..=4,
        prop::collection::vec(any::<prop::sample::Index>(), 0..4),
    )
        .prop_map(|(p, q, picks)| {
            let mut seq = CzedliSchmidtSequence::grid(p, q);
            let mut l = make_grid(p, q).unwrap();
            for pick in picks {
                let cells = four_cells(&l).unwrap();
                let cell = cells[pick.index(cells.len())];
                seq.forks.push(ForkSite::of_cell(&l, &cell).unwrap());
                l = insert_fork(&l, cell).unwrap();
            }
            seq
        })
}

fn relabel(l: &PlanarLattice, perm: &[usize]) -> PlanarLattice {
    let n = l.len();
    let mut up = vec![Vec::new(); n];
    let mut down = vec![Vec::new(); n];
    for x in 0..n {
        up[perm[x]] = l.up(x).iter().map(|&y| perm[y]).collect();
        down[perm[x]] = l.down(x).iter().map(|&y| perm[y]).collect();
    }
    PlanarLattice::build_diagram(up, down).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lattice_axioms(seq in sequence()) {
        let l = replay(&seq).unwrap();
        for x in l.elements() {
            prop_assert_eq!(l.meet(x, x), x);
            prop_assert_eq!(l.join(x, l.bottom()), x);
            for y in l.elements() {
                prop_assert_eq!(l.meet(x, y), l.meet(y, x));
                prop_assert_eq!(l.join(x, l.meet(x, y)), x);
                prop_assert_eq!(l.meet(x, l.join(x, y)), x);
                prop_assert_eq!(l.leq(x, y), l.meet(x, y) == x);
            }
        }
    }

    #[test]
    fn replayed_lattices_are_slim_semimodular_rectangular(seq in sequence()) {
        let l = replay(&seq).unwrap();
        prop_assert!(l.is_slim());
        prop_assert!(l.is_semimodular());
        prop_assert!(l.elements().all(|x| l.up(x).len() <= 2));
        let p = rectangular_profile(&l).unwrap();
        // the grid is recoverable from the corners
        let dims = (p.length_cl_to_top() + 1, p.length_cr_to_top() + 1);
        prop_assert!(dims == (seq.p, seq.q) || dims == (seq.q, seq.p));
        for x in l.elements() {
            prop_assert!(p.upper_right.contains(&l.join(x, p.c_r)));
            prop_assert!(p.upper_left.contains(&l.join(x, p.c_l)));
        }
    }

    #[test]
    fn three_lower_covers_generate_s7(seq in sequence()) {
        let l = replay(&seq).unwrap();
        let classes = classify_elements(&l).unwrap();
        let s7 = fixtures::s7();
        for x in l.elements() {
            let down = l.down(x);
            if down.len() < 3 {
                continue;
            }
            for &m in &down[1..down.len() - 1] {
                prop_assert!(classes[m].middle, "{} under {}", m, x);
                let sub = l.generated_sublattice(&[down[0], m, down[down.len() - 1]]);
                let s = PlanarLattice::from_order(sub.len(), |a, b| l.leq(sub[a], sub[b])).unwrap();
                prop_assert!(isomorphic(&s, &s7));
            }
        }
    }

    #[test]
    fn canonical_form_ignores_labels(seq in sequence(), seed in any::<u64>()) {
        let l = replay(&seq).unwrap();
        let n = l.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_form(&l), canonical_form(&relabel(&l, &perm)));
    }

    #[test]
    fn text_formats_round_trip(seq in sequence()) {
        let text = serialize_sequence(&seq);
        prop_assert_eq!(&parse_sequence(&text).unwrap(), &seq);
        let l = replay(&seq).unwrap();
        let flags = Flags::detect(&l);
        let file = serialize_lattice(&l, flags);
        let (back, f) = parse_lattice(&file).unwrap();
        prop_assert_eq!(&back, &l);
        prop_assert_eq!(serialize_lattice(&back, f), file);
    }

    #[test]
    fn principal_congruences_are_compatible(seq in sequence()) {
        let l = replay(&seq).unwrap();
        for (a, b) in l.cover_pairs() {
            let c = principal_congruence(&l, a, b);
            prop_assert!(c.same(a, b));
            prop_assert!(common::is_compatible(&l, c.labels()));
            prop_assert!(c.block_intervals(&l).is_some());
        }
    }
}

#[test]
fn naive_oracle_agrees_on_named_lattices() {
    for l in [
        fixtures::s7(),
        fixtures::m3(),
        fixtures::pentagon(),
        fixtures::boolean(3),
        fixtures::chain(4),
    ] {
        let mut naive: Vec<Congruence> = common::naive_congruences(&l)
            .iter()
            .map(|c| Congruence::from_labels(c))
            .collect();
        let mut ours = all_congruences(&l, ConCaps::default()).unwrap();
        naive.sort();
        ours.sort();
        assert_eq!(naive, ours);
    }
    // N5 has 5 congruences, M3 only 2
    assert_eq!(common::naive_congruences(&fixtures::pentagon()).len(), 5);
    assert_eq!(common::naive_congruences(&fixtures::m3()).len(), 2);
}
