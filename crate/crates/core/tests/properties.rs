//! Property tests for the soft-set algebra and the space operators.

use std::sync::Arc;

use proptest::prelude::*;

use softgt_core::{Frame, PointSet, SoftBasis, SoftSet, SoftSpace};

/// Soft set over `frame` from a 12-bit seed: row r of up to 3 parameters
/// takes bits [4r, 4r+4) clipped to the universe size.
fn set_from_bits(frame: &Arc<Frame>, bits: u64) -> SoftSet {
    let n = frame.universe().len();
    let rows = (0..frame.params().len())
        .map(|r| PointSet::from_indices(n, (0..n).filter(|x| bits >> (4 * r + x) & 1 == 1)))
        .collect();
    SoftSet::from_rows(frame.clone(), rows)
}

fn frame_and_sets(
    count: usize,
) -> impl Strategy<Value = (Arc<Frame>, Vec<SoftSet>)> {
    (1u32..=4, 1u32..=3, proptest::collection::vec(any::<u64>(), count)).prop_map(
        move |(n, p, seeds)| {
            let frame = Frame::numeric(n, p);
            let sets = seeds.iter().map(|&b| set_from_bits(&frame, b)).collect();
            (frame, sets)
        },
    )
}

/// A strong space plus an arbitrary soft subset of its carrier.
fn space_and_subset() -> impl Strategy<Value = (SoftSpace, SoftSet)> {
    (
        1u32..=4,
        1u32..=3,
        proptest::collection::vec(any::<u64>(), 1..=4),
        any::<u64>(),
    )
        .prop_map(|(n, p, seeds, sub)| {
            let frame = Frame::numeric(n, p);
            let carrier = SoftSet::universal(frame.clone());
            let mut basis: Vec<SoftSet> =
                seeds.iter().map(|&b| set_from_bits(&frame, b)).collect();
            basis.push(carrier.clone());
            let space = SoftSpace::generate(carrier, &SoftBasis::new(basis)).unwrap();
            let s = set_from_bits(&frame, sub);
            (space, s)
        })
}

proptest! {
    #[test]
    fn union_is_commutative_and_associative((_, sets) in frame_and_sets(3)) {
        let (s, t, u) = (&sets[0], &sets[1], &sets[2]);
        prop_assert_eq!(s.union(t).unwrap(), t.union(s).unwrap());
        prop_assert_eq!(
            s.union(t).unwrap().union(u).unwrap(),
            s.union(&t.union(u).unwrap()).unwrap()
        );
    }

    #[test]
    fn intersection_is_commutative_and_associative((_, sets) in frame_and_sets(3)) {
        let (s, t, u) = (&sets[0], &sets[1], &sets[2]);
        prop_assert_eq!(s.intersection(t).unwrap(), t.intersection(s).unwrap());
        prop_assert_eq!(
            s.intersection(t).unwrap().intersection(u).unwrap(),
            s.intersection(&t.intersection(u).unwrap()).unwrap()
        );
    }

    #[test]
    fn union_and_intersection_are_idempotent((_, sets) in frame_and_sets(1)) {
        let s = &sets[0];
        prop_assert_eq!(&s.union(s).unwrap(), s);
        prop_assert_eq!(&s.intersection(s).unwrap(), s);
    }

    #[test]
    fn de_morgan_under_absolute_complement((_, sets) in frame_and_sets(2)) {
        let (s, t) = (&sets[0], &sets[1]);
        prop_assert_eq!(
            s.union(t).unwrap().absolute_complement(),
            s.absolute_complement().intersection(&t.absolute_complement()).unwrap()
        );
        prop_assert_eq!(
            s.intersection(t).unwrap().absolute_complement(),
            s.absolute_complement().union(&t.absolute_complement()).unwrap()
        );
    }

    #[test]
    fn difference_is_intersection_with_complement((_, sets) in frame_and_sets(2)) {
        let (s, t) = (&sets[0], &sets[1]);
        prop_assert_eq!(
            s.difference(t).unwrap(),
            s.intersection(&t.absolute_complement()).unwrap()
        );
    }

    #[test]
    fn subset_is_a_partial_order((_, sets) in frame_and_sets(2)) {
        let (s, t) = (&sets[0], &sets[1]);
        prop_assert!(s.is_subset_of(s).unwrap());
        if s.is_subset_of(t).unwrap() && t.is_subset_of(s).unwrap() {
            prop_assert_eq!(s, t);
        }
        let st = s.union(t).unwrap();
        prop_assert!(s.is_subset_of(&st).unwrap());
    }

    #[test]
    fn interior_and_closure_bracket_the_set((space, s) in space_and_subset()) {
        let int = space.interior(&s).unwrap();
        let cl = space.closure(&s).unwrap();
        prop_assert!(int.is_subset_of(&s).unwrap());
        prop_assert!(s.is_subset_of(&cl).unwrap());
        prop_assert!(space.is_open(&int).unwrap());
        prop_assert!(space.is_closed(&cl).unwrap());
        prop_assert_eq!(space.interior(&int).unwrap(), int);
        prop_assert_eq!(space.closure(&cl).unwrap(), cl.clone());
    }

    #[test]
    fn regularization_is_idempotent((space, s) in space_and_subset()) {
        let once = space.interior(&space.closure(&s).unwrap()).unwrap();
        let twice = space.interior(&space.closure(&once).unwrap()).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn near_subcover_never_exceeds_plain((space, _) in space_and_subset(), pick in any::<u64>()) {
        let members: Vec<SoftSet> = space
            .opens()
            .iter()
            .enumerate()
            .filter(|(i, _)| pick >> (i % 64) & 1 == 1)
            .map(|(_, o)| o.clone())
            .collect();
        let mut union = SoftSet::empty(space.frame().clone());
        for m in &members {
            union = union.union(m).unwrap();
        }
        prop_assume!(union == *space.carrier());
        let cover = softgt_core::validate_cover(&space, members).unwrap();
        let (plain, plain_witness) = cover.minimal_subcover().unwrap();
        let (near, _) = cover.minimal_near_subcover().unwrap();
        prop_assert!(near <= plain);
        let mut u = SoftSet::empty(space.frame().clone());
        for &w in &plain_witness {
            u = u.union(&cover.members()[w]).unwrap();
        }
        prop_assert_eq!(u, space.carrier().clone());
    }

    #[test]
    fn projections_are_union_closed((space, _) in space_and_subset()) {
        for r in space.frame().params().params() {
            let proj = space.project(r).unwrap();
            let opens = proj.opens();
            for a in opens {
                for b in opens {
                    let u = a.union(b);
                    prop_assert!(opens.binary_search(&u).is_ok());
                }
            }
        }
    }
}
