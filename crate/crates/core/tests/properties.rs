//! Randomized checks of the group action on catalog entries.

use proptest::prelude::*;

use superdegen::catalog::Catalog;
use superdegen::exact::{Field, Scalar};
use superdegen::invariants::{closed_set_member, fingerprint, ClosedSet};
use superdegen::linalg::Matrix;
use superdegen::superalg::{AxiomMode, GroupElement};

fn group_element() -> impl Strategy<Value = GroupElement<Scalar>> {
    prop::collection::vec(-3i64..=3, 12).prop_filter_map("singular", |v| {
        let m = Matrix::from_fn(4, 4, |r, c| match c {
            0 => Scalar::from_i64((r == 0) as i64),
            _ => Scalar::from_i64(v[r * 3 + c - 1]),
        });
        GroupElement::new(m).ok()
    })
}

fn entry() -> impl Strategy<Value = usize> {
    0..Catalog::embedded().len()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn transport_stays_in_the_variety(i in entry(), g in group_element()) {
        let sc = &Catalog::embedded().entries()[i].constants;
        let moved = sc.transport_unchecked(&g);
        let r = moved.check_axioms(AxiomMode::UnitalSuperalgebra);
        prop_assert!(r.is_pass(), "{}", r);
    }

    #[test]
    fn action_composes(i in entry(), g in group_element(), h in group_element()) {
        let sc = &Catalog::embedded().entries()[i].constants;
        let step = sc.transport_unchecked(&g).transport_unchecked(&h);
        prop_assert_eq!(step, sc.transport_unchecked(&g.compose(&h)));
    }

    #[test]
    fn inverse_undoes(i in entry(), g in group_element()) {
        let sc = &Catalog::embedded().entries()[i].constants;
        let back = GroupElement::new(g.inverse().clone()).unwrap();
        prop_assert_eq!(&sc.transport_unchecked(&g).transport_unchecked(&back), sc);
    }

    #[test]
    fn grading_trace_is_constant(i in entry(), g in group_element()) {
        let e = &Catalog::embedded().entries()[i];
        let m = e.constants.transport_unchecked(&g).grading_matrix();
        let tr = (0..4).fold(Scalar::zero(), |a, k| a.add(&m[(k, k)]));
        prop_assert_eq!(tr, Scalar::from_i64(2 * e.component as i64 - 4));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn fingerprint_is_invariant(i in entry(), g in group_element()) {
        let sc = &Catalog::embedded().entries()[i].constants;
        let moved = sc.transport_unchecked(&g);
        prop_assert_eq!(fingerprint(sc).unwrap(), fingerprint(&moved).unwrap());
        for set in [ClosedSet::A, ClosedSet::B] {
            prop_assert_eq!(
                closed_set_member(sc, set).unwrap(),
                closed_set_member(&moved, set).unwrap()
            );
        }
    }
}
