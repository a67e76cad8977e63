//! Shrinking property tests for the form calculus and the transgression,
//! driven by proptest rather than the seeded sampler.

use courant_core::courant::CourantStructure;
use courant_core::symcore::form::{sign, signed};
use courant_core::symcore::{parse_form, ratio, Form, Monomial, Poly, VectorField};
use courant_core::transgression::{TauAlgebroid, TauElement};
use proptest::prelude::*;

const N: usize = 3;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), -4i64..=4, 1i64..=3), 0..4).prop_map(|terms| {
        let mut p = Poly::zero(N);
        for ((a, b, c), num, den) in terms {
            p.add_term(Monomial::from_exponents(&[a, b, c]), ratio(num, den));
        }
        p
    })
}

fn form() -> impl Strategy<Value = Form> {
    prop::collection::vec((0u32..(1 << N), poly()), 0..4).prop_map(|parts| {
        let mut f = Form::zero(N);
        for (mask, p) in parts {
            f.add_component(mask, &p);
        }
        f
    })
}

fn homogeneous(p: usize) -> impl Strategy<Value = Form> {
    form().prop_map(move |f| f.part(p))
}

fn graded() -> impl Strategy<Value = (usize, Form)> {
    (0..=N).prop_flat_map(|p| homogeneous(p).prop_map(move |f| (p, f)))
}

fn field() -> impl Strategy<Value = VectorField> {
    prop::collection::vec(poly(), N).prop_map(VectorField::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_squares_to_zero(w in form()) {
        prop_assert!(w.d().d().is_zero());
    }

    #[test]
    fn printed_forms_parse_back(w in form()) {
        prop_assert_eq!(parse_form(N, &w.to_string()).unwrap(), w);
    }

    #[test]
    fn cartan_magic_formula(w in form(), xi in field()) {
        let rhs = &w.interior(&xi).d() + &w.d().interior(&xi);
        prop_assert_eq!(w.lie_derivative(&xi), rhs);
    }

    #[test]
    fn wedge_is_graded_commutative((p, a) in graded(), (q, b) in graded()) {
        prop_assert_eq!(a.wedge(&b), signed(sign((p * q) as i64), &b.wedge(&a)));
    }

    #[test]
    fn tau_marking_is_central(theta in homogeneous(1), alpha in homogeneous(2)) {
        let q = CourantStructure::standard(N, 1).unwrap();
        let tau = TauAlgebroid::build(&q).unwrap();
        let a = &TauElement::marked(theta, tau.rank()) + &tau.reduce_eps(&alpha, &q.basis(0));
        prop_assert!(tau.bracket(&tau.marking(), &a).is_zero());
        prop_assert!(tau.bracket(&a, &tau.marking()).is_zero());
    }

    #[test]
    fn tau_differential_squares_to_zero(beta in form(), alpha in form(), i in 0usize..N) {
        let q = CourantStructure::twisted(N, 1, parse_form(N, "x*z dy^dz").unwrap()).unwrap();
        let tau = TauAlgebroid::build(&q).unwrap();
        let a = &tau.reduce_eps(&alpha, &q.basis(i)) + &tau.reduce_one(&beta, &q.basis(i));
        prop_assert!(tau.diff(&tau.diff(&a)).is_zero());
    }
}
