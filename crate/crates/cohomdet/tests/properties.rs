//! Randomized algebraic laws for the polynomial ring layer: ring axioms,
//! text round-trips, exact division, and the substitution homomorphism.

use cohomdet::{IntMatrix, IntPoly};
use proptest::prelude::*;

/// A polynomial in `num_vars` variables with up to five small terms.
fn arb_poly(num_vars: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(
        (prop::collection::vec(0u32..3, num_vars), -9i64..=9),
        0..5,
    )
    .prop_map(move |terms| {
        let mut p = IntPoly::zero(num_vars);
        for (exps, coeff) in terms {
            p += &IntPoly::monomial(num_vars, &exps, coeff);
        }
        p
    })
}

/// Three polynomials over a shared variable count.
fn poly_triple() -> impl Strategy<Value = (IntPoly, IntPoly, IntPoly)> {
    (1usize..=4).prop_flat_map(|nv| (arb_poly(nv), arb_poly(nv), arb_poly(nv)))
}

/// A polynomial together with an integer substitution matrix of matching
/// shape (rows are the images of the variables).
fn poly_with_substitution() -> impl Strategy<Value = (IntPoly, IntPoly, IntMatrix)> {
    (1usize..=3).prop_flat_map(|nv| {
        (
            arb_poly(nv),
            arb_poly(nv),
            prop::collection::vec(-3i64..=3, nv * nv)
                .prop_map(move |entries| IntMatrix::new(nv, nv, entries).unwrap()),
        )
    })
}

proptest! {
    #[test]
    fn addition_commutes((p, q, _) in poly_triple()) {
        prop_assert_eq!(&p + &q, &q + &p);
    }

    #[test]
    fn addition_associates((p, q, r) in poly_triple()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
    }

    #[test]
    fn multiplication_commutes((p, q, _) in poly_triple()) {
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn multiplication_associates((p, q, r) in poly_triple()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn multiplication_distributes((p, q, r) in poly_triple()) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn subtraction_inverts_addition((p, q, _) in poly_triple()) {
        prop_assert_eq!(&(&p + &q) - &q, p);
    }

    #[test]
    fn text_round_trips((p, _, _) in poly_triple()) {
        let text = p.to_string();
        let reparsed = IntPoly::parse(&text, p.num_vars()).unwrap();
        prop_assert_eq!(reparsed, p);
    }

    #[test]
    fn exact_division_inverts_multiplication((p, q, _) in poly_triple()) {
        prop_assume!(!q.is_zero());
        let product = &p * &q;
        prop_assert_eq!(product.exact_div(&q).unwrap(), p);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism((p, q, m) in poly_with_substitution()) {
        let sum = (&p + &q).substitute_linear(&m).unwrap();
        prop_assert_eq!(
            sum,
            &p.substitute_linear(&m).unwrap() + &q.substitute_linear(&m).unwrap()
        );
        let product = (&p * &q).substitute_linear(&m).unwrap();
        prop_assert_eq!(
            product,
            &p.substitute_linear(&m).unwrap() * &q.substitute_linear(&m).unwrap()
        );
    }

    #[test]
    fn powers_match_repeated_multiplication((p, _, _) in poly_triple()) {
        prop_assert_eq!(p.pow(0), IntPoly::one(p.num_vars()));
        prop_assert_eq!(p.pow(1), p.clone());
        prop_assert_eq!(p.pow(3), &(&p * &p) * &p);
    }
}
