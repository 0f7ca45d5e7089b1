//! Property tests for the scalar layer: ring/field axioms, the `omega`
//! involution, rendering round trips and specialization homomorphisms.

use num::{BigInt, BigRational};
use proptest::prelude::*;

use cyclohecke::scalar::{
    apply_omega, parse_ratfn, q_number, ratfn_eq, specialize, Coeff, LaurentPoly, ParamSpec, RatFn,
};

const M: usize = 2;

fn coeff(k: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(k))
}

fn poly_strategy() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i64..=3, -2i64..=2, -2i64..=2), -9i64..=9), 0..5).prop_map(|terms| {
        let mut p = LaurentPoly::zero(M);
        for ((eq, e1, e2), c) in terms {
            let mono = LaurentPoly::monomial(M, &[eq, e1, e2], coeff(c)).expect("arity m+1");
            p = p.checked_add(&mono).expect("same arity");
        }
        p
    })
}

fn nonzero_poly_strategy() -> impl Strategy<Value = LaurentPoly> {
    poly_strategy().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfn_strategy() -> impl Strategy<Value = RatFn> {
    (poly_strategy(), nonzero_poly_strategy())
        .prop_map(|(num, den)| RatFn::new(num, den).expect("nonzero denominator"))
}

fn spec_point() -> ParamSpec {
    ParamSpec { q: coeff(2), v: vec![coeff(1), coeff(3)], n: 4 }
}

proptest! {
    #[test]
    fn poly_ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &LaurentPoly::zero(M), a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one(M), a.clone());
    }

    #[test]
    fn ratfn_field_axioms(a in ratfn_strategy(), b in ratfn_strategy(), c in ratfn_strategy()) {
        prop_assert!(ratfn_eq(&(&a + &b), &(&b + &a)));
        prop_assert!(ratfn_eq(&(&(&a * &b) * &c), &(&a * &(&b * &c))));
        prop_assert!(ratfn_eq(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c))));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            let inv = a.checked_inv().expect("nonzero");
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn ratfn_eq_matches_subtraction(a in ratfn_strategy(), b in ratfn_strategy()) {
        prop_assert_eq!(ratfn_eq(&a, &b), (&a - &b).is_zero());
    }

    #[test]
    fn render_parse_round_trip(a in ratfn_strategy()) {
        let text = a.to_string();
        let back = parse_ratfn(&text, M).expect("rendered form reparses");
        prop_assert!(ratfn_eq(&a, &back));
        // Normal forms render byte-identically.
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn omega_is_a_ring_involution(a in ratfn_strategy(), b in ratfn_strategy()) {
        prop_assert!(ratfn_eq(&apply_omega(&apply_omega(&a)), &a));
        prop_assert!(ratfn_eq(&apply_omega(&(&a + &b)), &(&apply_omega(&a) + &apply_omega(&b))));
        prop_assert!(ratfn_eq(&apply_omega(&(&a * &b)), &(&apply_omega(&a) * &apply_omega(&b))));
    }

    #[test]
    fn specialization_is_a_homomorphism(a in ratfn_strategy(), b in ratfn_strategy()) {
        let spec = spec_point();
        let (sa, sb) = match (specialize(&a, &spec), specialize(&b, &spec)) {
            (Ok(sa), Ok(sb)) => (sa, sb),
            // A denominator can vanish at the sample point; nothing to check.
            _ => return Ok(()),
        };
        if let Ok(sum) = specialize(&(&a + &b), &spec) {
            prop_assert_eq!(sum, &sa + &sb);
        }
        if let Ok(prod) = specialize(&(&a * &b), &spec) {
            prop_assert_eq!(prod, &sa * &sb);
        }
    }

    #[test]
    fn q_numbers_expand_the_defining_ratio(j in -8i64..=8) {
        let q = RatFn::q(M);
        let qi = RatFn::q_pow(M, -1);
        let num = &q.pow_i(j).expect("power") - &q.pow_i(-j).expect("power");
        let den = &q - &qi;
        let ratio = &num / &den;
        prop_assert!(ratfn_eq(&ratio, &q_number(M, j)));
    }
}
