use std::sync::Arc;

use proptest::prelude::*;
use tiv::action::{
    act_on_polynomial, act_on_tensor, random_tensor, sample_rng, GroupElement, GroupKind,
};
use tiv::invariants::{random_u_form, u_index, Generators};
use tiv::pencil::IndeterminateTensor;
use tiv::polyring::{int, Monomial, MonomialOrder, OrderKind, Polynomial, Rational, Ring};

fn xyz() -> Arc<Ring> {
    Ring::named(&["x", "y", "z"])
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::array::uniform3(0u32..4), -5i64..=5), 0..6).prop_map(|terms| {
        let ring = xyz();
        let mut p = Polynomial::zero(&ring);
        for (e, c) in terms {
            p.add_term(Monomial::from_dense(&e), int(c));
        }
        p
    })
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::array::uniform3(0u32..5).prop_map(|e| Monomial::from_dense(&e))
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(OrderKind::DegLex), Just(OrderKind::DegRevLex)].prop_map(MonomialOrder::new)
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn orders_are_multiplicative(a in monomial(), b in monomial(), c in monomial(), ord in order()) {
        prop_assert_eq!(ord.compare(&a, &b), ord.compare(&a.mul(&c), &b.mul(&c)));
    }

    #[test]
    fn leading_monomial_of_product(a in poly(), b in poly(), ord in order()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (la, _) = a.leading_term_in(&ord).unwrap();
        let (lb, _) = b.leading_term_in(&ord).unwrap();
        let ab = &a * &b;
        let (lab, _) = ab.leading_term_in(&ord).unwrap();
        prop_assert_eq!(lab.clone(), la.mul(lb));
    }

    #[test]
    fn substitution_then_evaluation(p in poly(), q in poly(), r in poly(), vals in prop::array::uniform3(-4i64..=4)) {
        let ring = xyz();
        let point: Vec<Rational> = vals.iter().map(|&v| int(v)).collect();
        let images = [q.clone(), r.clone(), &q * &r];
        let composed = p.substitute_indexed(&ring, &images).unwrap();
        let inner: Vec<Rational> = images.iter().map(|i| i.evaluate_indexed(&point)).collect();
        prop_assert_eq!(composed.evaluate_indexed(&point), p.evaluate_indexed(&inner));
    }

    #[test]
    fn print_parse_round_trip(p in poly()) {
        let ring = xyz();
        prop_assert_eq!(Polynomial::parse(&ring, &p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(Polynomial::parse(&ring, &p.to_pretty_string()).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lm_of_substituted_u_form(n in 2usize..=3, seed in 0u64..1000) {
        let mut gens = Generators::new(n).unwrap();
        let g = random_u_form(n, 4, 3, &mut sample_rng(seed, 0));
        prop_assume!(!g.is_zero());
        let (lm_g, _) = g.leading_term().unwrap();
        let mut expected = Monomial::one();
        for k in 0..=n {
            let lm_f = gens.f(k).leading_monomial().unwrap();
            expected = expected.mul(&lm_f.pow(lm_g.exponent(u_index(n, k))));
        }
        let p = gens.substitute(&g).unwrap();
        prop_assert_eq!(p.leading_monomial().unwrap(), expected);
    }

    #[test]
    fn action_is_an_algebra_homomorphism(seed in 0u64..1000) {
        let t = IndeterminateTensor::new(2, 3);
        let mut rng = sample_rng(seed, 0);
        let g = GroupElement::random(2, 3, GroupKind::SlSlSl, &mut rng);
        let p = t.var(1, 1, 1) * t.var(2, 3, 2) + t.var(1, 2, 2);
        let q = t.var(2, 1, 1) - t.var(1, 3, 1).pow(2);
        let act = |f: &Polynomial| act_on_polynomial(&g, f).unwrap();
        prop_assert_eq!(act(&(&p * &q)), &act(&p) * &act(&q));
        prop_assert_eq!(act(&(&p + &q)), &act(&p) + &act(&q));
        let c = Polynomial::from_int(t.ring(), 7);
        prop_assert_eq!(act(&c), c);
        let point = random_tensor(2, 3, &mut rng);
        prop_assert_eq!(
            point.evaluate(&act(&p)).unwrap(),
            act_on_tensor(&g, &point).unwrap().evaluate(&p).unwrap()
        );
    }
}
