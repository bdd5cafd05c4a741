mod common;

use common::{padic_norm, q};
use ladic::digits::{expand, from_digits, parse_digits};
use ladic::element::parse_element;
use ladic::measure::{parse_cylinder, Cylinder};
use ladic::metric::{abs, dist};
use ladic::solenoid::coords;
use ladic::structure::{character_eval, division_points, torsion_subgroup};
use ladic::{BigInt, BigRational, Element, Element64, Homothety, Prime, Prime64};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11])
}

fn ratio(bound: i64) -> impl Strategy<Value = (i64, i64)> {
    (-bound..=bound, 1..=bound)
}

prop_compose! {
    fn element_over(bound: i64)(ell in prime(), (a, b) in ratio(bound), (c, d) in ratio(bound))
        -> (u64, Element)
    {
        let ctx = Prime::new(ell).unwrap();
        (ell, Element::from_pair(q(a, b), q(c, d), &ctx))
    }
}

fn triple() -> impl Strategy<Value = (Prime, [Element; 3])> {
    (prime(), prop::array::uniform6(ratio(500))).prop_map(|(ell, r)| {
        let c = Prime::new(ell).unwrap();
        let e = |i: usize| Element::from_pair(q(r[i].0, r[i].1), q(r[i + 1].0, r[i + 1].1), &c);
        let xs = [e(0), e(2), e(4)];
        (c, xs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn group_laws((c, [x, y, z]) in triple()) {
        let zero = Element::zero(&c);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x + &zero, x.clone());
        prop_assert!((&x - &x).is_zero());
        prop_assert!((&x + &y).is_canonical());
        prop_assert!((-&x).is_canonical());
    }

    #[test]
    fn sum_of_coordinates_is_invariant((a, b) in ratio(1000), (c, d) in ratio(1000), ell in prime(), k in -50i64..50, e in 0i64..4) {
        let ctx = Prime::new(ell).unwrap();
        let t = q(k, 1) * ctx.rat_pow(-e);
        let x = Element::from_pair(q(a, b), q(c, d), &ctx);
        let y = Element::from_pair(q(a, b) + &t, q(c, d) - &t, &ctx);
        prop_assert_eq!(&x, &y);
        prop_assert_eq!(x.whole() + x.frac(), q(a, b) + q(c, d));
    }

    #[test]
    fn division_by_ell_is_unique((ell, x) in element_over(1000)) {
        let y = x.divide_by_ell();
        prop_assert_eq!(y.mul_int(&BigInt::from(ell)), x.clone());
        let pts = division_points(&x, &BigInt::from(ell)).unwrap();
        prop_assert_eq!(pts, vec![y]);
    }

    #[test]
    fn torsion_orders_are_exact(ell in prime(), (a, b) in ratio(60)) {
        let c = Prime::new(ell).unwrap();
        let x = Element::tau(q(a, b), &c);
        let m = x.torsion_order().unwrap();
        prop_assert!(!(m.clone() % BigInt::from(ell)).is_zero() || m.is_one());
        prop_assert!(x.mul_int(&m).is_zero());
        let mut d = BigInt::one();
        while d < m {
            if (m.clone() % &d).is_zero() {
                prop_assert!(!x.mul_int(&d).is_zero());
            }
            d += 1;
        }
        if !(m.clone() % BigInt::from(ell)).is_zero() {
            prop_assert!(torsion_subgroup(&m, &c).unwrap().contains(&x));
        }
    }

    #[test]
    fn absolute_value_axioms((c, [x, y, _]) in triple()) {
        prop_assert!(abs(&(&x + &y)) <= abs(&x) + abs(&y));
        prop_assert_eq!(abs(&x), abs(&-&x));
        prop_assert!(abs(&x) <= BigRational::one());
        prop_assert_eq!(dist(&x, &y), dist(&y, &x));
        prop_assert_eq!(abs(&x).is_zero(), x.is_zero());
        let ell = c.ell_u64();
        let p = Element::embed_padic(x.whole().clone(), &c);
        prop_assert_eq!(abs(&p), padic_norm(x.whole(), ell));
    }

    #[test]
    fn digits_roundtrip((ell, x) in element_over(200), lo in -5i64..0, hi in 1i64..5) {
        let d = expand(&x, lo, hi).unwrap();
        prop_assert!(d.lo() <= lo && d.hi() >= hi);
        prop_assert!(d.real_tail().iter().any(|&a| a != ell - 1));
        let c = Prime::new(ell).unwrap();
        prop_assert_eq!(from_digits(&d, &c).unwrap(), x.clone());
        let text = d.to_string();
        let parsed = parse_digits(&text, ell).unwrap();
        prop_assert_eq!(from_digits(&parsed, &c).unwrap(), x);
    }

    #[test]
    fn expansions_separate_elements((_, [x, y, _]) in triple()) {
        let dx = expand(&x, -4, 4).unwrap();
        let dy = expand(&y, -4, 4).unwrap();
        prop_assert_eq!(x == y, (-60..60).all(|k| dx.digit(k) == dy.digit(k)));
    }

    #[test]
    fn text_forms_roundtrip((ell, x) in element_over(1000), n in 0i64..4, a in 0i64..10, w in 1i64..10) {
        let c = Prime::new(ell).unwrap();
        prop_assert_eq!(parse_element(&x.to_string(), &c).unwrap(), x.clone());
        let cyl = Cylinder::new(x, n, q(a, 20), q(a + w, 20)).unwrap();
        prop_assert_eq!(parse_cylinder(&cyl.to_string(), &c).unwrap(), cyl);
    }

    #[test]
    fn characters_land_in_unit_interval((c, [x, _, _]) in triple(), k in -30i64..30, e in -2i64..3) {
        prop_assume!(k != 0);
        let rho = Homothety::new(q(k, 1) * c.rat_pow(e), &c).unwrap();
        let v = character_eval(&rho, &x);
        prop_assert!(!v.is_negative() && v < BigRational::one());
    }

    #[test]
    fn coordinates_are_coherent((c, [x, _, _]) in triple(), depth in 0usize..12) {
        let s = coords(&x, depth);
        prop_assert_eq!(s.depth(), depth);
        prop_assert!(s.is_coherent(&c));
        prop_assert_eq!(s.points()[0].value(), x.frac());
    }

    #[test]
    fn refinement_preserves_measure((ell, x) in element_over(100), n in 0i64..3, a in 0i64..5, w in 1i64..5) {
        let cyl = Cylinder::new(x, n, q(a, 10), q(a + w, 10)).unwrap();
        let parts = cyl.refine();
        prop_assert_eq!(parts.len() as u64, ell * ell);
        let total = parts.iter().fold(BigRational::zero(), |s, p| s + p.haar_measure());
        prop_assert_eq!(total, cyl.haar_measure());
    }

    #[test]
    fn machine_integers_agree_with_big_integers(ell in prime(), (a, b) in ratio(300), (c, d) in ratio(300), (e, f) in ratio(300)) {
        let small = Prime64::new(ell).unwrap();
        let big = Prime::new(ell).unwrap();
        let xs = Element64::from_pair(num_rational::Ratio::new(a, b), num_rational::Ratio::new(c, d), &small);
        let ys = Element64::tau(num_rational::Ratio::new(e, f), &small);
        let xb = Element::from_pair(q(a, b), q(c, d), &big);
        let yb = Element::tau(q(e, f), &big);
        prop_assert_eq!((&xs + &ys).to_string(), (&xb + &yb).to_string());
        prop_assert_eq!(abs(&(&xs - &ys)).to_string(), abs(&(&xb - &yb)).to_string());
        prop_assert_eq!(xs.standard_form_at(2).to_string(), xb.standard_form_at(2).to_string());
    }
}
