use proptest::prelude::*;
use yangian_core::coefficients::{euler_phi, omega_pow, BiPoly, Cyclotomic, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

/// An element given by an arbitrary-length polynomial in ω, reduced on entry.
fn cyclotomic(n: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(rational(), 0..(n as usize + 3)).prop_map(move |c| Cyclotomic::from_poly(n, c))
}

fn bipoly(n: u32) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..3, 0u32..3, cyclotomic(n)), 0..4).prop_map(move |terms| {
        terms.into_iter().fold(BiPoly::zero(n), |acc, (du, dv, c)| &acc + &BiPoly::monomial(du, dv, c))
    })
}

fn order_and_pair() -> impl Strategy<Value = (u32, Cyclotomic, Cyclotomic, Cyclotomic)> {
    (1u32..=8).prop_flat_map(|n| (Just(n), cyclotomic(n), cyclotomic(n), cyclotomic(n)))
}

fn order_and_polys() -> impl Strategy<Value = (BiPoly, BiPoly, BiPoly)> {
    (2u32..=6).prop_flat_map(|n| (bipoly(n), bipoly(n), bipoly(n)))
}

proptest! {
    #[test]
    fn omega_exponents_add(n in 1u32..=12, a in -30i64..30, b in -30i64..30) {
        prop_assert_eq!(&omega_pow(n, a) * &omega_pow(n, b), omega_pow(n, a + b));
        prop_assert!(omega_pow(n, n as i64).is_one());
    }

    #[test]
    fn character_sums_vanish_off_zero(n in 1u32..=12, m in -20i64..20) {
        let sum = (0..n as i64).fold(Cyclotomic::zero(n), |acc, k| &acc + &omega_pow(n, m * k));
        let expected = if m.rem_euclid(n as i64) == 0 { n as i64 } else { 0 };
        prop_assert_eq!(sum, Cyclotomic::from_int(n, expected));
    }

    #[test]
    fn canonical_form_is_stable((n, x, _, _) in order_and_pair()) {
        prop_assert_eq!(x.reduce(), x.clone());
        prop_assert_eq!(x.coeffs().len(), euler_phi(n) as usize);
    }

    #[test]
    fn field_laws((_n, a, b, c) in order_and_pair()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn polynomial_ring_laws((a, b, c) in order_and_polys()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn no_zero_coefficients_are_stored((a, b, _) in order_and_polys()) {
        let d = &a - &b;
        prop_assert!(d.terms().values().all(|c| !c.is_zero()));
        prop_assert!((&a - &a).is_zero());
    }
}

#[test]
fn rationals_are_normalised() {
    let r = Rational::new(6.into(), (-4).into());
    assert_eq!(*r.numer(), (-3).into());
    assert_eq!(*r.denom(), 2.into());
    assert_eq!(Rational::new(0.into(), 7.into()), Rational::new(0.into(), 1.into()));
}

#[test]
fn mixing_orders_is_an_error() {
    assert!(Cyclotomic::one(3).try_add(&Cyclotomic::one(4)).is_err());
    assert!(BiPoly::one(3).try_mul(&BiPoly::one(5)).is_err());
}
