use proptest::prelude::*;
use yangian_core::coefficients::{BiPoly, Cyclotomic, Var};
use yangian_core::formal::{negate_param, quad_mul, substitute, Family, FourierSubstitution, GenSymbol, Param, QuadExpr, Word};

fn coefficient(n: u32) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..2, 0u32..2, -3i64..=3, 0i64..6), 1..3).prop_map(move |ts| {
        ts.into_iter().fold(BiPoly::zero(n), |acc, (du, dv, c, k)| {
            &acc + &BiPoly::monomial(du, dv, &Cyclotomic::from_int(n, c) * &Cyclotomic::omega_pow(n, k))
        })
    })
}

fn param() -> impl Strategy<Value = Param> {
    prop::sample::select(vec![Param::U, Param::V, Param::NegU, Param::NegV])
}

fn symbol(n: u32, family: Family) -> impl Strategy<Value = GenSymbol> {
    (0..n as i64, 0..n as i64, param()).prop_map(move |(i, j, p)| GenSymbol::new(n, family, i, j, p))
}

/// Degree ≤ 1 in one family.
fn linear(n: u32, family: Family) -> impl Strategy<Value = QuadExpr> {
    (coefficient(n), prop::collection::vec((symbol(n, family), coefficient(n)), 0..3)).prop_map(move |(c0, ts)| {
        let mut e = QuadExpr::scalar(c0);
        for (s, c) in ts {
            e.add_term(Word::One(s), c);
        }
        e
    })
}

fn scalar(n: u32) -> impl Strategy<Value = QuadExpr> {
    coefficient(n).prop_map(QuadExpr::scalar)
}

/// A degree ≤ 2 element: a linear part plus a product of two linear ones.
fn quadratic(n: u32, family: Family) -> impl Strategy<Value = QuadExpr> {
    (linear(n, family), linear(n, family), linear(n, family)).prop_map(|(a, b, c)| quad_mul(&a, &b).unwrap().plus(&c))
}

fn with_order<T: std::fmt::Debug>(f: impl Fn(u32) -> BoxedStrategy<T>) -> impl Strategy<Value = T> {
    (2u32..=5).prop_flat_map(f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative_and_unital(
        (a, b, c) in with_order(|n| (linear(n, Family::S), linear(n, Family::S), scalar(n)).boxed())
    ) {
        let n = a.order();
        let m = |x: &QuadExpr, y: &QuadExpr| quad_mul(x, y).unwrap();
        prop_assert_eq!(m(&m(&a, &b), &c), m(&a, &m(&b, &c)));
        prop_assert_eq!(m(&m(&a, &c), &b), m(&a, &m(&c, &b)));
        prop_assert_eq!(m(&m(&c, &a), &b), m(&c, &m(&a, &b)));
        let one = QuadExpr::one(n);
        prop_assert_eq!(m(&one, &a), a.clone());
        prop_assert_eq!(m(&a, &one), a);
    }

    #[test]
    fn product_distributes(
        (a, b, c) in with_order(|n| (linear(n, Family::Y), linear(n, Family::Y), linear(n, Family::Y)).boxed())
    ) {
        let m = |x: &QuadExpr, y: &QuadExpr| quad_mul(x, y).unwrap();
        prop_assert_eq!(m(&a, &b.plus(&c)), m(&a, &b).plus(&m(&a, &c)));
        prop_assert_eq!(m(&a.plus(&b), &c), m(&a, &c).plus(&m(&b, &c)));
    }

    #[test]
    fn fourier_substitutions_are_mutually_inverse(
        (e, f) in with_order(|n| (quadratic(n, Family::S), quadratic(n, Family::Y)).boxed())
    ) {
        let to_y = FourierSubstitution::s_to_y();
        prop_assert_eq!(substitute(&substitute(&e, to_y).unwrap(), to_y.inverse()).unwrap(), e);
        let to_s = FourierSubstitution::y_to_s();
        prop_assert_eq!(substitute(&substitute(&f, to_s).unwrap(), to_s.inverse()).unwrap(), f);
    }

    #[test]
    fn substitution_is_linear_and_multiplicative(
        (a, b) in with_order(|n| (linear(n, Family::T), linear(n, Family::T)).boxed())
    ) {
        let f = FourierSubstitution::t_to_x();
        let sub = |x: &QuadExpr| substitute(x, f).unwrap();
        prop_assert_eq!(sub(&a.plus(&b)), sub(&a).plus(&sub(&b)));
        prop_assert_eq!(sub(&quad_mul(&a, &b).unwrap()), quad_mul(&sub(&a), &sub(&b)).unwrap());
    }

    #[test]
    fn negating_a_parameter_twice_is_the_identity(e in with_order(|n| quadratic(n, Family::S).boxed())) {
        for v in [Var::U, Var::V] {
            prop_assert_eq!(negate_param(&negate_param(&e, v), v), e.clone());
        }
    }

    #[test]
    fn addition_is_commutative_and_cancels(
        (a, b) in with_order(|n| (quadratic(n, Family::X), quadratic(n, Family::X)).boxed())
    ) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert!(a.minus(&a).is_zero());
        prop_assert!(a.terms().values().all(|c| !c.is_zero()));
    }
}

#[test]
fn products_of_degree_three_are_rejected() {
    let n = 3;
    let s = |i, j| QuadExpr::symbol(n, GenSymbol::new(n, Family::S, i, j, Param::U));
    let two = quad_mul(&s(0, 1), &s(1, 2)).unwrap();
    assert!(quad_mul(&two, &s(2, 0)).is_err());
}

#[test]
fn words_keep_their_order() {
    let n = 2;
    let a = QuadExpr::symbol(n, GenSymbol::new(n, Family::S, 0, 1, Param::U));
    let b = QuadExpr::symbol(n, GenSymbol::new(n, Family::S, 1, 0, Param::V));
    assert_ne!(quad_mul(&a, &b).unwrap(), quad_mul(&b, &a).unwrap());
}
