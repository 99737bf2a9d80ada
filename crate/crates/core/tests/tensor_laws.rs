use proptest::prelude::*;
use yangian_core::coefficients::Cyclotomic;
use yangian_core::principal::{PrincipalBasis, TwistedBasis, ZnSequence};
use yangian_core::principal::{commutator_closure, span_rank};
use yangian_core::tensor::{form_transpose, partial_transpose_1, permutation, SignVector, TensorMat};

fn matrix(n: u32) -> impl Strategy<Value = TensorMat<Cyclotomic>> {
    let d = n as usize;
    prop::collection::vec(-3i64..=3, d * d).prop_map(move |v| TensorMat::from_fn(d, n, |r, c| Cyclotomic::from_int(n, v[r * d + c])))
}

fn square(n: u32) -> impl Strategy<Value = TensorMat<Cyclotomic>> {
    let d = (n * n) as usize;
    prop::collection::vec(-2i64..=2, d * d).prop_map(move |v| TensorMat::from_fn(d, n, |r, c| Cyclotomic::from_int(n, v[r * d + c])))
}

fn sign_vectors() -> impl Strategy<Value = SignVector> {
    prop_oneof![
        (2u32..=4).prop_map(SignVector::symmetric),
        prop::sample::select(vec![2u32, 4]).prop_map(|n| SignVector::alternating(n).unwrap()),
    ]
}

fn triple() -> impl Strategy<Value = (TensorMat<Cyclotomic>, TensorMat<Cyclotomic>, TensorMat<Cyclotomic>)> {
    (2u32..=3).prop_flat_map(|n| (matrix(n), matrix(n), matrix(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kron_is_associative_and_bilinear((a, b, c) in triple()) {
        let left = a.kron(&b).unwrap().kron(&c).unwrap();
        let right = a.kron(&b.kron(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let sum = a.try_add(&b).unwrap().kron(&c).unwrap();
        prop_assert_eq!(sum, a.kron(&c).unwrap().try_add(&b.kron(&c).unwrap()).unwrap());
    }

    #[test]
    fn flip_swaps_factors((a, b, _) in triple()) {
        let n = a.order();
        let p = permutation::<Cyclotomic>(n);
        let swapped = p.matmul(&a.kron(&b).unwrap()).unwrap().matmul(&p).unwrap();
        prop_assert_eq!(swapped, b.kron(&a).unwrap());
    }

    #[test]
    fn form_transpose_is_an_involutive_antiautomorphism(s in sign_vectors(), seed in any::<u64>()) {
        let n = s.n();
        let d = n as usize;
        let pick = |k: u64| TensorMat::from_fn(d, n, |r, c| {
            Cyclotomic::from_int(n, ((k.wrapping_mul(31 + r as u64 * 7 + c as u64 * 13) >> 7) % 5) as i64 - 2)
        });
        let (a, b) = (pick(seed), pick(seed ^ 0x9e37_79b9));
        let ab = a.matmul(&b).unwrap();
        let t = |m: &TensorMat<Cyclotomic>| form_transpose(m, &s).unwrap();
        prop_assert_eq!(t(&ab), t(&b).matmul(&t(&a)).unwrap());
        prop_assert_eq!(t(&t(&a)), a);
    }

    #[test]
    fn partial_transpose_is_linear_and_involutive(m in square(2), k in square(2)) {
        for s in [SignVector::symmetric(2), SignVector::alternating(2).unwrap()] {
            let pt = |x: &TensorMat<Cyclotomic>| partial_transpose_1(x, &s).unwrap();
            prop_assert_eq!(pt(&pt(&m)), m.clone());
            prop_assert_eq!(pt(&m.try_add(&k).unwrap()), pt(&m).try_add(&pt(&k)).unwrap());
        }
    }

    #[test]
    fn flip_acts_on_product_vectors(n in 2u32..=4, x in prop::collection::vec(-3i64..=3, 4), y in prop::collection::vec(-3i64..=3, 4)) {
        // Vectors are stored as the first column of an otherwise zero matrix.
        let d = n as usize;
        let col = |v: &[i64]| TensorMat::from_fn(d, n, |r, c| Cyclotomic::from_int(n, if c == 0 { v[r] } else { 0 }));
        let (xv, yv) = (col(&x), col(&y));
        let p = permutation::<Cyclotomic>(n);
        let image = p.matmul(&xv.kron(&yv).unwrap()).unwrap();
        prop_assert_eq!(image, yv.kron(&xv).unwrap());
    }

    #[test]
    fn dft_round_trips(n in 1u32..=7, v in prop::collection::vec(-5i64..=5, 7)) {
        let seq = ZnSequence::from_fn(n, |k| Cyclotomic::from_int(n, v[k as usize]));
        prop_assert_eq!(seq.dft_all().idft_all(), seq.clone());
        prop_assert_eq!(seq.idft_all().dft_all(), seq);
    }
}

#[test]
fn principal_basis_is_a_basis_with_the_structure_law() {
    for n in 2..=6u32 {
        let basis = PrincipalBasis::new(n);
        assert_eq!(basis.rank(), (n * n) as usize);
        assert_eq!(*basis.get(0, 0), TensorMat::identity(n as usize, n));
        for i in 0..n as i64 {
            for j in 0..n as i64 {
                for k in 0..n as i64 {
                    for l in 0..n as i64 {
                        let lhs = basis.get(i, j).matmul(basis.get(k, l)).unwrap();
                        let rhs = basis.get(i + k, j + l).scale(&yangian_core::coefficients::omega_pow(n, j * k));
                        assert_eq!(lhs, rhs, "N={n} ({i},{j},{k},{l})");
                    }
                }
            }
        }
    }
}

#[test]
fn twisted_spans_are_closed_and_match_the_fourier_image() {
    let cases: Vec<SignVector> = (2..=4)
        .map(SignVector::symmetric)
        .chain([2, 4].map(|n| SignVector::alternating(n).unwrap()))
        .collect();
    for s in cases {
        let n = s.n();
        let tb = TwistedBasis::new(&s).unwrap();
        assert_eq!(span_rank(tb.b_family()), tb.expected_dimension());
        assert_eq!(span_rank(tb.f_family()), tb.expected_dimension());
        assert_eq!(commutator_closure(tb.b_family(), n).unwrap(), None);
        for i in 0..n as i64 {
            for j in 0..n as i64 {
                assert_eq!(*tb.b(i, j), tb.b_via_fourier(i, j));
                let f = tb.f(i, j);
                assert!(f.try_add(&form_transpose(f, &s).unwrap()).unwrap().is_zero());
            }
        }
    }
}
