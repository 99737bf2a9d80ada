use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use yangian_core::coefficients::{Cyclotomic, DenomSet, LinearFactor, Rational};
use yangian_core::formal::{quad_mul, substitute, Family, FourierSubstitution, Param, QuadExpr};
use yangian_core::principal::{inv_n, PrincipalBasis, TwistedBasis};
use yangian_core::relations::engine::{
    gsym, lift_matrix, poly_identity, quadruples, series_matrix, u2_minus_v2, u_minus_v, unit_component, Basis,
    Extractor,
};
use yangian_core::relations::evaluation::{check_evaluation, EvalSign, Presentation};
use yangian_core::relations::gl::{compact_rhs, rtt_delta};
use yangian_core::relations::twisted::{classical_rhs, pq_block_rhs, reflection_parts, PQ_PIECES};
use yangian_core::relations::{find_check, registry, run_check, Case, CheckContext, Mutation, Status};
use yangian_core::tensor::{
    embed_first, embed_second, form_transpose, partial_transpose_1, permutation, unit_matrix, FormCase, SignVector,
    TensorMat,
};

type Mat = TensorMat<Cyclotomic>;

fn twisted_cases() -> Vec<SignVector> {
    vec![
        SignVector::symmetric(2),
        SignVector::symmetric(3),
        SignVector::alternating(2).unwrap(),
    ]
}

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

#[test]
fn fourier_naturality_of_the_reflection_difference() {
    for s in twisted_cases() {
        let n = s.n();
        let classical = reflection_parts(&s, Family::S, Basis::Units).unwrap().delta;
        let principal = reflection_parts(&s, Family::Y, Basis::Principal).unwrap().delta;
        let moved = classical.try_map(|e| substitute(e, FourierSubstitution::s_to_y())).unwrap();
        assert_eq!(moved, principal, "entrywise at N={n}");
        let ex = Extractor::new(n);
        for q in quadruples(n) {
            assert_eq!(ex.component2(&moved, q).unwrap(), ex.component2(&principal, q).unwrap(), "{q:?}");
        }
    }
}

#[test]
fn fourier_naturality_of_the_rtt_difference() {
    for n in [2, 3] {
        let d = n as usize;
        let t1 = embed_first(&series_matrix(n, Family::T, Param::U, Basis::Units)).unwrap();
        let t2 = embed_second(&series_matrix(n, Family::T, Param::V, Basis::Units)).unwrap();
        let p = lift_matrix(&permutation::<Cyclotomic>(n));
        let r = poly_identity(n, d * d, &u_minus_v(n)).try_sub(&p).unwrap();
        let classical = r
            .matmul(&t1)
            .unwrap()
            .matmul(&t2)
            .unwrap()
            .try_sub(&t2.matmul(&t1).unwrap().matmul(&r).unwrap())
            .unwrap();
        let moved = classical.try_map(|e| substitute(e, FourierSubstitution::t_to_x())).unwrap();
        assert_eq!(moved, rtt_delta(n).unwrap());
    }
}

#[test]
fn principal_difference_reduces_to_the_componentwise_relation() {
    let ctx = CheckContext::default();
    for s in [SignVector::symmetric(2), SignVector::alternating(2).unwrap()] {
        let n = s.n();
        let principal = reflection_parts(&s, Family::Y, Basis::Principal).unwrap().delta;
        for q in quadruples(n) {
            let [i, j, k, l] = q.map(i64::from);
            let via_y = substitute(&unit_component(&principal, n, q), FourierSubstitution::y_to_s()).unwrap();
            let sij = QuadExpr::symbol(n, gsym(n, Family::S, i, j, Param::U));
            let skl = QuadExpr::symbol(n, gsym(n, Family::S, k, l, Param::V));
            let uv = u2_minus_v2(n);
            let comm = quad_mul(&sij, &skl)
                .unwrap()
                .minus(&quad_mul(&skl, &sij).unwrap())
                .scale_poly(&uv);
            assert_eq!(via_y, comm.minus(&classical_rhs(&ctx, &s, q)), "{:?} {q:?}", s.case());
        }
    }
}

#[test]
fn every_mutation_is_caught_with_a_witness() {
    for m in Mutation::ALL {
        let spec = find_check(m.target()).unwrap();
        let (case, n) = m.probe();
        let clean = run_check(spec, &CheckContext::default(), case, n, false).unwrap();
        assert_eq!(clean.status, Status::Pass, "{m} clean run");
        let bad = run_check(spec, &CheckContext::with_mutation(m), case, n, false).unwrap();
        assert_eq!(bad.status, Status::Fail, "{m} went unnoticed");
        let w = bad.witness.expect("failures carry a witness");
        assert!(!w.component.is_empty() || w.detail.is_some(), "{m} witness is not localized");
    }
}

#[test]
fn mutations_are_named_uniquely_and_target_registered_checks() {
    let mut names: Vec<&str> = Mutation::ALL.iter().map(|m| m.name()).collect();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), Mutation::ALL.len());
    for m in Mutation::ALL {
        assert_eq!(Mutation::parse(m.name()), Some(m));
        assert!(registry().iter().any(|c| c.name == m.target()));
    }
}

#[test]
fn compact_rtt_form_needs_l_in_both_second_factors() {
    for n in [2, 3] {
        let delta = rtt_delta(n).unwrap();
        let ex = Extractor::new(n);
        let lhs = |q: [u32; 4]| {
            let [i, j, k, l] = q.map(i64::from);
            let a = QuadExpr::symbol(n, gsym(n, Family::X, i, j, Param::U));
            let b = QuadExpr::symbol(n, gsym(n, Family::X, k, l, Param::V));
            quad_mul(&a, &b)
                .unwrap()
                .minus(&quad_mul(&b, &a).unwrap())
                .scale_poly(&u_minus_v(n))
        };
        let holds = |mask: u8| {
            quadruples(n)
                .into_iter()
                .all(|q| ex.component2(&delta, q).unwrap() == lhs(q).minus(&compact_rhs(n, q, mask)))
        };
        assert!(!holds(0), "printed compact form at N={n}");
        // bits 1 and 3: the j of x_{i−a,j−b}(v) and of x_{i−a,j−b}(u)
        assert!(holds(0b1010), "repaired compact form at N={n}");
    }
    let r = run_check(find_check("rtt_compact_as_printed").unwrap(), &CheckContext::default(), Case::Gl, 3, false)
        .unwrap();
    assert_eq!(r.status, Status::Fail);
    assert!(r.note.unwrap().contains("x_{i−a,j−b}(v), x_{i−a,j−b}(u)"));
}

#[test]
fn product_block_needs_one_sign_repair_beyond_n2() {
    let repair = PQ_PIECES.iter().position(|p| *p == "b(k+a')").unwrap();
    for n in [2, 3] {
        let s = SignVector::symmetric(n);
        let block = reflection_parts(&s, Family::Y, Basis::Principal).unwrap().pq_block;
        let ex = Extractor::new(n);
        let holds = |flip| quadruples(n).into_iter().all(|q| ex.component2(&block, q).unwrap() == pq_block_rhs(n, q, flip));
        assert_eq!(holds(None), n == 2, "printed block at N={n}");
        assert!(holds(Some(repair)), "repaired block at N={n}");
    }
}

#[test]
fn corrected_principal_evaluation_passes_where_the_printed_constant_fails() {
    let ctx = CheckContext::default();
    for s in [SignVector::symmetric(3), SignVector::alternating(2).unwrap()] {
        let sign = EvalSign::for_form(s.case());
        assert!(check_evaluation(&ctx, &s, sign, Presentation::Principal).unwrap().is_pass());
        assert!(!check_evaluation(&ctx, &s, sign, Presentation::PrincipalPrinted).unwrap().is_pass());
    }
}

// Numeric oracle for the clearing logic: the uncleared relations, with honest
// divisions, evaluated in the defining representation of gl_N at random
// rational points.

fn c(n: u32, r: &Rational) -> Cyclotomic {
    Cyclotomic::from_rational(n, r.clone())
}

fn random_point(rng: &mut StdRng, n: u32, avoid: &DenomSet) -> (Rational, Rational) {
    loop {
        let u = rat(rng.gen_range(-30..=30), rng.gen_range(1..=7));
        let v = rat(rng.gen_range(-30..=30), rng.gen_range(1..=7));
        if !avoid.vanishes_at(&c(n, &u), &c(n, &v)) {
            let prod = avoid.product(n).eval_at(&c(n, &u), &c(n, &v)).unwrap();
            assert!(!prod.is_zero());
            return (u, v);
        }
    }
}

/// Pairs (X, M(x)) with S(x) = Σ X ⊗ M(x): X runs over the auxiliary basis and
/// M(x) is the image of the matching generator at the point x.
fn image_pairs(s: &SignVector, shift: &Rational, presentation: Presentation, x: &Rational) -> Vec<(Mat, Mat)> {
    let n = s.n();
    let d = n as usize;
    let tb = TwistedBasis::new(s).unwrap();
    let pb = PrincipalBasis::new(n);
    let inv = c(n, &(x + shift)).inv().unwrap();
    let id = Mat::identity(d, n);
    let mut out = Vec::new();
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            let (aux, unit, f) = match presentation {
                Presentation::Classical => (unit_matrix(n, i as usize, j as usize).unwrap(), i == j, tb.f(i, j).clone()),
                _ => (pb.get(i, j).clone(), i == 0 && j == 0, tb.b(-i, j).scale(&inv_n(n))),
            };
            let mut m = f.scale(&inv);
            if unit {
                let k = match presentation {
                    Presentation::PrincipalPrinted => inv_n(n),
                    _ => Cyclotomic::one(n),
                };
                m = m.try_add(&id.scale(&k)).unwrap();
            }
            out.push((aux, m));
        }
    }
    out
}

fn three_fold(pairs: &[(Mat, Mat)], slot: usize, n: u32) -> Mat {
    let id = Mat::identity(n as usize, n);
    let mut acc = Mat::zeros((n as usize).pow(3), n);
    for (aux, m) in pairs {
        let term = match slot {
            1 => aux.kron(&id).unwrap().kron(m).unwrap(),
            _ => id.kron(aux).unwrap().kron(m).unwrap(),
        };
        acc = acc.try_add(&term).unwrap();
    }
    acc
}

fn two_fold(pairs: &[(Mat, Mat)], s: Option<&SignVector>) -> Mat {
    let n = pairs[0].1.order();
    let mut acc = Mat::zeros((n as usize).pow(2), n);
    for (aux, m) in pairs {
        let a = match s {
            Some(s) => form_transpose(aux, s).unwrap(),
            None => aux.clone(),
        };
        acc = acc.try_add(&a.kron(m).unwrap()).unwrap();
    }
    acc
}

/// R(u−v)S₁(u)R^t(−u−v)S₂(v) = S₂(v)R^t(−u−v)S₁(u)R(u−v) and
/// S^t(−u) = S(u) ± (S(u) − S(−u))/2u at one point.
fn relations_hold_at(s: &SignVector, shift: &Rational, presentation: Presentation, u: &Rational, v: &Rational) -> bool {
    let n = s.n();
    let d = n as usize;
    let id_v = Mat::identity(d, n);
    let p = permutation::<Cyclotomic>(n);
    let q = partial_transpose_1(&p, s).unwrap();
    let id3 = Mat::identity(d * d * d, n);
    let r = id3.try_sub(&p.kron(&id_v).unwrap().scale(&c(n, &(u - v)).inv().unwrap())).unwrap();
    let rt = id3.try_add(&q.kron(&id_v).unwrap().scale(&c(n, &(u + v)).inv().unwrap())).unwrap();
    let su = image_pairs(s, shift, presentation, u);
    let sv = image_pairs(s, shift, presentation, v);
    let s1 = three_fold(&su, 1, n);
    let s2 = three_fold(&sv, 2, n);
    let lhs = r.matmul(&s1).unwrap().matmul(&rt).unwrap().matmul(&s2).unwrap();
    let rhs = s2.matmul(&rt).unwrap().matmul(&s1).unwrap().matmul(&r).unwrap();
    if lhs != rhs {
        return false;
    }
    let neg = image_pairs(s, shift, presentation, &-u);
    let sigma = match s.case() {
        FormCase::Symmetric => 1,
        FormCase::Alternating => -1,
    };
    let plain = two_fold(&su, None);
    let minus = two_fold(&neg, None);
    let tail = plain.try_sub(&minus).unwrap().scale(&c(n, &(rat(sigma, 2) / u)));
    two_fold(&neg, Some(s)) == plain.try_add(&tail).unwrap()
}

#[test]
fn cleared_evaluation_verdicts_agree_with_uncleared_values() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let avoid = DenomSet::new(LinearFactor::ALL.to_vec());
    let clean = CheckContext::default();
    let shifted = CheckContext::with_mutation(Mutation::EvalShift);
    for s in twisted_cases() {
        let n = s.n();
        let sign = EvalSign::for_form(s.case());
        let right = match sign {
            EvalSign::Upper => rat(1, 2),
            EvalSign::Lower => rat(-1, 2),
        };
        let points: Vec<_> = (0..20).map(|_| random_point(&mut rng, n, &avoid)).collect();
        for presentation in [Presentation::Classical, Presentation::Principal, Presentation::PrincipalPrinted] {
            for (ctx, shift) in [(&clean, right.clone()), (&shifted, -right.clone())] {
                let exact = check_evaluation(ctx, &s, sign, presentation).unwrap().is_pass();
                let numeric = points.iter().all(|(u, v)| relations_hold_at(&s, &shift, presentation, u, v));
                assert_eq!(exact, numeric, "{:?} N={n} {presentation:?} shift {shift}", s.case());
            }
        }
    }
}

/// R₁₂(u)R₁₃(u+v)R₂₃(v) = R₂₃(v)R₁₃(u+v)R₁₂(u) with R(x) = 1 − P/x.
fn yang_baxter_at(n: u32, u: &Rational, v: &Rational, flipped: bool) -> bool {
    let d = n as usize;
    let id = Mat::identity(d, n);
    let p = permutation::<Cyclotomic>(n);
    let p12 = p.kron(&id).unwrap();
    let p23 = id.kron(&p).unwrap();
    let p13 = p23.matmul(&p12).unwrap().matmul(&p23).unwrap();
    let id3 = Mat::identity(d * d * d, n);
    let r = |pm: &Mat, x: Rational, sign: i64| {
        id3.try_sub(&pm.scale(&c(n, &(rat(sign, 1) / x)))).unwrap()
    };
    let first = if flipped { -1 } else { 1 };
    let lhs = r(&p12, u.clone(), first).matmul(&r(&p13, u + v, 1)).unwrap().matmul(&r(&p23, v.clone(), 1)).unwrap();
    let rhs = r(&p23, v.clone(), 1).matmul(&r(&p13, u + v, 1)).unwrap().matmul(&r(&p12, u.clone(), 1)).unwrap();
    lhs == rhs
}

#[test]
fn cleared_yang_baxter_verdicts_agree_with_uncleared_values() {
    let mut rng = StdRng::seed_from_u64(7);
    let avoid = DenomSet::new(vec![LinearFactor::TwoU, LinearFactor::TwoV, LinearFactor::UPlusV]);
    let spec = find_check("yang_baxter").unwrap();
    for n in [2, 3] {
        let points: Vec<_> = (0..20).map(|_| random_point(&mut rng, n, &avoid)).collect();
        for (ctx, flipped) in [(CheckContext::default(), false), (CheckContext::with_mutation(Mutation::YbeSign), true)] {
            let exact = run_check(spec, &ctx, Case::Gl, n, false).unwrap().status == Status::Pass;
            let numeric = points.iter().all(|(u, v)| yang_baxter_at(n, u, v, flipped));
            assert_eq!(exact, numeric, "N={n} flipped={flipped}");
        }
    }
}

#[test]
fn sp_rejects_odd_sizes() {
    for check in ["symmetric_relation", "evaluation"] {
        let spec = find_check(check).unwrap();
        assert!(run_check(spec, &CheckContext::default(), Case::Sp, 3, false).is_err());
    }
    assert!(run_check(find_check("yang_baxter").unwrap(), &CheckContext::default(), Case::So, 2, false).is_err());
}
