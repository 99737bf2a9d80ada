//! Checks at the level of gl_N itself: the principal basis, its dual, the
//! twisted transpose and the so_N / sp_N subalgebras.

use crate::coefficients::{omega_pow, Cyclotomic};
use crate::error::Result;
use crate::principal::{
    a_transpose as a_transpose_combination, a_transpose_symmetric, commutator_closure, cyclic_element, epsilon, inv_n,
    span_rank, structure_product, LinearSpace, PrincipalBasis, TwistedBasis, ZnSequence,
};
use crate::tensor::{form_transpose, partial_transpose_1, permutation, trace_pair, FormCase, IndexPair, TensorMat};

use super::engine::{pairs, quadruples};
use super::{Case, CheckContext, Mutation, Outcome, Witness};

fn fail(component: &[u32], detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome::fail(Witness::detail(component.to_vec(), detail)))
}

pub fn principal_laws(ctx: &CheckContext, _case: Case, n: u32) -> Result<Outcome> {
    let basis = PrincipalBasis::new(n);
    let nn = n as usize;
    if basis.rank() != nn * nn {
        return fail(&[], format!("A-basis has rank {} instead of {}", basis.rank(), nn * nn));
    }
    let cyc = cyclic_element(n);
    if &cyc != basis.get(0, 1) {
        return fail(&[0, 1], "cyclic element differs from A_01");
    }
    let n_scalar = Cyclotomic::from_int(n, n as i64);
    for q in quadruples(n) {
        let [i, j, k, l] = q.map(i64::from);
        let product = basis.get(i, j).matmul(basis.get(k, l))?;
        let (mut phase, label) = structure_product(n, i, j, k, l);
        if ctx.mutated(Mutation::StructurePhase) {
            phase = phase.mul_omega(1);
        }
        if product != basis.at(label).scale(&phase) {
            return fail(&q, "structure constant A_ij A_kl");
        }
        let pairing = trace_pair(basis.get(i, j), basis.get(k, l))?;
        let mut claimed = if (i + k) % n as i64 == 0 && (j + l) % n as i64 == 0 {
            &n_scalar * &omega_pow(n, -i * j)
        } else {
            Cyclotomic::zero(n)
        };
        if ctx.mutated(Mutation::PairingSign) {
            claimed = -claimed;
        }
        if pairing != claimed {
            return fail(&q, format!("trace pairing is {pairing}, claimed {claimed}"));
        }
        let dual = trace_pair(basis.get(i, j), &basis.dual(k, l))?;
        let delta = if (i, j) == (k, l) { Cyclotomic::one(n) } else { Cyclotomic::zero(n) };
        if dual != delta {
            return fail(&q, format!("dual pairing is {dual}"));
        }
    }
    for [i, j] in pairs(n) {
        let (i, j) = (i as i64, j as i64);
        let eps = epsilon(n, j);
        if &eps.dft(i) != basis.get(i, j) {
            return fail(&[i as u32, j as u32], "Fourier transform of ε_j differs from A_ij");
        }
        if eps.dft_all().idft_all() != eps || eps.idft_all().dft_all() != eps {
            return fail(&[i as u32, j as u32], "Fourier round trip on ε_j");
        }
    }
    let scalars = ZnSequence::from_fn(n, |k| Cyclotomic::from_int(n, (k * k) as i64 + 1).mul_omega(k as i64));
    if scalars.dft_all().idft_all() != scalars {
        return fail(&[], "Fourier round trip on a scalar sequence");
    }
    Ok(Outcome::pass())
}

pub fn a_transpose(ctx: &CheckContext, case: Case, n: u32) -> Result<Outcome> {
    let s = case.require_sign_vector(n)?;
    let basis = PrincipalBasis::new(n);
    for [i, j] in pairs(n) {
        let (ii, jj) = (i as i64, j as i64);
        let exact = form_transpose(basis.get(ii, jj), &s)?;
        let mut combo = a_transpose_combination(ii, jj, &s);
        if ctx.mutated(Mutation::TransposePhase) {
            for c in combo.coords.values_mut() {
                *c = c.mul_omega(ii);
            }
        }
        if combo.expand(&basis) != exact {
            return fail(&[i, j], "θ-weighted transpose formula differs entrywise");
        }
        match basis.coordinates_by_elimination(&exact) {
            Some(c) if c == combo => {}
            _ => return fail(&[i, j], "A-coordinates of the transpose differ"),
        }
        if s.case() == FormCase::Symmetric {
            let (mut phase, label) = a_transpose_symmetric(n, ii, jj);
            if ctx.mutated(Mutation::TransposePhase) {
                phase = phase.mul_omega(ii);
            }
            if basis.at(label).scale(&phase) != exact {
                return fail(&[i, j], "symmetric shortcut ω^{−i(1+j)}A_{−i,j} differs");
            }
        }
    }
    Ok(Outcome::pass())
}

pub fn twisted_span(ctx: &CheckContext, case: Case, n: u32) -> Result<Outcome> {
    let s = case.require_sign_vector(n)?;
    let tb = TwistedBasis::new(&s)?;
    let basis = PrincipalBasis::new(n);
    let b_family: Vec<TensorMat<Cyclotomic>> = if ctx.mutated(Mutation::BSign) {
        IndexPair::all(n)
            .map(|p| basis.at(p).try_add(&form_transpose(basis.at(p), &s)?))
            .collect::<Result<_>>()?
    } else {
        tb.b_family().to_vec()
    };
    let expected = tb.expected_dimension();
    let rank_f = tb.rank_f();
    let rank_b = span_rank(&b_family);
    let joint: Vec<TensorMat<Cyclotomic>> = tb.f_family().iter().chain(&b_family).cloned().collect();
    let rank_joint = span_rank(&joint);
    if rank_f != expected || rank_b != expected || rank_joint != expected {
        return fail(
            &[],
            format!("ranks F={rank_f}, B={rank_b}, F∪B={rank_joint}; expected {expected}"),
        );
    }
    for f in tb.f_family() {
        if f.plus(&form_transpose(f, &s)?) != TensorMat::zeros(n as usize, n) {
            return fail(&[], "F_ij + F_ij^t is not zero");
        }
    }
    for [i, j] in pairs(n) {
        let (ii, jj) = (i as i64, j as i64);
        if b_family[IndexPair::new(n, ii, jj).linear(n)] != tb.b_via_fourier(ii, jj) {
            return fail(&[i, j], "B_ij differs from Σ_k ω^{ki} F_{k,k+j}");
        }
    }
    if let Some((p, q)) = commutator_closure(&b_family, n)? {
        return fail(&[p.i, p.j, q.i, q.j], "commutator leaves span{B}");
    }
    Ok(Outcome::pass().with_note(format!("dim span = {expected}")))
}

fn tensor_sum(
    n: u32,
    basis: &PrincipalBasis,
    terms: impl Iterator<Item = (Cyclotomic, IndexPair, IndexPair)>,
) -> Result<TensorMat<Cyclotomic>> {
    let d = n as usize;
    let mut acc = TensorMat::zeros(d * d, n);
    for (c, p, q) in terms {
        if !c.is_zero() {
            acc = acc.try_add(&basis.at(p).scale(&c).kron(basis.at(q))?)?;
        }
    }
    Ok(acc)
}

/// Σ_{k,l} (ω^{kl}/N) A_kl ⊗ A_{−k,−l}.
pub fn p_from_duals(n: u32) -> Result<TensorMat<Cyclotomic>> {
    let basis = PrincipalBasis::new(n);
    let nn = n as i64;
    let terms = (0..nn).flat_map(|k| (0..nn).map(move |l| (k, l))).map(|(k, l)| {
        (&omega_pow(n, k * l) * &inv_n(n), IndexPair::new(n, k, l), IndexPair::new(n, -k, -l))
    });
    tensor_sum(n, &basis, terms)
}

/// Σ_{k,l} (ω^{−k}/N) A_{−k,l} ⊗ A_{−k,−l}; `drop_phase` replaces ω^{−k} by 1.
pub fn q_symmetric(n: u32, drop_phase: bool) -> Result<TensorMat<Cyclotomic>> {
    let basis = PrincipalBasis::new(n);
    let nn = n as i64;
    let terms = (0..nn).flat_map(|k| (0..nn).map(move |l| (k, l))).map(|(k, l)| {
        let phase = if drop_phase { Cyclotomic::one(n) } else { omega_pow(n, -k) };
        (&phase * &inv_n(n), IndexPair::new(n, -k, l), IndexPair::new(n, -k, -l))
    });
    tensor_sum(n, &basis, terms)
}

/// Σ_{k,l,a,b} (ω^{−a(k+b)−k}/N²) θ_a θ_{a+l} A_bl ⊗ A_{−k,−l}, with the
/// two-subscript θ_{a,a+l} read as the product θ_a θ_{a+l}.
pub fn q_general(n: u32, s: &crate::tensor::SignVector, drop_phase: bool) -> Result<TensorMat<Cyclotomic>> {
    let basis = PrincipalBasis::new(n);
    let nn = n as i64;
    let inv2 = &inv_n(n) * &inv_n(n);
    let mut terms = Vec::new();
    for k in 0..nn {
        for l in 0..nn {
            for b in 0..nn {
                let mut weights = vec![0i64; n as usize];
                for a in 0..nn {
                    let e = if drop_phase { -a * (k + b) } else { -a * (k + b) - k };
                    weights[e.rem_euclid(nn) as usize] += s.theta(a) * s.theta(a + l);
                }
                let c = &Cyclotomic::from_exponent_weights(n, &weights) * &inv2;
                terms.push((c, IndexPair::new(n, b, l), IndexPair::new(n, -k, -l)));
            }
        }
    }
    tensor_sum(n, &basis, terms.into_iter())
}

fn first_entry_difference(a: &TensorMat<Cyclotomic>, b: &TensorMat<Cyclotomic>) -> Option<Witness> {
    let d = a.dim();
    for r in 0..d {
        for c in 0..d {
            if a.get(r, c) != b.get(r, c) {
                return Some(Witness {
                    component: vec![r as u32, c as u32],
                    word: None,
                    left: Some(a.get(r, c).to_string()),
                    right: Some(b.get(r, c).to_string()),
                    detail: None,
                });
            }
        }
    }
    None
}

pub fn dual_decomposition(ctx: &CheckContext, case: Case, n: u32) -> Result<Outcome> {
    let p = permutation::<Cyclotomic>(n);
    if let Some(w) = first_entry_difference(&p_from_duals(n)?, &p) {
        return Ok(Outcome::fail(w.with_detail("P from dual principal bases")));
    }
    let Some(s) = case.sign_vector(n)? else {
        return Ok(Outcome::pass());
    };
    let q = partial_transpose_1(&p, &s)?;
    let drop = ctx.mutated(Mutation::QPhase);
    if s.case() == FormCase::Symmetric {
        if let Some(w) = first_entry_difference(&q_symmetric(n, drop)?, &q) {
            return Ok(Outcome::fail(w.with_detail("Q = Σ (ω^{−k}/N) A_{−k,l} ⊗ A_{−k,−l}")));
        }
    }
    match first_entry_difference(&q_general(n, &s, drop)?, &q) {
        None => Ok(Outcome::pass().with_note("θ-weighted Q expansion matches under θ_{a,a+l} = θ_aθ_{a+l}")),
        Some(w) => Ok(Outcome::fail(w.with_detail("θ-weighted Q expansion with θ_{a,a+l} = θ_aθ_{a+l}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_checks_small() {
        let ctx = CheckContext::default();
        assert!(principal_laws(&ctx, Case::Gl, 3).unwrap().is_pass());
        for case in [Case::So, Case::Sp] {
            assert!(a_transpose(&ctx, case, 2).unwrap().is_pass());
            assert!(twisted_span(&ctx, case, 2).unwrap().is_pass());
            assert!(dual_decomposition(&ctx, case, 2).unwrap().is_pass());
        }
    }
}
