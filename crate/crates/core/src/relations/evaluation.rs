//! Evaluation homomorphisms into U(g_N) and the embedding of g_N.
//!
//! The series s_ij(u) (or y_kl(u)) is sent to a constant plus a Lie algebra
//! element over (u + c), c = ±1/2. Substituting into the reflection and
//! symmetric relations and clearing the denominators (w + c) leaves
//! polynomial identities in U(gl_N); these are decided by PBW normal form, so
//! the check is exact in the enveloping algebra rather than in one
//! representation.

use std::collections::BTreeMap;

use crate::coefficients::{BiPoly, Cyclotomic, Rational, Var};
use crate::error::{AlgebraError, Result};
use crate::formal::{normal_order_enveloping, quad_mul, series_coefficient, Family, GenSymbol, GradedSymbol, Param, QuadExpr, Word};
use crate::principal::{inv_n, TwistedBasis};
use crate::tensor::{FormCase, IndexPair, SignVector, TensorMat};

use super::engine::{compare, first_failure, pairs, quadruples, unit_component, Basis, Extractor};
use super::twisted::{reflection_parts, symmetric_delta};
use super::{Case, CheckContext, Mutation, Outcome, Witness};

/// Which sign of the shift u ± 1/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalSign {
    /// u + 1/2, the orthogonal convention.
    Upper,
    /// u − 1/2, the symplectic convention.
    Lower,
}

impl EvalSign {
    pub fn for_form(case: FormCase) -> EvalSign {
        match case {
            FormCase::Symmetric => EvalSign::Upper,
            FormCase::Alternating => EvalSign::Lower,
        }
    }

    fn shift(self) -> Rational {
        match self {
            EvalSign::Upper => Rational::new(1.into(), 2.into()),
            EvalSign::Lower => Rational::new((-1).into(), 2.into()),
        }
    }

    fn flipped(self) -> EvalSign {
        match self {
            EvalSign::Upper => EvalSign::Lower,
            EvalSign::Lower => EvalSign::Upper,
        }
    }
}

/// Which generators are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// s_ij(u) ↦ δ_ij + F_ij/(u + c).
    Classical,
    /// y_kl(u) ↦ δ_k0 δ_l0 + B_{−k,l}/(N(u + c)), the composite of the
    /// classical map with the Fourier change of generators.
    Principal,
    /// The principal image with the constant term as printed, δ_k0 δ_l0/N.
    PrincipalPrinted,
}

/// Renames u in a polynomial of u alone to the value of a tag.
fn at_tag(p: &BiPoly, tag: Param) -> BiPoly {
    match tag {
        Param::U => p.clone(),
        Param::NegU => p.negate_var(Var::U),
        Param::V => p.swap_vars(),
        Param::NegV => p.swap_vars().negate_var(Var::V),
    }
}

/// Σ M_rc e_rc.
fn as_units(m: &TensorMat<Cyclotomic>) -> QuadExpr {
    let n = m.order();
    let mut out = QuadExpr::zero(n);
    for (r, c, x) in m.nonzero() {
        out.add_term(Word::One(GenSymbol::unit(n, r as i64, c as i64)), BiPoly::constant(x.clone()));
    }
    out
}

/// The evaluation image of a generator series, stored cleared: entry (i, j)
/// is the numerator over u + c, an element of U(gl_N) whose coefficients are
/// polynomials in u.
#[derive(Clone, Debug)]
pub struct EvalImage {
    n: u32,
    family: Family,
    shift: Rational,
    numerators: Vec<QuadExpr>,
}

impl EvalImage {
    pub fn new(s: &SignVector, sign: EvalSign, presentation: Presentation) -> Result<Self> {
        let n = s.n();
        let tb = TwistedBasis::new(s)?;
        let shift = sign.shift();
        let den = &BiPoly::u(n) + &BiPoly::from_rational(n, shift.clone());
        let (family, constant) = match presentation {
            Presentation::Classical => (Family::S, Cyclotomic::one(n)),
            Presentation::Principal => (Family::Y, Cyclotomic::one(n)),
            Presentation::PrincipalPrinted => (Family::Y, inv_n(n)),
        };
        let mut numerators = Vec::with_capacity((n * n) as usize);
        for p in IndexPair::all(n) {
            let (i, j) = (p.i as i64, p.j as i64);
            let (unit, mut e) = match family {
                Family::S => (i == j, as_units(tb.f(i, j))),
                _ => (i == 0 && j == 0, as_units(tb.b(-i, j)).scale_cyc(&inv_n(n))),
            };
            if unit {
                e.add_term(Word::Unit, den.scale(&constant));
            }
            numerators.push(e);
        }
        Ok(EvalImage { n, family, shift, numerators })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The numerator of entry (i, j), as a polynomial in u.
    pub fn numerator(&self, i: u32, j: u32) -> &QuadExpr {
        &self.numerators[IndexPair::new(self.n, i as i64, j as i64).linear(self.n)]
    }

    /// u + c.
    pub fn denominator(&self) -> BiPoly {
        &BiPoly::u(self.n) + &BiPoly::from_rational(self.n, self.shift.clone())
    }

    /// The limit u → ∞ of each entry, as an N×N scalar matrix.
    pub fn leading_term(&self) -> TensorMat<Cyclotomic> {
        let d = self.n as usize;
        TensorMat::from_fn(d, self.n, |i, j| self.numerator(i as u32, j as u32).coefficient(&Word::Unit).coefficient(1, 0))
    }

    fn tagged_numerator(&self, sym: &GenSymbol) -> Result<QuadExpr> {
        if sym.family != self.family {
            return Err(AlgebraError::MixedFamily(format!("no evaluation image for {:?} here", sym.family)));
        }
        let tag = sym.param.ok_or_else(|| AlgebraError::InvalidArgument("evaluation needs tagged symbols".into()))?;
        let e = self.numerator(sym.index.i, sym.index.j);
        let mut out = QuadExpr::zero(self.n);
        for (w, c) in e.terms() {
            out.add_term(*w, at_tag(c, tag));
        }
        Ok(out)
    }

    /// Multiplies through by Π_t (t + c)^{m_t}, m_t the largest number of
    /// times tag t occurs in one word, and substitutes the numerators.
    pub fn cleared(&self, e: &QuadExpr) -> Result<QuadExpr> {
        let n = self.n;
        let count = |w: &Word| {
            let mut c: BTreeMap<Param, u32> = BTreeMap::new();
            for s in w.symbols() {
                if let Some(p) = s.param {
                    *c.entry(p).or_default() += 1;
                }
            }
            c
        };
        let mut most: BTreeMap<Param, u32> = BTreeMap::new();
        for w in e.terms().keys() {
            for (p, k) in count(w) {
                let slot = most.entry(p).or_default();
                *slot = (*slot).max(k);
            }
        }
        let den = self.denominator();
        let mut out = QuadExpr::zero(n);
        for (w, c) in e.terms() {
            let have = count(w);
            let mut scale = c.clone();
            for (p, m) in &most {
                let missing = m - have.get(p).copied().unwrap_or(0);
                scale = scale.try_mul(&at_tag(&den, *p).pow(missing))?;
            }
            let mut term = QuadExpr::scalar(scale);
            for s in w.symbols() {
                term = quad_mul(&term, &self.tagged_numerator(&s)?)?;
            }
            out.add_assign(&term);
        }
        Ok(out)
    }
}

/// The reflection and symmetric relation components of a presentation, in
/// index order: N⁴ reflection components, then N² symmetric ones.
fn relation_components(s: &SignVector, presentation: Presentation) -> Result<Vec<(Vec<u32>, QuadExpr)>> {
    let n = s.n();
    let (family, basis) = match presentation {
        Presentation::Classical => (Family::S, Basis::Units),
        _ => (Family::Y, Basis::Principal),
    };
    let delta = reflection_parts(s, family, basis)?.delta;
    let sym = symmetric_delta(s, family, basis)?;
    let ex = Extractor::new(n);
    let mut out = Vec::new();
    for q in quadruples(n) {
        let c = match basis {
            Basis::Units => unit_component(&delta, n, q),
            Basis::Principal => ex.component2(&delta, q)?,
        };
        out.push((q.to_vec(), c));
    }
    for [i, j] in pairs(n) {
        let c = match basis {
            Basis::Units => sym.get(i as usize, j as usize).clone(),
            Basis::Principal => ex.component1(&sym, i, j)?,
        };
        out.push((vec![i, j], c));
    }
    Ok(out)
}

/// Substitutes the evaluation image into every relation component and checks
/// that the cleared result vanishes in U(gl_N). The sign must match the form:
/// upper for the symmetric case, lower for the alternating one.
pub fn check_evaluation(ctx: &CheckContext, s: &SignVector, sign: EvalSign, presentation: Presentation) -> Result<Outcome> {
    if sign != EvalSign::for_form(s.case()) {
        return Err(AlgebraError::InvalidArgument(format!(
            "shift sign {sign:?} does not belong to the {:?} form",
            s.case()
        )));
    }
    let used = if ctx.mutated(Mutation::EvalShift) { sign.flipped() } else { sign };
    let image = EvalImage::new(s, used, presentation)?;
    let comps = relation_components(s, presentation)?;
    let zero = QuadExpr::zero(s.n());
    let w = first_failure(&comps, |(idx, e)| {
        let reduced = normal_order_enveloping(&image.cleared(e)?)?;
        Ok(compare(idx, &reduced, &zero))
    })?;
    Ok(Outcome::from_witness(w))
}

/// The classical image must pass; the verdict is that of the principal image
/// as printed, and the note records the composite image with constant
/// δ_k0 δ_l0 alongside it.
pub fn evaluation(ctx: &CheckContext, case: Case, n: u32) -> Result<Outcome> {
    let s = case.require_sign_vector(n)?;
    let sign = EvalSign::for_form(s.case());
    let classical = check_evaluation(ctx, &s, sign, Presentation::Classical)?;
    if !classical.is_pass() {
        return Ok(classical.with_note("classical image fails"));
    }
    let composite = check_evaluation(ctx, &s, sign, Presentation::Principal)?;
    let printed = check_evaluation(ctx, &s, sign, Presentation::PrincipalPrinted)?;
    let verdict = |o: &Outcome| if o.is_pass() { "passes" } else { "fails" };
    let note = format!(
        "classical image passes; principal image with constant δ_k0δ_l0 {}; with the printed constant δ_k0δ_l0/N {}",
        verdict(&composite),
        verdict(&printed)
    );
    Ok(printed.with_note(note))
}

/// A linear combination of generator coefficients of degree one, sent to
/// matrices by `to_matrix`.
fn linear_image(
    n: u32,
    terms: &BTreeMap<Vec<GradedSymbol>, Cyclotomic>,
    to_matrix: &dyn Fn(&GradedSymbol) -> TensorMat<Cyclotomic>,
) -> Result<Option<TensorMat<Cyclotomic>>> {
    let mut acc = TensorMat::zeros(n as usize, n);
    for (w, c) in terms {
        match w.as_slice() {
            [g] if g.degree == 1 => acc = acc.try_add(&to_matrix(g).scale(c))?,
            _ => return Ok(None),
        }
    }
    Ok(Some(acc))
}

fn bracket_witness(q: [u32; 4], detail: String) -> Witness {
    Witness {
        component: q.to_vec(),
        word: None,
        left: None,
        right: None,
        detail: Some(detail),
    }
}

/// The coefficient of u v^{−1} in a reflection component reads
/// [x_a^{(1)}, x_b^{(1)}] − L with L linear in the x^{(1)}. Checks that the
/// quadratic part has this shape and that L, sent to matrices, is the
/// matrix commutator of the images of x_a and x_b.
pub fn check_embedding(ctx: &CheckContext, s: &SignVector, presentation: Presentation) -> Result<Outcome> {
    let n = s.n();
    let tb = TwistedBasis::new(s)?;
    let swap = ctx.mutated(Mutation::EmbeddingIndex);
    let (family, basis) = match presentation {
        Presentation::Classical => (Family::S, Basis::Units),
        _ => (Family::Y, Basis::Principal),
    };
    let matrix = |i: i64, j: i64| -> TensorMat<Cyclotomic> {
        let (i, j) = if swap { (j, i) } else { (i, j) };
        match presentation {
            Presentation::Classical => tb.f(i, j).clone(),
            _ => tb.b(-i, j).scale(&inv_n(n)),
        }
    };
    let to_matrix = |g: &GradedSymbol| matrix(g.index.i as i64, g.index.j as i64);
    let delta = reflection_parts(s, family, basis)?.delta;
    let ex = Extractor::new(n);
    let qs = quadruples(n);
    let w = first_failure(&qs, |q| {
        let comp = match basis {
            Basis::Units => unit_component(&delta, n, *q),
            Basis::Principal => ex.component2(&delta, *q)?,
        };
        let g = series_coefficient(&comp, 1, -1)?;
        let sym = |i: u32, j: u32| GradedSymbol { family, index: IndexPair::new(n, i as i64, j as i64), degree: 1 };
        let (a, b) = (sym(q[0], q[1]), sym(q[2], q[3]));
        let mut expected_two = BTreeMap::new();
        if a != b {
            expected_two.insert(vec![a, b], Cyclotomic::one(n));
            expected_two.insert(vec![b, a], -Cyclotomic::one(n));
        }
        if g.part(2) != expected_two || !g.part(0).is_empty() || g.terms.keys().any(|w| w.len() > 2) {
            return Ok(Some(bracket_witness(*q, "quadratic part is not a single commutator".into())));
        }
        let Some(linear) = linear_image(n, &g.part(1), &to_matrix)? else {
            return Ok(Some(bracket_witness(*q, "linear part has higher coefficients".into())));
        };
        let bracket = linear.negated();
        let ma = matrix(q[0] as i64, q[1] as i64);
        let mb = matrix(q[2] as i64, q[3] as i64);
        let commutator = ma.commutator(&mb)?;
        if bracket != commutator {
            return Ok(Some(bracket_witness(*q, "implied bracket differs from the matrix commutator".into())));
        }
        Ok(None)
    })?;
    Ok(Outcome::from_witness(w))
}

pub fn embedding(ctx: &CheckContext, case: Case, n: u32) -> Result<Outcome> {
    let s = case.require_sign_vector(n)?;
    let classical = check_embedding(ctx, &s, Presentation::Classical)?;
    if !classical.is_pass() {
        return Ok(classical.with_note("classical generators"));
    }
    check_embedding(ctx, &s, Presentation::Principal)
}
