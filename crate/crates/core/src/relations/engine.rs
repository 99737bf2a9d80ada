//! Shared machinery: series matrices, component extraction, phase sums and
//! first-failure search in canonical index order.

use std::collections::BTreeMap;

use crate::coefficients::{omega_pow, BiPoly, Cyclotomic, Rational};
use crate::error::Result;
use crate::exec::par_map;
use crate::formal::{expr_eq, EqOutcome, Family, GenSymbol, Param, QuadExpr, Word};
use crate::principal::PrincipalBasis;
use crate::ring::Ring;
use crate::tensor::{IndexPair, TensorMat};

use super::report::Witness;

/// How a generator matrix is expanded: over matrix units or over the principal basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Units,
    Principal,
}

pub fn gsym(n: u32, family: Family, i: i64, j: i64, param: Param) -> GenSymbol {
    GenSymbol::new(n, family, i, j, param)
}

pub fn word2(a: GenSymbol, b: GenSymbol) -> Word {
    Word::Two(a, b)
}

/// All (i,j,k,l) in lexicographic order.
pub fn quadruples(n: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::with_capacity((n as usize).pow(4));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    out.push([i, j, k, l]);
                }
            }
        }
    }
    out
}

/// All (i,j) in lexicographic order.
pub fn pairs(n: u32) -> Vec<[u32; 2]> {
    (0..n).flat_map(|i| (0..n).map(move |j| [i, j])).collect()
}

/// The generator matrix Σ g_ij(tag) ⊗ E_ij, or Σ g_kl(tag) ⊗ A_kl for a principal family.
pub fn series_matrix(n: u32, family: Family, param: Param, basis: Basis) -> TensorMat<QuadExpr> {
    let d = n as usize;
    let mut m = TensorMat::zeros(d, n);
    match basis {
        Basis::Units => {
            for i in 0..d {
                for j in 0..d {
                    m.set(i, j, QuadExpr::symbol(n, gsym(n, family, i as i64, j as i64, param)));
                }
            }
        }
        Basis::Principal => {
            // A_kl = Σ_a ω^{ak} E_{a,a+l}
            for a in 0..d {
                for l in 0..d {
                    let mut e = QuadExpr::zero(n);
                    for k in 0..d {
                        let w = Word::One(gsym(n, family, k as i64, l as i64, param));
                        e.add_term(w, BiPoly::constant(omega_pow(n, (a * k) as i64)));
                    }
                    m.set(a, (a + l) % d, e);
                }
            }
        }
    }
    m
}

/// A scalar matrix lifted entrywise into the expression ring.
pub fn lift_matrix(m: &TensorMat<Cyclotomic>) -> TensorMat<QuadExpr> {
    m.map(|c| QuadExpr::scalar(BiPoly::constant(c.clone())))
}

/// p · 1 on a space of the given dimension.
pub fn poly_identity(n: u32, dim: usize, p: &BiPoly) -> TensorMat<QuadExpr> {
    let mut m = TensorMat::zeros(dim, n);
    for r in 0..dim {
        m.set(r, r, QuadExpr::scalar(p.clone()));
    }
    m
}

/// Coefficient extraction in the principal basis through the dual pairing:
/// the coefficient of A_ij (resp. A_ij ⊗ A_kl) in M is tr(M · dual).
pub struct Extractor {
    n: u32,
    duals: Vec<Vec<(usize, usize, Cyclotomic)>>,
}

impl Extractor {
    pub fn new(n: u32) -> Self {
        let basis = PrincipalBasis::new(n);
        let duals = IndexPair::all(n)
            .map(|p| {
                basis
                    .dual(p.i as i64, p.j as i64)
                    .nonzero()
                    .map(|(r, c, x)| (r, c, x.clone()))
                    .collect()
            })
            .collect();
        Extractor { n, duals }
    }

    fn dual(&self, i: u32, j: u32) -> &[(usize, usize, Cyclotomic)] {
        &self.duals[(i * self.n + j) as usize]
    }

    /// Coefficient of A_ij in a dim-N matrix.
    pub fn component1<R: Ring>(&self, m: &TensorMat<R>, i: u32, j: u32) -> Result<R> {
        let mut acc = R::zero(self.n);
        for (r, c, x) in self.dual(i, j) {
            let e = m.get(*c, *r);
            if !e.is_zero() {
                acc = acc.try_add(&e.scale(x))?;
            }
        }
        Ok(acc)
    }

    /// Coefficient of A_ij ⊗ A_kl in a dim-N² matrix.
    pub fn component2<R: Ring>(&self, m: &TensorMat<R>, q: [u32; 4]) -> Result<R> {
        let d = self.n as usize;
        let mut acc = R::zero(self.n);
        for (r1, c1, x) in self.dual(q[0], q[1]) {
            for (r2, c2, y) in self.dual(q[2], q[3]) {
                let e = m.get(c1 * d + c2, r1 * d + r2);
                if !e.is_zero() {
                    acc = acc.try_add(&e.scale(&(x * y)))?;
                }
            }
        }
        Ok(acc)
    }
}

/// Coefficient of E_ij ⊗ E_kl in a dim-N² matrix.
pub fn unit_component<R: Ring>(m: &TensorMat<R>, n: u32, q: [u32; 4]) -> R {
    let d = n as usize;
    let [i, j, k, l] = q.map(|x| x as usize);
    m.get(i * d + k, j * d + l).clone()
}

/// Σ_words (Σ_r w_r ω^r) · word, accumulated with integer weights so that large
/// phase sums are reduced to canonical form once per word.
pub struct PhaseSum {
    n: u32,
    acc: BTreeMap<Word, Vec<i64>>,
}

impl PhaseSum {
    pub fn new(n: u32) -> Self {
        PhaseSum { n, acc: BTreeMap::new() }
    }

    /// Adds weight · ω^exponent · word.
    pub fn add(&mut self, word: Word, exponent: i64, weight: i64) {
        let n = self.n;
        let slot = self.acc.entry(word).or_insert_with(|| vec![0; n as usize]);
        slot[exponent.rem_euclid(n as i64) as usize] += weight;
    }

    /// prefactor / N^power · Σ.
    pub fn finish(self, prefactor: &BiPoly, power: u32) -> QuadExpr {
        let n = self.n;
        let scale = Rational::new(1.into(), num_bigint::BigInt::from(n).pow(power));
        let mut out = QuadExpr::zero(n);
        for (w, weights) in self.acc {
            let c = Cyclotomic::from_exponent_weights(n, &weights).scale(&scale);
            if !c.is_zero() {
                out.add_term(w, prefactor.scale(&c));
            }
        }
        out
    }
}

/// The witness for a failed comparison of component `component`.
pub fn witness(component: &[u32], outcome: EqOutcome) -> Option<Witness> {
    match outcome {
        EqOutcome::Equal => None,
        EqOutcome::Differ { word, left, right } => Some(Witness {
            component: component.to_vec(),
            word: Some(word.to_string()),
            left: Some(left.to_string()),
            right: Some(right.to_string()),
            detail: None,
        }),
    }
}

/// Compares two expressions at a component.
pub fn compare(component: &[u32], left: &QuadExpr, right: &QuadExpr) -> Option<Witness> {
    witness(component, expr_eq(left, right))
}

/// Evaluates `f` on the items (possibly concurrently) and returns the first
/// failure in item order. Errors are reported in item order as well. Items
/// are processed in chunks so a mismatch stops the scan early; the answer
/// does not depend on the chunking.
pub fn first_failure<T, F>(items: &[T], f: F) -> Result<Option<Witness>>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<Witness>> + Sync + Send,
{
    for chunk in items.chunks(crate::exec::width()) {
        for r in par_map(chunk, &f) {
            if let Some(w) = r? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// u − v, u + v and friends as polynomials.
pub fn u_minus_v(n: u32) -> BiPoly {
    &BiPoly::u(n) - &BiPoly::v(n)
}

pub fn u_plus_v(n: u32) -> BiPoly {
    &BiPoly::u(n) + &BiPoly::v(n)
}

pub fn u2_minus_v2(n: u32) -> BiPoly {
    &u_minus_v(n) * &u_plus_v(n)
}

/// a·b − b·a for two single symbols, times `p`.
pub fn commutator_words(n: u32, a: GenSymbol, b: GenSymbol, p: &BiPoly) -> QuadExpr {
    let mut e = QuadExpr::zero(n);
    e.add_term(Word::Two(a, b), p.clone());
    e.add_term(Word::Two(b, a), -p);
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{embed_first, embed_second};

    #[test]
    fn principal_series_matches_fourier_image() {
        let n = 3;
        let s = series_matrix(n, Family::Y, Param::U, Basis::Principal);
        let ex = Extractor::new(n);
        for [i, j] in pairs(n) {
            let c = ex.component1(&s, i, j).unwrap();
            assert_eq!(c, QuadExpr::symbol(n, gsym(n, Family::Y, i as i64, j as i64, Param::U)));
        }
    }

    #[test]
    fn two_factor_extraction_recovers_products() {
        let n = 2;
        let s1 = embed_first(&series_matrix(n, Family::Y, Param::U, Basis::Principal)).unwrap();
        let s2 = embed_second(&series_matrix(n, Family::Y, Param::V, Basis::Principal)).unwrap();
        let m = s1.matmul(&s2).unwrap();
        let ex = Extractor::new(n);
        for q in quadruples(n) {
            let c = ex.component2(&m, q).unwrap();
            let a = gsym(n, Family::Y, q[0] as i64, q[1] as i64, Param::U);
            let b = gsym(n, Family::Y, q[2] as i64, q[3] as i64, Param::V);
            assert_eq!(c, QuadExpr::word(n, Word::Two(a, b), BiPoly::one(n)));
        }
    }

    #[test]
    fn phase_sum_cancels() {
        let n = 3;
        let w = Word::One(gsym(n, Family::X, 0, 0, Param::U));
        let mut ps = PhaseSum::new(n);
        for r in 0..3 {
            ps.add(w, r, 1);
        }
        assert!(ps.finish(&BiPoly::one(n), 0).is_zero());
    }
}
