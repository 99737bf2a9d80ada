//! The principal basis A_ij = Σ_k ω^{ki} E_{k,k+j} of gl_N, the discrete
//! Fourier transform over Z_N, and the twisted generators F_ij, B_ij.

use std::collections::BTreeMap;

use crate::coefficients::{omega_pow, Cyclotomic, Rational};
use crate::error::{AlgebraError, Result};
use crate::linalg;
use crate::ring::Ring;
use crate::tensor::{form_transpose, residue, trace_pair, unit_matrix, IndexPair, SignVector, TensorMat};

/// Values that can be summed and scaled by Q(ω_N), i.e. the codomain of a DFT.
pub trait LinearSpace: Clone {
    fn zero_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Cyclotomic) -> Self;
}

impl<R: Ring> LinearSpace for R {
    fn zero_like(&self) -> Self {
        R::zero(self.order())
    }
    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).expect("linear-space operands of different order")
    }
    fn scaled(&self, c: &Cyclotomic) -> Self {
        self.scale(c)
    }
}

impl<R: Ring> LinearSpace for TensorMat<R> {
    fn zero_like(&self) -> Self {
        TensorMat::zeros(self.dim(), self.order())
    }
    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).expect("matrices of different shape")
    }
    fn scaled(&self, c: &Cyclotomic) -> Self {
        self.scale(c)
    }
}

/// A function on Z_N, stored as its N values.
#[derive(Clone, Debug, PartialEq)]
pub struct ZnSequence<T> {
    order: u32,
    values: Vec<T>,
}

impl<T: LinearSpace> ZnSequence<T> {
    pub fn new(order: u32, values: Vec<T>) -> Result<Self> {
        if values.len() != order as usize {
            return Err(AlgebraError::DimensionMismatch { expected: order as usize, found: values.len() });
        }
        Ok(ZnSequence { order, values })
    }

    pub fn from_fn(order: u32, f: impl FnMut(u32) -> T) -> Self {
        ZnSequence { order, values: (0..order).map(f).collect() }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn at(&self, k: i64) -> &T {
        &self.values[residue(self.order, k) as usize]
    }

    /// 𝔉(f)(i) = Σ_j ω^{ij} f(j).
    pub fn dft(&self, i: i64) -> T {
        let n = self.order;
        let mut acc = self.values[0].zero_like();
        for (j, v) in self.values.iter().enumerate() {
            acc = acc.plus(&v.scaled(&omega_pow(n, i * j as i64)));
        }
        acc
    }

    /// 𝔉⁻¹(g)(i) = (1/N) Σ_j ω^{−ij} g(j).
    pub fn idft(&self, i: i64) -> T {
        let n = self.order;
        let inv_n = Cyclotomic::from_rational(n, Rational::new(1.into(), (n as i64).into()));
        let mut acc = self.values[0].zero_like();
        for (j, v) in self.values.iter().enumerate() {
            acc = acc.plus(&v.scaled(&omega_pow(n, -i * j as i64)));
        }
        acc.scaled(&inv_n)
    }

    pub fn dft_all(&self) -> Self {
        ZnSequence::from_fn(self.order, |i| self.dft(i as i64))
    }

    pub fn idft_all(&self) -> Self {
        ZnSequence::from_fn(self.order, |i| self.idft(i as i64))
    }
}

/// ε_j(k) = E_{k,k+j}.
pub fn epsilon(n: u32, j: i64) -> ZnSequence<TensorMat<Cyclotomic>> {
    ZnSequence::from_fn(n, |k| {
        unit_matrix(n, k as usize, residue(n, k as i64 + j) as usize).expect("in range")
    })
}

/// 1/N in Q(ω_N).
pub fn inv_n(n: u32) -> Cyclotomic {
    Cyclotomic::from_rational(n, Rational::new(1.into(), (n as i64).into()))
}

/// The N² matrices A_ij.
#[derive(Clone, Debug)]
pub struct PrincipalBasis {
    n: u32,
    elements: Vec<TensorMat<Cyclotomic>>,
}

impl PrincipalBasis {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "N must be positive");
        let d = n as usize;
        let elements = IndexPair::all(n)
            .map(|p| {
                let mut m = TensorMat::zeros(d, n);
                for k in 0..n {
                    let col = residue(n, (k + p.j) as i64) as usize;
                    m.set(k as usize, col, omega_pow(n, (k * p.i) as i64));
                }
                m
            })
            .collect();
        PrincipalBasis { n, elements }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn get(&self, i: i64, j: i64) -> &TensorMat<Cyclotomic> {
        let p = IndexPair::new(self.n, i, j);
        &self.elements[p.linear(self.n)]
    }

    pub fn at(&self, p: IndexPair) -> &TensorMat<Cyclotomic> {
        &self.elements[p.linear(self.n)]
    }

    pub fn elements(&self) -> &[TensorMat<Cyclotomic>] {
        &self.elements
    }

    /// The dual element ω^{ij}/N · A_{−i,−j} under tr(xy).
    pub fn dual(&self, i: i64, j: i64) -> TensorMat<Cyclotomic> {
        let c = &omega_pow(self.n, i * j) * &inv_n(self.n);
        self.get(-i, -j).scale(&c)
    }

    /// Rank of the A_ij viewed as vectors of length N².
    pub fn rank(&self) -> usize {
        let vecs: Vec<Vec<Cyclotomic>> = self.elements.iter().map(|m| m.as_vector().to_vec()).collect();
        linalg::rank(&vecs)
    }

    /// Coordinates of `m` in the A-basis, read off with the dual pairing.
    pub fn coordinates<R: Ring>(&self, m: &TensorMat<R>) -> Result<BasisCombination<R>> {
        let mut coords = BTreeMap::new();
        for p in IndexPair::all(self.n) {
            let dual = self.dual(p.i as i64, p.j as i64).map(|c| lift_scalar::<R>(c));
            let c = trace_pair(&dual, m)?;
            if !c.is_zero() {
                coords.insert(p, c);
            }
        }
        Ok(BasisCombination { n: self.n, coords })
    }

    /// Coordinates of a scalar matrix by exact elimination; independent of the pairing.
    pub fn coordinates_by_elimination(&self, m: &TensorMat<Cyclotomic>) -> Option<BasisCombination<Cyclotomic>> {
        let basis: Vec<Vec<Cyclotomic>> = self.elements.iter().map(|e| e.as_vector().to_vec()).collect();
        let sol = linalg::solve_in_span(&basis, m.as_vector())?;
        let coords = IndexPair::all(self.n)
            .zip(sol)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Some(BasisCombination { n: self.n, coords })
    }
}

/// Embeds a scalar into another coefficient ring as a constant.
pub fn lift_scalar<R: Ring>(c: &Cyclotomic) -> R {
    R::one(c.order()).scale(c)
}

/// A linear combination Σ c_ij A_ij.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisCombination<R> {
    pub n: u32,
    pub coords: BTreeMap<IndexPair, R>,
}

impl<R: Ring> BasisCombination<R> {
    pub fn coefficient(&self, p: IndexPair) -> R {
        self.coords.get(&p).cloned().unwrap_or_else(|| R::zero(self.n))
    }
}

impl BasisCombination<Cyclotomic> {
    pub fn expand(&self, basis: &PrincipalBasis) -> TensorMat<Cyclotomic> {
        let d = self.n as usize;
        self.coords
            .iter()
            .fold(TensorMat::zeros(d, self.n), |acc, (p, c)| acc.plus(&basis.at(*p).scale(c)))
    }
}

/// A_ij A_kl = ω^{jk} A_{i+k, j+l}: returns the phase and the result label.
pub fn structure_product(n: u32, i: i64, j: i64, k: i64, l: i64) -> (Cyclotomic, IndexPair) {
    (omega_pow(n, j * k), IndexPair::new(n, i + k, j + l))
}

/// A_ij^t in A-coordinates: (ω^{−i(1+j)}/N) Σ_{k,l} θ_k θ_{k+j} ω^{−k(i+l)} A_{lj}.
pub fn a_transpose(i: i64, j: i64, s: &SignVector) -> BasisCombination<Cyclotomic> {
    let n = s.n();
    let nn = n as i64;
    let mut coords = BTreeMap::new();
    for l in 0..nn {
        let mut weights = vec![0i64; n as usize];
        for k in 0..nn {
            let e = (-i * (1 + j) - k * (i + l)).rem_euclid(nn) as usize;
            weights[e] += s.theta(k) * s.theta(k + j);
        }
        let c = Cyclotomic::from_exponent_weights(n, &weights);
        if !c.is_zero() {
            coords.insert(IndexPair::new(n, l, j), &c * &inv_n(n));
        }
    }
    BasisCombination { n, coords }
}

/// The symmetric-case shortcut A_ij^t = ω^{−i(1+j)} A_{−i,j}.
pub fn a_transpose_symmetric(n: u32, i: i64, j: i64) -> (Cyclotomic, IndexPair) {
    (omega_pow(n, -i * (1 + j)), IndexPair::new(n, -i, j))
}

/// F_ij = E_ij − E_ij^t and B_ij = A_ij − A_ij^t for a fixed form.
#[derive(Clone, Debug)]
pub struct TwistedBasis {
    sign: SignVector,
    f: Vec<TensorMat<Cyclotomic>>,
    b: Vec<TensorMat<Cyclotomic>>,
}

impl TwistedBasis {
    pub fn new(sign: &SignVector) -> Result<Self> {
        let n = sign.n();
        let basis = PrincipalBasis::new(n);
        let mut f = Vec::new();
        let mut b = Vec::new();
        for p in IndexPair::all(n) {
            let e = unit_matrix(n, p.i as usize, p.j as usize)?;
            f.push(e.try_sub(&form_transpose(&e, sign)?)?);
            let a = basis.at(p);
            b.push(a.try_sub(&form_transpose(a, sign)?)?);
        }
        Ok(TwistedBasis { sign: sign.clone(), f, b })
    }

    pub fn sign(&self) -> &SignVector {
        &self.sign
    }

    pub fn f(&self, i: i64, j: i64) -> &TensorMat<Cyclotomic> {
        &self.f[IndexPair::new(self.sign.n(), i, j).linear(self.sign.n())]
    }

    pub fn b(&self, i: i64, j: i64) -> &TensorMat<Cyclotomic> {
        &self.b[IndexPair::new(self.sign.n(), i, j).linear(self.sign.n())]
    }

    pub fn f_family(&self) -> &[TensorMat<Cyclotomic>] {
        &self.f
    }

    pub fn b_family(&self) -> &[TensorMat<Cyclotomic>] {
        &self.b
    }

    /// N(N−1)/2 for so_N, N(N+1)/2 for sp_N.
    pub fn expected_dimension(&self) -> usize {
        let n = self.sign.n() as usize;
        match self.sign.case() {
            crate::tensor::FormCase::Symmetric => n * (n - 1) / 2,
            crate::tensor::FormCase::Alternating => n * (n + 1) / 2,
        }
    }

    pub fn rank_f(&self) -> usize {
        span_rank(&self.f)
    }

    pub fn rank_b(&self) -> usize {
        span_rank(&self.b)
    }

    /// Σ_k ω^{ki} F_{k,k+j}.
    pub fn b_via_fourier(&self, i: i64, j: i64) -> TensorMat<Cyclotomic> {
        let n = self.sign.n();
        ZnSequence::from_fn(n, |k| self.f(k as i64, k as i64 + j).clone()).dft(i)
    }
}

pub fn span_rank(family: &[TensorMat<Cyclotomic>]) -> usize {
    let vecs: Vec<Vec<Cyclotomic>> = family.iter().map(|m| m.as_vector().to_vec()).collect();
    linalg::rank(&vecs)
}

/// Checks [X_p, X_q] ∈ span(family) for every pair; returns the first pair
/// (in index order) whose commutator escapes the span.
pub fn commutator_closure(family: &[TensorMat<Cyclotomic>], n: u32) -> Result<Option<(IndexPair, IndexPair)>> {
    let basis: Vec<Vec<Cyclotomic>> = family.iter().map(|m| m.as_vector().to_vec()).collect();
    let labels: Vec<IndexPair> = IndexPair::all(n).collect();
    for (x, p) in family.iter().zip(&labels) {
        for (y, q) in family.iter().zip(&labels) {
            let c = x.commutator(y)?;
            if linalg::solve_in_span(&basis, c.as_vector()).is_none() {
                return Ok(Some((*p, *q)));
            }
        }
    }
    Ok(None)
}

/// One pair (A_ij, ω^{ij}/N A_{−i,−j}) of the dual principal bases.
#[derive(Clone, Debug)]
pub struct DualPair {
    pub index: IndexPair,
    pub basis: TensorMat<Cyclotomic>,
    pub dual: TensorMat<Cyclotomic>,
}

pub fn dual_basis_pairs(n: u32) -> Vec<DualPair> {
    let basis = PrincipalBasis::new(n);
    IndexPair::all(n)
        .map(|p| DualPair {
            index: p,
            basis: basis.at(p).clone(),
            dual: basis.dual(p.i as i64, p.j as i64),
        })
        .collect()
}

/// The cyclic element E = Σ_i E_{i,i+1}.
pub fn cyclic_element(n: u32) -> TensorMat<Cyclotomic> {
    let d = n as usize;
    let mut m = TensorMat::zeros(d, n);
    for i in 0..d {
        m.set(i, (i + 1) % d, Cyclotomic::one(n));
    }
    m
}

/// Σ_pairs first ⊗ second, which equals the flip P.
pub fn dual_pairs_casimir(n: u32) -> Result<TensorMat<Cyclotomic>> {
    let d = n as usize;
    dual_basis_pairs(n)
        .iter()
        .try_fold(TensorMat::zeros(d * d, n), |acc, p| acc.try_add(&p.basis.kron(&p.dual)?))
}
