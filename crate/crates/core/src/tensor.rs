//! Dense matrices over the coefficient rings, two-fold Kronecker products,
//! the form-twisted transpose and the trace pairing.
//!
//! Kronecker convention: `(A⊗B)[a·N + b, c·N + d] = A[a, c] · B[b, d]`, so
//! `E_ij ⊗ E_kl` has its single 1 at row `i·N + k`, column `j·N + l`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coefficients::{Cyclotomic, Rational};
use crate::error::{AlgebraError, Result};
use crate::ring::Ring;

/// A pair of residues in Z_N × Z_N.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexPair {
    pub i: u32,
    pub j: u32,
}

impl IndexPair {
    pub fn new(n: u32, i: i64, j: i64) -> Self {
        IndexPair { i: residue(n, i), j: residue(n, j) }
    }

    /// All N² pairs in lexicographic order.
    pub fn all(n: u32) -> impl Iterator<Item = IndexPair> {
        (0..n).flat_map(move |i| (0..n).map(move |j| IndexPair { i, j }))
    }

    pub fn linear(&self, n: u32) -> usize {
        (self.i * n + self.j) as usize
    }
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// `k mod n` in {0, …, n−1}.
pub fn residue(n: u32, k: i64) -> u32 {
    k.rem_euclid(n as i64) as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormCase {
    Symmetric,
    Alternating,
}

/// The signs θ_i defining the bilinear form behind the twisted transpose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignVector {
    case: FormCase,
    n: u32,
    theta: Vec<i64>,
}

impl SignVector {
    pub fn new(case: FormCase, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(AlgebraError::InvalidSignVector("N must be positive".into()));
        }
        let theta = match case {
            FormCase::Symmetric => vec![1; n as usize],
            FormCase::Alternating => {
                if !n.is_multiple_of(2) {
                    return Err(AlgebraError::InvalidSignVector(format!(
                        "alternating form needs even N, got {n}"
                    )));
                }
                (0..n).map(|i| if i < n / 2 { -1 } else { 1 }).collect()
            }
        };
        Ok(SignVector { case, n, theta })
    }

    pub fn symmetric(n: u32) -> Self {
        Self::new(FormCase::Symmetric, n).expect("symmetric sign vector")
    }

    pub fn alternating(n: u32) -> Result<Self> {
        Self::new(FormCase::Alternating, n)
    }

    pub fn case(&self) -> FormCase {
        self.case
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// θ_i for any integer i, read mod N.
    pub fn theta(&self, i: i64) -> i64 {
        self.theta[residue(self.n, i) as usize]
    }

    /// i' = N − 1 − i, reduced mod N.
    pub fn prime(&self, i: i64) -> u32 {
        residue(self.n, self.n as i64 - 1 - i)
    }

    pub fn thetas(&self) -> &[i64] {
        &self.theta
    }
}

/// Square matrix over a coefficient ring, row-major.
#[derive(Clone, PartialEq)]
pub struct TensorMat<R> {
    dim: usize,
    order: u32,
    entries: Vec<R>,
}

impl<R: Ring> TensorMat<R> {
    pub fn zeros(dim: usize, order: u32) -> Self {
        TensorMat { dim, order, entries: vec![R::zero(order); dim * dim] }
    }

    pub fn identity(dim: usize, order: u32) -> Self {
        let mut m = Self::zeros(dim, order);
        for k in 0..dim {
            m.entries[k * dim + k] = R::one(order);
        }
        m
    }

    pub fn from_fn(dim: usize, order: u32, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        TensorMat { dim, order, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<R> {
        self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.entries[r * self.dim + c]
    }

    pub fn try_get(&self, r: usize, c: usize) -> Result<&R> {
        if r >= self.dim || c >= self.dim {
            return Err(AlgebraError::IndexOutOfRange { row: r, col: c, dim: self.dim });
        }
        Ok(self.get(r, c))
    }

    pub fn set(&mut self, r: usize, c: usize, value: R) {
        self.entries[r * self.dim + c] = value;
    }

    /// Adds `value` into entry (r, c).
    pub fn accumulate(&mut self, r: usize, c: usize, value: &R) -> Result<()> {
        let slot = &mut self.entries[r * self.dim + c];
        *slot = slot.try_add(value)?;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Nonzero entries as (row, col, value).
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        let dim = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(move |(k, e)| (k / dim, k % dim, e))
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> TensorMat<S> {
        TensorMat {
            dim: self.dim,
            order: self.order,
            entries: self.entries.iter().map(&mut f).collect(),
        }
    }

    pub fn try_map<S: Ring>(&self, mut f: impl FnMut(&R) -> Result<S>) -> Result<TensorMat<S>> {
        Ok(TensorMat {
            dim: self.dim,
            order: self.order,
            entries: self.entries.iter().map(&mut f).collect::<Result<_>>()?,
        })
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_>>()?;
        Ok(TensorMat { dim: self.dim, order: self.order, entries })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_sub(b))
            .collect::<Result<_>>()?;
        Ok(TensorMat { dim: self.dim, order: self.order, entries })
    }

    /// Matrix product, skipping zero entries of both factors. Entry products
    /// keep the left-then-right order, which matters for noncommutative rings.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let d = self.dim;
        let mut out = Self::zeros(d, self.order);
        for r in 0..d {
            for k in 0..d {
                let a = &self.entries[r * d + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = &other.entries[k * d + c];
                    if b.is_zero() {
                        continue;
                    }
                    let p = a.try_mul(b)?;
                    let slot = &mut out.entries[r * d + c];
                    *slot = slot.try_add(&p)?;
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.matmul(other)?.try_sub(&other.matmul(self)?)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        self.map(|e| e.scale(c))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&Cyclotomic::from_rational(self.order, r.clone()))
    }

    pub fn negated(&self) -> Self {
        self.map(|e| e.negated())
    }

    /// Multiplies every entry by the ring element `x` on the left.
    pub fn left_mul_scalar(&self, x: &R) -> Result<Self> {
        self.try_map(|e| x.try_mul(e))
    }

    pub fn trace(&self) -> Result<R> {
        let mut acc = R::zero(self.order);
        for k in 0..self.dim {
            acc = acc.try_add(self.get(k, k))?;
        }
        Ok(acc)
    }

    /// Kronecker product: (A⊗B)[a·m+b, c·m+d] = A[a,c]·B[b,d], m = dim B.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch { left: self.order, right: other.order });
        }
        let m = other.dim;
        let big = self.dim * m;
        let mut out = Self::zeros(big, self.order);
        for (a, c, x) in self.nonzero() {
            for (b, d, y) in other.nonzero() {
                out.entries[(a * m + b) * big + (c * m + d)] = x.try_mul(y)?;
            }
        }
        Ok(out)
    }

    /// Flattened entries, for rank and span computations.
    pub fn as_vector(&self) -> &[R] {
        &self.entries
    }
}

impl<R: Ring> fmt::Debug for TensorMat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TensorMat(dim={}, N={})", self.dim, self.order)?;
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| format!("{:?}", self.get(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// tr(AB).
pub fn trace_pair<R: Ring>(a: &TensorMat<R>, b: &TensorMat<R>) -> Result<R> {
    a.check_same_shape(b)?;
    let d = a.dim;
    let mut acc = R::zero(a.order);
    for (r, k, x) in a.nonzero() {
        let y = &b.entries[k * d + r];
        if !y.is_zero() {
            acc = acc.try_add(&x.try_mul(y)?)?;
        }
    }
    Ok(acc)
}

/// The matrix unit E_ij of size N over Q(ω_N).
pub fn unit_matrix(n: u32, i: usize, j: usize) -> Result<TensorMat<Cyclotomic>> {
    let d = n as usize;
    if i >= d || j >= d {
        return Err(AlgebraError::IndexOutOfRange { row: i, col: j, dim: d });
    }
    let mut m = TensorMat::zeros(d, n);
    m.set(i, j, Cyclotomic::one(n));
    Ok(m)
}

/// The flip P = Σ E_ij ⊗ E_ji on C^N ⊗ C^N.
pub fn permutation<R: Ring>(n: u32) -> TensorMat<R> {
    let d = n as usize;
    let mut m = TensorMat::zeros(d * d, n);
    for a in 0..d {
        for b in 0..d {
            m.set(a * d + b, b * d + a, R::one(n));
        }
    }
    m
}

/// A ↦ A^t, the linear extension of E_ij^t = θ_i θ_j E_{N−1−j, N−1−i}.
pub fn form_transpose<R: Ring>(a: &TensorMat<R>, s: &SignVector) -> Result<TensorMat<R>> {
    let n = s.n() as usize;
    if a.dim != n {
        return Err(AlgebraError::DimensionMismatch { expected: n, found: a.dim });
    }
    let mut out = TensorMat::zeros(n, a.order);
    for (r, c, x) in a.nonzero() {
        let sign = s.theta(r as i64) * s.theta(c as i64);
        let v = if sign > 0 { x.clone() } else { x.negated() };
        out.set(n - 1 - c, n - 1 - r, v);
    }
    Ok(out)
}

/// Applies the form-twisted transpose on the first tensor factor of a dim-N² matrix.
pub fn partial_transpose_1<R: Ring>(m: &TensorMat<R>, s: &SignVector) -> Result<TensorMat<R>> {
    let n = s.n() as usize;
    if m.dim != n * n {
        return Err(AlgebraError::DimensionMismatch { expected: n * n, found: m.dim });
    }
    let mut out = TensorMat::zeros(n * n, m.order);
    for (row, col, x) in m.nonzero() {
        let (a, b) = (row / n, row % n);
        let (c, d) = (col / n, col % n);
        let sign = s.theta(a as i64) * s.theta(c as i64);
        let v = if sign > 0 { x.clone() } else { x.negated() };
        out.set((n - 1 - c) * n + b, (n - 1 - a) * n + d, v);
    }
    Ok(out)
}

/// Lifts a dim-N matrix to the first factor, A ⊗ 1.
pub fn embed_first<R: Ring>(a: &TensorMat<R>) -> Result<TensorMat<R>> {
    a.kron(&TensorMat::identity(a.dim, a.order))
}

/// Lifts a dim-N matrix to the second factor, 1 ⊗ A.
pub fn embed_second<R: Ring>(a: &TensorMat<R>) -> Result<TensorMat<R>> {
    TensorMat::identity(a.dim, a.order).kron(a)
}
