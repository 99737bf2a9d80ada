//! Dense univariate polynomials over Q, low degree first. Only what the
//! cyclotomic field needs: trimming, division with remainder, and the
//! extended Euclidean algorithm.

use num_traits::{One, Zero};

use super::Rational;

pub(crate) fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn sub_scaled_shifted(a: &mut Vec<Rational>, b: &[Rational], c: &Rational, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, Rational::zero());
    }
    for (k, bk) in b.iter().enumerate() {
        if !bk.is_zero() {
            a[k + shift] -= c * bk;
        }
    }
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    trim(&mut out);
    out
}

/// Returns (quotient, remainder). `b` must be nonzero after trimming.
pub(crate) fn div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = Rational::one() / &b[db];
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = &r[dr] * &lead_inv;
        sub_scaled_shifted(&mut r, &b, &c, dr - db);
        q[dr - db] = c;
        r.truncate(dr);
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Rational::zero());
    }
    for (k, bk) in b.iter().enumerate() {
        out[k] -= bk;
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `m`, when gcd(a, m) is a nonzero constant.
pub(crate) fn inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let (_, mut r0) = div_rem(a, m);
    let mut r1 = m.to_vec();
    trim(&mut r1);
    if r0.is_empty() {
        return None;
    }
    // Invariant: s0 * a ≡ r0, s1 * a ≡ r1 (mod m).
    let mut s0 = vec![Rational::one()];
    let mut s1: Vec<Rational> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = Rational::one() / &r0[0];
    let inv: Vec<Rational> = s0.into_iter().map(|x| x * &c).collect();
    let (_, rem) = div_rem(&inv, m);
    Some(rem)
}
