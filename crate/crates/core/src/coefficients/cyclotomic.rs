use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_rational, rational_to_string, upoly, Rational};
use crate::error::{AlgebraError, Result};

/// Univariate integer polynomial, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    pub coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly { coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect() }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Φ_N, obtained by exact division of x^N − 1 by Φ_d over the proper divisors d of N.
pub fn cyclotomic_polynomial(n: u32) -> IntPoly {
    assert!(n >= 1, "cyclotomic order must be positive");
    let ctx = field(n);
    IntPoly {
        coeffs: ctx.phi.iter().map(|c| c.to_integer()).collect(),
    }
}

fn compute_phi(n: u32) -> Vec<Rational> {
    let mut num = vec![Rational::zero(); n as usize + 1];
    num[0] = -Rational::one();
    num[n as usize] = Rational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = upoly::div_rem(&num, &field(d).phi);
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num
}

struct FieldCtx {
    /// Monic Φ_N, lowest degree first; length degree + 1.
    phi: Vec<Rational>,
    degree: usize,
}

impl FieldCtx {
    fn reduce(&self, mut p: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree;
        if p.len() > d {
            for k in (d..p.len()).rev() {
                if p[k].is_zero() {
                    continue;
                }
                let c = std::mem::replace(&mut p[k], Rational::zero());
                for (i, ph) in self.phi[..d].iter().enumerate() {
                    if !ph.is_zero() {
                        p[k - d + i] -= &c * ph;
                    }
                }
            }
        }
        p.resize(d, Rational::zero());
        p
    }
}

fn registry() -> &'static RwLock<HashMap<u32, Arc<FieldCtx>>> {
    static REG: OnceLock<RwLock<HashMap<u32, Arc<FieldCtx>>>> = OnceLock::new();
    REG.get_or_init(|| RwLock::new(HashMap::new()))
}

thread_local! {
    static LOCAL: RefCell<HashMap<u32, Arc<FieldCtx>>> = RefCell::new(HashMap::new());
}

fn field(n: u32) -> Arc<FieldCtx> {
    if let Some(ctx) = LOCAL.with(|l| l.borrow().get(&n).cloned()) {
        return ctx;
    }
    let existing = registry().read().expect("field registry poisoned").get(&n).cloned();
    let ctx = match existing {
        Some(ctx) => ctx,
        None => {
            let phi = if n == 1 {
                vec![-Rational::one(), Rational::one()]
            } else {
                compute_phi(n)
            };
            let degree = phi.len() - 1;
            let ctx = Arc::new(FieldCtx { phi, degree });
            registry()
                .write()
                .expect("field registry poisoned")
                .entry(n)
                .or_insert(ctx)
                .clone()
        }
    };
    LOCAL.with(|l| l.borrow_mut().insert(n, ctx.clone()));
    ctx
}

/// An element of Q(ω_N), stored as its unique residue modulo Φ_N in the
/// power basis 1, ω, …, ω^{φ(N)−1}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

/// ω_N^k with k reduced mod N.
pub fn omega_pow(n: u32, k: i64) -> Cyclotomic {
    Cyclotomic::omega_pow(n, k)
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let d = field(order).degree;
        Cyclotomic { order, coeffs: vec![Rational::zero(); d] }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = r;
        out
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(n.into()))
    }

    pub fn omega_pow(order: u32, k: i64) -> Self {
        let ctx = field(order);
        let e = k.rem_euclid(order as i64) as usize;
        let mut p = vec![Rational::zero(); e + 1];
        p[e] = Rational::one();
        Cyclotomic { order, coeffs: ctx.reduce(p) }
    }

    /// Builds the residue of an arbitrary polynomial in ω.
    pub fn from_poly(order: u32, coeffs: Vec<Rational>) -> Self {
        let ctx = field(order);
        Cyclotomic { order, coeffs: ctx.reduce(coeffs) }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        if let Some(r) = other.as_rational() {
            return Ok(self.scale(r));
        }
        if let Some(r) = self.as_rational() {
            return Ok(other.scale(r));
        }
        let ctx = field(self.order);
        let d = ctx.degree;
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(Cyclotomic { order: self.order, coeffs: ctx.reduce(prod) })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.order, r.recip()));
        }
        let ctx = field(self.order);
        let inv = upoly::inverse_mod(&self.coeffs, &ctx.phi).ok_or(AlgebraError::DivisionByZero)?;
        Ok(Cyclotomic { order: self.order, coeffs: ctx.reduce(inv) })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplies by ω^k.
    pub fn mul_omega(&self, k: i64) -> Self {
        if k.rem_euclid(self.order as i64) == 0 {
            return self.clone();
        }
        self * &Self::omega_pow(self.order, k)
    }

    /// Re-reduces the stored residue. Idempotent on canonical values.
    pub fn reduce(&self) -> Self {
        Self::from_poly(self.order, self.coeffs.clone())
    }

    /// The complex value under ω = e^{2πi/N}. Display only.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let x = c.to_f64().unwrap_or(f64::NAN);
                Complex64::from_polar(x, 2.0 * std::f64::consts::PI * k as f64 / n)
            })
            .sum()
    }

    /// Sum of c_e ω^e for integer weights indexed by exponent mod N.
    pub fn from_exponent_weights(order: u32, weights: &[i64]) -> Self {
        let ctx = field(order);
        let p: Vec<Rational> = weights.iter().map(|&w| Rational::from_integer(w.into())).collect();
        Cyclotomic { order, coeffs: ctx.reduce(p) }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{}", rational_to_string(&mag))?;
            }
            match k {
                0 => {}
                1 => write!(f, "ω")?,
                _ => write!(f, "ω^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self, self.order)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$checked(rhs).expect("cyclotomic operands of different order")
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        assert_eq!(self.order, rhs.order, "cyclotomic operands of different order");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        assert_eq!(self.order, rhs.order, "cyclotomic operands of different order");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    order: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr {
            order: self.order,
            coeffs: self.coeffs.iter().map(rational_to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let repr = CyclotomicRepr::deserialize(d)?;
        if repr.order == 0 {
            return Err(D::Error::custom("cyclotomic order must be positive"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if coeffs.len() != field(repr.order).degree {
            return Err(D::Error::custom("coefficient count differs from deg Φ_N"));
        }
        Ok(Cyclotomic { order: repr.order, coeffs })
    }
}
