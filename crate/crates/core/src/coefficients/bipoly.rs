use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{Cyclotomic, Rational};
use crate::error::{AlgebraError, Result};

/// One of the two spectral parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    U,
    V,
}

/// Polynomial in u, v with coefficients in Q(ω_N). Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    order: u32,
    terms: BTreeMap<(u32, u32), Cyclotomic>,
}

impl BiPoly {
    pub fn zero(order: u32) -> Self {
        BiPoly { order, terms: BTreeMap::new() }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(Cyclotomic::one(order))
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        Self::constant(Cyclotomic::from_rational(order, r))
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::constant(Cyclotomic::from_int(order, n))
    }

    /// c · u^du · v^dv
    pub fn monomial(du: u32, dv: u32, c: Cyclotomic) -> Self {
        let order = c.order();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((du, dv), c);
        }
        BiPoly { order, terms }
    }

    pub fn var(order: u32, var: Var) -> Self {
        match var {
            Var::U => Self::monomial(1, 0, Cyclotomic::one(order)),
            Var::V => Self::monomial(0, 1, Cyclotomic::one(order)),
        }
    }

    pub fn u(order: u32) -> Self {
        Self::var(order, Var::U)
    }

    pub fn v(order: u32) -> Self {
        Self::var(order, Var::V)
    }

    /// a·u + b·v + c with rational coefficients.
    pub fn linear(order: u32, a: Rational, b: Rational, c: Rational) -> Self {
        let mut out = Self::zero(order);
        out.add_term((1, 0), Cyclotomic::from_rational(order, a));
        out.add_term((0, 1), Cyclotomic::from_rational(order, b));
        out.add_term((0, 0), Cyclotomic::from_rational(order, c));
        out
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Cyclotomic> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, du: u32, dv: u32) -> Cyclotomic {
        self.terms.get(&(du, dv)).cloned().unwrap_or_else(|| Cyclotomic::zero(self.order))
    }

    /// Highest exponent of `var` present (0 for the zero polynomial).
    pub fn degree_in(&self, var: Var) -> u32 {
        self.terms
            .keys()
            .map(|&(du, dv)| if var == Var::U { du } else { dv })
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(du, dv)| du + dv).max().unwrap_or(0)
    }

    /// The terms of total degree exactly `deg`.
    pub fn homogeneous_part(&self, deg: u32) -> Self {
        let terms = self.terms.iter().filter(|((du, dv), _)| du + dv == deg).map(|(k, c)| (*k, c.clone())).collect();
        BiPoly { order: self.order, terms }
    }

    pub(crate) fn add_term(&mut self, key: (u32, u32), c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        assert_eq!(c.order(), self.order, "bipoly coefficient of different order");
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
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
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = Self::zero(self.order);
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &other.terms {
                out.add_term((a + c, b + d), x * y);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        assert_eq!(c.order(), self.order, "bipoly scaled by a cyclotomic of different order");
        if c.is_zero() {
            return Self::zero(self.order);
        }
        if c.is_one() {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, x)| (*k, x * c))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        BiPoly { order: self.order, terms }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(self.order);
        }
        let terms = self.terms.iter().map(|(k, x)| (*k, x.scale(r))).collect();
        BiPoly { order: self.order, terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.order);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Substitutes u ↦ `u`, v ↦ `v`.
    pub fn eval_at(&self, u: &Cyclotomic, v: &Cyclotomic) -> Result<Cyclotomic> {
        if u.order() != self.order {
            return Err(AlgebraError::OrderMismatch { left: self.order, right: u.order() });
        }
        if v.order() != self.order {
            return Err(AlgebraError::OrderMismatch { left: self.order, right: v.order() });
        }
        let mut acc = Cyclotomic::zero(self.order);
        for (&(du, dv), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..du {
                t = &t * u;
            }
            for _ in 0..dv {
                t = &t * v;
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Substitutes `var` ↦ −`var`.
    pub fn negate_var(&self, var: Var) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(du, dv), c)| {
                let e = if var == Var::U { du } else { dv };
                ((du, dv), if e % 2 == 1 { -c } else { c.clone() })
            })
            .collect();
        BiPoly { order: self.order, terms }
    }

    /// Exchanges u and v.
    pub fn swap_vars(&self) -> Self {
        let terms = self.terms.iter().map(|(&(du, dv), c)| ((dv, du), c.clone())).collect();
        BiPoly { order: self.order, terms }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(du, dv), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match (du, dv) {
                (0, 0) => String::new(),
                _ => {
                    let p = |s: &str, e: u32| match e {
                        0 => String::new(),
                        1 => s.to_string(),
                        _ => format!("{s}^{e}"),
                    };
                    format!("{}{}", p("u", du), p("v", dv))
                }
            };
            let is_simple = c.as_rational().is_some();
            match (mono.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) if is_simple => write!(f, "{c}·{mono}")?,
                (false, false) => write!(f, "({c})·{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly[{}]({})", self.order, self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &BiPoly) -> BiPoly {
                self.$checked(rhs).expect("bipoly operands of different order")
            }
        }
        impl $tr<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { order: self.order, terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl From<Cyclotomic> for BiPoly {
    fn from(c: Cyclotomic) -> Self {
        BiPoly::constant(c)
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::omega_pow;

    #[test]
    fn difference_of_squares() {
        let n = 3;
        let u = BiPoly::u(n);
        let v = BiPoly::v(n);
        let p = &(&u - &v) * &(&u + &v);
        let expect = &u.pow(2) - &v.pow(2);
        assert_eq!(p, expect);
        let val = p.eval_at(&Cyclotomic::from_int(n, 2), &Cyclotomic::from_int(n, 1)).unwrap();
        assert_eq!(val, Cyclotomic::from_int(n, 3));
    }

    #[test]
    fn zero_terms_are_dropped() {
        let n = 4;
        let u = BiPoly::u(n);
        assert!((&u - &u).is_zero());
        assert!((&u - &u).terms().is_empty());
        let w = BiPoly::constant(omega_pow(n, 1));
        let z = &(&w * &w) + &BiPoly::one(n);
        assert!(z.is_zero());
    }

    #[test]
    fn negation_of_parameter() {
        let n = 2;
        let p = &BiPoly::u(n).pow(3) + &BiPoly::v(n);
        let q = p.negate_var(Var::U);
        assert_eq!(q, &(-BiPoly::u(n).pow(3)) + &BiPoly::v(n));
        assert_eq!(q.negate_var(Var::U), p);
    }

    #[test]
    fn order_mismatch() {
        assert!(BiPoly::u(2).try_add(&BiPoly::u(3)).is_err());
        assert!(BiPoly::u(2).eval_at(&Cyclotomic::one(3), &Cyclotomic::one(2)).is_err());
    }
}
