use std::fmt;

use crate::coefficients::{BiPoly, Cyclotomic};
use crate::error::Result;

/// Coefficient rings that can populate a [`crate::tensor::TensorMat`].
///
/// Every element carries the cyclotomic order N of its scalars, so zero and
/// one are built from that order.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero(order: u32) -> Self;
    fn one(order: u32) -> Self;
    fn order(&self) -> u32;
    fn is_zero(&self) -> bool;
    fn try_add(&self, other: &Self) -> Result<Self>;
    fn try_sub(&self, other: &Self) -> Result<Self>;
    fn try_mul(&self, other: &Self) -> Result<Self>;
    fn negated(&self) -> Self;
    fn scale(&self, c: &Cyclotomic) -> Self;
}

impl Ring for Cyclotomic {
    fn zero(order: u32) -> Self {
        Cyclotomic::zero(order)
    }
    fn one(order: u32) -> Self {
        Cyclotomic::one(order)
    }
    fn order(&self) -> u32 {
        Cyclotomic::order(self)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn try_add(&self, other: &Self) -> Result<Self> {
        Cyclotomic::try_add(self, other)
    }
    fn try_sub(&self, other: &Self) -> Result<Self> {
        Cyclotomic::try_sub(self, other)
    }
    fn try_mul(&self, other: &Self) -> Result<Self> {
        Cyclotomic::try_mul(self, other)
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Cyclotomic) -> Self {
        self * c
    }
}

impl Ring for BiPoly {
    fn zero(order: u32) -> Self {
        BiPoly::zero(order)
    }
    fn one(order: u32) -> Self {
        BiPoly::one(order)
    }
    fn order(&self) -> u32 {
        BiPoly::order(self)
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
    fn try_add(&self, other: &Self) -> Result<Self> {
        BiPoly::try_add(self, other)
    }
    fn try_sub(&self, other: &Self) -> Result<Self> {
        BiPoly::try_sub(self, other)
    }
    fn try_mul(&self, other: &Self) -> Result<Self> {
        BiPoly::try_mul(self, other)
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Cyclotomic) -> Self {
        BiPoly::scale(self, c)
    }
}
