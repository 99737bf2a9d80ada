//! Exact scalars: big rationals, the cyclotomic field Q(ω_N), and bivariate
//! polynomials in the spectral parameters u, v over it.

mod bipoly;
mod cyclotomic;
mod denom;
mod upoly;

pub use bipoly::{BiPoly, Var};
pub use cyclotomic::{cyclotomic_polynomial, euler_phi, omega_pow, Cyclotomic, IntPoly};
pub use denom::{DenomSet, LinearFactor};

/// Base field of every coefficient.
pub type Rational = num_rational::BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub(crate) fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Renders a rational as `p` or `p/q`.
pub fn rational_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the output of [`rational_to_string`].
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if num_traits::Zero::is_zero(&d) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}
