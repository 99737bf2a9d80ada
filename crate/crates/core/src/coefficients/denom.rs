use std::fmt;

use super::{rat, rat_frac, BiPoly, Cyclotomic};

/// The linear forms allowed as cleared denominators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinearFactor {
    UMinusV,
    UPlusV,
    TwoU,
    TwoV,
    UPlusHalf,
    UMinusHalf,
    VPlusHalf,
    VMinusHalf,
}

impl LinearFactor {
    pub const ALL: [LinearFactor; 8] = [
        LinearFactor::UMinusV,
        LinearFactor::UPlusV,
        LinearFactor::TwoU,
        LinearFactor::TwoV,
        LinearFactor::UPlusHalf,
        LinearFactor::UMinusHalf,
        LinearFactor::VPlusHalf,
        LinearFactor::VMinusHalf,
    ];

    pub fn to_bipoly(self, order: u32) -> BiPoly {
        use LinearFactor::*;
        let (a, b, c) = match self {
            UMinusV => (rat(1), rat(-1), rat(0)),
            UPlusV => (rat(1), rat(1), rat(0)),
            TwoU => (rat(2), rat(0), rat(0)),
            TwoV => (rat(0), rat(2), rat(0)),
            UPlusHalf => (rat(1), rat(0), rat_frac(1, 2)),
            UMinusHalf => (rat(1), rat(0), rat_frac(-1, 2)),
            VPlusHalf => (rat(0), rat(1), rat_frac(1, 2)),
            VMinusHalf => (rat(0), rat(1), rat_frac(-1, 2)),
        };
        BiPoly::linear(order, a, b, c)
    }

    /// u ± 1/2 (or v ± 1/2) for the evaluation sign.
    pub fn shifted(var: super::Var, plus: bool) -> Self {
        match (var, plus) {
            (super::Var::U, true) => LinearFactor::UPlusHalf,
            (super::Var::U, false) => LinearFactor::UMinusHalf,
            (super::Var::V, true) => LinearFactor::VPlusHalf,
            (super::Var::V, false) => LinearFactor::VMinusHalf,
        }
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use LinearFactor::*;
        let s = match self {
            UMinusV => "u-v",
            UPlusV => "u+v",
            TwoU => "2u",
            TwoV => "2v",
            UPlusHalf => "u+1/2",
            UMinusHalf => "u-1/2",
            VPlusHalf => "v+1/2",
            VMinusHalf => "v-1/2",
        };
        write!(f, "({s})")
    }
}

/// A multiset of linear factors whose product clears the denominators of an identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DenomSet {
    factors: Vec<LinearFactor>,
}

impl DenomSet {
    pub fn new(mut factors: Vec<LinearFactor>) -> Self {
        factors.sort();
        DenomSet { factors }
    }

    pub fn factors(&self) -> &[LinearFactor] {
        &self.factors
    }

    pub fn push(&mut self, f: LinearFactor) {
        self.factors.push(f);
        self.factors.sort();
    }

    pub fn product(&self, order: u32) -> BiPoly {
        self.factors
            .iter()
            .fold(BiPoly::one(order), |acc, f| &acc * &f.to_bipoly(order))
    }

    /// Whether some factor vanishes at (u, v).
    pub fn vanishes_at(&self, u: &Cyclotomic, v: &Cyclotomic) -> bool {
        self.factors.iter().any(|f| {
            f.to_bipoly(u.order())
                .eval_at(u, v)
                .map(|x| x.is_zero())
                .unwrap_or(true)
        })
    }
}

impl fmt::Display for DenomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for x in &self.factors {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_factors() {
        let n = 2;
        let d = DenomSet::new(vec![LinearFactor::UMinusV, LinearFactor::UPlusV]);
        let p = d.product(n);
        assert_eq!(p, &BiPoly::u(n).pow(2) - &BiPoly::v(n).pow(2));
        assert!(!p.is_zero());
        let half = Cyclotomic::from_rational(n, rat_frac(1, 2));
        let e = DenomSet::new(vec![LinearFactor::UMinusHalf]);
        assert!(e.vanishes_at(&half, &Cyclotomic::zero(n)));
        assert!(!d.vanishes_at(&half, &Cyclotomic::zero(n)));
        assert_eq!(d.to_string(), "(u-v)(u+v)");
    }
}
