//! Formal linear combinations of ordered words of length ≤ 2 in generator
//! series symbols, with coefficients in Q(ω_N)[u, v].
//!
//! No relations are imposed between symbols, so two expressions are equal
//! exactly when every word carries the same polynomial coefficient. The one
//! exception is [`normal_order_enveloping`], which rewrites words in the
//! matrix-unit generators of U(gl_N) into PBW order.

use std::collections::BTreeMap;
use std::fmt;

use crate::coefficients::{omega_pow, BiPoly, Cyclotomic, Var};
use crate::error::{AlgebraError, Result};
use crate::principal::inv_n;
use crate::ring::Ring;
use crate::tensor::IndexPair;

/// Generator families: t, x for Y(gl_N); s, y for the twisted Yangian; e for
/// the matrix units E_ij inside U(gl_N), which carry no spectral parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    T,
    X,
    S,
    Y,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::T => 't',
            Family::X => 'x',
            Family::S => 's',
            Family::Y => 'y',
            Family::E => 'e',
        }
    }

    /// Whether the order-0 coefficient of the series is δ_{i0}δ_{j0} (principal)
    /// rather than δ_ij (classical).
    fn is_principal(self) -> bool {
        matches!(self, Family::X | Family::Y)
    }
}

/// Spectral-parameter tag of a series symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    U,
    NegU,
    V,
    NegV,
}

impl Param {
    pub fn var(self) -> Var {
        match self {
            Param::U | Param::NegU => Var::U,
            Param::V | Param::NegV => Var::V,
        }
    }

    pub fn is_negated(self) -> bool {
        matches!(self, Param::NegU | Param::NegV)
    }

    fn flipped(self, var: Var) -> Self {
        match (self, var) {
            (Param::U, Var::U) => Param::NegU,
            (Param::NegU, Var::U) => Param::U,
            (Param::V, Var::V) => Param::NegV,
            (Param::NegV, Var::V) => Param::V,
            (p, _) => p,
        }
    }

    fn swapped(self) -> Self {
        match self {
            Param::U => Param::V,
            Param::NegU => Param::NegV,
            Param::V => Param::U,
            Param::NegV => Param::NegU,
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Param::U => "u",
            Param::NegU => "-u",
            Param::V => "v",
            Param::NegV => "-v",
        })
    }
}

/// A generator series such as s_ij(u) or y_kl(−v).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSymbol {
    pub family: Family,
    pub index: IndexPair,
    pub param: Option<Param>,
}

impl GenSymbol {
    pub fn new(n: u32, family: Family, i: i64, j: i64, param: Param) -> Self {
        GenSymbol { family, index: IndexPair::new(n, i, j), param: Some(param) }
    }

    /// The U(gl_N) generator E_ij.
    pub fn unit(n: u32, i: i64, j: i64) -> Self {
        GenSymbol { family: Family::E, index: IndexPair::new(n, i, j), param: None }
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{{{},{}}}", self.family.letter(), self.index.i, self.index.j)?;
        if let Some(p) = self.param {
            write!(f, "({p})")?;
        }
        Ok(())
    }
}

/// An ordered word of length 0, 1 or 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Word {
    Unit,
    One(GenSymbol),
    Two(GenSymbol, GenSymbol),
}

impl Word {
    pub fn degree(&self) -> usize {
        match self {
            Word::Unit => 0,
            Word::One(_) => 1,
            Word::Two(..) => 2,
        }
    }

    pub fn symbols(&self) -> Vec<GenSymbol> {
        match *self {
            Word::Unit => vec![],
            Word::One(a) => vec![a],
            Word::Two(a, b) => vec![a, b],
        }
    }

    fn concat(&self, other: &Word) -> Result<Word> {
        let mut syms = self.symbols();
        syms.extend(other.symbols());
        Word::from_symbols(&syms)
    }

    pub fn from_symbols(syms: &[GenSymbol]) -> Result<Word> {
        match *syms {
            [] => Ok(Word::Unit),
            [a] => Ok(Word::One(a)),
            [a, b] => Ok(Word::Two(a, b)),
            _ => Err(AlgebraError::DegreeOverflow(syms.len())),
        }
    }

    fn map_symbols(&self, f: impl Fn(GenSymbol) -> GenSymbol) -> Word {
        match *self {
            Word::Unit => Word::Unit,
            Word::One(a) => Word::One(f(a)),
            Word::Two(a, b) => Word::Two(f(a), f(b)),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Unit => write!(f, "1"),
            Word::One(a) => write!(f, "{a}"),
            Word::Two(a, b) => write!(f, "{a}·{b}"),
        }
    }
}

/// Σ_w c_w · w over words of degree ≤ 2 with polynomial coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadExpr {
    order: u32,
    terms: BTreeMap<Word, BiPoly>,
}

impl QuadExpr {
    pub fn zero(order: u32) -> Self {
        QuadExpr { order, terms: BTreeMap::new() }
    }

    pub fn one(order: u32) -> Self {
        Self::scalar(BiPoly::one(order))
    }

    pub fn scalar(c: BiPoly) -> Self {
        let mut out = Self::zero(c.order());
        out.add_term(Word::Unit, c);
        out
    }

    pub fn symbol(order: u32, sym: GenSymbol) -> Self {
        let mut out = Self::zero(order);
        out.add_term(Word::One(sym), BiPoly::one(order));
        out
    }

    pub fn word(order: u32, word: Word, coeff: BiPoly) -> Self {
        let mut out = Self::zero(order);
        out.add_term(word, coeff);
        out
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Word, BiPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> BiPoly {
        self.terms.get(w).cloned().unwrap_or_else(|| BiPoly::zero(self.order))
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, word: Word, c: BiPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &QuadExpr) {
        for (w, c) in &other.terms {
            self.add_term(*w, c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &QuadExpr) {
        for (w, c) in &other.terms {
            self.add_term(*w, -c);
        }
    }

    pub fn plus(&self, other: &QuadExpr) -> QuadExpr {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &QuadExpr) -> QuadExpr {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn scale_poly(&self, p: &BiPoly) -> QuadExpr {
        let mut out = QuadExpr::zero(self.order);
        for (w, c) in &self.terms {
            out.add_term(*w, c * p);
        }
        out
    }

    pub fn scale_cyc(&self, c: &Cyclotomic) -> QuadExpr {
        let mut out = QuadExpr::zero(self.order);
        for (w, x) in &self.terms {
            out.add_term(*w, x.scale(c));
        }
        out
    }

    /// Symbols of every family present.
    pub fn families(&self) -> Vec<Family> {
        let mut fams: Vec<Family> = self
            .terms
            .keys()
            .flat_map(|w| w.symbols())
            .map(|s| s.family)
            .collect();
        fams.sort();
        fams.dedup();
        fams
    }

    /// Replaces each symbol by its image (or keeps it when `image` returns
    /// `None`) and expands words bilinearly.
    pub fn substitute_with(&self, image: impl Fn(&GenSymbol) -> Option<QuadExpr>) -> Result<QuadExpr> {
        let mut out = QuadExpr::zero(self.order);
        for (w, c) in &self.terms {
            let mut acc = QuadExpr::scalar(c.clone());
            for sym in w.symbols() {
                let img = image(&sym).unwrap_or_else(|| QuadExpr::symbol(self.order, sym));
                acc = quad_mul(&acc, &img)?;
            }
            out.add_assign(&acc);
        }
        Ok(out)
    }

    /// Exchanges the roles of u and v in tags and coefficients.
    pub fn swap_params(&self) -> QuadExpr {
        let mut out = QuadExpr::zero(self.order);
        for (w, c) in &self.terms {
            let w2 = w.map_symbols(|s| GenSymbol { param: s.param.map(Param::swapped), ..s });
            out.add_term(w2, c.swap_vars());
        }
        out
    }

    /// Reverses the order of every word.
    pub fn reverse_words(&self) -> QuadExpr {
        let mut out = QuadExpr::zero(self.order);
        for (w, c) in &self.terms {
            let w2 = match *w {
                Word::Two(a, b) => Word::Two(b, a),
                other => other,
            };
            out.add_term(w2, c.clone());
        }
        out
    }
}

impl fmt::Display for QuadExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| match w {
                Word::Unit => format!("({c})"),
                _ => format!("({c})·{w}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for QuadExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExpr[{}]({})", self.order, self)
    }
}

/// Concatenation product, bilinear over polynomial coefficients.
pub fn quad_mul(a: &QuadExpr, b: &QuadExpr) -> Result<QuadExpr> {
    if a.order != b.order {
        return Err(AlgebraError::OrderMismatch { left: a.order, right: b.order });
    }
    let mut out = QuadExpr::zero(a.order);
    for (w1, c1) in &a.terms {
        for (w2, c2) in &b.terms {
            let w = w1.concat(w2)?;
            out.add_term(w, c1 * c2);
        }
    }
    Ok(out)
}

impl Ring for QuadExpr {
    fn zero(order: u32) -> Self {
        QuadExpr::zero(order)
    }
    fn one(order: u32) -> Self {
        QuadExpr::one(order)
    }
    fn order(&self) -> u32 {
        self.order
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn try_add(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(self.plus(other))
    }
    fn try_sub(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(self.minus(other))
    }
    fn try_mul(&self, other: &Self) -> Result<Self> {
        quad_mul(self, other)
    }
    fn negated(&self) -> Self {
        let mut out = QuadExpr::zero(self.order);
        for (w, c) in &self.terms {
            out.terms.insert(*w, -c);
        }
        out
    }
    fn scale(&self, c: &Cyclotomic) -> Self {
        self.scale_cyc(c)
    }
}

/// Direction of a Fourier change of generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Classical symbols (t or s) rewritten through principal ones (x or y):
    /// s_ij ↦ Σ_k ω^{ik} y_{k,j−i}.
    ClassicalToPrincipal,
    /// Principal symbols rewritten through classical ones:
    /// y_kl ↦ Σ_i (ω^{−ki}/N) s_{i,i+l}.
    PrincipalToClassical,
}

/// The Fourier substitution between a classical and a principal family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FourierSubstitution {
    pub direction: Direction,
    pub classical: Family,
    pub principal: Family,
}

impl FourierSubstitution {
    pub fn s_to_y() -> Self {
        FourierSubstitution { direction: Direction::ClassicalToPrincipal, classical: Family::S, principal: Family::Y }
    }

    pub fn y_to_s() -> Self {
        FourierSubstitution { direction: Direction::PrincipalToClassical, classical: Family::S, principal: Family::Y }
    }

    pub fn t_to_x() -> Self {
        FourierSubstitution { direction: Direction::ClassicalToPrincipal, classical: Family::T, principal: Family::X }
    }

    pub fn x_to_t() -> Self {
        FourierSubstitution { direction: Direction::PrincipalToClassical, classical: Family::T, principal: Family::X }
    }

    pub fn inverse(self) -> Self {
        let direction = match self.direction {
            Direction::ClassicalToPrincipal => Direction::PrincipalToClassical,
            Direction::PrincipalToClassical => Direction::ClassicalToPrincipal,
        };
        FourierSubstitution { direction, ..self }
    }

    pub fn source(self) -> Family {
        match self.direction {
            Direction::ClassicalToPrincipal => self.classical,
            Direction::PrincipalToClassical => self.principal,
        }
    }

    /// Image of a single source symbol.
    pub fn image(self, n: u32, sym: &GenSymbol) -> QuadExpr {
        let nn = n as i64;
        let (i, j) = (sym.index.i as i64, sym.index.j as i64);
        let param = sym.param.expect("series symbols carry a parameter");
        let mut out = QuadExpr::zero(n);
        match self.direction {
            Direction::ClassicalToPrincipal => {
                for k in 0..nn {
                    let s = GenSymbol::new(n, self.principal, k, j - i, param);
                    out.add_term(Word::One(s), BiPoly::constant(omega_pow(n, i * k)));
                }
            }
            Direction::PrincipalToClassical => {
                let scale = inv_n(n);
                for m in 0..nn {
                    let s = GenSymbol::new(n, self.classical, m, m + j, param);
                    out.add_term(Word::One(s), BiPoly::constant(&omega_pow(n, -i * m) * &scale));
                }
            }
        }
        out
    }
}

/// Rewrites every symbol of the source family through `f`. Symbols of any
/// other family are rejected.
pub fn substitute(e: &QuadExpr, f: FourierSubstitution) -> Result<QuadExpr> {
    let src = f.source();
    if let Some(bad) = e.families().into_iter().find(|&fam| fam != src) {
        return Err(AlgebraError::MixedFamily(format!(
            "expected only {}-symbols, found {}",
            src.letter(),
            bad.letter()
        )));
    }
    let n = e.order();
    e.substitute_with(|sym| Some(f.image(n, sym)))
}

/// u ↦ −u (or v ↦ −v) in both the symbol tags and the coefficients.
pub fn negate_param(e: &QuadExpr, which: Var) -> QuadExpr {
    let mut out = QuadExpr::zero(e.order);
    for (w, c) in &e.terms {
        let w2 = w.map_symbols(|s| GenSymbol { param: s.param.map(|p| p.flipped(which)), ..s });
        out.add_term(w2, c.negate_var(which));
    }
    out
}

/// Outcome of comparing two expressions word by word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EqOutcome {
    Equal,
    Differ { word: Word, left: BiPoly, right: BiPoly },
}

impl EqOutcome {
    pub fn is_equal(&self) -> bool {
        matches!(self, EqOutcome::Equal)
    }
}

/// Word-by-word comparison; on failure reports the first differing word.
pub fn expr_eq(a: &QuadExpr, b: &QuadExpr) -> EqOutcome {
    let diff = a.minus(b);
    match diff.terms.keys().next() {
        None => EqOutcome::Equal,
        Some(w) => EqOutcome::Differ { word: *w, left: a.coefficient(w), right: b.coefficient(w) },
    }
}

/// Reduces an expression in the U(gl_N) generators e_ij to PBW normal form:
/// every degree-2 word e_p e_q with p > q is rewritten as e_q e_p + [e_p, e_q],
/// using [E_ij, E_kl] = δ_jk E_il − δ_li E_kj.
pub fn normal_order_enveloping(e: &QuadExpr) -> Result<QuadExpr> {
    let n = e.order;
    let mut out = QuadExpr::zero(n);
    for (w, c) in &e.terms {
        if w.symbols().iter().any(|s| s.family != Family::E) {
            return Err(AlgebraError::MixedFamily("normal ordering applies to e-symbols only".into()));
        }
        match *w {
            Word::Two(a, b) if a > b => {
                out.add_term(Word::Two(b, a), c.clone());
                let (i, j) = (a.index.i, a.index.j);
                let (k, l) = (b.index.i, b.index.j);
                if j == k {
                    out.add_term(Word::One(GenSymbol::unit(n, i as i64, l as i64)), c.clone());
                }
                if l == i {
                    out.add_term(Word::One(GenSymbol::unit(n, k as i64, j as i64)), -c);
                }
            }
            _ => out.add_term(*w, c.clone()),
        }
    }
    Ok(out)
}

/// A generator coefficient such as s^{(r)}_ij.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedSymbol {
    pub family: Family,
    pub index: IndexPair,
    pub degree: u32,
}

impl fmt::Display for GradedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^({})_{{{},{}}}", self.family.letter(), self.degree, self.index.i, self.index.j)
    }
}

/// Linear combination of words in generator coefficients, with scalar coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedExpr {
    pub order: u32,
    pub terms: BTreeMap<Vec<GradedSymbol>, Cyclotomic>,
}

impl GradedExpr {
    fn add_term(&mut self, w: Vec<GradedSymbol>, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(|| Cyclotomic::zero(c.order()));
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    /// Terms of a given word length.
    pub fn part(&self, len: usize) -> BTreeMap<Vec<GradedSymbol>, Cyclotomic> {
        self.terms.iter().filter(|(w, _)| w.len() == len).map(|(w, c)| (w.clone(), c.clone())).collect()
    }
}

/// Expands each series symbol as X(±w) = Σ_r X^{(r)} (±w)^{−r}, with X^{(0)}
/// the identity pattern of its family, and returns the coefficient of u^pu v^pv.
pub fn series_coefficient(e: &QuadExpr, pu: i64, pv: i64) -> Result<GradedExpr> {
    let n = e.order;
    let mut out = GradedExpr { order: n, terms: BTreeMap::new() };
    for (w, c) in &e.terms {
        let syms = w.symbols();
        let mut params = Vec::new();
        for s in &syms {
            match s.param {
                Some(p) => params.push(p),
                None => return Err(AlgebraError::MixedFamily("series expansion needs tagged symbols".into())),
            }
        }
        for (&(du, dv), kappa) in c.terms() {
            let need_u = du as i64 - pu;
            let need_v = dv as i64 - pv;
            if need_u < 0 || need_v < 0 {
                continue;
            }
            // Distribute the required negative powers over the symbols of each variable.
            let bound = need_u.max(need_v) as u32;
            let mut choices: Vec<Vec<u32>> = vec![vec![]];
            for _ in &syms {
                choices = choices
                    .into_iter()
                    .flat_map(|pre| (0..=bound).map(move |r| {
                        let mut v = pre.clone();
                        v.push(r);
                        v
                    }))
                    .collect();
            }
            for rs in choices {
                let su: i64 = rs.iter().zip(&params).filter(|(_, p)| p.var() == Var::U).map(|(r, _)| *r as i64).sum();
                let sv: i64 = rs.iter().zip(&params).filter(|(_, p)| p.var() == Var::V).map(|(r, _)| *r as i64).sum();
                if su != need_u || sv != need_v {
                    continue;
                }
                let mut coeff = kappa.clone();
                let mut word = Vec::new();
                let mut vanished = false;
                for ((s, p), &r) in syms.iter().zip(&params).zip(&rs) {
                    if p.is_negated() && r % 2 == 1 {
                        coeff = -coeff;
                    }
                    if r == 0 {
                        let id = if s.family.is_principal() {
                            s.index.i == 0 && s.index.j == 0
                        } else {
                            s.index.i == s.index.j
                        };
                        if !id {
                            vanished = true;
                            break;
                        }
                    } else {
                        word.push(GradedSymbol { family: s.family, index: s.index, degree: r });
                    }
                }
                if !vanished {
                    out.add_term(word, coeff);
                }
            }
        }
    }
    Ok(out)
}

/// A convenience for building the series symbol of a family at an index.
pub fn sym(n: u32, family: Family, i: i64, j: i64, param: Param) -> QuadExpr {
    QuadExpr::symbol(n, GenSymbol::new(n, family, i, j, param))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u32, i: i64, j: i64, p: Param) -> QuadExpr {
        sym(n, Family::S, i, j, p)
    }

    #[test]
    fn products_and_overflow() {
        let n = 3;
        let one = QuadExpr::one(n);
        let a = s(n, 0, 1, Param::U);
        let b = s(n, 1, 0, Param::V);
        assert_eq!(quad_mul(&one, &a).unwrap(), a);
        let ab = quad_mul(&a, &b).unwrap();
        let w = Word::Two(GenSymbol::new(n, Family::S, 0, 1, Param::U), GenSymbol::new(n, Family::S, 1, 0, Param::V));
        assert_eq!(ab.coefficient(&w), BiPoly::one(n));
        let bc = quad_mul(&b, &s(n, 0, 0, Param::U)).unwrap();
        assert_eq!(quad_mul(&a, &bc), Err(AlgebraError::DegreeOverflow(3)));
    }

    #[test]
    fn free_algebra_equality() {
        let n = 3;
        let a = s(n, 0, 1, Param::U);
        let b = s(n, 1, 0, Param::V);
        assert!(expr_eq(&a, &a.plus(&QuadExpr::zero(n))).is_equal());
        let ab = quad_mul(&a, &b).unwrap();
        let ba = quad_mul(&b, &a).unwrap();
        assert!(!expr_eq(&ab, &ba).is_equal());
        let c = QuadExpr::scalar(&BiPoly::u(n) - &BiPoly::v(n));
        let lhs = quad_mul(&c, &ab).unwrap();
        let rhs = quad_mul(&ab, &c).unwrap();
        assert!(expr_eq(&lhs, &rhs).is_equal());
    }

    #[test]
    fn substitution_examples() {
        let n = 3;
        let y00 = sym(n, Family::Y, 0, 0, Param::U);
        let img = substitute(&y00, FourierSubstitution::y_to_s()).unwrap();
        let mut expect = QuadExpr::zero(n);
        for i in 0..3 {
            expect.add_assign(&s(n, i, i, Param::U).scale_cyc(&inv_n(n)));
        }
        assert_eq!(img, expect);
        let x00 = sym(n, Family::X, 0, 0, Param::V);
        let img = substitute(&x00, FourierSubstitution::x_to_t()).unwrap();
        assert_eq!(img.terms().len(), 3);
        assert!(substitute(&y00, FourierSubstitution::s_to_y()).is_err());
    }

    #[test]
    fn negate_param_examples() {
        let n = 2;
        let e = s(n, 0, 1, Param::U);
        assert_eq!(negate_param(&e, Var::U), s(n, 0, 1, Param::NegU));
        let ue = e.scale_poly(&BiPoly::u(n));
        let flipped = negate_param(&ue, Var::U);
        assert_eq!(flipped, s(n, 0, 1, Param::NegU).scale_poly(&-BiPoly::u(n)));
        assert_eq!(negate_param(&flipped, Var::U), ue);
    }

    #[test]
    fn enveloping_normal_order() {
        let n = 2;
        let e01 = QuadExpr::symbol(n, GenSymbol::unit(n, 0, 1));
        let e10 = QuadExpr::symbol(n, GenSymbol::unit(n, 1, 0));
        // e10 e01 − e01 e10 = [E10, E01] = E11 − E00
        let lhs = quad_mul(&e10, &e01).unwrap().minus(&quad_mul(&e01, &e10).unwrap());
        let lhs = normal_order_enveloping(&lhs).unwrap();
        let e00 = QuadExpr::symbol(n, GenSymbol::unit(n, 0, 0));
        let e11 = QuadExpr::symbol(n, GenSymbol::unit(n, 1, 1));
        assert_eq!(lhs, e11.minus(&e00));
    }

    #[test]
    fn series_extraction_of_commutator() {
        let n = 2;
        // (u²−v²) s_01(u) s_10(v): coefficient of u¹v⁻¹ is s1_01 s1_10.
        let p = &BiPoly::u(n).pow(2) - &BiPoly::v(n).pow(2);
        let e = quad_mul(&s(n, 0, 1, Param::U), &s(n, 1, 0, Param::V)).unwrap().scale_poly(&p);
        let g = series_coefficient(&e, 1, -1).unwrap();
        assert_eq!(g.terms.len(), 1);
        let (w, c) = g.terms.iter().next().unwrap();
        assert!(c.is_one());
        assert_eq!(w.len(), 2);
        assert_eq!(w[0].degree, 1);
        // u·s_00(u)s_01(v): coefficient u¹v⁻¹ picks s^(0)_00 = 1 and s^(1)_01.
        let e = quad_mul(&s(n, 0, 0, Param::U), &s(n, 0, 1, Param::V)).unwrap().scale_poly(&BiPoly::u(n));
        let g = series_coefficient(&e, 1, -1).unwrap();
        assert_eq!(g.part(1).len(), 1);
    }
}
