//! JSON export of the basis data behind the checks.
//!
//! Schema (version 1). Every number of Q(ω_N) is a list of rationals, the
//! coefficients of 1, ω, …, ω^{φ(N)−1}, each written `p` or `p/q`. A matrix
//! is the list of its nonzero entries `{row, col, value}`. The file holds:
//!
//! - `principal`: A_ij for all (i, j), and `duals`: the dual basis element
//!   paired with A_ij under the trace form;
//! - `structure`: A_ij A_kl = c A_{i+k,j+l} for all four indices;
//! - `twisted_f`, `twisted_b`: F_ij and B_ij, with `ranks` of their spans
//!   and the expected dimension (both empty or absent for gl).

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use yangian_core::coefficients::{parse_rational, rational_to_string, Cyclotomic};
use yangian_core::principal::{span_rank, structure_product, PrincipalBasis, TwistedBasis};
use yangian_core::relations::Case;
use yangian_core::tensor::{IndexPair, TensorMat};

use crate::error::{HarnessError, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntry {
    pub row: usize,
    pub col: usize,
    pub value: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub i: u32,
    pub j: u32,
    pub entries: Vec<MatrixEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureEntry {
    pub left: [u32; 2],
    pub right: [u32; 2],
    pub coefficient: Vec<String>,
    pub product: [u32; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanRanks {
    pub f: usize,
    pub b: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tables {
    pub schema: u32,
    pub case: Case,
    pub n: u32,
    pub principal: Vec<BasisEntry>,
    pub duals: Vec<BasisEntry>,
    pub structure: Vec<StructureEntry>,
    pub twisted_f: Vec<BasisEntry>,
    pub twisted_b: Vec<BasisEntry>,
    pub ranks: Option<SpanRanks>,
}

fn encode_scalar(c: &Cyclotomic) -> Vec<String> {
    c.coeffs().iter().map(rational_to_string).collect()
}

fn decode_scalar(n: u32, value: &[String]) -> Result<Cyclotomic> {
    let coeffs = value
        .iter()
        .map(|s| parse_rational(s).ok_or_else(|| HarnessError::Config(format!("bad rational `{s}` in table"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Cyclotomic::from_poly(n, coeffs))
}

fn encode_matrix(p: IndexPair, m: &TensorMat<Cyclotomic>) -> BasisEntry {
    let entries = m
        .nonzero()
        .map(|(row, col, x)| MatrixEntry { row, col, value: encode_scalar(x) })
        .collect();
    BasisEntry { i: p.i, j: p.j, entries }
}

impl BasisEntry {
    pub fn to_matrix(&self, n: u32) -> Result<TensorMat<Cyclotomic>> {
        let d = n as usize;
        let mut m = TensorMat::zeros(d, n);
        for e in &self.entries {
            if e.row >= d || e.col >= d {
                return Err(HarnessError::Config(format!("entry ({}, {}) outside an {d}×{d} matrix", e.row, e.col)));
            }
            m.set(e.row, e.col, decode_scalar(n, &e.value)?);
        }
        Ok(m)
    }
}

impl StructureEntry {
    pub fn coefficient(&self, n: u32) -> Result<Cyclotomic> {
        decode_scalar(n, &self.coefficient)
    }
}

/// Builds the tables for one case and size.
pub fn build_tables(n: u32, case: Case) -> Result<Tables> {
    if !case.supports(n) {
        return Err(HarnessError::Config(format!("case {case} does not admit N = {n}")));
    }
    let basis = PrincipalBasis::new(n);
    let principal = IndexPair::all(n).map(|p| encode_matrix(p, basis.at(p))).collect();
    let duals = IndexPair::all(n).map(|p| encode_matrix(p, &basis.dual(p.i as i64, p.j as i64))).collect();
    let mut structure = Vec::new();
    for a in IndexPair::all(n) {
        for b in IndexPair::all(n) {
            let (c, prod) = structure_product(n, a.i as i64, a.j as i64, b.i as i64, b.j as i64);
            structure.push(StructureEntry {
                left: [a.i, a.j],
                right: [b.i, b.j],
                coefficient: encode_scalar(&c),
                product: [prod.i, prod.j],
            });
        }
    }
    let (twisted_f, twisted_b, ranks) = match case.sign_vector(n)? {
        None => (Vec::new(), Vec::new(), None),
        Some(s) => {
            let tb = TwistedBasis::new(&s)?;
            let f = IndexPair::all(n).map(|p| encode_matrix(p, tb.f(p.i as i64, p.j as i64))).collect();
            let b = IndexPair::all(n).map(|p| encode_matrix(p, tb.b(p.i as i64, p.j as i64))).collect();
            let ranks = SpanRanks {
                f: span_rank(tb.f_family()),
                b: span_rank(tb.b_family()),
                expected: tb.expected_dimension(),
            };
            (f, b, Some(ranks))
        }
    };
    Ok(Tables { schema: SCHEMA_VERSION, case, n, principal, duals, structure, twisted_f, twisted_b, ranks })
}

/// Writes the tables for (N, case) to `path` as pretty JSON.
pub fn export_tables(n: u32, case: Case, path: &Path) -> Result<Tables> {
    let tables = build_tables(n, case)?;
    let mut text = serde_json::to_string_pretty(&tables)?;
    text.push('\n');
    fs::write(path, text).map_err(|e| HarnessError::io(path, e))?;
    Ok(tables)
}

pub fn import_tables(path: &Path) -> Result<Tables> {
    let text = fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
    let tables: Tables = serde_json::from_str(&text)?;
    if tables.schema != SCHEMA_VERSION {
        return Err(HarnessError::Config(format!("table schema {} is not supported", tables.schema)));
    }
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_has_four_principal_entries() {
        let t = build_tables(2, Case::Gl).unwrap();
        assert_eq!(t.principal.len(), 4);
        assert_eq!(t.structure.len(), 16);
        assert!(t.twisted_b.is_empty());
        assert_eq!(t.ranks, None);
    }

    #[test]
    fn scalars_survive_encoding() {
        let c = yangian_core::coefficients::omega_pow(5, 3);
        assert_eq!(decode_scalar(5, &encode_scalar(&c)).unwrap(), c);
    }

    #[test]
    fn odd_sp_is_refused() {
        assert!(build_tables(3, Case::Sp).is_err());
    }
}
