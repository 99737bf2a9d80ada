//! Relation builders and the two verification engines.
//!
//! Presentation-equivalence checks expand one tensor identity in two bases
//! over the free quadratic space of [`crate::formal`] and compare component
//! by component. Evaluation checks substitute matrix images and verify the
//! resulting cleared polynomial identities in U(gl_N).

pub mod classical;
pub mod engine;
pub mod evaluation;
pub mod gl;
mod report;
pub mod twisted;

use std::fmt;
use std::time::Instant;

pub use report::{Case, CheckReport, Outcome, Status, Witness};

use crate::error::{AlgebraError, Result};

/// Single deliberate corruptions of a compared formula, used as negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mutation {
    /// R₁₂(u) = 1 + P/u on one side of the Yang–Baxter equation.
    YbeSign,
    /// ω^{ib−bk−ab} → ω^{ib−bk} in the principal RTT relation.
    RttPhase,
    /// x_{k+a,l+b}(v) → x_{k+a,l−b}(v) in the principal RTT relation.
    RttIndex,
    /// ω^{jk} → ω^{jk+1} in the structure-constant law.
    StructurePhase,
    /// (A_ij|A_kl) claimed with the opposite sign.
    PairingSign,
    /// ω^{−i(1+j)} → ω^{−ij} in the transpose of A_ij.
    TransposePhase,
    /// B_ij = A_ij + A^t_ij.
    BSign,
    /// ω^{−k} dropped from the principal decomposition of Q.
    QPhase,
    /// ω^{−a+bi−la} → ω^{bi−la} in the S₂QS₁ − S₁QS₂ block.
    QBlockPhase,
    /// ω^{b(i−k−a)} → ω^{b(i−k)} in the PS₁S₂ − S₂S₁P block.
    PBlockPhase,
    /// The ± of the symmetric relation flipped.
    SymmetricSign,
    /// θ_kθ_{j'} → −θ_kθ_{j'} in the componentwise reflection relation.
    ClassicalTheta,
    /// The evaluation map uses the shift of the other case.
    EvalShift,
    /// s^{(1)}_pq ↦ F_qp in the bracket comparison.
    EmbeddingIndex,
}

impl Mutation {
    pub const ALL: [Mutation; 14] = [
        Mutation::YbeSign,
        Mutation::RttPhase,
        Mutation::RttIndex,
        Mutation::StructurePhase,
        Mutation::PairingSign,
        Mutation::TransposePhase,
        Mutation::BSign,
        Mutation::QPhase,
        Mutation::QBlockPhase,
        Mutation::PBlockPhase,
        Mutation::SymmetricSign,
        Mutation::ClassicalTheta,
        Mutation::EvalShift,
        Mutation::EmbeddingIndex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::YbeSign => "ybe-sign",
            Mutation::RttPhase => "rtt-phase",
            Mutation::RttIndex => "rtt-index",
            Mutation::StructurePhase => "structure-phase",
            Mutation::PairingSign => "pairing-sign",
            Mutation::TransposePhase => "transpose-phase",
            Mutation::BSign => "b-sign",
            Mutation::QPhase => "q-phase",
            Mutation::QBlockPhase => "q-block-phase",
            Mutation::PBlockPhase => "p-block-phase",
            Mutation::SymmetricSign => "symmetric-sign",
            Mutation::ClassicalTheta => "classical-theta",
            Mutation::EvalShift => "eval-shift",
            Mutation::EmbeddingIndex => "embedding-index",
        }
    }

    pub fn parse(s: &str) -> Option<Mutation> {
        Self::ALL.into_iter().find(|m| m.name() == s)
    }

    /// The check whose compared formula this mutation corrupts.
    pub fn target(self) -> &'static str {
        match self {
            Mutation::YbeSign => "yang_baxter",
            Mutation::RttPhase | Mutation::RttIndex => "rtt_principal",
            Mutation::StructurePhase | Mutation::PairingSign => "principal_laws",
            Mutation::TransposePhase => "a_transpose",
            Mutation::BSign => "twisted_span",
            Mutation::QPhase => "dual_decomposition",
            Mutation::QBlockPhase | Mutation::PBlockPhase => "reflection_blocks",
            Mutation::SymmetricSign => "symmetric_relation",
            Mutation::ClassicalTheta => "reflection_classical",
            Mutation::EvalShift => "evaluation",
            Mutation::EmbeddingIndex => "embedding",
        }
    }

    /// A (case, N) at which the target check passes unmutated and the
    /// corruption is visible; index shifts by −b need N > 2.
    pub fn probe(self) -> (Case, u32) {
        match self {
            Mutation::QPhase => (Case::So, 2),
            Mutation::RttIndex => (Case::Gl, 3),
            _ => {
                let spec = find_check(self.target()).expect("mutation targets a registered check");
                (spec.cases[0], 2)
            }
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Options shared by every check run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckContext {
    pub mutation: Option<Mutation>,
}

impl CheckContext {
    pub fn with_mutation(m: Mutation) -> Self {
        CheckContext { mutation: Some(m) }
    }

    pub fn mutated(&self, m: Mutation) -> bool {
        self.mutation == Some(m)
    }
}

pub type CheckFn = fn(&CheckContext, Case, u32) -> Result<Outcome>;

/// A registered check.
pub struct CheckSpec {
    pub name: &'static str,
    /// What identity is verified.
    pub anchor: &'static str,
    pub cases: &'static [Case],
    /// Whether a failure reflects a known misprint in the reference formula
    /// rather than a defect of the artifact.
    pub documented_mismatch: bool,
    pub run: CheckFn,
}

impl fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckSpec")
            .field("name", &self.name)
            .field("cases", &self.cases)
            .field("documented_mismatch", &self.documented_mismatch)
            .finish()
    }
}

const GL: &[Case] = &[Case::Gl];
const TWISTED: &[Case] = &[Case::So, Case::Sp];
const SO: &[Case] = &[Case::So];
const ALL_CASES: &[Case] = &[Case::Gl, Case::So, Case::Sp];

static REGISTRY: &[CheckSpec] = &[
    CheckSpec {
        name: "yang_baxter",
        anchor: "R₁₂(u)R₁₃(u+v)R₂₃(v) = R₂₃(v)R₁₃(u+v)R₁₂(u) for R(u) = 1 − P/u",
        cases: GL,
        documented_mismatch: false,
        run: gl::yang_baxter,
    },
    CheckSpec {
        name: "principal_laws",
        anchor: "A_ij A_kl = ω^{jk} A_{i+k,j+l}, (A_ij|A_kl) = Nω^{−ij}δ_{i,−k}δ_{j,−l}, dual basis, DFT inversion",
        cases: GL,
        documented_mismatch: false,
        run: classical::principal_laws,
    },
    CheckSpec {
        name: "a_transpose",
        anchor: "A^t_ij as a θ-weighted sum of A_lj; A^t_ij = ω^{−i(1+j)}A_{−i,j} when symmetric",
        cases: TWISTED,
        documented_mismatch: false,
        run: classical::a_transpose,
    },
    CheckSpec {
        name: "twisted_span",
        anchor: "span{F_ij} = span{B_ij} ≅ so_N / sp_N: dimension, Fourier relation, commutator closure",
        cases: TWISTED,
        documented_mismatch: false,
        run: classical::twisted_span,
    },
    CheckSpec {
        name: "dual_decomposition",
        anchor: "P = Σ (ω^{kl}/N) A_kl ⊗ A_{−k,−l} and the principal expansions of Q = P^{t₁}",
        cases: ALL_CASES,
        documented_mismatch: false,
        run: classical::dual_decomposition,
    },
    CheckSpec {
        name: "rtt_principal",
        anchor: "R(u−v)T₁(u)T₂(v) = T₂(v)T₁(u)R(u−v) in principal generators x_ij(u)",
        cases: GL,
        documented_mismatch: false,
        run: gl::rtt_principal,
    },
    CheckSpec {
        name: "rtt_compact_as_printed",
        anchor: "compact form (u−v)[x_ij(u),x_kl(v)] = (1/N)Σ ω^{−ab}(…) as printed, with index repairs",
        cases: GL,
        documented_mismatch: true,
        run: gl::rtt_compact_as_printed,
    },
    CheckSpec {
        name: "reflection_blocks",
        anchor: "PS₁S₂ − S₂S₁P, S₂QS₁ − S₁QS₂, PS₁QS₂ − S₂QS₁P in the A⊗A basis, so only, with sign repairs",
        cases: SO,
        documented_mismatch: true,
        run: twisted::reflection_blocks,
    },
    CheckSpec {
        name: "reflection_principal_so",
        anchor: "reduced principal reflection relation (u²−v²)[y_ij(u),y_kl(v)] = … for so_N, with tag repairs",
        cases: SO,
        documented_mismatch: true,
        run: twisted::reflection_principal_so,
    },
    CheckSpec {
        name: "reflection_principal_general",
        anchor: "θ-weighted principal reflection relation for so_N and sp_N, with tag repairs",
        cases: TWISTED,
        documented_mismatch: true,
        run: twisted::reflection_principal_general,
    },
    CheckSpec {
        name: "symmetric_relation",
        anchor: "S^t(−u) = S(u) ± (S(u) − S(−u))/2u in principal generators y_ij(u)",
        cases: TWISTED,
        documented_mismatch: false,
        run: twisted::symmetric_relation,
    },
    CheckSpec {
        name: "reflection_classical",
        anchor: "componentwise reflection and symmetric relations in s_ij(u) against the matrix form",
        cases: TWISTED,
        documented_mismatch: false,
        run: twisted::reflection_classical,
    },
    CheckSpec {
        name: "evaluation",
        anchor: "s_ij(u) ↦ δ_ij + (u±½)^{−1}F_ij and y_kl(u) ↦ δ_{k0}δ_{l0}/N + (u±½)^{−1}B_{−k,l}/N are homomorphisms",
        cases: TWISTED,
        documented_mismatch: true,
        run: evaluation::evaluation,
    },
    CheckSpec {
        name: "embedding",
        anchor: "F_ij ↦ s^{(1)}_ij and B_ij ↦ N y^{(1)}_{−i,j} respect brackets (order u¹v⁻¹ of the relations)",
        cases: TWISTED,
        documented_mismatch: false,
        run: evaluation::embedding,
    },
];

/// Every registered check, in canonical order.
pub fn registry() -> &'static [CheckSpec] {
    REGISTRY
}

pub fn find_check(name: &str) -> Option<&'static CheckSpec> {
    REGISTRY.iter().find(|c| c.name == name)
}

/// Runs one check and stamps the report. `wall_ms` stays 0 unless timings are
/// requested, so that reports are reproducible byte for byte.
pub fn run_check(spec: &CheckSpec, ctx: &CheckContext, case: Case, n: u32, timings: bool) -> Result<CheckReport> {
    if !spec.cases.contains(&case) {
        return Err(AlgebraError::InvalidArgument(format!("{} does not support case {case}", spec.name)));
    }
    if !case.supports(n) {
        return Err(AlgebraError::InvalidArgument(format!("case {case} does not admit N = {n}")));
    }
    let start = Instant::now();
    let outcome = (spec.run)(ctx, case, n)?;
    let wall_ms = if timings { start.elapsed().as_millis() as u64 } else { 0 };
    Ok(CheckReport {
        check: spec.name.to_string(),
        case,
        n,
        status: outcome.status,
        witness: outcome.witness,
        note: outcome.note,
        wall_ms,
    })
}
