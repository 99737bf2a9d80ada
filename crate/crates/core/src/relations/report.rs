use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::tensor::{FormCase, SignVector};

/// Which algebra a check runs against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    Gl,
    So,
    Sp,
}

impl Case {
    pub const ALL: [Case; 3] = [Case::Gl, Case::So, Case::Sp];

    pub fn name(self) -> &'static str {
        match self {
            Case::Gl => "gl",
            Case::So => "so",
            Case::Sp => "sp",
        }
    }

    pub fn parse(s: &str) -> Option<Case> {
        match s {
            "gl" => Some(Case::Gl),
            "so" => Some(Case::So),
            "sp" => Some(Case::Sp),
            _ => None,
        }
    }

    /// The form behind the twisted cases; `None` for gl.
    pub fn sign_vector(self, n: u32) -> Result<Option<SignVector>> {
        match self {
            Case::Gl => Ok(None),
            Case::So => SignVector::new(FormCase::Symmetric, n).map(Some),
            Case::Sp => SignVector::new(FormCase::Alternating, n).map(Some),
        }
    }

    pub fn require_sign_vector(self, n: u32) -> Result<SignVector> {
        self.sign_vector(n)?
            .ok_or_else(|| AlgebraError::InvalidArgument(format!("case {self} has no bilinear form")))
    }

    pub fn of_form(case: FormCase) -> Case {
        match case {
            FormCase::Symmetric => Case::So,
            FormCase::Alternating => Case::Sp,
        }
    }

    /// Whether N is admissible for this case.
    pub fn supports(self, n: u32) -> bool {
        n >= 2 && (self != Case::Sp || n.is_multiple_of(2))
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Where a comparison went wrong: the component indices, and when available
/// the offending word with the two coefficients that disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub component: Vec<u32>,
    pub word: Option<String>,
    pub left: Option<String>,
    pub right: Option<String>,
    pub detail: Option<String>,
}

impl Witness {
    pub fn detail(component: Vec<u32>, detail: impl Into<String>) -> Self {
        Witness { component, word: None, left: None, right: None, detail: Some(detail.into()) }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.component.iter().map(u32::to_string).collect();
        write!(f, "at ({})", idx.join(","))?;
        if let Some(d) = &self.detail {
            write!(f, " {d}")?;
        }
        if let (Some(w), Some(l), Some(r)) = (&self.word, &self.left, &self.right) {
            write!(f, " word {w}: {l} vs {r}")?;
        }
        Ok(())
    }
}

/// Verdict of a check before it is stamped with name, case, size and timing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome { status: Status::Pass, witness: None, note: None }
    }

    pub fn fail(w: Witness) -> Self {
        Outcome { status: Status::Fail, witness: Some(w), note: None }
    }

    pub fn from_witness(w: Option<Witness>) -> Self {
        match w {
            None => Self::pass(),
            Some(w) => Self::fail(w),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// Keeps the first failure of two sub-verdicts and joins their notes.
    pub fn and(self, other: Outcome) -> Outcome {
        let note = match (self.note, other.note) {
            (Some(a), Some(b)) => Some(format!("{a}; {b}")),
            (a, b) => a.or(b),
        };
        let (status, witness) = if self.status == Status::Fail {
            (Status::Fail, self.witness)
        } else {
            (other.status, other.witness)
        };
        Outcome { status, witness, note }
    }
}

/// Machine-readable result of one (check, case, N) run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub case: Case,
    pub n: u32,
    pub status: Status,
    pub witness: Option<Witness>,
    pub note: Option<String>,
    pub wall_ms: u64,
}
