//! Suite configuration and the (check, case, N) job plan it expands to.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use yangian_core::relations::{find_check, registry, Case, CheckSpec, Mutation};

use crate::error::{HarnessError, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(HarnessError::Config(format!("unknown format `{other}`, expected text or json"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum CheckSelection {
    #[default]
    All,
    Named(Vec<String>),
}

impl CheckSelection {
    /// Parses a comma-separated list; `all` selects the whole registry.
    pub fn parse(list: &str) -> Self {
        let names: Vec<String> = list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
        if names.is_empty() || names.iter().any(|s| s == "all") {
            CheckSelection::All
        } else {
            CheckSelection::Named(names)
        }
    }
}

/// Everything a suite run needs. `cases` and `sizes` left as `None` take the
/// defaults: every case, N ∈ {2, 3} for gl and so, N ∈ {2, 4} for sp.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub checks: CheckSelection,
    pub cases: Option<Vec<Case>>,
    pub sizes: Option<Vec<u32>>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub allow_documented_mismatch: bool,
    /// Worker threads; 0 picks the number of cores.
    pub workers: usize,
    pub mutation: Option<Mutation>,
    pub timings: bool,
}

/// One unit of work.
#[derive(Clone, Copy, Debug)]
pub struct Job {
    pub check: &'static CheckSpec,
    pub case: Case,
    pub n: u32,
}

pub fn default_sizes(case: Case) -> &'static [u32] {
    match case {
        Case::Gl | Case::So => &[2, 3],
        Case::Sp => &[2, 4],
    }
}

pub fn parse_cases(list: &str) -> Result<Vec<Case>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Case::parse(s).ok_or_else(|| HarnessError::Config(format!("unknown case `{s}`, expected gl, so or sp"))))
        .collect()
}

pub fn parse_sizes(list: &str) -> Result<Vec<u32>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u32>().map_err(|_| HarnessError::Config(format!("size `{s}` is not a positive integer"))))
        .collect()
}

impl SuiteConfig {
    pub fn selected_checks(&self) -> Result<Vec<&'static CheckSpec>> {
        match &self.checks {
            CheckSelection::All => Ok(registry().iter().collect()),
            CheckSelection::Named(names) => {
                let mut out: Vec<&'static CheckSpec> = Vec::new();
                for name in names {
                    let spec = find_check(name).ok_or_else(|| HarnessError::UnknownCheck(name.clone()))?;
                    if !out.iter().any(|c| c.name == spec.name) {
                        out.push(spec);
                    }
                }
                Ok(out)
            }
        }
    }

    pub fn selected_cases(&self) -> Vec<Case> {
        let mut cases = self.cases.clone().unwrap_or_else(|| Case::ALL.to_vec());
        cases.sort();
        cases.dedup();
        cases
    }

    /// The sizes to run for a case. An explicit odd size together with an
    /// explicitly requested sp is an error; otherwise sp skips odd sizes.
    pub fn sizes_for(&self, case: Case) -> Result<Vec<u32>> {
        let mut sizes = match &self.sizes {
            None => default_sizes(case).to_vec(),
            Some(list) => {
                if let Some(&bad) = list.iter().find(|&&n| n < 2) {
                    return Err(HarnessError::Config(format!("N = {bad} is too small, sizes start at 2")));
                }
                let sp_requested = self.cases.as_ref().is_some_and(|c| c.contains(&Case::Sp));
                if case == Case::Sp && sp_requested {
                    if let Some(&odd) = list.iter().find(|&&n| n % 2 == 1) {
                        return Err(HarnessError::Config(format!("sp needs an even N, got {odd}")));
                    }
                }
                list.iter().copied().filter(|&n| case.supports(n)).collect()
            }
        };
        sizes.sort_unstable();
        sizes.dedup();
        Ok(sizes)
    }

    /// Every job of the run in report order: check name, then case, then N.
    pub fn plan(&self) -> Result<Vec<Job>> {
        if self.sizes.as_ref().is_some_and(Vec::is_empty) {
            return Err(HarnessError::Config("no sizes given".into()));
        }
        if self.cases.as_ref().is_some_and(Vec::is_empty) {
            return Err(HarnessError::Config("no cases given".into()));
        }
        let checks = self.selected_checks()?;
        let cases = self.selected_cases();
        let mut jobs = Vec::new();
        for check in checks {
            for &case in cases.iter().filter(|c| check.cases.contains(c)) {
                for n in self.sizes_for(case)? {
                    jobs.push(Job { check, case, n });
                }
            }
        }
        // sizes_for may never have been reached for sp if no selected check
        // supports it; the odd-N rule still applies.
        if cases.contains(&Case::Sp) {
            self.sizes_for(Case::Sp)?;
        }
        if jobs.is_empty() {
            return Err(HarnessError::Config("the selected checks, cases and sizes have no combination in common".into()));
        }
        jobs.sort_by(|a, b| (a.check.name, a.case, a.n).cmp(&(b.check.name, b.case, b.n)));
        Ok(jobs)
    }

    /// The (case, N) pairs of the run regardless of checks, for table export.
    pub fn case_sizes(&self) -> Result<Vec<(Case, u32)>> {
        let mut out = Vec::new();
        for case in self.selected_cases() {
            for n in self.sizes_for(case)? {
                out.push((case, n));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_plan_covers_every_check_with_default_sizes() {
        let jobs = SuiteConfig::default().plan().unwrap();
        assert!(jobs.iter().any(|j| j.case == Case::Sp && j.n == 4));
        assert!(!jobs.iter().any(|j| j.case == Case::Sp && j.n == 3));
        assert!(jobs.iter().any(|j| j.check.name == "yang_baxter" && j.n == 3));
        let keys: Vec<_> = jobs.iter().map(|j| (j.check.name, j.case, j.n)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn explicit_odd_sp_is_rejected() {
        let cfg = SuiteConfig { cases: Some(vec![Case::Sp]), sizes: Some(vec![3]), ..Default::default() };
        assert!(matches!(cfg.plan(), Err(HarnessError::Config(_))));
    }

    #[test]
    fn odd_sizes_skip_sp_when_cases_default() {
        let cfg = SuiteConfig { sizes: Some(vec![3]), ..Default::default() };
        let jobs = cfg.plan().unwrap();
        assert!(jobs.iter().all(|j| j.case != Case::Sp));
        assert!(jobs.iter().any(|j| j.case == Case::So));
    }

    #[test]
    fn unknown_check_and_small_sizes() {
        let cfg = SuiteConfig { checks: CheckSelection::parse("no_such_check"), ..Default::default() };
        assert!(matches!(cfg.plan(), Err(HarnessError::UnknownCheck(_))));
        let cfg = SuiteConfig { sizes: Some(vec![1]), ..Default::default() };
        assert!(cfg.plan().is_err());
    }

    #[test]
    fn empty_combination_is_a_config_error() {
        let cfg = SuiteConfig {
            checks: CheckSelection::parse("yang_baxter"),
            cases: Some(vec![Case::So]),
            ..Default::default()
        };
        assert!(matches!(cfg.plan(), Err(HarnessError::Config(_))));
    }

    #[test]
    fn parsing() {
        assert_eq!(CheckSelection::parse("all"), CheckSelection::All);
        assert_eq!(CheckSelection::parse("a, b"), CheckSelection::Named(vec!["a".into(), "b".into()]));
        assert_eq!(parse_cases("gl,sp").unwrap(), vec![Case::Gl, Case::Sp]);
        assert!(parse_cases("su").is_err());
        assert_eq!(parse_sizes("2, 4").unwrap(), vec![2, 4]);
        assert!(parse_sizes("x").is_err());
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
    }
}
