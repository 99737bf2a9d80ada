//! Suite runner for the Yangian identity checks: plans (check, case, N)
//! jobs, runs them on a worker pool, and renders text or JSON reports with a
//! fixed exit-code policy.

pub mod catalogue;
pub mod config;
pub mod error;
pub mod runner;
pub mod tables;

pub use catalogue::{list_checks, CatalogueEntry};
pub use config::{CheckSelection, Format, Job, SuiteConfig};
pub use error::{HarnessError, Result};
pub use runner::{emit, exit_status, render, run_suite, ExitStatus, SuiteOutcome};
pub use tables::{export_tables, import_tables, Tables};
