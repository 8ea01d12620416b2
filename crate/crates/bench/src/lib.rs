//! Experiment harness: budget sweeps that emit one CSV row per run, and
//! ratio verification against exhaustive optima on small instances.

mod error;
mod source;
mod sweep;
mod verify;

pub use error::{BenchError, Result};
pub use source::{load_source, SourceSpec};
pub use sweep::{
    run_sweep, write_csv, Stat, SweepConfig, SweepRow, CSV_HEADER, DEFAULT_BUDGETS, DEFAULT_REPS,
};
pub use verify::{
    verify_ratios, write_report_csv, RatioCheck, VerifyConfig, VerifyReport, EXPECTATION_SLACK,
    FACTOR_TOL,
};

/// Process exit status for a verification run that found violations.
pub const EXIT_VERIFY_FAILED: i32 = 2;
/// Process exit status for invalid configuration or unreadable input.
pub const EXIT_INVALID: i32 = 1;
