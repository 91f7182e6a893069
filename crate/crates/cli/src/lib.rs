//! Command-line front end: job execution, JSON reports, and rendering.

pub mod app;
pub mod render;
pub mod report;
pub mod runner;

pub use report::{Report, TaskStatus, SCHEMA_VERSION};
pub use runner::{run_job, run_job_text, RunOptions, EXIT_INPUT_ERROR, EXIT_INVARIANT_VIOLATION, EXIT_OK};
