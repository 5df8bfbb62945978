//! `gemkit`: maximal product overlap, classification and figure data from the command line.
//!
//! Method dispatch goes through a [`Registry`] of [`LambdaMaxMethod`] trait
//! objects. Closed forms are tried in registration order and the numeric
//! oracle is the fallback.

mod classify;
mod error;
pub mod input;
pub mod methods;
mod registry;
mod report;
mod schmidt;
pub mod sweep;
mod verify;

pub use classify::{classify, invariants, ClassifyReport, InvariantsReport, ThreeQubitClassification, WClassification};
pub use error::CliError;
pub use registry::{Evaluation, LambdaMaxMethod, Registry, DETECT_TOL};
pub use report::{
    compute, product_json, render, Candidate, EntanglementReport, MethodChoice, OracleSummary, OutputFormat,
};
pub use schmidt::{schmidt, FormReport, SchmidtReport};
pub use sweep::{run_sweep, write_csv, Family, GapSummary, SweepOutput, SweepRow, SweepSpec};
pub use verify::{verify, Check, VerifyReport};

pub type Result<T> = std::result::Result<T, CliError>;
