//! Report serialization, OFF meshes, sampling oracles, sweeps and the CLI
//! driver on top of `interalg-core`.

pub mod config;
pub mod error;
pub mod off;
pub mod oracle;
pub mod parallel;
pub mod report;
pub mod run;
pub mod sweep;

pub use config::{InvariantSet, MethodChoice, OutputFormat, RunConfig};
pub use error::{CliError, Result};
pub use run::{build_report, run};
