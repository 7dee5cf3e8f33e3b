//! Configuration files, command dispatch, reports and the result cache
//! behind the `ivhs` binary.

pub mod cache;
pub mod config;
pub mod parse;
pub mod report;
pub mod run;

pub use cache::{Cache, CACHE_ENV};
pub use config::{parse_config, Command, OutputFormat, RunConfig};
pub use parse::{parse_operator, parse_poly, parse_poly_with_degree, parse_scalar, parse_terms};
pub use report::{emit, Report};
pub use run::{input_hash, run, run_cached};
