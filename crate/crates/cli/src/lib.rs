//! The `triality` command: checks over corpus files, JSON reports, manifest
//! suites and the bundled corpus.

pub mod checks;
pub mod cli;
pub mod corpus;
pub mod describe;
pub mod input;
pub mod report;
pub mod suite;

pub use cli::main_with;
