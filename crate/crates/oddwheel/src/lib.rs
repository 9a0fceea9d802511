//! Files, reports, threads and the command line on top of `oddwheel-core`.

pub mod cli;
pub mod input;
pub mod parallel;
pub mod report;
pub mod settings;

pub use oddwheel_core as core;
