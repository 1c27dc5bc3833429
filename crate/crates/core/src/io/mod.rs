//! Script front end, report serialization and the command-line driver.

pub mod cli;
pub mod dsl;
pub mod report;
pub mod script;
