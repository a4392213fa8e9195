//! Corpus handling, report assembly and suite execution for the `verify`
//! binary.

pub mod corpus;
pub mod report;
pub mod runner;
