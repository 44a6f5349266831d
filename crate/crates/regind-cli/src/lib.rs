//! Library side of the harness binary: suite runners, table reproduction and
//! report types, shared with the integration and acceptance tests.

pub mod report;
pub mod suites;
pub mod tables;
