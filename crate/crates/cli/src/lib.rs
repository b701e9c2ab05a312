//! Batch runner behind the `szpiro` binary: input parsing, JSON-lines
//! reports, an on-disk invariant cache and the per-curve check suite.

pub mod cache;
pub mod commands;
pub mod records;
pub mod report;
pub mod suite;
