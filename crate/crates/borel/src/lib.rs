//! Command-line layer over `borel-core`: JSON and CSV formats, an antichain
//! cache, reproduction targets and the `borel` binary's dispatch.

pub mod cache;
pub mod cli;
pub mod format;
pub mod reproduce;
