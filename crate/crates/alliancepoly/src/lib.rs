//! Standard-library companion to `alliancepoly-core`: multi-threaded
//! enumeration, JSON and edge-list formats, corpus experiments and the
//! `alliancepoly` command-line tool.

pub mod cli;
pub mod corpus;
pub mod engine;
pub mod input;
pub mod json;

pub use alliancepoly_core as core;
pub use engine::compute_da;
