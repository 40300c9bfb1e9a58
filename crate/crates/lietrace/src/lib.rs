//! Command-line front end, file formats and result cache for `lietrace-core`.

pub mod cache;
pub mod cli;
pub mod commands;
pub mod format;
pub mod render;
pub mod selfcheck;
