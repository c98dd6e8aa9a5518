//! Library half of the `kstable` command-line tool.

pub mod ops;
pub mod sweep;
