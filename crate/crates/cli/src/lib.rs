//! File formats, Graphviz export and the `bnfix` command line.

pub mod app;
pub mod dot;
pub mod format;

pub use app::run;
