//! Command-line front end for `nlie-core`.

pub mod app;
pub mod suite;
