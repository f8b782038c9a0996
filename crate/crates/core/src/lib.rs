//! Exact construction of equivariant differential operators by the F-method.

pub mod algebra;
pub mod cli;
pub mod config;
pub mod lie;
pub mod serial;
pub mod solver;
pub mod verify;
pub mod weyl;
