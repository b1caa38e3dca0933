//! Combinatorial toolkit for right-angled Coxeter groups and their Davis
//! complexes.

pub mod cli;
pub mod coxeter;
pub mod davis;
pub mod error;
pub mod factory;
pub mod limits;
pub mod models;
pub mod report;
pub mod simplicial;

pub use error::{Error, Result};
