//! Exact classification and normal forms of trigonal curves on Hirzebruch
//! surfaces, with the associated group presentations.

pub mod algebra;
pub mod cli;
pub mod curves;
pub mod error;
pub mod group;
pub mod normal_forms;
pub mod presentations;

pub use error::{Error, Result};
