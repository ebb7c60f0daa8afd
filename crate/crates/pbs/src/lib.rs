//! Partial barycentric subdivision of simplicial complexes.

pub mod complex;
pub mod subdivision;
pub mod error;
pub mod matrix;
pub mod partitions;
pub mod perm;
pub mod poly;
pub mod rational;

pub mod io;
pub mod localh;
pub mod spectral;
pub mod transform;
pub mod verify;
pub use error::{Error, Result};
