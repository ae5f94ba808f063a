//! Exact projective geometry of discrete conjugate nets, their Laplace
//! transforms, W-congruences and period-four Laplace cycles.

pub mod cli;
pub mod congruences;
pub mod cycles;
pub mod error;
pub mod float;
pub mod io;
pub mod linalg;
pub mod nets;
pub mod obj;
pub mod plucker;
pub mod projective;
pub mod random;
pub mod report;
pub mod scalar;

pub use error::{Error, Result, Vertex};
