//! Exact construction and verification of twisted quantum doubles `D^ω(H)`
//! of finite-dimensional cocommutative Hopf algebras.

pub mod cocycle;
pub mod domega;
pub mod error;
pub mod hopf;
pub mod quasihopf;
pub mod report;
pub mod ribbon;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
