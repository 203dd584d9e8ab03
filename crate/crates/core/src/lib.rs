//! Effective impedance of finite AC networks built from resistors, coils and
//! capacitors.
//!
//! Two models are provided. At a fixed frequency the Dirichlet problem is
//! solved over ℂ, where it may have no solution or infinitely many; over the
//! ordered field R(λ) of rational functions it always has exactly one, and the
//! effective impedance is an exact rational function of λ = iω.

pub mod cli;
pub mod error;
pub mod exact;
pub mod impedance;
pub mod netlist;
pub mod network;
pub mod output;
pub mod solver;
pub mod verify;

pub use error::{Error, ExactError, NetworkError, Result};
