//! Exact computation of Vergne polarizing subalgebras of real nilpotent Lie
//! algebras presented by rational structure constants.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod free_step2;
pub mod lie;
pub mod matrix;
pub mod parse;
pub mod polarize;
pub mod rational;
pub mod subspace;
pub mod verify;

pub use error::Error;
pub use free_step2::FreeStep2Layout;
pub use lie::{Functional, LieAlgebra};
pub use polarize::{Method, PolarizationResult};
pub use verify::VerificationReport;
pub use matrix::RatMatrix;
pub use rational::Rational;
pub use subspace::Subspace;
