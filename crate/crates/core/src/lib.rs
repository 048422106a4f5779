//! Exact computations with formal characters of semisimple Lie algebras and
//! their equal-rank subalgebras: Dirac indices, Kostant's Dirac cohomology,
//! spin-module characters, endoscopic transfer factors and discrete-series
//! lifting.
//!
//! Everything is exact. Weights are vectors of rationals in the
//! fundamental-weight basis; roots enter in simple-root integer coordinates
//! and are converted on validation.

pub mod catalog;
pub mod charring;
pub mod dirac;
pub mod error;
pub mod lifting;
pub mod linalg;
pub mod rootsys;
pub mod spinmod;
pub mod verify;
pub mod weight;

pub use charring::{FormalCharacter, VirtualDecomposition};
pub use error::{Error, Result};
pub use rootsys::{CartanType, Limits, RootSubsystem, RootSystem, WeylElement, WeylSystem};
pub use weight::{Rational, Weight};
