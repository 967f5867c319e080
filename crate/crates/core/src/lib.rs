//! Exact computations for finite-dimensional quasitriangular and ribbon Hopf
//! algebras: the coend `F = H*`, its pairing, the Drinfeld map, modular
//! S/T operators and Verlinde-type formulas, all over cyclotomic fields.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod braided;
pub mod coend;
pub mod error;
pub mod format;
pub mod hopf;
pub mod matrix;
pub mod modular;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod verdict;
pub mod zoo;

pub use error::{Error, Result};
pub use hopf::HopfData;
pub use matrix::{ExactMatrix, Vector};
pub use scalar::{CycloField, CycloScalar};
