// SPDX-License-Identifier: Apache-2.0

//! Exact construction and verification of Einstein pseudo-Kähler and
//! para-Kähler metrics on solvable Lie algebras.
//!
//! The pipeline runs entirely over arbitrary-precision rationals:
//!
//! 1. a nice nilpotent Lie algebra and a diagonal nilsoliton metric
//!    ([`soliton::diagonal_soliton_solve`]),
//! 2. a pseudo-Iwasawa Einstein extension ([`extension::pseudo_iwasawa_extend`]),
//! 3. parallel symplectic forms ([`structures::parallel_two_forms`]),
//! 4. integrable complex or para-complex structures compatible with the
//!    metric, packaged as a re-verifiable [`structures::StructureCertificate`].
//!
//! Everything is `no_std` + `alloc`; IO lives in the companion `einkahler` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
#[macro_use]
extern crate std;

pub mod catalog;
pub mod curvature;
mod error;
pub mod exactla;
pub mod extension;
pub mod ledger;
pub mod liealg;
pub mod nice;
pub mod notation;
pub mod soliton;
pub mod structures;

pub use curvature::MetricLieAlgebra;
pub use error::{Error, Result};
pub use exactla::{IntMatrix, Matrix, Scalar};
pub use ledger::{Check, CheckLedger};
pub use liealg::LieAlgebra;
