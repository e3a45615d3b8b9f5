//! Exact arithmetic for Euclidean distance graphs `G(ℤ², √r)`: the graph on
//! the integer lattice joining points at squared distance `r`.
//!
//! - [`arith`]: factorization, sums of two squares, core radicands, the
//!   Bézout solver.
//! - [`lattice`]: neighbor vectors and component structure.
//! - [`walks`]: exact path and walk counts.
//! - [`construct`]: explicit walks between nearby points.
//! - [`spectra`]: angle spectra and separating angle witnesses.
//! - [`certify`]: non-isomorphism certificates and their verifier.
//!
//! Distances are always given by the radicand `r`, never as `√r`.

pub mod arith;
pub mod certify;
pub mod construct;
mod error;
pub mod lattice;
pub mod spectra;
pub mod walks;

pub use error::{Error, Result};
pub use lattice::LatticeVector;
