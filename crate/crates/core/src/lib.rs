//! Exact computations with characteristic classes, Betti and Hodge numbers,
//! and the generating functions for symmetric products and Hilbert schemes
//! of points on surfaces.
//!
//! All arithmetic is over the rationals with arbitrary precision; there is no
//! floating point anywhere.

pub mod charclass;
pub mod cli;
pub mod combinat;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod hilbert;
pub mod invariants;
pub mod manifolds;
pub mod moduli;
pub mod report;
pub mod symmetric;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{MultiPoly, Rational, UniPoly};
pub use report::{Check, Report, Status};
pub use symmetric::{ChernMonomial, ChernPoly};
