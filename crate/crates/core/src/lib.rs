//! Exact spectral analysis of the n-Queens graph Q(n).
//!
//! The graph has one vertex per square of an n×n board; two squares are
//! adjacent when a queen on one attacks the other (shared row, column,
//! diagonal or antidiagonal). This crate builds Q(n), constructs the known
//! closed-form integer eigenvector families, verifies them exactly, and pins
//! integer-eigenvalue multiplicities between a constructive lower bound and a
//! modular-rank upper bound.
//!
//! Module map:
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`board`] | squares, the graph, Matrix Market export |
//! | [`vector`] | integer vectors indexed by squares |
//! | [`families`] | X-block, P/Q/E and C/R/F vector families |
//! | [`linalg`] | exact adjacency action, modular and Bareiss ranks, certificates |
//! | [`spectra`] | dense Jacobi eigenvalues for cross-checks |
//! | [`harness`] | family verification, integer scans, conjecture reports |

pub mod board;
pub mod error;
pub mod families;
pub mod harness;
pub mod linalg;
pub mod spectra;
pub mod vector;

pub use board::{BoardCoord, QueensGraph};
pub use error::{QueensError, Result};
pub use families::FamilyKind;
pub use linalg::{CertStatus, Certifier, ExactMatrix, MultiplicityCertificate};
pub use spectra::Spectrum;
pub use vector::BoardVector;
