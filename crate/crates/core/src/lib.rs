//! Verifiable polynomial evaluation over prime fields.
//!
//! A user who wants `f(x)` for a degree-bound-`k` polynomial reshapes the
//! coefficient vector into a square matrix, delegates the expensive
//! matrix-vector product to an untrusted server, and checks the response
//! against a small number of secret random parity equations precomputed at
//! initialization. A false response slips past `c` parity rows with
//! probability at most `q^-c`, with no assumption on the server's
//! computational power.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the
//! experiment CLI live in the companion `vpe-harness` crate.
//!
//! Module map:
//! - [`field`]: prime-field arithmetic with countable operations.
//! - [`poly`]: polynomials, the Horner reference evaluator, and the square
//!   coefficient-matrix decomposition.
//! - [`protocol`]: the single-user/single-server protocol and multi-round
//!   sessions with public accept/reject feedback.
//! - [`adversary`]: pluggable dishonest-server strategies, including an
//!   adaptive feedback-exploiting one.
//! - [`multiparty`]: `n` mutually distrusting nodes splitting the work over a
//!   round-synchronous broadcast bus, plus a Reed-Solomon-coded variant.
//! - [`multivariate`]: flattening of m-variate polynomials into the same
//!   bilinear form.
//! - [`count`]: multiplication/addition tallies tagged by protocol phase.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod adversary;
pub mod count;
pub mod field;
pub mod multiparty;
pub mod multivariate;
pub mod poly;
pub mod protocol;
pub mod rng;

pub use count::{OpCount, Phase, PhaseCounts};
pub use field::{FieldContext, FieldElement, Matrix};
pub use poly::{CoeffMatrix, Polynomial};
