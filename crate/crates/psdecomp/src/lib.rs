//! Exact combinatorial machinery for certifying direct-sum decomposition
//! points of principal-series inductions of split reductive groups.
//!
//! Everything is computed over the rationals; there is no floating point
//! anywhere in this crate. The main pipeline lives in [`decomp`]: given a
//! weight `lambda0`, a simple root `alpha` and a stabilizer element `w0`,
//! it checks the assumptions of the decomposition theorem and emits a
//! machine-checkable [`decomp::Certificate`]. Supporting modules:
//!
//! - [`rootsys`]: root systems, coroots, fundamental weights, the pairing.
//! - [`weyl`]: the Weyl group as exact integer matrices, stabilizers,
//!   inversion sets, and property suites for the root-system lemmas.
//! - [`intertwine`]: pole/zero order bookkeeping for the scalar shadows of
//!   intertwining operators (Gindikin–Karpelevich exponent profiles).
//! - [`multi`]: simultaneous decompositions along several simple roots and
//!   the Dynkin-diagram pair enumeration.

#![forbid(unsafe_code)]

pub mod decomp;
pub mod error;
pub mod intertwine;
pub mod multi;
pub mod rootsys;
pub mod weyl;

pub use error::Error;
pub use rootsys::{Family, Rat, RootDatum, RootVec, Weight};
pub use weyl::WeylElement;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
