//! Exact computations with finite-dimensional unital associative algebras
//! given by structure constants: biderivation spaces as rational nullspaces,
//! Peirce decompositions with respect to an idempotent, and a constructive
//! splitting of Jordan biderivations into biderivation, antibiderivation and
//! extremal parts, with every intermediate identity checked exactly.

pub mod algebra;
pub mod decomposition;
pub mod error;
pub mod format;
pub mod linalg;
pub mod maps;
pub mod poly;
pub mod report;
pub mod rng;
pub mod verdict;

pub use error::{Error, Result};
