//! Exact distance-matrix algebra for graphs whose blocks are `T_n`,
//! complete bipartite or `K_4`.
//!
//! Everything is computed over the rationals; there is no floating point
//! anywhere in the crate. The closed forms in [`closed_form`] are paired
//! with general-purpose oracles in [`linalg`] so each can check the other.

pub mod closed_form;
pub mod error;
pub mod graph;
pub mod lemmas;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod rng;
pub mod spectra;

pub use closed_form::{FormulaResult, StructuredBlockForm, StructuredKind};
pub use error::{Error, Result};
pub use graph::{all_pairs_distances, build_family, laplacian, BlockClass, FamilySpec, Graph, VertexPartition};
pub use linalg::{char_poly_exact, det_exact, inverse_exact, rank};
pub use matrix::RationalMatrix;
pub use poly::{CharPoly, Polynomial};
pub use rational::Rational;
pub use rng::Lcg;
pub use spectra::{ClaimCheck, Part, SpectrumClaim};
