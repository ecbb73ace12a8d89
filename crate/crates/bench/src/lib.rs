//! Fixtures shared by the criterion benches.

use cpdist_core::closed_form::{tnb_structured, StructuredKind};
use cpdist_core::spectra::{principal_submatrix, Part};
use cpdist_core::RationalMatrix;

/// Dense `D(T_n^(b))`.
pub fn book_distance(n: usize, b: usize) -> RationalMatrix {
    tnb_structured(StructuredKind::Distance, n, b)
        .expect("valid book parameters")
        .materialize()
}

/// `R(T_n^(b))[N ∪ {c}]`, the largest spectral check per `(n, b)`.
pub fn book_rmat_nc(n: usize, b: usize) -> RationalMatrix {
    principal_submatrix(Part::NC, n, b).expect("n >= 4, b >= 2")
}

/// Order of `T_n^(b)`.
pub fn order(n: usize, b: usize) -> usize {
    b * (n - 1) + 1
}
