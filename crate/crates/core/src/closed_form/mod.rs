//! Closed-form determinants and inverses of distance matrices.
//!
//! - [`tree`]: trees, whose determinant depends only on the vertex count.
//! - [`single`]: single blocks `T_n` and complete bipartite `K_{m,n}`.
//! - [`book`]: `T_n^(b)`, `b` copies of `T_n` sharing a cut vertex, held in
//!   a block-repeating [`StructuredBlockForm`](book::StructuredBlockForm).

pub mod book;
pub mod single;
pub mod tree;

pub use book::{
    block_product, tnb_det, tnb_inverse, tnb_inverse_unchecked, tnb_structured, tnb_xblocks, BlockProduct,
    StructuredBlockForm, StructuredKind,
};
pub use single::{
    kmn_det, kmn_distance_blocks, kmn_formulas, tn_distance_blocks, tn_formulas, tn_laplacian_blocks, tn_rmat,
    TnFormulas,
};
pub use tree::{tree_det, tree_inverse};

use crate::matrix::RationalMatrix;
use crate::rational::Rational;

/// Determinant plus inverse when the matrix is nonsingular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaResult {
    pub det: Rational,
    pub inverse: Option<RationalMatrix>,
    /// Why the inverse is absent.
    pub singular_reason: Option<String>,
}

impl FormulaResult {
    pub(crate) fn invertible(det: Rational, inverse: RationalMatrix) -> Self {
        Self {
            det,
            inverse: Some(inverse),
            singular_reason: None,
        }
    }

    pub(crate) fn singular(det: Rational, reason: impl Into<String>) -> Self {
        Self {
            det,
            inverse: None,
            singular_reason: Some(reason.into()),
        }
    }

    pub fn is_singular(&self) -> bool {
        self.inverse.is_none()
    }
}

// Short names so the block displays read like the formulas they encode.

pub(crate) fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

pub(crate) fn frac(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

pub(crate) fn eye(n: usize) -> RationalMatrix {
    RationalMatrix::identity(n)
}

pub(crate) fn ones(r: usize, c: usize) -> RationalMatrix {
    RationalMatrix::ones(r, c)
}

pub(crate) fn a2() -> RationalMatrix {
    RationalMatrix::exchange2()
}

pub(crate) fn grid2(tl: RationalMatrix, tr: RationalMatrix, bl: RationalMatrix, br: RationalMatrix) -> RationalMatrix {
    RationalMatrix::from_blocks(&[vec![tl, tr], vec![bl, br]]).expect("conformal 2x2 block display")
}

pub(crate) fn stack(top: RationalMatrix, bottom: RationalMatrix) -> RationalMatrix {
    RationalMatrix::from_blocks(&[vec![top], vec![bottom]]).expect("conformal vertical stack")
}

/// `k · M` for an integer `k`.
pub(crate) fn sc(k: i64, m: RationalMatrix) -> RationalMatrix {
    m.scale(&int(k))
}
