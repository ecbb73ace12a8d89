//! `T_n^(b)`: determinant, the block-repeating matrices `D`, `L`, `R`, `X`,
//! and the inverse `D⁻¹ = −L/2 + J/(2b) + R/(2(n−6)b)` for `n ≠ 6`.
//!
//! All four matrices share one shape. With `k = n − 1` vertices per block
//! (the cut vertex excluded) and the cut vertex last:
//!
//! ```text
//! [ M1  M2  …  M2  m3 ]
//! [ M2  M1  …  M2  m3 ]
//! [ …            …    ]
//! [ m3ᵗ m3ᵗ …  m3ᵗ m  ]
//! ```
//!
//! For the Laplacian `M2 = 0`.

use super::single::tn_formulas;
use super::{a2, eye, frac, grid2, int, ones, sc, stack};
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructuredKind {
    Distance,
    Laplacian,
    Rmat,
    Xmat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredBlockForm {
    pub kind: StructuredKind,
    pub n: usize,
    pub b: usize,
    /// `(n−1)×(n−1)` diagonal block.
    pub diag_block: RationalMatrix,
    /// `(n−1)×(n−1)` off-diagonal block.
    pub offdiag_block: RationalMatrix,
    /// `(n−1)×1` coupling to the cut vertex.
    pub border_col: RationalMatrix,
    pub corner: Rational,
}

impl StructuredBlockForm {
    pub fn order(&self) -> usize {
        self.b * (self.n - 1) + 1
    }

    /// Dense matrix by replicating the blocks.
    pub fn materialize(&self) -> RationalMatrix {
        let b = self.b;
        let order = self.order();
        let mut data = Vec::with_capacity(order * order);
        let border = self.border_col.entries();
        for p in 0..b {
            for (i, edge) in border.iter().enumerate() {
                for q in 0..b {
                    let src = if p == q { &self.diag_block } else { &self.offdiag_block };
                    data.extend_from_slice(src.row(i));
                }
                data.push(edge.clone());
            }
        }
        for _ in 0..b {
            data.extend_from_slice(border);
        }
        data.push(self.corner.clone());
        RationalMatrix::from_vec(order, order, data).expect("order² entries")
    }

    /// `Σ cᵢ · Fᵢ` computed block by block. All forms must share `(n, b)`.
    fn combine(kind: StructuredKind, terms: &[(Rational, &StructuredBlockForm)]) -> Self {
        let (_, first) = terms[0];
        let k = first.n - 1;
        let mut out = StructuredBlockForm {
            kind,
            n: first.n,
            b: first.b,
            diag_block: RationalMatrix::zeros(k, k),
            offdiag_block: RationalMatrix::zeros(k, k),
            border_col: RationalMatrix::zeros(k, 1),
            corner: Rational::ZERO,
        };
        for (c, f) in terms {
            debug_assert_eq!((f.n, f.b), (first.n, first.b));
            out.diag_block = &out.diag_block + &f.diag_block.scale(c);
            out.offdiag_block = &out.offdiag_block + &f.offdiag_block.scale(c);
            out.border_col = &out.border_col + &f.border_col.scale(c);
            out.corner += c * &f.corner;
        }
        out
    }

    /// The all-ones matrix of the same order in block form.
    fn all_ones(n: usize, b: usize) -> Self {
        let k = n - 1;
        StructuredBlockForm {
            kind: StructuredKind::Xmat,
            n,
            b,
            diag_block: ones(k, k),
            offdiag_block: ones(k, k),
            border_col: ones(k, 1),
            corner: Rational::ONE,
        }
    }
}

fn check_book(n: usize, b: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("T_n^(b) requires n >= 3, got n = {n}")));
    }
    if b < 2 {
        return Err(Error::InvalidParameter(format!("T_n^(b) requires b >= 2, got b = {b}")));
    }
    Ok(())
}

fn check_invertible(n: usize, b: usize) -> Result<()> {
    check_book(n, b)?;
    if n == 6 {
        return Err(Error::SingularFamily);
    }
    Ok(())
}

/// `det D(T_n^(b)) = (−1)^{b(n−4)+1} · 2^{b(n−3)+1} · b · (n−6)^{b−1}`.
///
/// `b = 1` is the single block `T_n` and is answered by [`tn_formulas`].
pub fn tnb_det(n: usize, b: usize) -> Result<Rational> {
    if b == 1 {
        return Ok(tn_formulas(n)?.result.det);
    }
    check_book(n, b)?;
    let (ni, bi) = (n as i64, b as i64);
    // b(n−4)+1 may be negative (n = 3); only its parity matters.
    let sign = if (bi * (ni - 4) + 1).rem_euclid(2) == 0 { 1 } else { -1 };
    let power = Rational::from(2).pow((b * (n - 3) + 1) as i32);
    Ok(int(sign) * power * int(bi) * int(ni - 6).pow(b as i32 - 1))
}

/// Block descriptions of `D`, `L` or `R` for `T_n^(b)`. `Xmat` is
/// delegated to [`tnb_xblocks`].
pub fn tnb_structured(kind: StructuredKind, n: usize, b: usize) -> Result<StructuredBlockForm> {
    check_book(n, b)?;
    let (ni, bi) = (n as i64, b as i64);
    let k = n - 1;
    let (diag_block, offdiag_block, border_col, corner) = match kind {
        StructuredKind::Xmat => return tnb_xblocks(n, b),
        StructuredKind::Distance if n == 3 => (a2(), sc(2, ones(2, 2)), ones(2, 1), int(0)),
        StructuredKind::Distance => {
            let m = n - 3;
            let d1 = grid2(a2(), ones(2, m), ones(m, 2), sc(2, &ones(m, m) - &eye(m)));
            let d2 = grid2(
                sc(2, ones(2, 2)),
                sc(3, ones(2, m)),
                sc(3, ones(m, 2)),
                sc(4, ones(m, m)),
            );
            let d3 = stack(ones(2, 1), sc(2, ones(m, 1)));
            (d1, d2, d3, int(0))
        }
        StructuredKind::Laplacian if n == 3 => (
            &sc(2, eye(2)) - &a2(),
            RationalMatrix::zeros(2, 2),
            -ones(2, 1),
            int(2 * bi),
        ),
        StructuredKind::Laplacian => {
            let m = n - 3;
            let l1 = grid2(&sc(ni - 1, eye(2)) - &a2(), -ones(2, m), -ones(m, 2), sc(2, eye(m)));
            let l2 = stack(-ones(2, 1), RationalMatrix::zeros(m, 1));
            (l1, RationalMatrix::zeros(k, k), l2, int(2 * bi))
        }
        StructuredKind::Rmat if n == 3 => (
            &sc(-2 * (bi - 1), eye(2)) + &sc(bi + 2, a2()),
            sc(2, ones(2, 2)),
            sc(3 * bi, ones(2, 1)),
            int(-6 * (bi - 1) * (bi - 1)),
        ),
        StructuredKind::Rmat => {
            let m = n - 3;
            let off = -((ni - 4) * bi - 2);
            let r1 = grid2(
                &sc((ni - 5) * (ni - 2) * (bi - 1), eye(2)) + &sc((ni - 2) * (bi - (ni - 5)), a2()),
                sc(off, ones(2, m)),
                sc(off, ones(m, 2)),
                &sc(bi * (ni - 6), eye(m)) + &sc(bi - (ni - 5), ones(m, m)),
            );
            let r2 = grid2(
                sc(-(ni - 5) * (ni - 2), ones(2, 2)),
                sc(2, ones(2, m)),
                sc(2, ones(m, 2)),
                sc(-(ni - 5), ones(m, m)),
            );
            let r3 = stack(
                sc((ni - 6) * ((ni - 4) * bi - (ni - 3)), ones(2, 1)),
                sc(-bi * (ni - 6), ones(m, 1)),
            );
            (r1, r2, r3, int(-(ni - 5) * (ni - 6) * (bi - 1) * (bi - 1)))
        }
    };
    Ok(StructuredBlockForm {
        kind,
        n,
        b,
        diag_block,
        offdiag_block,
        border_col,
        corner,
    })
}

/// The blocks of `X = D⁻¹` written out entry formula by entry formula,
/// independently of `L` and `R`.
pub fn tnb_xblocks(n: usize, b: usize) -> Result<StructuredBlockForm> {
    check_invertible(n, b)?;
    let (ni, bi) = (n as i64, b as i64);
    let (diag_block, offdiag_block, border_col, corner) = if n == 3 {
        let f = frac(1, 6 * bi);
        (
            (&sc(4 * bi - 1, ones(2, 2)) - &sc(6 * bi, a2())).scale(&-&f),
            ones(2, 2).scale(&f),
            ones(2, 1).scale(&frac(1, 2 * bi)),
            frac(3 - 4 * bi, 2 * bi),
        )
    } else {
        let m = n - 3;
        let f = frac(1, 2 * bi * (ni - 6));
        let x1 = grid2(
            &sc(4 * bi - (ni - 4) * (ni - 4), ones(2, 2)) + &sc(2 * bi * (ni - 6), a2()),
            sc(ni - 4 - 2 * bi, ones(2, m)),
            sc(ni - 4 - 2 * bi, ones(m, 2)),
            &sc(-(ni - 6) * bi, eye(m)) + &sc(bi - 1, ones(m, m)),
        )
        .scale(&f);
        let x2 = grid2(
            sc(-(ni - 4) * (ni - 4), ones(2, 2)),
            sc(ni - 4, ones(2, m)),
            sc(ni - 4, ones(m, 2)),
            -ones(m, m),
        )
        .scale(&f);
        let x3 = stack(sc(bi * (ni - 3) - (ni - 4), ones(2, 1)), sc(-(bi - 1), ones(m, 1))).scale(&frac(1, 2 * bi));
        let x = frac(-ni * (bi - 1) * (bi - 1) + (3 * bi * bi - 10 * bi + 6), 2 * bi);
        (x1, x2, x3, x)
    };
    Ok(StructuredBlockForm {
        kind: StructuredKind::Xmat,
        n,
        b,
        diag_block,
        offdiag_block,
        border_col,
        corner,
    })
}

/// `−L/2 + J/(2b) + R/(2(n−6)b)` in block form.
fn inverse_blocks(n: usize, b: usize) -> Result<StructuredBlockForm> {
    check_invertible(n, b)?;
    let (ni, bi) = (n as i64, b as i64);
    let l = tnb_structured(StructuredKind::Laplacian, n, b)?;
    let r = tnb_structured(StructuredKind::Rmat, n, b)?;
    let j = StructuredBlockForm::all_ones(n, b);
    Ok(StructuredBlockForm::combine(
        StructuredKind::Xmat,
        &[
            (frac(-1, 2), &l),
            (frac(1, 2 * bi), &j),
            (frac(1, 2 * (ni - 6) * bi), &r),
        ],
    ))
}

/// `D(T_n^(b))⁻¹` for `n ≠ 6`, verified by the exact product `D · X = I`
/// before it is returned.
pub fn tnb_inverse(n: usize, b: usize) -> Result<RationalMatrix> {
    let x = inverse_blocks(n, b)?;
    let d = tnb_structured(StructuredKind::Distance, n, b)?;
    let inverse = x.materialize();
    if !(&d.materialize() * &inverse).is_identity() {
        return Err(Error::CheckFailed(format!("T_{n}^({b}): D · X != I")));
    }
    Ok(inverse)
}

/// [`tnb_inverse`] without the `O(order³)` product check; block assembly
/// and replication only.
pub fn tnb_inverse_unchecked(n: usize, b: usize) -> Result<RationalMatrix> {
    Ok(inverse_blocks(n, b)?.materialize())
}

/// The five distinct blocks of `Y = D·X` for block-repeating `D` and `X`:
///
/// - `diag`       = `D1X1 + (b−1)D2X2 + d3x3ᵗ`
/// - `offdiag`    = `D1X2 + D2X1 + (b−2)D2X2 + d3x3ᵗ`
/// - `bottom_row` = `d3ᵗX1 + (b−1)d3ᵗX2`
/// - `right_col`  = `D1x3 + (b−1)D2x3 + d3x`
/// - `corner`     = `b·d3ᵗx3` (plus `d·x`, zero for the distance matrix)
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockProduct {
    pub diag: RationalMatrix,
    pub offdiag: RationalMatrix,
    pub bottom_row: RationalMatrix,
    pub right_col: RationalMatrix,
    pub corner: Rational,
}

impl BlockProduct {
    /// Whether the product is the identity: `diag = I`, everything else
    /// zero, `corner = 1`.
    pub fn is_identity(&self) -> bool {
        self.diag.is_identity()
            && self.offdiag.is_zero()
            && self.bottom_row.is_zero()
            && self.right_col.is_zero()
            && self.corner.is_one()
    }
}

pub fn block_product(d: &StructuredBlockForm, x: &StructuredBlockForm) -> Result<BlockProduct> {
    if (d.n, d.b) != (x.n, x.b) {
        return Err(Error::InvalidParameter(format!(
            "block forms for different graphs: ({}, {}) vs ({}, {})",
            d.n, d.b, x.n, x.b
        )));
    }
    let b = d.b as i64;
    let (d1, d2, d3, dc) = (&d.diag_block, &d.offdiag_block, &d.border_col, &d.corner);
    let (x1, x2, x3, xc) = (&x.diag_block, &x.offdiag_block, &x.border_col, &x.corner);
    let d2x2 = d2 * x2;
    let d3x3t = d3 * &x3.transpose();
    let d3t = d3.transpose();
    let x3t = x3.transpose();

    let diag = &(&(d1 * x1) + &sc(b - 1, d2x2.clone())) + &d3x3t;
    let offdiag = &(&(&(d1 * x2) + &(d2 * x1)) + &sc(b - 2, d2x2)) + &d3x3t;
    // row `b+1` of D times column blocks of X: d3ᵗX1 + (b−1)d3ᵗX2 + d·x3ᵗ
    let bottom_row = &(&(&d3t * x1) + &sc(b - 1, &d3t * x2)) + &x3t.scale(dc);
    // D1x3 + (b−1)D2x3 + d3·x
    let right_col = &(&(d1 * x3) + &sc(b - 1, d2 * x3)) + &d3.scale(xc);
    let corner = int(b) * &(&d3t * x3)[(0, 0)] + dc * xc;
    Ok(BlockProduct {
        diag,
        offdiag,
        bottom_row,
        right_col,
        corner,
    })
}
