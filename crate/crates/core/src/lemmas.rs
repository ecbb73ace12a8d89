//! Generic structured-inverse lemmas: block inversion through the Schur
//! complement, the rank-one update inverse, and the `aI + bJ` family.

use crate::error::{Error, Result};
use crate::linalg::{inverse_exact, rank};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;
use crate::spectra::SpectrumClaim;

/// `B/B11 = B22 - B21 B11⁻¹ B12`, given `B11⁻¹`.
pub fn schur_complement(
    b11_inv: &RationalMatrix,
    b12: &RationalMatrix,
    b21: &RationalMatrix,
    b22: &RationalMatrix,
) -> Result<RationalMatrix> {
    b22.try_sub(&b21.try_mul(b11_inv)?.try_mul(b12)?)
}

fn check_conformal(
    b11: &RationalMatrix,
    b12: &RationalMatrix,
    b21: &RationalMatrix,
    b22: &RationalMatrix,
) -> Result<()> {
    let p = b11.require_square()?;
    let q = b22.require_square()?;
    if b12.shape() != (p, q) {
        return Err(Error::DimensionMismatch {
            op: "schur_inverse",
            left: b12.shape(),
            right: (p, q),
        });
    }
    if b21.shape() != (q, p) {
        return Err(Error::DimensionMismatch {
            op: "schur_inverse",
            left: b21.shape(),
            right: (q, p),
        });
    }
    Ok(())
}

/// Inverse of `[[B11, B12], [B21, B22]]` assembled from `B11⁻¹` and the
/// inverse of the Schur complement `S = B/B11`:
///
/// ```text
/// [ B11⁻¹ + B11⁻¹ B12 S⁻¹ B21 B11⁻¹   -B11⁻¹ B12 S⁻¹ ]
/// [ -S⁻¹ B21 B11⁻¹                     S⁻¹           ]
/// ```
pub fn schur_inverse(
    b11: &RationalMatrix,
    b12: &RationalMatrix,
    b21: &RationalMatrix,
    b22: &RationalMatrix,
) -> Result<RationalMatrix> {
    check_conformal(b11, b12, b21, b22)?;
    let b11_inv = match inverse_exact(b11) {
        Ok(inv) => inv,
        Err(Error::Singular { .. }) => return Err(Error::LeadingBlockSingular),
        Err(e) => return Err(e),
    };
    let s = schur_complement(&b11_inv, b12, b21, b22)?;
    let s_inv = match inverse_exact(&s) {
        Ok(inv) => inv,
        Err(Error::Singular { .. }) => return Err(Error::SchurComplementSingular),
        Err(e) => return Err(e),
    };
    let left = &b11_inv * b12; // B11⁻¹ B12
    let right = b21 * &b11_inv; // B21 B11⁻¹
    let top_right = -(&left * &s_inv);
    let bottom_left = -(&s_inv * &right);
    let top_left = &b11_inv - &(&top_right * &right);
    RationalMatrix::from_blocks(&[vec![top_left, top_right], vec![bottom_left, s_inv]])
}

/// `(A + B)⁻¹ = A⁻¹ - (1 / (1 + g)) A⁻¹ B A⁻¹` with `g = tr(B A⁻¹)`, for a
/// rank-one `B`.
pub fn rank_one_update_inverse(a_inv: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix> {
    a_inv.require_square()?;
    if a_inv.shape() != b.shape() {
        return Err(Error::DimensionMismatch {
            op: "rank_one_update_inverse",
            left: a_inv.shape(),
            right: b.shape(),
        });
    }
    let r = rank(b);
    if r != 1 {
        return Err(Error::NotRankOne(r));
    }
    let g = rank_one_update_g(a_inv, b)?;
    let denom = Rational::ONE + &g;
    if denom.is_zero() {
        return Err(Error::UpdateMakesSingular);
    }
    let correction = &(a_inv * b) * a_inv;
    Ok(a_inv - &correction.scale(&denom.recip().unwrap()))
}

/// `g = tr(B A⁻¹)`.
pub fn rank_one_update_g(a_inv: &RationalMatrix, b: &RationalMatrix) -> Result<Rational> {
    Ok(b.try_mul(a_inv)?.trace())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarPlusOnesAnalysis {
    pub spectrum: SpectrumClaim,
    pub det: Rational,
    pub inverse: Option<RationalMatrix>,
}

/// Eigenvalues, determinant and (when it exists) inverse of `aI_n + bJ_n`,
/// all in closed form: eigenvalues `a` (×(n−1)) and `a + nb` (×1),
/// `det = a^{n−1}(a + nb)`, inverse `(1/a)(I − b/(a + nb) J)`.
pub fn aibj_analysis(a: &Rational, b: &Rational, n: usize) -> Result<ScalarPlusOnesAnalysis> {
    if a.is_zero() {
        return Err(Error::ZeroDiagonalScalar);
    }
    if n == 0 {
        return Err(Error::InvalidParameter("aI + bJ analysis requires n >= 1".into()));
    }
    let top = a + &(Rational::from(n) * b);
    let det = a.pow(n as i32 - 1) * &top;
    let spectrum = SpectrumClaim::new(vec![(a.clone(), n - 1), (top.clone(), 1)]);
    let inverse = (!top.is_zero()).then(|| {
        let j = RationalMatrix::ones_square(n).scale(&(b / &top));
        (&RationalMatrix::identity(n) - &j).scale(&a.recip().unwrap())
    });
    Ok(ScalarPlusOnesAnalysis { spectrum, det, inverse })
}

/// `aI_n + bJ_n` as a dense matrix.
pub fn aibj_matrix(a: &Rational, b: &Rational, n: usize) -> RationalMatrix {
    RationalMatrix::from_fn(n, n, |i, j| if i == j { a + b } else { b.clone() })
}
