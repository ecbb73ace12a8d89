//! Single blocks: `T_n` and `K_{m,n}`.

use super::{a2, eye, frac, grid2, int, ones, sc, FormulaResult};
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;

fn check_tn(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("T_n requires n >= 3, got {n}")));
    }
    Ok(())
}

/// `D(T_n) = [[A_2, J], [J, 2(J − I)]]`.
pub fn tn_distance_blocks(n: usize) -> Result<RationalMatrix> {
    check_tn(n)?;
    let m = n - 2;
    Ok(grid2(a2(), ones(2, m), ones(m, 2), sc(2, &ones(m, m) - &eye(m))))
}

/// `L(T_n) = [[(n−1)I_2 − A_2, −J], [−J, 2I]]`.
pub fn tn_laplacian_blocks(n: usize) -> Result<RationalMatrix> {
    check_tn(n)?;
    let m = n - 2;
    Ok(grid2(
        &sc(n as i64 - 1, eye(2)) - &a2(),
        -ones(2, m),
        -ones(m, 2),
        sc(2, eye(m)),
    ))
}

/// `R(T_n) = [[−(n−2)A_2, −J], [−J, I − J]]`.
pub fn tn_rmat(n: usize) -> Result<RationalMatrix> {
    check_tn(n)?;
    let m = n - 2;
    Ok(grid2(
        sc(-(n as i64 - 2), a2()),
        -ones(2, m),
        -ones(m, 2),
        &eye(m) - &ones(m, m),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TnFormulas {
    pub result: FormulaResult,
    /// Correction matrix with `D⁻¹ = −L/2 + J/2 + R/2`.
    pub rmat: RationalMatrix,
}

/// Determinant `(−1)^{n−1} 2^{n−2}` and the block inverse
/// `[[A_2 − ((n−2)/2) J_2, J/2], [J/2, −I/2]]` of `D(T_n)`.
///
/// The Laplacian form of the inverse is checked against the block form
/// before returning.
pub fn tn_formulas(n: usize) -> Result<TnFormulas> {
    check_tn(n)?;
    let ni = n as i64;
    let m = n - 2;
    let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
    let det = int(sign) * Rational::from(2).pow(n as i32 - 2);
    let half = frac(1, 2);
    let inverse = grid2(
        &a2() - &ones(2, 2).scale(&frac(ni - 2, 2)),
        ones(2, m).scale(&half),
        ones(m, 2).scale(&half),
        eye(m).scale(&-&half),
    );
    let rmat = tn_rmat(n)?;
    let via_laplacian = (&(-tn_laplacian_blocks(n)?) + &ones(n, n) + rmat.clone()).scale(&half);
    if via_laplacian != inverse {
        return Err(Error::CheckFailed(format!(
            "T_{n}: Laplacian form of the inverse disagrees"
        )));
    }
    Ok(TnFormulas {
        result: FormulaResult::invertible(det, inverse),
        rmat,
    })
}

/// `D(K_{m,n}) = [[2(J_m − I_m), J], [J, 2(J_n − I_n)]]`.
pub fn kmn_distance_blocks(m: usize, n: usize) -> Result<RationalMatrix> {
    check_kmn(m, n)?;
    Ok(grid2(
        sc(2, &ones(m, m) - &eye(m)),
        ones(m, n),
        ones(n, m),
        sc(2, &ones(n, n) - &eye(n)),
    ))
}

fn check_kmn(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "K_(m,n) requires m, n >= 1, got ({m}, {n})"
        )));
    }
    Ok(())
}

/// `det D(K_{m,n}) = (−2)^{m+n−2} (4(m−1)(n−1) − mn)`.
pub fn kmn_det(m: usize, n: usize) -> Result<Rational> {
    check_kmn(m, n)?;
    let (mi, ni) = (m as i64, n as i64);
    Ok(Rational::from(-2).pow((m + n - 2) as i32) * int(4 * (mi - 1) * (ni - 1) - mi * ni))
}

/// Inverse of `D(K_{n,1})`, leaves first and centre last:
/// `[[J/(2n) − I/2, 𝟙/n], [𝟙ᵗ/n, −2(n−1)/n]]`.
fn star_inverse(n: usize) -> RationalMatrix {
    let ni = n as i64;
    grid2(
        &ones(n, n).scale(&frac(1, 2 * ni)) - &eye(n).scale(&frac(1, 2)),
        ones(n, 1).scale(&frac(1, ni)),
        ones(1, n).scale(&frac(1, ni)),
        RationalMatrix::column(vec![frac(-2 * (ni - 1), ni)]),
    )
}

/// Determinant and, except at `(2, 2)`, the inverse of `D(K_{m,n})`.
///
/// Stars use the star form (reflected when the single vertex is part 1 so
/// the vertex order stays part-1 first); `K_{1,1}` is `A_2`, its own
/// inverse; otherwise the general two-part form with
/// `q = 3mn − 4(m+n−1)`. Every returned inverse is checked against `D`.
pub fn kmn_formulas(m: usize, n: usize) -> Result<FormulaResult> {
    let det = kmn_det(m, n)?;
    if (m, n) == (2, 2) {
        return Ok(FormulaResult::singular(det, "D(K_2,2) is singular"));
    }
    let inverse = match (m, n) {
        (1, 1) => a2(),
        (_, 1) => star_inverse(m),
        (1, _) => {
            // reverse the order of vertices: centre first
            let s = star_inverse(n);
            let perm: Vec<usize> = std::iter::once(n).chain(0..n).collect();
            s.submatrix(&perm, &perm)
        }
        _ => {
            let (mi, ni) = (m as i64, n as i64);
            let q = 3 * mi * ni - 4 * (mi + ni - 1);
            let half = frac(1, 2);
            grid2(
                &ones(m, m).scale(&frac(3 * ni - 4, 2 * q)) - &eye(m).scale(&half),
                ones(m, n).scale(&frac(-1, q)),
                ones(n, m).scale(&frac(-1, q)),
                &ones(n, n).scale(&frac(3 * mi - 4, 2 * q)) - &eye(n).scale(&half),
            )
        }
    };
    let d = kmn_distance_blocks(m, n)?;
    if !(&d * &inverse).is_identity() {
        return Err(Error::CheckFailed(format!("K_({m},{n}): D · D⁻¹ != I")));
    }
    Ok(FormulaResult::invertible(det, inverse))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, build_family, laplacian, FamilySpec};
    use crate::linalg::{det_exact, inverse_exact};

    #[test]
    fn tn_block_forms_match_graph() {
        for n in 3..10 {
            let g = build_family(&FamilySpec::TnSingle { n }).unwrap();
            assert_eq!(tn_distance_blocks(n).unwrap(), all_pairs_distances(&g).unwrap());
            assert_eq!(tn_laplacian_blocks(n).unwrap(), laplacian(&g));
        }
    }

    #[test]
    fn tn_examples() {
        let t3 = tn_formulas(3).unwrap();
        assert_eq!(t3.result.det, int(2));
        let t5 = tn_formulas(5).unwrap();
        assert_eq!(t5.result.det, int(8));
        let inv = t5.result.inverse.unwrap();
        assert_eq!(inv.block(0, 0, 2, 2), &a2() - &ones(2, 2).scale(&frac(3, 2)));
        let t7 = tn_formulas(7).unwrap();
        let d7 = tn_distance_blocks(7).unwrap();
        assert_eq!(t7.result.inverse.unwrap(), inverse_exact(&d7).unwrap());
        assert!(matches!(tn_formulas(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn kmn_examples() {
        let r = kmn_formulas(2, 2).unwrap();
        assert_eq!(r.det, int(0));
        assert!(r.is_singular());

        // oracle: Bareiss on the 5x5 distance matrix
        let d23 = kmn_distance_blocks(2, 3).unwrap();
        assert_eq!(det_exact(&d23).unwrap(), int(-16));
        assert_eq!(kmn_formulas(2, 3).unwrap().det, int(-16));

        let inv = kmn_formulas(3, 1).unwrap().inverse.unwrap();
        assert_eq!(
            inv.block(0, 0, 3, 3),
            &ones(3, 3).scale(&frac(1, 6)) - &eye(3).scale(&frac(1, 2))
        );
        assert_eq!(inv[(3, 3)], frac(-4, 3));

        let inv = kmn_formulas(1, 3).unwrap().inverse.unwrap();
        assert_eq!(inv[(0, 0)], frac(-4, 3));
        assert_eq!(inv, inverse_exact(&kmn_distance_blocks(1, 3).unwrap()).unwrap());

        assert_eq!(kmn_formulas(1, 1).unwrap().inverse.unwrap(), a2());
    }

    #[test]
    fn kmn_blocks_match_graph() {
        for m in 1..6 {
            for n in 1..6 {
                let g = build_family(&FamilySpec::CompleteBipartite { m, n }).unwrap();
                assert_eq!(kmn_distance_blocks(m, n).unwrap(), all_pairs_distances(&g).unwrap());
            }
        }
    }
}
