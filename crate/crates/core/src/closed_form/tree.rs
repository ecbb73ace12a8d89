use crate::error::{Error, Result};
use crate::graph::{laplacian, Graph};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;

fn check_tree(tree: &Graph) -> Result<usize> {
    let n = tree.vertex_count();
    if n < 2 {
        return Err(Error::NotATree(format!("need at least 2 vertices, got {n}")));
    }
    if !tree.is_tree() {
        return Err(Error::NotATree(format!(
            "{n} vertices, {} edges, connected = {}",
            tree.edge_count(),
            tree.is_connected()
        )));
    }
    Ok(n)
}

/// `det D(T) = (−1)^{n−1} (n−1) 2^{n−2}` for any tree on `n` vertices.
pub fn tree_det(tree: &Graph) -> Result<Rational> {
    let n = check_tree(tree)? as i32;
    let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
    Ok(Rational::from(sign * (n as i64 - 1)) * Rational::from(2).pow(n - 2))
}

/// `D(T)⁻¹ = −L/2 + ττᵗ / (2(n−1))` with `τ_i = 2 − δ_i`.
pub fn tree_inverse(tree: &Graph) -> Result<RationalMatrix> {
    let n = check_tree(tree)?;
    let tau: Vec<Rational> = tree.degrees().iter().map(|&d| Rational::from(2 - d as i64)).collect();
    let l = laplacian(tree);
    let half = Rational::new(-1, 2);
    let w = Rational::new(1, 2 * (n as i64 - 1));
    Ok(RationalMatrix::from_fn(n, n, |i, j| {
        &l[(i, j)] * &half + &(&tau[i] * &tau[j]) * &w
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, build_family, FamilySpec};
    use crate::linalg::{det_exact, inverse_exact};

    #[test]
    fn small_trees() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(tree_det(&p3).unwrap(), Rational::from(4));
        let p2 = Graph::path(2).unwrap();
        assert_eq!(tree_det(&p2).unwrap(), Rational::from(-1));
        assert_eq!(tree_inverse(&p2).unwrap(), RationalMatrix::exchange2());
        assert_eq!(
            tree_inverse(&p3).unwrap(),
            inverse_exact(&all_pairs_distances(&p3).unwrap()).unwrap()
        );
    }

    #[test]
    fn star_k14() {
        let star = build_family(&FamilySpec::Star { n: 4 }).unwrap();
        // oracle: Bareiss on the 5x5 distance matrix; (−1)^4 · 4 · 2^3
        assert_eq!(
            det_exact(&all_pairs_distances(&star).unwrap()).unwrap(),
            Rational::from(32)
        );
        assert_eq!(tree_det(&star).unwrap(), Rational::from(32));
    }

    #[test]
    fn rejects_non_trees() {
        assert!(matches!(tree_det(&Graph::cycle(4).unwrap()), Err(Error::NotATree(_))));
        assert!(matches!(
            tree_inverse(&Graph::from_edges(1, &[]).unwrap()),
            Err(Error::NotATree(_))
        ));
    }
}
