//! Verification suites: grids of independent cells, each comparing a closed
//! form with an exact oracle. Cells run on a rayon pool; results are
//! collected in grid order so reports are deterministic.

use std::fmt::Display;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use cpdist_core::closed_form::{
    block_product, kmn_distance_blocks, kmn_formulas, tn_distance_blocks, tn_formulas, tn_laplacian_blocks, tn_rmat,
    tnb_det, tnb_inverse, tnb_structured, tnb_xblocks, tree_det, tree_inverse, StructuredKind,
};
use cpdist_core::graph::is_cp_graph;
use cpdist_core::lemmas::{aibj_analysis, aibj_matrix, rank_one_update_inverse, schur_inverse};
use cpdist_core::spectra::{claimed_spectrum, principal_submatrix, verify_claim, Part};
use cpdist_core::{
    all_pairs_distances, build_family, char_poly_exact, det_exact, inverse_exact, laplacian, Error, FamilySpec, Graph,
    Lcg, Rational, RationalMatrix,
};

use crate::args::SuiteName;
use crate::report::{Failure, Params, VerificationReport};

/// Suite-wide settings.
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Adds one to the book-graph determinant formula.
    pub inject_fault: bool,
    /// Worker cap; `None` uses rayon's default.
    pub threads: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            inject_fault: false,
            threads: None,
        }
    }
}

/// Collects mismatches for one cell.
#[derive(Default)]
pub struct Checker {
    mismatches: Vec<(String, String, String)>,
}

impl Checker {
    fn eq<T: PartialEq + Display>(&mut self, location: &str, expected: &T, actual: &T) {
        if expected != actual {
            self.mismatches
                .push((expected.to_string(), actual.to_string(), location.into()));
        }
    }

    fn holds(&mut self, location: &str, cond: bool) {
        if !cond {
            self.mismatches.push(("true".into(), "false".into(), location.into()));
        }
    }

    fn ok<T>(&mut self, location: &str, r: cpdist_core::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.mismatches
                    .push(("ok".into(), format!("error: {e}"), location.into()));
                None
            }
        }
    }
}

type Check = Box<dyn Fn(&mut Checker) + Send + Sync>;

struct Cell {
    params: Params,
    check: Check,
}

fn cell(params: Value, check: impl Fn(&mut Checker) + Send + Sync + 'static) -> Cell {
    let Value::Object(params) = params else {
        unreachable!("cell parameters are a JSON object")
    };
    Cell {
        params,
        check: Box::new(check),
    }
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

fn random_matrix(rng: &mut Lcg, rows: usize, cols: usize, bound: i64) -> RationalMatrix {
    RationalMatrix::from_fn(rows, cols, |_, _| int(rng.range_i64(-bound, bound)))
}

fn graph(spec: FamilySpec) -> Graph {
    build_family(&spec).expect("suite grids only build valid families")
}

/// `D · X = I` given an optional `X`.
fn check_inverse(c: &mut Checker, location: &str, d: &RationalMatrix, x: Option<&RationalMatrix>) {
    match x {
        Some(x) => c.holds(location, (d * x).is_identity()),
        None => c.holds(location, false),
    }
}

fn dets(cfg: SuiteConfig) -> Vec<Cell> {
    let mut cells = Vec::new();
    for n in 3..=12 {
        cells.push(cell(json!({"check": "tn_det", "n": n}), move |c| {
            let d = graph(FamilySpec::TnSingle { n });
            if let (Some(f), Some(dm)) = (
                c.ok("tn_formulas", tn_formulas(n)),
                c.ok("distances", all_pairs_distances(&d)),
            ) {
                if let Some(oracle) = c.ok("det_exact", det_exact(&dm)) {
                    c.eq("tn_det vs det_exact", &oracle, &f.result.det);
                }
            }
        }));
    }
    for m in 1..=8 {
        for n in 1..=8 {
            cells.push(cell(json!({"check": "kmn_det", "m": m, "n": n}), move |c| {
                let d = kmn_distance_blocks(m, n).expect("m, n >= 1");
                let f = c.ok("kmn_formulas", kmn_formulas(m, n));
                let oracle = c.ok("det_exact", det_exact(&d));
                if let (Some(f), Some(oracle)) = (f, oracle) {
                    c.eq("kmn_det vs det_exact", &oracle, &f.det);
                    c.eq("det = 0 iff (m,n) = (2,2)", &((m, n) == (2, 2)), &f.det.is_zero());
                }
            }));
        }
    }
    let fault = cfg.inject_fault;
    for n in 3..=10 {
        for b in 2..=5 {
            cells.push(cell(json!({"check": "tnb_det", "n": n, "b": b}), move |c| {
                let d = all_pairs_distances(&graph(FamilySpec::TnBook { n, b })).expect("connected");
                let formula = c.ok("tnb_det", tnb_det(n, b));
                let oracle = c.ok("det_exact", det_exact(&d));
                if let (Some(mut formula), Some(oracle)) = (formula, oracle) {
                    if fault && (n, b) == (5, 2) {
                        formula += Rational::ONE;
                    }
                    c.eq("tnb_det vs det_exact", &oracle, &formula);
                    c.eq("det = 0 iff n = 6", &(n == 6), &formula.is_zero());
                }
            }));
        }
    }
    let mut rng = Lcg::new(cfg.seed);
    for i in 0..50 {
        let n = rng.range_i64(2, 12) as usize;
        let spec = FamilySpec::random_tree(n, &mut rng);
        cells.push(cell(json!({"check": "tree_det", "tree": i, "n": n}), move |c| {
            let g = graph(spec.clone());
            let d = all_pairs_distances(&g).expect("trees are connected");
            if let (Some(f), Some(oracle)) = (c.ok("tree_det", tree_det(&g)), c.ok("det_exact", det_exact(&d))) {
                c.eq("tree_det vs det_exact", &oracle, &f);
            }
        }));
    }
    let mut rng = Lcg::new(cfg.seed).fork(1);
    for i in 0..20 {
        let n = rng.range_i64(1, 6) as usize;
        let (a, b) = (random_matrix(&mut rng, n, n, 5), random_matrix(&mut rng, n, n, 5));
        cells.push(cell(
            json!({"check": "det_multiplicative", "instance": i, "order": n}),
            move |c| {
                let (da, db, dab) = (det_exact(&a), det_exact(&b), det_exact(&(&a * &b)));
                if let (Some(da), Some(db), Some(dab)) = (c.ok("det A", da), c.ok("det B", db), c.ok("det AB", dab)) {
                    c.eq("det(AB) = det(A)det(B)", &(da * db), &dab);
                }
            },
        ));
    }
    let mut rng = Lcg::new(cfg.seed).fork(2);
    for i in 0..20 {
        let p = rng.range_i64(1, 3) as usize;
        let q = rng.range_i64(1, 3) as usize;
        let a = random_matrix(&mut rng, p, p, 5);
        let b = random_matrix(&mut rng, q, q, 5);
        let lower = random_matrix(&mut rng, q, p, 5);
        cells.push(cell(
            json!({"check": "block_triangular_det", "instance": i, "p": p, "q": q}),
            move |c| {
                let m = RationalMatrix::from_blocks(&[
                    vec![a.clone(), RationalMatrix::zeros(p, q)],
                    vec![lower.clone(), b.clone()],
                ])
                .expect("conformal");
                if let (Some(dm), Some(da), Some(db)) = (
                    c.ok("det M", det_exact(&m)),
                    c.ok("det A", det_exact(&a)),
                    c.ok("det B", det_exact(&b)),
                ) {
                    c.eq("det [[A,0],[C,B]] = det A det B", &(da * db), &dm);
                }
            },
        ));
    }
    let mut rng = Lcg::new(cfg.seed).fork(3);
    for i in 0..20 {
        let n = rng.range_i64(1, 6) as usize;
        let a = random_matrix(&mut rng, n, n, 5);
        cells.push(cell(
            json!({"check": "char_poly", "instance": i, "order": n}),
            move |c| {
                if let (Some(p), Some(det)) = (
                    c.ok("char_poly_exact", char_poly_exact(&a)),
                    c.ok("det_exact", det_exact(&a)),
                ) {
                    let sign = if n % 2 == 0 { int(1) } else { int(-1) };
                    c.eq("constant term = (−1)^n det", &(sign * det), &p.coeff(0));
                    c.eq("x^(n−1) coefficient = −trace", &-a.trace(), &p.coeff(n - 1));
                }
            },
        ));
    }
    cells
}

fn inverses(cfg: SuiteConfig) -> Vec<Cell> {
    let mut cells = Vec::new();
    for n in 3..=12 {
        cells.push(cell(json!({"check": "tn_inverse", "n": n}), move |c| {
            let Some(f) = c.ok("tn_formulas", tn_formulas(n)) else {
                return;
            };
            let d = tn_distance_blocks(n).expect("n >= 3");
            check_inverse(c, "D · X = I", &d, f.result.inverse.as_ref());
            if let Some(x) = &f.result.inverse {
                let l = tn_laplacian_blocks(n).expect("n >= 3");
                let r = &(&x.scale(&int(2)) + &l) - &RationalMatrix::ones_square(n);
                c.holds("2D⁻¹ + L − J = R", r == tn_rmat(n).expect("n >= 3"));
            }
        }));
    }
    for m in 1..=8 {
        for n in 1..=8 {
            cells.push(cell(json!({"check": "kmn_inverse", "m": m, "n": n}), move |c| {
                let Some(f) = c.ok("kmn_formulas", kmn_formulas(m, n)) else {
                    return;
                };
                let d = kmn_distance_blocks(m, n).expect("m, n >= 1");
                if f.det.is_zero() {
                    c.holds("singular cell has no inverse", f.inverse.is_none());
                } else {
                    check_inverse(c, "D · D⁻¹ = I", &d, f.inverse.as_ref());
                }
            }));
        }
    }
    for n in (3..=10).filter(|&n| n != 6) {
        for b in 2..=5 {
            cells.push(cell(json!({"check": "tnb_inverse", "n": n, "b": b}), move |c| {
                let d = all_pairs_distances(&graph(FamilySpec::TnBook { n, b })).expect("connected");
                if let (Some(x), Some(oracle)) = (
                    c.ok("tnb_inverse", tnb_inverse(n, b)),
                    c.ok("inverse_exact", inverse_exact(&d)),
                ) {
                    c.holds("tnb_inverse = inverse_exact", x == oracle);
                }
                let db = tnb_structured(StructuredKind::Distance, n, b).expect("valid (n, b)");
                let Some(xb) = c.ok("tnb_xblocks", tnb_xblocks(n, b)) else {
                    return;
                };
                let Some(y) = c.ok("block_product", block_product(&db, &xb)) else {
                    return;
                };
                c.holds("step 1: D1X1 + (b−1)D2X2 + d3x3ᵗ = I", y.diag.is_identity());
                c.holds("step 2: D1X2 + D2X1 + (b−2)D2X2 + d3x3ᵗ = 0", y.offdiag.is_zero());
                c.holds("step 3: d3ᵗX1 + (b−1)d3ᵗX2 = 0", y.bottom_row.is_zero());
                c.holds("step 4: D1x3 + (b−1)D2x3 + d3x = 0", y.right_col.is_zero());
                c.eq("step 5: b·d3ᵗx3 = 1", &Rational::ONE, &y.corner);
            }));
        }
    }
    for b in 2..=5 {
        cells.push(cell(json!({"check": "tnb_singular", "n": 6, "b": b}), move |c| {
            c.holds(
                "n = 6 refused as singular",
                matches!(tnb_inverse(6, b), Err(Error::SingularFamily)),
            );
        }));
    }
    let mut rng = Lcg::new(cfg.seed);
    for i in 0..50 {
        let n = rng.range_i64(2, 12) as usize;
        let spec = FamilySpec::random_tree(n, &mut rng);
        cells.push(cell(json!({"check": "tree_inverse", "tree": i, "n": n}), move |c| {
            let g = graph(spec.clone());
            let d = all_pairs_distances(&g).expect("trees are connected");
            let x = c.ok("tree_inverse", tree_inverse(&g));
            check_inverse(c, "D · X = I", &d, x.as_ref());
        }));
    }
    let mut rng = Lcg::new(cfg.seed).fork(4);
    for i in 0..100 {
        let n = rng.range_i64(1, 8) as usize;
        let a = random_matrix(&mut rng, n, n, 5);
        cells.push(cell(
            json!({"check": "inverse_exact", "instance": i, "order": n}),
            move |c| match inverse_exact(&a) {
                Ok(inv) => {
                    c.holds("A · A⁻¹ = I", (&a * &inv).is_identity());
                    c.holds("A⁻¹ · A = I", (&inv * &a).is_identity());
                }
                Err(_) => {
                    if let Some(det) = c.ok("det_exact", det_exact(&a)) {
                        c.eq("singular only when det = 0", &Rational::ZERO, &det);
                    }
                }
            },
        ));
    }
    cells
}

fn spectra(_cfg: SuiteConfig) -> Vec<Cell> {
    let mut cells = Vec::new();
    for n in 3..=10 {
        for b in 2..=5 {
            let parts: &[Part] = if n == 3 {
                &[Part::B]
            } else {
                &[Part::B, Part::N, Part::NC]
            };
            for &part in parts {
                let expected_order = match part {
                    Part::B => 2 * b,
                    Part::N => b * (n - 3),
                    Part::NC => b * (n - 3) + 1,
                };
                cells.push(cell(
                    json!({"check": "spectrum", "part": part.to_string(), "n": n, "b": b}),
                    move |c| {
                        let Some(claim) = c.ok("claimed_spectrum", claimed_spectrum(part, n, b)) else {
                            return;
                        };
                        c.eq(
                            "claimed multiplicities sum to the part size",
                            &expected_order,
                            &claim.order(),
                        );
                        let Some(m) = c.ok("principal_submatrix", principal_submatrix(part, n, b)) else {
                            return;
                        };
                        if let Some(check) = c.ok("verify_claim", verify_claim(&m, &claim)) {
                            if !check.matches {
                                c.eq("characteristic polynomial", &check.claimed, &check.computed);
                            }
                        }
                        c.eq("trace", &m.trace(), &claim.trace());
                    },
                ));
            }
        }
    }
    cells
}

fn lemmas(cfg: SuiteConfig) -> Vec<Cell> {
    let mut cells = Vec::new();
    let mut rng = Lcg::new(cfg.seed).fork(5);
    for i in 0..100 {
        let p = rng.range_i64(1, 4) as usize;
        let q = rng.range_i64(1, 4) as usize;
        let m = random_matrix(&mut rng, p + q, p + q, 5);
        cells.push(cell(
            json!({"check": "schur_inverse", "instance": i, "p": p, "q": q}),
            move |c| {
                let blk = |r0, c0, r, k| m.block(r0, c0, r, k);
                let (b11, b12, b21, b22) = (blk(0, 0, p, p), blk(0, p, p, q), blk(p, 0, q, p), blk(p, p, q, q));
                match schur_inverse(&b11, &b12, &b21, &b22) {
                    Ok(inv) => {
                        if let Some(oracle) = c.ok("inverse_exact", inverse_exact(&m)) {
                            c.holds("schur_inverse = inverse_exact", inv == oracle);
                        }
                    }
                    Err(Error::LeadingBlockSingular) => {
                        c.holds("leading block is singular", det_exact(&b11).is_ok_and(|d| d.is_zero()));
                    }
                    Err(Error::SchurComplementSingular) => {
                        c.holds("whole matrix is singular", det_exact(&m).is_ok_and(|d| d.is_zero()));
                    }
                    Err(e) => c.holds(&format!("unexpected error: {e}"), false),
                }
            },
        ));
    }
    let mut rng = Lcg::new(cfg.seed).fork(6);
    for i in 0..100 {
        let n = rng.range_i64(1, 6) as usize;
        let (a, update) = loop {
            let a = random_matrix(&mut rng, n, n, 5);
            let u = random_matrix(&mut rng, n, 1, 3);
            let v = random_matrix(&mut rng, 1, n, 3);
            let update = &u * &v;
            if !update.is_zero() && det_exact(&a).is_ok_and(|d| !d.is_zero()) {
                break (a, update);
            }
        };
        cells.push(cell(
            json!({"check": "rank_one_update", "instance": i, "order": n}),
            move |c| {
                let Some(a_inv) = c.ok("inverse_exact", inverse_exact(&a)) else {
                    return;
                };
                let sum = &a + &update;
                match rank_one_update_inverse(&a_inv, &update) {
                    Ok(inv) => {
                        if let Some(oracle) = c.ok("inverse_exact(A + B)", inverse_exact(&sum)) {
                            c.holds("rank_one_update_inverse = inverse_exact", inv == oracle);
                        }
                    }
                    Err(Error::UpdateMakesSingular) => {
                        c.holds("A + B is singular", det_exact(&sum).is_ok_and(|d| d.is_zero()));
                    }
                    Err(e) => c.holds(&format!("unexpected error: {e}"), false),
                }
            },
        ));
    }
    for a in (-3i64..=3).filter(|&a| a != 0) {
        for b in -3i64..=3 {
            for n in 2..=6 {
                cells.push(cell(json!({"check": "aibj", "a": a, "b": b, "n": n}), move |c| {
                    let (a, b) = (int(a), int(b));
                    let Some(an) = c.ok("aibj_analysis", aibj_analysis(&a, &b, n)) else {
                        return;
                    };
                    let m = aibj_matrix(&a, &b, n);
                    if let Some(p) = c.ok("char_poly_exact", char_poly_exact(&m)) {
                        c.eq("spectrum vs characteristic polynomial", &p, &an.spectrum.polynomial());
                    }
                    if let Some(det) = c.ok("det_exact", det_exact(&m)) {
                        c.eq("det", &det, &an.det);
                    }
                    match (&an.inverse, inverse_exact(&m)) {
                        (Some(inv), Ok(oracle)) => c.holds("inverse", *inv == oracle),
                        (None, Err(_)) => {}
                        _ => c.holds("invertibility agrees with oracle", false),
                    }
                }));
            }
        }
    }
    for r in 2..=6 {
        for s in 2..=6 {
            for t in 2..=6 {
                cells.push(cell(
                    json!({"check": "exchange_ones", "r": r, "s": s, "t": t}),
                    move |c| {
                        let a2 = RationalMatrix::exchange2();
                        let j = RationalMatrix::ones;
                        c.holds("A2² = I", (&a2 * &a2).is_identity());
                        c.holds("A2 J(2×s) = J(2×s)", &a2 * &j(2, s) == j(2, s));
                        c.holds("J(r×2) A2 = J(r×2)", &j(r, 2) * &a2 == j(r, 2));
                        c.holds("A2 J2 A2 = J2", &(&a2 * &j(2, 2)) * &a2 == j(2, 2));
                        c.holds(
                            "J(r×t) J(t×s) = t J(r×s)",
                            &j(r, t) * &j(t, s) == j(r, s).scale(&int(t as i64)),
                        );
                    },
                ));
            }
        }
    }
    cells
}

/// Which closed-form distance matrix a corpus graph should reproduce.
#[derive(Clone)]
enum Blocks {
    None,
    Tn(usize),
    Book(usize, usize),
    Kmn(usize, usize),
}

fn recognizer(cfg: SuiteConfig) -> Vec<Cell> {
    let mut corpus: Vec<(Value, Graph, bool, Blocks)> = Vec::new();
    for n in 3..=8 {
        corpus.push((
            json!({"graph": "tn", "n": n}),
            graph(FamilySpec::TnSingle { n }),
            true,
            Blocks::Tn(n),
        ));
        for b in 2..=4 {
            corpus.push((
                json!({"graph": "tn-book", "n": n, "b": b}),
                graph(FamilySpec::TnBook { n, b }),
                true,
                Blocks::Book(n, b),
            ));
        }
    }
    for m in 1..=5 {
        for n in 1..=5 {
            let g = graph(FamilySpec::CompleteBipartite { m, n });
            corpus.push((json!({"graph": "kmn", "m": m, "n": n}), g, true, Blocks::Kmn(m, n)));
        }
    }
    let mut rng = Lcg::new(cfg.seed);
    for i in 0..10 {
        let n = rng.range_i64(2, 12) as usize;
        corpus.push((
            json!({"graph": "tree", "tree": i, "n": n}),
            graph(FamilySpec::random_tree(n, &mut rng)),
            true,
            Blocks::None,
        ));
    }
    corpus.push((json!({"graph": "k4"}), graph(FamilySpec::K4), true, Blocks::None));
    corpus.push((
        json!({"graph": "c4"}),
        Graph::cycle(4).expect("n >= 3"),
        true,
        Blocks::None,
    ));
    corpus.push((
        json!({"graph": "k5"}),
        Graph::complete(5).expect("n >= 1"),
        false,
        Blocks::None,
    ));
    corpus.push((json!({"graph": "petersen"}), Graph::petersen(), false, Blocks::None));

    corpus
        .into_iter()
        .map(|(mut params, g, expected, blocks)| {
            params["check"] = json!("graph");
            cell(params, move |c| {
                c.eq("is_cp_graph", &expected, &is_cp_graph(&g).is_cp);
                let Some(d) = c.ok("all_pairs_distances", all_pairs_distances(&g)) else {
                    return;
                };
                let n = g.vertex_count();
                c.holds("distance matrix symmetric", d.is_symmetric());
                c.holds("zero diagonal", (0..n).all(|i| d[(i, i)].is_zero()));
                if n <= 40 {
                    let triangle = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| d[(i, j)] <= &d[(i, k)] + &d[(k, j)])));
                    c.holds("triangle inequality", triangle);
                }
                let l = laplacian(&g);
                c.holds(
                    "Laplacian rows sum to zero",
                    (0..n).all(|i| l.row(i).iter().sum::<Rational>().is_zero()),
                );
                let degrees =
                    RationalMatrix::diagonal(&g.degrees().into_iter().map(Rational::from).collect::<Vec<_>>());
                c.holds("L = Diag(δ) − A", l == &degrees - &g.adjacency_matrix());
                let closed = match blocks {
                    Blocks::None => None,
                    Blocks::Tn(n) => tn_distance_blocks(n).ok(),
                    Blocks::Book(n, b) => tnb_structured(StructuredKind::Distance, n, b)
                        .ok()
                        .map(|f| f.materialize()),
                    Blocks::Kmn(m, n) => kmn_distance_blocks(m, n).ok(),
                };
                if let Some(closed) = closed {
                    c.holds("distance matrix equals the block display", closed == d);
                }
            })
        })
        .collect()
}

fn cells_for(suite: SuiteName, cfg: SuiteConfig) -> Vec<Cell> {
    match suite {
        SuiteName::All => [dets, inverses, spectra, lemmas, recognizer]
            .into_iter()
            .flat_map(|f| f(cfg))
            .collect(),
        SuiteName::Dets => dets(cfg),
        SuiteName::Inverses => inverses(cfg),
        SuiteName::Spectra => spectra(cfg),
        SuiteName::Lemmas => lemmas(cfg),
        SuiteName::Recognizer => recognizer(cfg),
    }
}

/// Builds and runs the grid for `suite`.
pub fn run_suite(suite: SuiteName, cfg: SuiteConfig) -> VerificationReport {
    let start = Instant::now();
    let cells = cells_for(suite, cfg);
    let evaluate = || -> Vec<Vec<(String, String, String)>> {
        cells
            .par_iter()
            .map(|cell| {
                let mut checker = Checker::default();
                (cell.check)(&mut checker);
                checker.mismatches
            })
            .collect()
    };
    let outcomes = match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map(|pool| pool.install(evaluate))
            .unwrap_or_else(|_| evaluate()),
        None => evaluate(),
    };

    let mut failures = Vec::new();
    let mut failed = 0;
    for (cell, mismatches) in cells.iter().zip(&outcomes) {
        if !mismatches.is_empty() {
            failed += 1;
        }
        failures.extend(mismatches.iter().map(|(expected, actual, location)| Failure {
            params: cell.params.clone(),
            expected: expected.clone(),
            actual: actual.clone(),
            location: location.clone(),
        }));
    }
    VerificationReport {
        suite: suite.as_str().into(),
        grid: cells.iter().map(|c| c.params.clone()).collect(),
        passed: cells.len() - failed,
        failed,
        failures,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn each_suite_passes() {
        for suite in [SuiteName::Dets, SuiteName::Spectra, SuiteName::Recognizer] {
            let report = run_suite(suite, SuiteConfig::default());
            assert!(report.is_success(), "{:?}", report.failures);
            assert_eq!(report.passed + report.failed, report.grid.len());
        }
    }

    #[test]
    fn fault_is_reported() {
        let cfg = SuiteConfig {
            inject_fault: true,
            ..SuiteConfig::default()
        };
        let report = run_suite(SuiteName::Dets, cfg);
        assert_eq!(report.failed, 1);
        assert_eq!(report.failures[0].params["check"], "tnb_det");
        assert_eq!(report.failures[0].expected, "64");
        assert_eq!(report.failures[0].actual, "65");
    }
}
