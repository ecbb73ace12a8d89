//! Simple undirected graphs, the completely positive graph families with
//! their canonical vertex numbering, and the distance / Laplacian matrices.
//!
//! Vertex labels are 1-based in every public signature. Matrix row `i`
//! always corresponds to vertex `i + 1`.

mod blocks;

pub use blocks::{biconnected_blocks, classify_block, is_cp_graph, BlockClass, BlockDecomposition, CpCertificate};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;
use crate::rng::Lcg;

/// How a graph was built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `n − 2` triangles on a common base edge `{1, 2}`.
    TnSingle {
        n: usize,
    },
    /// `b` copies of `T_n` glued at one shared non-base vertex.
    TnBook {
        n: usize,
        b: usize,
    },
    /// Parts `{1..m}` and `{m+1..m+n}`.
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    /// `K_{n,1}`: leaves `1..n`, centre `n + 1`.
    Star {
        n: usize,
    },
    /// Any tree on vertices `1..=edges.len() + 1`.
    Tree {
        edges: Vec<(usize, usize)>,
    },
    K4,
}

impl FamilySpec {
    /// A uniformly-attached random tree on `n` vertices: vertex `v ≥ 2`
    /// hangs off a parent drawn from `1..v`.
    pub fn random_tree(n: usize, rng: &mut Lcg) -> Self {
        let edges = (2..=n).map(|v| (rng.below(v as u64 - 1) as usize + 1, v)).collect();
        FamilySpec::Tree { edges }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::TnSingle { n } => *n,
            FamilySpec::TnBook { n, b } => b * (n - 1) + 1,
            FamilySpec::CompleteBipartite { m, n } => m + n,
            FamilySpec::Star { n } => n + 1,
            FamilySpec::Tree { edges } => edges.len() + 1,
            FamilySpec::K4 => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    // 0-based sorted neighbour lists
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    family: Option<FamilySpec>,
}

impl Graph {
    /// Builds a simple graph on vertices `1..=vertex_count`. Rejects
    /// self-loops, repeated edges and out-of-range labels. Connectivity is
    /// not required here; the distance routines check it.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range 1..={vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            adjacency[u - 1].push(v - 1);
            adjacency[v - 1].push(u - 1);
        }
        for (i, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({}, {})", i + 1, w[0] + 1)));
            }
        }
        Ok(Self {
            vertex_count,
            adjacency,
            edge_count: edges.len(),
            family: None,
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (1..=n).map(|u| (u, u % n + 1)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        Self::from_edges(n, &edges)
    }

    /// Outer 5-cycle `1..5`, inner pentagram `6..10`, spokes `i — i+5`.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 1..=5 {
            edges.push((i, i % 5 + 1));
            edges.push((i + 5, (i + 1) % 5 + 6));
            edges.push((i, i + 5));
        }
        Self::from_edges(10, &edges).expect("petersen edge list is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        self.family.as_ref()
    }

    /// Sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u + 1, v + 1)));
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v - 1].iter().map(|&w| w + 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1
            && v >= 1
            && u <= self.vertex_count
            && v <= self.vertex_count
            && self.adjacency[u - 1].binary_search(&(v - 1)).is_ok()
    }

    pub(crate) fn adj0(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn is_connected(&self) -> bool {
        bfs_levels(self, 0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.vertex_count && self.is_connected()
    }

    pub fn adjacency_matrix(&self) -> RationalMatrix {
        let n = self.vertex_count;
        let mut m = RationalMatrix::zeros(n, n);
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                m[(u, v)] = Rational::ONE;
            }
        }
        m
    }
}

/// Builds a family member with the canonical numbering.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = match spec {
        FamilySpec::TnSingle { n } => {
            let n = *n;
            if n < 3 {
                return Err(Error::InvalidParameter(format!("T_n requires n >= 3, got {n}")));
            }
            let mut e = vec![(1, 2)];
            for v in 3..=n {
                e.push((1, v));
                e.push((2, v));
            }
            e
        }
        FamilySpec::TnBook { n, b } => {
            let (n, b) = (*n, *b);
            if n < 3 {
                return Err(Error::InvalidParameter(format!("T_n^(b) requires n >= 3, got {n}")));
            }
            if b < 2 {
                return Err(Error::InvalidParameter(format!("T_n^(b) requires b >= 2, got {b}")));
            }
            let cut = b * (n - 1) + 1;
            let mut e = Vec::with_capacity(b * (2 * n - 3));
            for k in 0..b {
                let off = k * (n - 1);
                let (p, q) = (off + 1, off + 2);
                e.push((p, q));
                for v in (off + 3..=off + n - 1).chain(std::iter::once(cut)) {
                    e.push((p, v));
                    e.push((q, v));
                }
            }
            e
        }
        FamilySpec::CompleteBipartite { m, n } => {
            let (m, n) = (*m, *n);
            if m == 0 || n == 0 {
                return Err(Error::InvalidParameter(format!(
                    "K_(m,n) requires m, n >= 1, got ({m}, {n})"
                )));
            }
            (1..=m).flat_map(|u| (m + 1..=m + n).map(move |v| (u, v))).collect()
        }
        FamilySpec::Star { n } => {
            let n = *n;
            if n == 0 {
                return Err(Error::InvalidParameter("star K_(n,1) requires n >= 1".into()));
            }
            (1..=n).map(|u| (u, n + 1)).collect()
        }
        FamilySpec::Tree { edges } => {
            let g = Graph::from_edges(edges.len() + 1, edges)?;
            if !g.is_connected() {
                return Err(Error::NotATree("edge list is disconnected".into()));
            }
            edges.clone()
        }
        FamilySpec::K4 => return Graph::complete(4).map(|g| g.with_family(FamilySpec::K4)),
    };
    Ok(Graph::from_edges(spec.vertex_count(), &edges)?.with_family(spec.clone()))
}

impl Graph {
    fn with_family(mut self, spec: FamilySpec) -> Self {
        self.family = Some(spec);
        self
    }
}

fn bfs_levels(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap() + 1;
        for &w in g.adj0(u) {
            if dist[w].is_none() {
                dist[w] = Some(d);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Shortest-path distance matrix by BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> Result<RationalMatrix> {
    let n = g.vertex_count;
    let mut data = Vec::with_capacity(n * n);
    for s in 0..n {
        for d in bfs_levels(g, s) {
            let d = d.ok_or(Error::NotConnected)?;
            data.push(Rational::from(d));
        }
    }
    RationalMatrix::from_vec(n, n, data)
}

/// `L = Diag(δ) − A`.
pub fn laplacian(g: &Graph) -> RationalMatrix {
    let n = g.vertex_count;
    let mut m = RationalMatrix::zeros(n, n);
    for (u, nbrs) in g.adjacency.iter().enumerate() {
        m[(u, u)] = Rational::from(nbrs.len());
        for &v in nbrs {
            m[(u, v)] = Rational::from(-1);
        }
    }
    m
}

/// Base vertices `B`, non-base vertices `N` and the cut vertex `c` of
/// `T_n^(b)`, all 1-based and ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    pub base: Vec<usize>,
    pub nonbase: Vec<usize>,
    pub cut: usize,
}

impl VertexPartition {
    pub fn of_book(n: usize, b: usize) -> Result<Self> {
        if n < 3 || b < 1 {
            return Err(Error::InvalidParameter(format!(
                "partition needs n >= 3, b >= 1, got ({n}, {b})"
            )));
        }
        let base = (0..b).flat_map(|k| (1..=2).map(move |i| k * (n - 1) + i)).collect();
        let nonbase = (0..b).flat_map(|k| (3..n).map(move |i| k * (n - 1) + i)).collect();
        Ok(Self {
            base,
            nonbase,
            cut: b * (n - 1) + 1,
        })
    }
}
