//! Block (biconnected component) decomposition and the block-wise
//! completely-positive graph test: a graph is cp iff every block is
//! bipartite, a `K_4`, or a `T_n`.

use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Ascending 1-based vertex sets, in the order the DFS completes them.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockClass {
    Bipartite,
    K4,
    Tn,
    Other,
}

impl BlockClass {
    pub fn is_cp(self) -> bool {
        !matches!(self, BlockClass::Other)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CpCertificate {
    pub is_cp: bool,
    pub blocks: Vec<(Vec<usize>, BlockClass)>,
}

struct Frame {
    v: usize,
    parent: usize,
    next: usize,
}

/// Hopcroft–Tarjan lowpoint decomposition with an explicit edge stack.
/// Iterative so deep paths do not exhaust the call stack.
pub fn biconnected_blocks(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut disc = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut timer = 1;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    for root in 0..n {
        if disc[root] != 0 {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        if g.adj0(root).is_empty() {
            blocks.push(vec![root + 1]);
            continue;
        }
        let mut stack = vec![Frame {
            v: root,
            parent: usize::MAX,
            next: 0,
        }];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.v, top.parent);
            if let Some(&w) = g.adj0(v).get(top.next) {
                top.next += 1;
                if disc[w] == 0 {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push(Frame {
                        v: w,
                        parent: v,
                        next: 0,
                    });
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            let Some(up) = stack.last() else { continue };
            let u = up.v;
            low[u] = low[u].min(low[v]);
            if low[v] >= disc[u] {
                let mut verts = BTreeSet::new();
                while let Some((a, b)) = edge_stack.pop() {
                    verts.insert(a + 1);
                    verts.insert(b + 1);
                    if (a, b) == (u, v) {
                        break;
                    }
                }
                blocks.push(verts.into_iter().collect());
            }
        }
    }

    let mut count = vec![0usize; n];
    for b in &blocks {
        for &v in b {
            count[v - 1] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| count[v] >= 2).map(|v| v + 1).collect();
    BlockDecomposition { blocks, cut_vertices }
}

/// Classifies the subgraph induced by `block`, testing Bipartite, then
/// `K_4`, then `T_n`. A single edge is bipartite.
pub fn classify_block(g: &Graph, block: &[usize]) -> Result<BlockClass> {
    let verts: BTreeSet<usize> = block.iter().copied().collect();
    if verts.is_empty() {
        return Err(Error::InvalidParameter("empty block".into()));
    }
    if let Some(&v) = verts.iter().find(|&&v| v == 0 || v > g.vertex_count()) {
        return Err(Error::InvalidParameter(format!(
            "block vertex {v} is not in 1..={}",
            g.vertex_count()
        )));
    }
    let k = verts.len();
    let induced = |v: usize| g.neighbors(v).filter(|w| verts.contains(w));
    let degree = |v: usize| induced(v).count();
    let edges: usize = verts.iter().map(|&v| degree(v)).sum::<usize>() / 2;

    if is_bipartite(&verts, induced) {
        return Ok(BlockClass::Bipartite);
    }
    if k == 4 && edges == 6 {
        return Ok(BlockClass::K4);
    }
    if k >= 3 && edges == 2 * k - 3 {
        let hubs: Vec<usize> = verts.iter().copied().filter(|&v| degree(v) == k - 1).collect();
        for (i, &p) in hubs.iter().enumerate() {
            for &q in &hubs[i + 1..] {
                if !g.has_edge(p, q) {
                    continue;
                }
                let spokes_ok = verts
                    .iter()
                    .filter(|&&v| v != p && v != q)
                    .all(|&v| degree(v) == 2 && g.has_edge(v, p) && g.has_edge(v, q));
                if spokes_ok {
                    return Ok(BlockClass::Tn);
                }
            }
        }
    }
    Ok(BlockClass::Other)
}

fn is_bipartite<I: Iterator<Item = usize>>(verts: &BTreeSet<usize>, induced: impl Fn(usize) -> I) -> bool {
    let mut colour: std::collections::BTreeMap<usize, bool> = Default::default();
    for &start in verts {
        if colour.contains_key(&start) {
            continue;
        }
        colour.insert(start, false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[&u];
            for w in induced(u) {
                match colour.get(&w) {
                    Some(&cw) if cw == cu => return false,
                    Some(_) => {}
                    None => {
                        colour.insert(w, !cu);
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    true
}

pub fn is_cp_graph(g: &Graph) -> CpCertificate {
    let decomposition = biconnected_blocks(g);
    let blocks: Vec<(Vec<usize>, BlockClass)> = decomposition
        .blocks
        .into_iter()
        .map(|b| {
            let class = classify_block(g, &b).expect("blocks come from the same graph");
            (b, class)
        })
        .collect();
    CpCertificate {
        is_cp: blocks.iter().all(|(_, c)| c.is_cp()),
        blocks,
    }
}
