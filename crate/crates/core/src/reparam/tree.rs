use std::collections::VecDeque;

use crate::algebra::{inverse_unimodular, IntMatrix};
use crate::error::{Error, Result};
use crate::graph::{reduced_incidence_matrix, CompartmentGraph};

/// Spanning tree of the underlying undirected graph, rooted at vertex 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    /// Tree edge indices, in the order the tree was grown.
    pub edges: Vec<usize>,
    /// For each vertex (index 0 unused, root has `None`): parent vertex and
    /// the tree edge joining them.
    pub parent: Vec<Option<(usize, usize)>>,
    /// Vertices in order of discovery from the root.
    pub order: Vec<usize>,
}

impl SpanningTree {
    /// Validates an explicit edge set and roots it at vertex 1.
    pub fn from_edges(g: &CompartmentGraph, edges: &[usize]) -> Result<Self> {
        let n = g.n();
        if edges.len() != n - 1 {
            return Err(Error::InvalidTree(format!("expected {} edges, got {}", n - 1, edges.len())));
        }
        if let Some(&k) = edges.iter().find(|&&k| k >= g.m()) {
            return Err(Error::InvalidTree(format!("edge index {k} out of range")));
        }
        let mut adj = vec![Vec::new(); n + 1];
        for &k in edges {
            let e = g.edge(k);
            adj[e.source].push((e.target, k));
            adj[e.target].push((e.source, k));
        }
        let mut parent = vec![None; n + 1];
        let mut seen = vec![false; n + 1];
        let mut order = vec![1];
        seen[1] = true;
        let mut queue = VecDeque::from([1]);
        while let Some(u) = queue.pop_front() {
            for &(w, k) in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((u, k));
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        if order.len() != n {
            return Err(Error::InvalidTree("edges do not span the graph".into()));
        }
        Ok(SpanningTree { edges: edges.to_vec(), parent, order })
    }

    /// Tree edges given as `(source, target)` pairs.
    pub fn from_pairs(g: &CompartmentGraph, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|&(j, i)| g.edge_index(j, i).ok_or_else(|| Error::InvalidTree(format!("{j}->{i} is not an edge"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_edges(g, &edges)
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.edges.contains(&edge)
    }

    /// Edge indices not in the tree, in edge order.
    pub fn complement(&self, g: &CompartmentGraph) -> Vec<usize> {
        (0..g.m()).filter(|k| !self.contains(*k)).collect()
    }
}

/// Grows a tree from vertex 1 by scanning the edges in order, repeatedly,
/// and taking every edge (in either direction) that reaches a new vertex.
pub fn spanning_tree(g: &CompartmentGraph) -> Result<SpanningTree> {
    let n = g.n();
    let mut reached = vec![false; n + 1];
    reached[1] = true;
    let mut edges = Vec::new();
    loop {
        let before = edges.len();
        for (k, e) in g.edges().iter().enumerate() {
            if reached[e.source] != reached[e.target] {
                reached[e.source] = true;
                reached[e.target] = true;
                edges.push(k);
            }
        }
        if edges.len() == before {
            break;
        }
    }
    if edges.len() != n - 1 {
        return Err(Error::Disconnected);
    }
    SpanningTree::from_edges(g, &edges)
}

/// Every spanning tree, up to `limit` of them, in lexicographic order of
/// their edge index sets.
pub fn spanning_trees(g: &CompartmentGraph, limit: usize) -> Vec<SpanningTree> {
    let size = g.n() - 1;
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(size);
    fn rec(g: &CompartmentGraph, start: usize, size: usize, pick: &mut Vec<usize>, out: &mut Vec<SpanningTree>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if pick.len() == size {
            if let Ok(t) = SpanningTree::from_edges(g, pick) {
                out.push(t);
            }
            return;
        }
        for k in start..g.m() {
            if g.m() - k < size - pick.len() {
                break;
            }
            pick.push(k);
            rec(g, k + 1, size, pick, out, limit);
            pick.pop();
        }
    }
    rec(g, 0, size, &mut pick, &mut out, limit);
    out
}

/// Exponent vectors (over the `m` edge parameters) of the scaling monomials
/// `f_1, ..., f_n`, indexed by `vertex - 1`.
///
/// `f_1 = 1`. Walking down the tree edge `v -> u` (parameter `a_uv`):
/// reaching `v` from `u` gives `f_v = f_u * a_uv`, reaching `u` from `v`
/// gives `f_u = f_v / a_uv`.
pub fn scaling_exponents(g: &CompartmentGraph, tree: &SpanningTree) -> Vec<Vec<i64>> {
    let mut f = vec![vec![0i64; g.m()]; g.n()];
    for &w in tree.order.iter().skip(1) {
        let (p, k) = tree.parent[w].expect("non-root vertices have parents");
        let e = g.edge(k);
        let mut vec = f[p - 1].clone();
        vec[k] += if e.source == w { 1 } else { -1 };
        f[w - 1] = vec;
    }
    debug_assert_eq!(f, scaling_exponents_by_inverse(g, tree).expect("tree block is unimodular"));
    f
}

/// The tree block `E_1` of the reduced incidence matrix: rows are vertices
/// `2..=n`, columns are the tree edges in `tree.edges` order.
pub fn tree_block(g: &CompartmentGraph, tree: &SpanningTree) -> IntMatrix {
    let e = reduced_incidence_matrix(g);
    let rows: Vec<usize> = (0..g.n() - 1).collect();
    e.submatrix(&rows, &tree.edges)
}

/// Same exponents as [`scaling_exponents`], read off the columns of `E_1^-1`.
pub fn scaling_exponents_by_inverse(g: &CompartmentGraph, tree: &SpanningTree) -> Result<Vec<Vec<i64>>> {
    let c1 = inverse_unimodular(&tree_block(g, tree))?;
    let mut f = vec![vec![0i64; g.m()]; g.n()];
    for v in 2..=g.n() {
        for (row, &k) in tree.edges.iter().enumerate() {
            f[v - 1][k] = c1.get_i64(row, v - 2);
        }
    }
    Ok(f)
}

/// `m x m` exponent matrix of the rescaled entries `a_ij f_i / f_j`; row `k`
/// belongs to edge `k`.
pub fn rescaled_exponent_matrix(g: &CompartmentGraph, f: &[Vec<i64>]) -> IntMatrix {
    let mut out = IntMatrix::zeros(g.m(), g.m());
    for (k, e) in g.edges().iter().enumerate() {
        for col in 0..g.m() {
            let unit = i64::from(col == k);
            out.set(k, col, unit + f[e.target - 1][col] - f[e.source - 1][col]);
        }
    }
    out
}
