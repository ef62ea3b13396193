//! Directed graphs of linear compartment models.
//!
//! Vertices are labeled `1..=n` and vertex 1 is the input/output compartment.
//! An edge `j -> i` carries the transfer parameter `a_ij`; every vertex also
//! carries its own diagonal parameter `a_ii`. The order in which edges are
//! stored is significant: it fixes the column order of every derived matrix
//! and the order of the edge parameters.

mod canonical;
mod cycles;
mod incidence;
mod structure;
mod surgery;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canonical::{automorphism_count, canonical_form, permutations_fixing_one, relabel};
pub use cycles::{elementary_cycles, Cycle, CycleSet};
pub use incidence::{incidence_matrix, reduced_incidence_matrix, undirected_components};
pub use structure::{
    exchanges, has_exchange, induced_subgraph, io_strong_component,
    is_inductively_strongly_connected, is_strongly_connected, IscCertificate,
};
pub use surgery::{add_exchange_vertex, collapse_at, collapse_exchange};
pub(crate) use structure::strongly_connected_within;

/// Directed edge `source -> target`, carrying the parameter `a_{target,source}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
}

impl Edge {
    pub fn new(source: usize, target: usize) -> Self {
        Edge { source, target }
    }

    /// Parameter name, e.g. `a21` for the edge `1 -> 2`.
    pub fn parameter_name(&self) -> String {
        parameter_name(self.target, self.source)
    }
}

/// Name of the matrix entry `a_{row,col}`.
///
/// Indices below 10 are concatenated (`a12`); larger ones are separated by an
/// underscore so that the name stays unambiguous.
pub fn parameter_name(row: usize, col: usize) -> String {
    if row < 10 && col < 10 {
        format!("a{row}{col}")
    } else {
        format!("a{row}_{col}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompartmentGraph {
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct GraphDocument {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for CompartmentGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphDocument { n: self.n, edges: self.edges.iter().map(|e| [e.source, e.target]).collect() }.serialize(serializer)
    }
}

impl CompartmentGraph {
    /// Builds a graph, rejecting out-of-range vertices, self-loops and
    /// duplicate edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedInput("graph must have at least one vertex".into()));
        }
        if n > 64 {
            return Err(Error::LimitExceeded(format!("n = {n} exceeds 64 vertices")));
        }
        let mut seen = vec![false; n * n];
        let mut out = Vec::new();
        for (j, i) in edges {
            let reject = |reason: &str| Error::InvalidEdge { edge: (j, i), reason: reason.into() };
            if j == 0 || i == 0 || j > n || i > n {
                return Err(reject("vertex out of range"));
            }
            if j == i {
                return Err(reject("self-loop"));
            }
            let slot = (j - 1) * n + (i - 1);
            if seen[slot] {
                return Err(reject("duplicate edge"));
            }
            seen[slot] = true;
            out.push(Edge::new(j, i));
        }
        Ok(CompartmentGraph { n, edges: out })
    }

    /// Parses the `{"n": .., "edges": [[j,i], ...]}` document.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))?;
        Self::new(doc.n, doc.edges.into_iter().map(|[j, i]| (j, i)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("graph serializes")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "edges": self.edges.iter().map(|e| [e.source, e.target]).collect::<Vec<_>>(),
        })
    }

    /// The directed cycle `1 -> 2 -> ... -> n -> 1`.
    pub fn directed_cycle(n: usize) -> Self {
        let edges = (1..=n).filter(|_| n > 1).map(|v| (v, v % n + 1));
        Self::new(n, edges).expect("directed cycle is valid")
    }

    /// Complete digraph on `n` vertices, edges in row-major `(j, i)` order.
    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|j| (1..=n).filter(move |&i| i != j).map(move |i| (j, i)));
        Self::new(n, edges).expect("complete digraph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, k: usize) -> Edge {
        self.edges[k]
    }

    pub fn edge_index(&self, source: usize, target: usize) -> Option<usize> {
        self.edges.iter().position(|e| e.source == source && e.target == target)
    }

    pub fn has_edge(&self, source: usize, target: usize) -> bool {
        self.edge_index(source, target).is_some()
    }

    /// Number of model parameters: `n` diagonal entries plus one per edge.
    pub fn parameter_count(&self) -> usize {
        self.n + self.edges.len()
    }

    /// Parameter slot of the diagonal entry `a_vv`.
    pub fn diagonal_parameter(&self, v: usize) -> usize {
        v - 1
    }

    /// Parameter slot of edge `k`.
    pub fn edge_parameter(&self, k: usize) -> usize {
        self.n + k
    }

    /// Parameter names in slot order: diagonals, then edges.
    pub fn parameter_names(&self) -> Vec<String> {
        (1..=self.n)
            .map(|v| parameter_name(v, v))
            .chain(self.edges.iter().map(Edge::parameter_name))
            .collect()
    }

    /// Out-neighbour bitmasks (bit `t - 1` set in entry `s - 1` for an edge `s -> t`).
    pub fn out_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.n];
        for e in &self.edges {
            masks[e.source - 1] |= 1 << (e.target - 1);
        }
        masks
    }

    pub fn in_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.n];
        for e in &self.edges {
            masks[e.target - 1] |= 1 << (e.source - 1);
        }
        masks
    }

    /// Outgoing `(target, edge index)` lists, in edge order.
    pub fn out_edges(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.n + 1];
        for (k, e) in self.edges.iter().enumerate() {
            out[e.source].push((e.target, k));
        }
        out
    }
}

impl std::fmt::Display for CompartmentGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_json())
    }
}
