use super::structure::{exchanges, has_exchange};
use super::CompartmentGraph;
use crate::error::{Error, Result};

/// Identifies vertex 1 with its smallest exchange partner.
pub fn collapse_exchange(g: &CompartmentGraph) -> Result<CompartmentGraph> {
    let v = has_exchange(g).ok_or(Error::NoExchange)?;
    collapse_at(g, v)
}

/// Identifies vertex 1 with the exchange partner `v`.
///
/// The merged vertex is the new vertex 1; the remaining vertices keep their
/// relative order. Edges inside the merged pair disappear and parallel edges
/// are merged, keeping the first occurrence.
pub fn collapse_at(g: &CompartmentGraph, v: usize) -> Result<CompartmentGraph> {
    if !exchanges(g).contains(&v) {
        return Err(Error::NotAnExchange(v));
    }
    let mut label = vec![0usize; g.n() + 1];
    let mut next = 2;
    for u in 1..=g.n() {
        label[u] = if u == 1 || u == v {
            1
        } else {
            next += 1;
            next - 1
        };
    }
    let mut seen = std::collections::HashSet::new();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| (label[e.source], label[e.target]))
        .filter(|&(s, t)| s != t && seen.insert((s, t)))
        .collect();
    CompartmentGraph::new(g.n() - 1, edges)
}

/// Adds a new input/output vertex joined to the old vertex 1 by an exchange.
///
/// Old labels shift up by one; the exchange edges come first in edge order.
pub fn add_exchange_vertex(g: &CompartmentGraph) -> CompartmentGraph {
    let edges = [(1, 2), (2, 1)]
        .into_iter()
        .chain(g.edges().iter().map(|e| (e.source + 1, e.target + 1)));
    CompartmentGraph::new(g.n() + 1, edges).expect("adding an exchange keeps the graph valid")
}
