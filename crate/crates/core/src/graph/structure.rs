use std::collections::HashSet;

use super::{CompartmentGraph, Edge};

/// Vertex ordering witnessing that a graph is inductively strongly connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IscCertificate {
    pub ordering: Vec<usize>,
}

impl IscCertificate {
    /// Checks that the ordering starts at 1, is a permutation, and that every
    /// prefix induces a strongly connected subgraph of `g`.
    pub fn is_valid_for(&self, g: &CompartmentGraph) -> bool {
        let n = g.n();
        if self.ordering.len() != n || self.ordering.first() != Some(&1) {
            return false;
        }
        let (out, inn) = (g.out_masks(), g.in_masks());
        let mut mask = 0u64;
        for &v in &self.ordering {
            if v == 0 || v > n || mask & bit(v) != 0 {
                return false;
            }
            mask |= bit(v);
            if !strongly_connected_within(&out, &inn, mask) {
                return false;
            }
        }
        true
    }
}

fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

/// Vertices reachable from `start` using only vertices in `within`.
fn reach(adj: &[u64], start: usize, within: u64) -> u64 {
    let mut seen = bit(start) & within;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & within & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen
}

/// Whether the subgraph induced on `within` is strongly connected.
pub(crate) fn strongly_connected_within(out: &[u64], inn: &[u64], within: u64) -> bool {
    if within == 0 {
        return true;
    }
    let start = within.trailing_zeros() as usize + 1;
    reach(out, start, within) == within && reach(inn, start, within) == within
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn is_strongly_connected(g: &CompartmentGraph) -> bool {
    strongly_connected_within(&g.out_masks(), &g.in_masks(), full_mask(g.n()))
}

/// Induced subgraph on `vertices` (any order), relabeled `1..` by increasing
/// original label. Edge order follows the original graph.
pub fn induced_subgraph(g: &CompartmentGraph, vertices: &[usize]) -> CompartmentGraph {
    let mut keep: Vec<usize> = vertices.to_vec();
    keep.sort_unstable();
    keep.dedup();
    let mut label = vec![0usize; g.n() + 1];
    for (idx, &v) in keep.iter().enumerate() {
        label[v] = idx + 1;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|e| label[e.source] != 0 && label[e.target] != 0)
        .map(|e| (label[e.source], label[e.target]));
    CompartmentGraph::new(keep.len().max(1), edges).expect("induced subgraph is valid")
}

/// The strongly connected component containing vertex 1, as its own graph.
///
/// Only this component influences the input-output behaviour seen at
/// compartment 1 for generic parameters.
pub fn io_strong_component(g: &CompartmentGraph) -> CompartmentGraph {
    let all = full_mask(g.n());
    let comp = reach(&g.out_masks(), 1, all) & reach(&g.in_masks(), 1, all);
    if comp == all {
        return g.clone();
    }
    let vertices: Vec<usize> = (1..=g.n()).filter(|&v| comp & bit(v) != 0).collect();
    induced_subgraph(g, &vertices)
}

/// All vertices `i > 1` with both `1 -> i` and `i -> 1`, ascending.
pub fn exchanges(g: &CompartmentGraph) -> Vec<usize> {
    let out = g.out_masks();
    let inn = g.in_masks();
    (2..=g.n()).filter(|&i| out[0] & bit(i) != 0 && inn[0] & bit(i) != 0).collect()
}

/// Smallest vertex forming an exchange with vertex 1.
pub fn has_exchange(g: &CompartmentGraph) -> Option<usize> {
    let has = |s, t| g.edges().contains(&Edge::new(s, t));
    (2..=g.n()).find(|&i| has(1, i) && has(i, 1))
}

/// Searches for an ordering `1 = v1, v2, ..., vn` in which every prefix
/// induces a strongly connected subgraph.
pub fn is_inductively_strongly_connected(g: &CompartmentGraph) -> Option<IscCertificate> {
    let n = g.n();
    let (out, inn) = (g.out_masks(), g.in_masks());
    let mut ordering = vec![1usize];
    let mut dead = HashSet::new();

    fn extend(
        n: usize,
        out: &[u64],
        inn: &[u64],
        mask: u64,
        ordering: &mut Vec<usize>,
        dead: &mut HashSet<u64>,
    ) -> bool {
        if ordering.len() == n {
            return true;
        }
        if dead.contains(&mask) {
            return false;
        }
        for v in 2..=n {
            if mask & bit(v) != 0 {
                continue;
            }
            let next = mask | bit(v);
            if strongly_connected_within(out, inn, next) {
                ordering.push(v);
                if extend(n, out, inn, next, ordering, dead) {
                    return true;
                }
                ordering.pop();
            }
        }
        dead.insert(mask);
        false
    }

    extend(n, &out, &inn, 1, &mut ordering, &mut dead).then_some(IscCertificate { ordering })
}
