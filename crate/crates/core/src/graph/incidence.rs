use super::CompartmentGraph;
use crate::algebra::IntMatrix;

/// The `n x m` directed incidence matrix: the column of edge `j -> k` has
/// `+1` in row `j` and `-1` in row `k`.
pub fn incidence_matrix(g: &CompartmentGraph) -> IntMatrix {
    let mut e = IntMatrix::zeros(g.n(), g.m());
    for (k, edge) in g.edges().iter().enumerate() {
        e.set(edge.source - 1, k, 1);
        e.set(edge.target - 1, k, -1);
    }
    e
}

/// Incidence matrix with the row of vertex 1 removed.
pub fn reduced_incidence_matrix(g: &CompartmentGraph) -> IntMatrix {
    let rows: Vec<usize> = (1..g.n()).collect();
    let cols: Vec<usize> = (0..g.m()).collect();
    incidence_matrix(g).submatrix(&rows, &cols)
}

/// Number of connected components of the underlying undirected graph.
pub fn undirected_components(g: &CompartmentGraph) -> usize {
    let mut parent: Vec<usize> = (0..=g.n()).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut components = g.n();
    for e in g.edges() {
        let (a, b) = (find(&mut parent, e.source), find(&mut parent, e.target));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components
}
