use super::CompartmentGraph;

/// An elementary directed cycle.
///
/// `vertices` starts at the smallest vertex and follows edge directions;
/// `edges` holds the traversed edge indices in the same order. A one-cycle
/// (a single vertex, no edges) stands for the diagonal parameter `a_ii`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Cycle {
    pub fn one_cycle(v: usize) -> Self {
        Cycle { vertices: vec![v], edges: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_one_cycle(&self) -> bool {
        self.vertices.len() == 1
    }

    /// Indicator vector over the `m` edges (zero for a one-cycle).
    pub fn exponent_vector(&self, m: usize) -> Vec<i64> {
        let mut v = vec![0; m];
        for &k in &self.edges {
            v[k] += 1;
        }
        v
    }

    /// Exponent vector of the monomial cycle over all `n + m` parameters.
    pub fn monomial(&self, g: &CompartmentGraph) -> Vec<u32> {
        let mut v = vec![0; g.parameter_count()];
        if self.is_one_cycle() {
            v[g.diagonal_parameter(self.vertices[0])] = 1;
        } else {
            for &k in &self.edges {
                v[g.edge_parameter(k)] += 1;
            }
        }
        v
    }

    pub fn vertex_mask(&self) -> u64 {
        self.vertices.iter().fold(0, |acc, &v| acc | 1 << (v - 1))
    }

    /// Monomial cycle as text, factors in parameter order (e.g. `a23*a34*a42`).
    pub fn monomial_string(&self, g: &CompartmentGraph) -> String {
        let names = g.parameter_names();
        let mut slots: Vec<usize> = if self.is_one_cycle() {
            vec![g.diagonal_parameter(self.vertices[0])]
        } else {
            self.edges.iter().map(|&k| g.edge_parameter(k)).collect()
        };
        slots.sort_unstable();
        slots.iter().map(|&s| names[s].as_str()).collect::<Vec<_>>().join("*")
    }
}

/// All elementary cycles of a graph, one-cycles included, ordered by length
/// and then by vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSet {
    cycles: Vec<Cycle>,
}

impl CycleSet {
    pub fn iter(&self) -> std::slice::Iter<'_, Cycle> {
        self.cycles.iter()
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn as_slice(&self) -> &[Cycle] {
        &self.cycles
    }

    /// Cycles of length at least two.
    pub fn nontrivial(&self) -> impl Iterator<Item = &Cycle> {
        self.cycles.iter().filter(|c| !c.is_one_cycle())
    }
}

impl<'a> IntoIterator for &'a CycleSet {
    type Item = &'a Cycle;
    type IntoIter = std::slice::Iter<'a, Cycle>;
    fn into_iter(self) -> Self::IntoIter {
        self.cycles.iter()
    }
}

/// Enumerates every elementary cycle.
///
/// Each cycle is found exactly once, from its smallest vertex, by a
/// depth-first search restricted to larger vertices. Exponential in the
/// worst case; intended for graphs with at most about eight vertices.
pub fn elementary_cycles(g: &CompartmentGraph) -> CycleSet {
    let out = g.out_edges();
    let mut cycles: Vec<Cycle> = (1..=g.n()).map(Cycle::one_cycle).collect();

    fn dfs(
        out: &[Vec<(usize, usize)>],
        start: usize,
        v: usize,
        on_path: &mut u64,
        verts: &mut Vec<usize>,
        edges: &mut Vec<usize>,
        found: &mut Vec<Cycle>,
    ) {
        for &(w, k) in &out[v] {
            if w == start {
                edges.push(k);
                found.push(Cycle { vertices: verts.clone(), edges: edges.clone() });
                edges.pop();
            } else if w > start && *on_path & (1 << (w - 1)) == 0 {
                *on_path |= 1 << (w - 1);
                verts.push(w);
                edges.push(k);
                dfs(out, start, w, on_path, verts, edges, found);
                edges.pop();
                verts.pop();
                *on_path &= !(1 << (w - 1));
            }
        }
    }

    for start in 1..=g.n() {
        let mut on_path = 1u64 << (start - 1);
        let mut verts = vec![start];
        let mut edges = Vec::new();
        dfs(&out, start, start, &mut on_path, &mut verts, &mut edges, &mut cycles);
    }
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.vertices.cmp(&b.vertices)));
    CycleSet { cycles }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identifiable4() -> CompartmentGraph {
        CompartmentGraph::new(4, [(2, 1), (1, 2), (3, 2), (2, 3), (4, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn identifiable4_cycles() {
        let g = identifiable4();
        let set = elementary_cycles(&g);
        let monos: Vec<String> = set.iter().map(|c| c.monomial_string(&g)).collect();
        assert_eq!(monos, ["a11", "a22", "a33", "a44", "a12*a21", "a23*a32", "a23*a34*a42"]);
        let tri = set.iter().last().unwrap();
        assert_eq!(tri.vertices, vec![2, 4, 3]);
    }

    #[test]
    fn single_vertex_and_directed_cycle() {
        let g = CompartmentGraph::new(1, []).unwrap();
        let set = elementary_cycles(&g);
        assert_eq!(set.len(), 1);
        assert!(set.iter().next().unwrap().is_one_cycle());

        let g = CompartmentGraph::directed_cycle(5);
        let set = elementary_cycles(&g);
        assert_eq!(set.len(), 6);
        assert_eq!(set.nontrivial().count(), 1);
        assert_eq!(set.nontrivial().next().unwrap().vertices, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn complete_digraph_cycle_count() {
        // K4 has 6 two-cycles, 8 three-cycles and 6 four-cycles.
        let set = elementary_cycles(&CompartmentGraph::complete(4));
        let count = |k| set.iter().filter(|c| c.len() == k).count();
        assert_eq!((count(1), count(2), count(3), count(4)), (4, 6, 8, 6));
    }

    #[test]
    fn one_cycle_exponents() {
        let g = identifiable4();
        let c = Cycle::one_cycle(3);
        assert_eq!(c.exponent_vector(g.m()), vec![0; 6]);
        assert_eq!(c.monomial(&g)[2], 1);
        assert_eq!(c.monomial(&g).iter().sum::<u32>(), 1);
    }
}
