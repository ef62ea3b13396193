use super::CompartmentGraph;

/// All permutations of `1..=n` that fix vertex 1, as label maps indexed by
/// old label (`perm[v]` is the new label of `v`; index 0 unused).
pub fn permutations_fixing_one(n: usize) -> Vec<Vec<usize>> {
    let mut rest: Vec<usize> = (2..=n).collect();
    let mut out = Vec::new();
    fn heap(k: usize, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            let mut perm = vec![0, 1];
            perm.extend(rest.iter().copied());
            out.push(perm);
            return;
        }
        for i in 0..k {
            heap(k - 1, rest, out);
            let j = if k % 2 == 0 { i } else { 0 };
            rest.swap(j, k - 1);
        }
    }
    let k = rest.len();
    heap(k, &mut rest, &mut out);
    out
}

/// Applies a label map (`perm[v]` = new label of `v`), keeping edge order.
pub fn relabel(g: &CompartmentGraph, perm: &[usize]) -> CompartmentGraph {
    CompartmentGraph::new(g.n(), g.edges().iter().map(|e| (perm[e.source], perm[e.target])))
        .expect("relabeling preserves validity")
}

fn encode(n: usize, edges: &mut [(u8, u8)]) -> Vec<u8> {
    edges.sort_unstable();
    let mut out = Vec::with_capacity(2 + 2 * edges.len());
    out.push(n as u8);
    out.push(edges.len() as u8);
    for &(j, i) in edges.iter() {
        out.push(j);
        out.push(i);
    }
    out
}

/// Canonical encoding under relabelings of vertices `2..=n`.
///
/// The encoding is `[n, m, j1, i1, j2, i2, ...]` for the sorted edge list,
/// minimized lexicographically over all `(n-1)!` relabelings. Two graphs are
/// equivalent under the symmetry group iff their canonical forms are equal.
pub fn canonical_form(g: &CompartmentGraph) -> Vec<u8> {
    let mut best: Option<Vec<u8>> = None;
    let mut buf = Vec::with_capacity(g.m());
    for perm in permutations_fixing_one(g.n()) {
        buf.clear();
        buf.extend(g.edges().iter().map(|e| (perm[e.source] as u8, perm[e.target] as u8)));
        let code = encode(g.n(), &mut buf);
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.expect("at least one permutation")
}

/// Number of relabelings of `2..=n` mapping the edge set onto itself.
pub fn automorphism_count(g: &CompartmentGraph) -> usize {
    let mut own: Vec<(u8, u8)> = g.edges().iter().map(|e| (e.source as u8, e.target as u8)).collect();
    let base = encode(g.n(), &mut own);
    let mut buf = Vec::with_capacity(g.m());
    permutations_fixing_one(g.n())
        .into_iter()
        .filter(|perm| {
            buf.clear();
            buf.extend(g.edges().iter().map(|e| (perm[e.source] as u8, perm[e.target] as u8)));
            encode(g.n(), &mut buf) == base
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations_fixing_one(1).len(), 1);
        assert_eq!(permutations_fixing_one(4).len(), 6);
        let mut all = permutations_fixing_one(5);
        assert_eq!(all.len(), 24);
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 24);
        assert!(all.iter().all(|p| p[1] == 1));
    }

    #[test]
    fn swapping_labels_keeps_form() {
        let g = CompartmentGraph::new(4, [(2, 1), (1, 2), (3, 2), (2, 3), (4, 3), (2, 4)]).unwrap();
        let swapped = relabel(&g, &[0, 1, 3, 2, 4]);
        assert_ne!(g, swapped);
        assert_eq!(canonical_form(&g), canonical_form(&swapped));
    }

    #[test]
    fn three_cycles_collapse_to_one_class() {
        let a = CompartmentGraph::new(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
        let b = CompartmentGraph::new(3, [(1, 3), (3, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_eq!(automorphism_count(&a), 1);
    }

    #[test]
    fn distinguishes_vertex_one() {
        // in-star vs out-star at vertex 1 are different classes
        let a = CompartmentGraph::new(3, [(1, 2), (2, 1), (1, 3), (3, 1)]).unwrap();
        let b = CompartmentGraph::new(3, [(1, 2), (2, 1), (2, 3), (3, 2)]).unwrap();
        assert_ne!(canonical_form(&a), canonical_form(&b));
        assert_eq!(automorphism_count(&a), 2);
    }
}
