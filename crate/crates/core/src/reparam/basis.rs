use num_traits::{One, Signed, Zero};

use super::tree::SpanningTree;
use crate::algebra::{integer_solve_in_lattice, IntMatrix};
use crate::error::{Error, Result};
use crate::graph::{elementary_cycles, CompartmentGraph, Cycle};

/// Search budget for the exhaustive basis search, in candidate subsets.
const SEARCH_BUDGET: usize = 200_000;

/// `m - n + 1` cycles of length at least two whose exponent vectors span the
/// cycle lattice, together with their `m x r` exponent matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBasis {
    pub cycles: Vec<Cycle>,
    /// Column `l` is the edge-indicator vector of cycle `l`; rows follow edge order.
    pub matrix: IntMatrix,
    /// Rows of `matrix` belonging to non-tree edges, in edge order.
    pub nontree_rows: Vec<usize>,
}

impl CycleBasis {
    /// Builds a basis from explicit cycles; they must be independent and
    /// `m - n + 1` in number. Unimodularity is not required here.
    pub fn from_cycles(g: &CompartmentGraph, tree: &SpanningTree, cycles: Vec<Cycle>) -> Result<Self> {
        let r = g.m() + 1 - g.n();
        if cycles.len() != r || cycles.iter().any(Cycle::is_one_cycle) {
            return Err(Error::BasisNotFound);
        }
        let matrix = exponent_matrix(g, &cycles);
        if matrix.rank() != r {
            return Err(Error::BasisNotFound);
        }
        Ok(CycleBasis { cycles, matrix, nontree_rows: tree.complement(g) })
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// The square block on the non-tree rows.
    pub fn nontree_block(&self) -> IntMatrix {
        let cols: Vec<usize> = (0..self.len()).collect();
        self.matrix.submatrix(&self.nontree_rows, &cols)
    }

    /// `|det M_2|`, the index of the spanned lattice in the cycle lattice.
    pub fn lattice_index(&self) -> u64 {
        let det = self.nontree_block().determinant().expect("square block");
        det.abs().try_into().expect("index fits in u64")
    }

    pub fn monomial_strings(&self, g: &CompartmentGraph) -> Vec<String> {
        self.cycles.iter().map(|c| c.monomial_string(g)).collect()
    }
}

fn exponent_matrix(g: &CompartmentGraph, cycles: &[Cycle]) -> IntMatrix {
    let cols: Vec<Vec<i64>> = cycles.iter().map(|c| c.exponent_vector(g.m())).collect();
    IntMatrix::from_columns(g.m(), &cols)
}

fn block_index(g: &CompartmentGraph, rows: &[usize], cycles: &[&Cycle]) -> num_bigint::BigInt {
    let cols: Vec<Vec<i64>> = cycles.iter().map(|c| rows.iter().map(|&k| c.exponent_vector(g.m())[k]).collect()).collect();
    IntMatrix::from_columns(rows.len(), &cols).determinant().expect("square block").abs()
}

/// Picks cycles greedily in canonical order (length, then vertex list),
/// keeping each one that raises the rank. If the result does not span the
/// cycle lattice, single swaps that lower `|det M_2|` are tried, then an
/// exhaustive search over candidate subsets.
pub fn cycle_basis(g: &CompartmentGraph, tree: &SpanningTree) -> Result<CycleBasis> {
    let r = g.m() + 1 - g.n();
    let all = elementary_cycles(g);
    let candidates: Vec<&Cycle> = all.nontrivial().collect();
    let rows = tree.complement(g);
    if r == 0 {
        return Ok(CycleBasis { cycles: Vec::new(), matrix: IntMatrix::zeros(g.m(), 0), nontree_rows: rows });
    }

    let mut chosen: Vec<usize> = Vec::with_capacity(r);
    let mut vectors: Vec<Vec<i64>> = Vec::with_capacity(r);
    for (idx, c) in candidates.iter().enumerate() {
        vectors.push(c.exponent_vector(g.m()));
        if IntMatrix::from_rows(g.m(), &vectors).rank() == vectors.len() {
            chosen.push(idx);
            if chosen.len() == r {
                break;
            }
        } else {
            vectors.pop();
        }
    }
    if chosen.len() < r {
        return Err(Error::BasisNotFound);
    }

    let index_of = |chosen: &[usize]| {
        let cs: Vec<&Cycle> = chosen.iter().map(|&i| candidates[i]).collect();
        block_index(g, &rows, &cs)
    };
    let mut best = index_of(&chosen);
    while !best.is_one() {
        let mut improved = false;
        'swap: for pos in 0..r {
            for cand in 0..candidates.len() {
                if chosen.contains(&cand) {
                    continue;
                }
                let mut trial = chosen.clone();
                trial[pos] = cand;
                let d = index_of(&trial);
                if !d.is_zero() && d < best {
                    chosen = trial;
                    best = d;
                    improved = true;
                    break 'swap;
                }
            }
        }
        if !improved {
            break;
        }
    }
    if !best.is_one() {
        chosen = exhaustive_search(candidates.len(), r, |subset| index_of(subset).is_one())
            .ok_or_else(|| Error::InconsistentSystem(format!("no cycle basis spans the cycle lattice (index {best})")))?;
    }
    let cycles = chosen.iter().map(|&i| candidates[i].clone()).collect();
    CycleBasis::from_cycles(g, tree, cycles)
}

fn exhaustive_search(total: usize, size: usize, mut accept: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    let mut pick: Vec<usize> = (0..size).collect();
    for _ in 0..SEARCH_BUDGET {
        if accept(&pick) {
            return Some(pick);
        }
        // next combination in lexicographic order
        let mut i = size;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if pick[i] < total - size + i {
                break;
            }
        }
        pick[i] += 1;
        for j in i + 1..size {
            pick[j] = pick[j - 1] + 1;
        }
    }
    None
}

/// Exponents `z` with `row = M z`, for a rescaled row lying in the cycle lattice.
pub fn express_in_cycles(basis: &CycleBasis, row: &[i64]) -> Result<Vec<i64>> {
    if basis.is_empty() {
        return if row.iter().all(|&x| x == 0) {
            Ok(Vec::new())
        } else {
            Err(Error::InconsistentSystem("nonzero row with an empty cycle basis".into()))
        };
    }
    integer_solve_in_lattice(&basis.matrix, row, &basis.nontree_rows).map_err(|e| match e {
        Error::NotUnimodular => Error::InconsistentSystem("cycle basis does not span the cycle lattice".into()),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reparam::tree::spanning_tree;

    fn identifiable4() -> CompartmentGraph {
        CompartmentGraph::new(4, [(2, 1), (1, 2), (3, 2), (2, 3), (4, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn identifiable4_basis() {
        let g = identifiable4();
        let t = spanning_tree(&g).unwrap();
        let b = cycle_basis(&g, &t).unwrap();
        assert_eq!(b.monomial_strings(&g), ["a12*a21", "a23*a32", "a23*a34*a42"]);
        assert_eq!(b.lattice_index(), 1);
    }

    #[test]
    fn cycle_graph_basis_is_the_cycle() {
        let g = CompartmentGraph::directed_cycle(4);
        let t = spanning_tree(&g).unwrap();
        let b = cycle_basis(&g, &t).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b.cycles[0].len(), 4);
    }

    #[test]
    fn dependent_cycles_are_rejected() {
        let g = identifiable4();
        let t = spanning_tree(&g).unwrap();
        let c = elementary_cycles(&g).nontrivial().next().unwrap().clone();
        assert_eq!(CycleBasis::from_cycles(&g, &t, vec![c.clone(), c.clone(), c]), Err(Error::BasisNotFound));
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        let found = exhaustive_search(4, 2, |s| {
            seen.push(s.to_vec());
            false
        });
        assert!(found.is_none());
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
