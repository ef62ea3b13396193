//! Identifiable scaling reparametrizations.
//!
//! For a graph whose double characteristic polynomial map has image of
//! dimension `m + 1`, the matrix `A` is conjugated by `diag(f_1, ..., f_n)`
//! with monomials `f_i` read off a spanning tree. Tree entries become 1 and
//! every other entry becomes a Laurent monomial in a basis of cycles.

mod basis;
mod format;
mod tree;

pub use basis::{cycle_basis, express_in_cycles, CycleBasis};
pub use format::{edge_names, format_monomial, matrix_entries, parse_monomial};
pub use tree::{
    rescaled_exponent_matrix, scaling_exponents, scaling_exponents_by_inverse, spanning_tree, spanning_trees, tree_block,
    SpanningTree,
};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Fp, IntMatrix, Ring, Scalar};
use crate::charpoly::{image_dimension, jacobian_in, numeric_coefficients, DimensionOptions, DimensionReport};
use crate::error::{Error, Result};
use crate::graph::CompartmentGraph;

/// A rescaled entry written as a Laurent monomial in the basis cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleExpression {
    pub edge: usize,
    /// Exponent of each basis cycle, in basis order.
    pub exponents: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingReparametrization {
    pub tree: SpanningTree,
    /// Exponent vectors of `f_1..f_n` over the edge parameters.
    pub scaling: Vec<Vec<i64>>,
    /// Row `k`: exponents of the rescaled entry of edge `k`.
    pub rescaled: IntMatrix,
    pub basis: CycleBasis,
    /// One per non-tree edge, in edge order.
    pub expressions: Vec<CycleExpression>,
    /// Absent when assembled without a dimension check.
    pub report: Option<DimensionReport>,
}

impl ScalingReparametrization {
    /// Non-tree edges, whose rescaled entries are the new parameters.
    pub fn free_edges(&self) -> Vec<usize> {
        self.expressions.iter().map(|x| x.edge).collect()
    }
}

/// Builds the reparametrization for an explicit tree, skipping the
/// dimension check.
pub fn assemble(g: &CompartmentGraph, tree: &SpanningTree) -> Result<ScalingReparametrization> {
    let scaling = scaling_exponents(g, tree);
    let rescaled = rescaled_exponent_matrix(g, &scaling);
    let basis = cycle_basis(g, tree)?;
    let expressions = tree
        .complement(g)
        .into_iter()
        .map(|k| Ok(CycleExpression { edge: k, exponents: express_in_cycles(&basis, &rescaled.row_i64(k))? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(ScalingReparametrization { tree: tree.clone(), scaling, rescaled, basis, expressions, report: None })
}

/// Reparametrization with the default spanning tree.
pub fn reparametrize(g: &CompartmentGraph, opts: DimensionOptions) -> Result<ScalingReparametrization> {
    let report = checked_dimension(g, opts)?;
    let tree = spanning_tree(g)?;
    Ok(ScalingReparametrization { report: Some(report), ..assemble(g, &tree)? })
}

/// Reparametrization with a caller-chosen spanning tree.
pub fn reparametrize_with_tree(
    g: &CompartmentGraph,
    tree: &SpanningTree,
    opts: DimensionOptions,
) -> Result<ScalingReparametrization> {
    let report = checked_dimension(g, opts)?;
    Ok(ScalingReparametrization { report: Some(report), ..assemble(g, tree)? })
}

fn checked_dimension(g: &CompartmentGraph, opts: DimensionOptions) -> Result<DimensionReport> {
    let report = image_dimension(g, opts)?;
    if !report.verdict {
        return Err(Error::NoReparametrization(Box::new(report)));
    }
    Ok(report)
}

/// One named check of [`verify_reparametrization`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

const VERIFY_POINTS: usize = 3;
const VERIFY_SEED: u64 = 0x5ca1_ab1e;

/// Checks a reparametrization against its graph: tree entries are 1, the
/// scaling matches the tree, every rescaled entry equals its cycle
/// expression, and the double characteristic polynomial is unchanged at
/// random points.
pub fn verify_reparametrization(g: &CompartmentGraph, r: &ScalingReparametrization) -> Verification {
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| checks.push(Check { name, passed, detail });

    let shapes_ok = r.scaling.len() == g.n()
        && r.scaling.iter().all(|f| f.len() == g.m())
        && r.rescaled.rows() == g.m()
        && r.rescaled.cols() == g.m();
    push("shapes", shapes_ok, format!("{} scaling vectors, {}x{} matrix", r.scaling.len(), r.rescaled.rows(), r.rescaled.cols()));
    if !shapes_ok {
        return Verification { checks };
    }

    let expected = scaling_exponents(g, &r.tree);
    push("scaling", r.scaling == expected, "f_i agrees with the tree".into());

    let bad_tree: Vec<usize> =
        r.tree.edges.iter().copied().filter(|&k| r.rescaled.row_i64(k).iter().any(|&x| x != 0)).collect();
    push("tree entries are 1", bad_tree.is_empty(), format!("offending edges {bad_tree:?}"));

    let from_scaling = rescaled_exponent_matrix(g, &r.scaling);
    push("rescaled rows", from_scaling == r.rescaled, "rows equal unit + f_i - f_j".into());

    let nontree = r.tree.complement(g);
    let covered = r.free_edges() == nontree;
    let mut bad_expr = Vec::new();
    if covered {
        for x in &r.expressions {
            let back = r.basis.matrix.mul_vec(&x.exponents);
            let row = r.rescaled.row(x.edge);
            if back.as_slice() != row {
                bad_expr.push(x.edge);
            }
        }
    }
    push("cycle expressions", covered && bad_expr.is_empty(), format!("offending edges {bad_expr:?}"));

    let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED);
    let mut mismatches = 0;
    for _ in 0..VERIFY_POINTS {
        let point: Vec<Fp> = (0..g.parameter_count()).map(|_| Fp::random_nonzero(&mut rng)).collect();
        let edge_values = &point[g.n()..];
        let mut image = point.clone();
        for k in 0..g.m() {
            image[g.edge_parameter(k)] = evaluate_monomial(&r.rescaled.row_i64(k), edge_values);
        }
        let cycle_values: Vec<Fp> =
            r.basis.cycles.iter().map(|c| evaluate_monomial(&c.exponent_vector(g.m()), edge_values)).collect();
        let via_cycles = r.expressions.iter().all(|x| {
            evaluate_monomial(&x.exponents, &cycle_values) == image[g.edge_parameter(x.edge)]
        });
        let same = numeric_coefficients(g, &point).ok() == numeric_coefficients(g, &image).ok();
        if !(via_cycles && same) {
            mismatches += 1;
        }
    }
    push("numeric", mismatches == 0, format!("{mismatches} of {VERIFY_POINTS} points disagree"));
    Verification { checks }
}

fn evaluate_monomial(exps: &[i64], values: &[Fp]) -> Fp {
    exps.iter()
        .zip(values)
        .filter(|(&e, _)| e != 0)
        .fold(Fp::one(), |acc, (&e, x)| acc * x.powi(e).expect("sample values are nonzero"))
}

/// Generic rank of the double characteristic polynomial map in the new
/// parameters (diagonal entries and rescaled non-tree entries), with every
/// tree entry held at 1. Equals `m + 1` exactly when the new parameters are
/// locally identifiable.
pub fn reparametrized_dimension(g: &CompartmentGraph, r: &ScalingReparametrization, opts: DimensionOptions) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut free: Vec<usize> = (0..g.n()).map(|v| g.diagonal_parameter(v + 1)).collect();
    free.extend(r.free_edges().into_iter().map(|k| g.edge_parameter(k)));
    let mut best = 0;
    for _ in 0..opts.trials.max(1) {
        let mut point: Vec<Fp> = (0..g.parameter_count()).map(|_| Fp::random_nonzero(&mut rng)).collect();
        for &k in &r.tree.edges {
            point[g.edge_parameter(k)] = Fp::one();
        }
        best = best.max(Fp::rank(jacobian_in(g, &point, &free)?));
    }
    Ok(best)
}
