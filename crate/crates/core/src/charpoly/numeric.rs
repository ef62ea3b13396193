use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ArithmeticMode, Fp, Jet, Ring, Scalar};
use crate::error::{Error, Result};
use crate::graph::{is_strongly_connected, CompartmentGraph};
use num_rational::BigRational;

/// Coefficients `c_1..c_n` of `det(l I - A)` and `d_1..d_{n-1}` of
/// `det(l I - A_1)`, where `A_1` drops row and column 1.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector<R> {
    pub c: Vec<R>,
    pub d: Vec<R>,
}

impl<R: Clone> CoefficientVector<R> {
    /// `(c_1, ..., c_n, d_1, ..., d_{n-1})`.
    pub fn flatten(&self) -> Vec<R> {
        self.c.iter().chain(&self.d).cloned().collect()
    }
}

/// Characteristic polynomial coefficients by Faddeev-LeVerrier, so that
/// `det(l I - A) = l^k + sum_i c_i l^(k-i)`. Divides by `1..=k`.
pub fn faddeev_leverrier<R: Ring>(a: &[Vec<R>]) -> Vec<R> {
    let k = a.len();
    let mut coeffs = Vec::with_capacity(k);
    // M_1 = I, c_1 = -tr(A); M_{j+1} = A M_j + c_j I, c_{j+1} = -tr(A M_{j+1}) / (j+1)
    let mut m: Vec<Vec<R>> = (0..k).map(|i| (0..k).map(|j| if i == j { R::one() } else { R::zero() }).collect()).collect();
    for step in 1..=k {
        let am = matmul(a, &m);
        let trace = (0..k).fold(R::zero(), |acc, i| acc + am[i][i].clone());
        let c = -trace.div_small(step as u64);
        if step < k {
            m = am;
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = row[i].clone() + c.clone();
            }
        }
        coeffs.push(c);
    }
    coeffs
}

fn matmul<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> Vec<Vec<R>> {
    let k = a.len();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| (0..k).fold(R::zero(), |acc, l| acc + a[i][l].clone() * b[l][j].clone()))
                .collect()
        })
        .collect()
}

/// The compartment matrix `A` at an assignment in parameter slot order.
pub fn compartment_matrix<R: Ring>(g: &CompartmentGraph, assignment: &[R]) -> Vec<Vec<R>> {
    let n = g.n();
    let mut a = vec![vec![R::zero(); n]; n];
    for v in 1..=n {
        a[v - 1][v - 1] = assignment[g.diagonal_parameter(v)].clone();
    }
    for (k, e) in g.edges().iter().enumerate() {
        a[e.target - 1][e.source - 1] = assignment[g.edge_parameter(k)].clone();
    }
    a
}

/// Evaluates the double characteristic polynomial map at `assignment`.
pub fn numeric_coefficients<R: Ring>(g: &CompartmentGraph, assignment: &[R]) -> Result<CoefficientVector<R>> {
    assert_eq!(assignment.len(), g.parameter_count(), "assignment must cover every parameter");
    let p = R::characteristic();
    if p != 0 && p <= g.n() as u64 {
        return Err(Error::FieldCharacteristicTooSmall { characteristic: p, size: g.n() });
    }
    let a = compartment_matrix(g, assignment);
    let a1: Vec<Vec<R>> = a.iter().skip(1).map(|row| row[1..].to_vec()).collect();
    Ok(CoefficientVector { c: faddeev_leverrier(&a), d: faddeev_leverrier(&a1) })
}

/// Jacobian of the double characteristic polynomial map, `(2n-1) x (n+m)`,
/// from one jet-valued evaluation.
pub fn jacobian<F: Scalar>(g: &CompartmentGraph, point: &[F]) -> Result<Vec<Vec<F>>> {
    let all: Vec<usize> = (0..g.parameter_count()).collect();
    jacobian_in(g, point, &all)
}

/// Jacobian restricted to the parameter slots in `free`; the others are held
/// at their values in `point`.
pub fn jacobian_in<F: Scalar>(g: &CompartmentGraph, point: &[F], free: &[usize]) -> Result<Vec<Vec<F>>> {
    assert_eq!(point.len(), g.parameter_count(), "point must cover every parameter");
    let mut jets: Vec<Jet<F>> = point.iter().cloned().map(Jet::constant).collect();
    for (col, &slot) in free.iter().enumerate() {
        jets[slot] = Jet::variable(point[slot].clone(), col, free.len());
    }
    let coeffs = numeric_coefficients(g, &jets)?;
    Ok(coeffs.flatten().iter().map(|j| (0..free.len()).map(|col| j.partial(col)).collect()).collect())
}

/// Generic dimension of the image of the double characteristic polynomial map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub n: usize,
    pub m: usize,
    /// Largest Jacobian rank seen over all trials.
    pub d: usize,
    /// `m + 1`.
    pub expected: usize,
    pub verdict: bool,
    pub trials: usize,
    pub seed: u64,
    pub mode: ArithmeticMode,
    /// Rank observed at each sample point.
    pub ranks: Vec<usize>,
}

impl DimensionReport {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "expected": self.expected,
            "verdict": self.verdict,
            "trials": self.trials,
            "seed": self.seed,
            "mode": self.mode.as_str(),
        })
    }
}

/// How sample points for the randomized rank are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionOptions {
    pub trials: usize,
    pub seed: u64,
    pub mode: ArithmeticMode,
}

impl Default for DimensionOptions {
    fn default() -> Self {
        DimensionOptions { trials: 2, seed: 0, mode: ArithmeticMode::PrimeField }
    }
}

impl DimensionOptions {
    pub fn with_seed(self, seed: u64) -> Self {
        DimensionOptions { seed, ..self }
    }

    pub fn with_trials(self, trials: usize) -> Self {
        DimensionOptions { trials, ..self }
    }

    pub fn with_mode(self, mode: ArithmeticMode) -> Self {
        DimensionOptions { mode, ..self }
    }
}

/// Random nonzero point in parameter space; successive calls on one RNG give
/// successive trial points.
pub fn random_point<F: Scalar, R: rand::Rng + ?Sized>(g: &CompartmentGraph, rng: &mut R) -> Vec<F> {
    (0..g.parameter_count()).map(|_| F::random_nonzero(rng)).collect()
}

fn ranks_in<F: Scalar>(g: &CompartmentGraph, trials: usize, seed: u64) -> Result<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let point: Vec<F> = random_point(g, &mut rng);
            Ok(F::rank(jacobian(g, &point)?))
        })
        .collect()
}

/// Dimension of the image as the largest Jacobian rank over `trials`
/// random points. The rank at a random point can only under-report the
/// generic rank.
pub fn image_dimension(g: &CompartmentGraph, opts: DimensionOptions) -> Result<DimensionReport> {
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let ranks = match opts.mode {
        ArithmeticMode::PrimeField => ranks_in::<Fp>(g, opts.trials, opts.seed)?,
        ArithmeticMode::Rational => ranks_in::<BigRational>(g, opts.trials, opts.seed)?,
    };
    let d = ranks.iter().copied().max().unwrap_or(0);
    let expected = g.m() + 1;
    Ok(DimensionReport {
        n: g.n(),
        m: g.m(),
        d,
        expected,
        verdict: d == expected,
        trials: opts.trials,
        seed: opts.seed,
        mode: opts.mode,
        ranks,
    })
}

/// Whether the image has dimension `m + 1`. Graphs with more than `2n - 2`
/// edges are rejected without computing any rank.
pub fn has_expected_dimension(g: &CompartmentGraph, opts: DimensionOptions) -> Result<bool> {
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    if g.m() > 2 * g.n() - 2 {
        return Ok(false);
    }
    Ok(image_dimension(g, opts)?.verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_compartment() {
        let g = CompartmentGraph::new(1, []).unwrap();
        let v = numeric_coefficients(&g, &[Fp::from_i64(5)]).unwrap();
        assert_eq!(v.c, vec![Fp::from_i64(-5)]);
        assert!(v.d.is_empty());
        let j = jacobian(&g, &[Fp::from_i64(5)]).unwrap();
        assert_eq!(j, vec![vec![Fp::from_i64(-1)]]);
    }

    #[test]
    fn zero_assignment_gives_zero_coefficients() {
        let g = CompartmentGraph::complete(4);
        let zero = vec![BigRational::from_i64(0); g.parameter_count()];
        let v = numeric_coefficients(&g, &zero).unwrap();
        assert!(v.flatten().iter().all(|x| *x == BigRational::from_i64(0)));
    }

    #[test]
    fn faddeev_leverrier_matches_hand_expansion() {
        // [[1,2],[3,4]]: l^2 - 5 l - 2
        let a = vec![vec![BigRational::from_i64(1), BigRational::from_i64(2)], vec![BigRational::from_i64(3), BigRational::from_i64(4)]];
        assert_eq!(faddeev_leverrier(&a), vec![BigRational::from_i64(-5), BigRational::from_i64(-2)]);
        assert!(faddeev_leverrier::<Fp>(&[]).is_empty());
    }

    #[test]
    fn not_strongly_connected_is_rejected() {
        let g = CompartmentGraph::new(2, [(1, 2)]).unwrap();
        assert_eq!(image_dimension(&g, DimensionOptions::default()), Err(Error::NotStronglyConnected));
        assert_eq!(has_expected_dimension(&g, DimensionOptions::default()), Err(Error::NotStronglyConnected));
    }

    #[test]
    fn dense_graph_short_circuits() {
        assert!(!has_expected_dimension(&CompartmentGraph::complete(3), DimensionOptions::default()).unwrap());
    }
}
