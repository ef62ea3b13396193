mod common;

use compartment_ident::algebra::{ArithmeticMode, Fp, Ring, Scalar};
use compartment_ident::charpoly::{
    has_expected_dimension, image_dimension, io_equation_text, jacobian, numeric_coefficients, random_point,
    symbolic_coefficients, DimensionOptions, MonomialPolynomial,
};
use compartment_ident::graph::CompartmentGraph;
use compartment_ident::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn derivative_at(p: &MonomialPolynomial, slot: usize, point: &[Fp]) -> Fp {
    let mut acc = Fp::zero();
    for (exps, coeff) in p.terms() {
        let k = exps[slot];
        if k == 0 {
            continue;
        }
        let mut term = Fp::from_i64(coeff * i64::from(k));
        for (s, &e) in exps.iter().enumerate() {
            let e = if s == slot { e - 1 } else { e };
            term = term * point[s].pow(u64::from(e));
        }
        acc = acc + term;
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jets_match_symbolic_derivatives(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng);
        let point: Vec<Fp> = random_point(&g, &mut rng);
        let (c, d) = symbolic_coefficients(&g);
        let rows = jacobian(&g, &point).unwrap();
        for (row, p) in rows.iter().zip(c.iter().chain(&d)) {
            for (slot, x) in row.iter().enumerate() {
                prop_assert_eq!(*x, derivative_at(p, slot, &point));
            }
        }
    }

    #[test]
    fn coefficients_are_homogeneous(seed in any::<u64>()) {
        let g = common::random_graph(&mut ChaCha8Rng::seed_from_u64(seed));
        let (c, d) = symbolic_coefficients(&g);
        for (i, p) in c.iter().enumerate() {
            prop_assert!(p.homogeneous_degree().is_none_or(|k| k as usize == i + 1));
        }
        for p in &d {
            prop_assert!(!p.involves(g.diagonal_parameter(1)));
        }
    }

    #[test]
    fn rank_is_monotone_in_trials(seed in any::<u64>()) {
        let g = common::random_graph(&mut ChaCha8Rng::seed_from_u64(seed));
        let two = image_dimension(&g, DimensionOptions::default().with_seed(seed)).unwrap();
        let four = image_dimension(&g, DimensionOptions::default().with_seed(seed).with_trials(4)).unwrap();
        prop_assert!(two.d <= four.d);
        prop_assert!(four.d <= (g.m() + 1).min(2 * g.n() - 1));
    }
}

#[test]
fn fixture_dimensions() {
    let opts = DimensionOptions::default();
    assert_eq!(image_dimension(&common::identifiable4(), opts).unwrap().d, 7);
    assert_eq!(image_dimension(&common::unidentifiable4(), opts).unwrap().d, 6);
    let exact = opts.with_mode(ArithmeticMode::Rational);
    let r = image_dimension(&common::isc5(), exact).unwrap();
    assert_eq!((r.d, r.verdict), (9, true));
    assert_eq!(
        r.to_json_value().to_string(),
        r#"{"n":5,"m":8,"d":9,"expected":9,"verdict":true,"trials":2,"seed":0,"mode":"rational"}"#
    );
}

#[test]
fn non_strongly_connected_is_rejected() {
    let g = CompartmentGraph::new(3, [(1, 2), (2, 1), (2, 3)]).unwrap();
    assert_eq!(image_dimension(&g, DimensionOptions::default()), Err(Error::NotStronglyConnected));
}

#[test]
fn edge_bound_short_circuits() {
    let g = CompartmentGraph::complete(4);
    assert!(!has_expected_dimension(&g, DimensionOptions::default()).unwrap());
    assert_eq!(image_dimension(&g, DimensionOptions::default()).unwrap().d, 7);
}

#[test]
fn similarity_invariance_in_rationals() {
    use num_rational::BigRational;
    let g = common::isc5();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let p: Vec<BigRational> = random_point(&g, &mut rng);
    let scale: Vec<BigRational> =
        (0..g.n()).map(|v| if v == 0 { BigRational::one() } else { BigRational::random_nonzero(&mut rng) }).collect();
    let mut q = p.clone();
    for (k, e) in g.edges().iter().enumerate() {
        let s = g.edge_parameter(k);
        q[s] = p[s].clone() * scale[e.target - 1].clone() / scale[e.source - 1].clone();
    }
    assert_eq!(numeric_coefficients(&g, &p).unwrap(), numeric_coefficients(&g, &q).unwrap());
}

#[test]
fn io_equation_of_exchange() {
    let g = CompartmentGraph::new(2, [(1, 2), (2, 1)]).unwrap();
    assert_eq!(io_equation_text(&g).unwrap(), "y'' - (a11 + a22)*y' + (a11*a22 - a21*a12)*y = u1' - a22*u1");
}
