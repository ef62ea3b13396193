//! Acceptance criteria 1-8. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails unexpectedly.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use compartment_ident::algebra::{ArithmeticMode, Fp, Ring, Scalar};
use compartment_ident::census::{
    census_row, enumerate_sc_graphs, expected_dimension_graphs, property_suite, CensusOptions, CensusRow,
};
use compartment_ident::charpoly::{
    identifiable_cycle_functions, image_dimension, numeric_coefficients, random_point, symbolic_coefficients,
    DimensionOptions,
};
use compartment_ident::graph::CompartmentGraph;
use compartment_ident::reparam::{
    assemble, edge_names, matrix_entries, parse_monomial, reparametrize, reparametrize_with_tree, spanning_tree,
    spanning_trees, verify_reparametrization, SpanningTree,
};
use compartment_ident::Error;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::{identifiable4, unidentifiable4, isc5, random_graph, random_sc_graph};

/// Outcome of one criterion. `known` marks a failure that is explained and
/// does not fail the run.
struct Verdict {
    pass: bool,
    known: bool,
    detail: String,
}

impl Verdict {
    fn from(pass: bool, detail: String) -> Self {
        Verdict { pass, known: false, detail }
    }
}

const TABLE: [((usize, usize), [Option<usize>; 6]); 9] = [
    ((3, 3), [Some(2), Some(2), Some(1), None, Some(1), None]),
    ((3, 4), [Some(9), Some(7), Some(5), Some(4), Some(4), Some(4)]),
    ((4, 4), [Some(6), Some(6), Some(1), None, Some(1), None]),
    ((4, 5), [Some(84), Some(54), Some(15), None, Some(12), None]),
    ((4, 6), [Some(316), Some(166), Some(55), Some(34), Some(30), Some(26)]),
    ((5, 5), [Some(24), Some(24), Some(1), None, Some(1), None]),
    ((5, 6), [Some(720), Some(576), Some(32), None, Some(26), None]),
    ((5, 7), [Some(6440), Some(4052), Some(281), None, Some(180), None]),
    ((5, 8), [Some(26875), Some(9565), Some(1158), Some(581), Some(421), Some(267)]),
];

fn cells(row: &CensusRow) -> [Option<usize>; 6] {
    [Some(row.a), Some(row.b), Some(row.c), row.d, Some(row.e), row.f]
}

fn criterion_1() -> Verdict {
    let names = ["A", "B", "C", "D", "E", "F"];
    let mut mismatches = Vec::new();
    let mut explained = true;
    for ((n, m), expected) in TABLE {
        let row = census_row(n, m, CensusOptions::default()).unwrap();
        for (k, (got, want)) in cells(&row).iter().zip(expected).enumerate() {
            if *got != want {
                mismatches.push(format!("({n},{m}) {} = {got:?}, table {want:?}", names[k]));
                // A class has at most (n-1)! members, so B >= A - (n-1)! (C - E).
                // A tabulated B below that bound cannot be consistent with A, C, E.
                let orbit: usize = (1..n).product();
                let floor = row.a - orbit * (row.c - row.e);
                let table_consistent = want.is_some_and(|b| b >= floor);
                let rest_match = cells(&row).iter().zip(expected).enumerate().all(|(j, (g, w))| j == 1 || g == &w);
                explained &= k == 1 && !table_consistent && rest_match && row.b >= floor;
            }
        }
    }
    let stable = {
        let a = census_row(5, 8, CensusOptions::default()).unwrap();
        let b = census_row(5, 8, CensusOptions::default().with_trials(4).with_seed(0x2545_f491)).unwrap();
        cells(&a) == cells(&b)
    };
    if mismatches.is_empty() {
        return Verdict::from(stable, format!("all 9 rows match; (5,8) stable under 4 trials at a second seed: {stable}"));
    }
    Verdict {
        pass: false,
        known: explained && stable,
        detail: format!(
            "{}; {}",
            mismatches.join("; "),
            if explained {
                "the tabulated value is below A - (n-1)!(C - E) and so contradicts the row's own A, C, E; every other cell matches"
            } else {
                "unexplained"
            }
        ),
    }
}

/// Parses `num` or `num/den` into an exponent vector over the edge parameters.
fn quotient(g: &CompartmentGraph, text: &str) -> Vec<i64> {
    let names = edge_names(g);
    let clean = |s: &str| s.trim().trim_start_matches('(').trim_end_matches(')').to_string();
    match text.split_once('/') {
        Some((num, den)) => {
            let a = parse_monomial(&clean(num).replace(")*(", "*"), &names).unwrap();
            let b = parse_monomial(&clean(den), &names).unwrap();
            a.iter().zip(&b).map(|(x, y)| x - y).collect()
        }
        None => parse_monomial(text, &names).unwrap(),
    }
}

fn entries_match(g: &CompartmentGraph, got: &[Vec<String>], want: &[[&str; 5]]) -> bool {
    let names = edge_names(g);
    got.iter().zip(want).enumerate().all(|(i, (row, wrow))| {
        row.iter().zip(wrow.iter()).enumerate().all(|(j, (x, w))| {
            if i == j || *w == "0" {
                x == w
            } else {
                parse_monomial(x, &names).unwrap() == quotient(g, w)
            }
        })
    })
}

fn criterion_2() -> Verdict {
    let opts = DimensionOptions::default();
    let mut fails = Vec::new();

    let g = identifiable4();
    let d = image_dimension(&g, opts).unwrap().d;
    if d != 7 {
        fails.push(format!("identifiable4 d = {d}"));
    }
    let functions: Vec<String> =
        identifiable_cycle_functions(&g, opts).unwrap().iter().map(|c| c.monomial_string(&g)).collect();
    if functions != ["a11", "a22", "a33", "a44", "a12*a21", "a23*a32", "a23*a34*a42"] {
        fails.push(format!("identifiable4 functions {functions:?}"));
    }
    let r = reparametrize(&g, opts).unwrap();
    let want = [
        ["a11", "1", "0", "0"],
        ["a12*a21", "a22", "1", "0"],
        ["0", "a23*a32", "a33", "1"],
        ["0", "a23*a34*a42", "0", "a44"],
    ];
    if matrix_entries(&g, &r) != want {
        fails.push("identifiable4 matrix".into());
    }

    match reparametrize(&unidentifiable4(), opts) {
        Err(Error::NoReparametrization(report)) if report.d == 6 => {}
        other => fails.push(format!("unidentifiable4: {:?}", other.map(|_| ()))),
    }

    let g = isc5();
    let d = image_dimension(&g, opts).unwrap().d;
    if d != 9 {
        fails.push(format!("isc5 d = {d}"));
    }
    let tree = SpanningTree::from_pairs(&g, &[(2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
    let r = reparametrize_with_tree(&g, &tree, opts).unwrap();
    let want = [
        ["a11", "0", "a13*a31/(a43*a31*a15*a54)", "0", "1"],
        ["(a43*a31*a15*a54)*(a13*a32*a21)/(a13*a31)", "a22", "0", "0", "0"],
        ["a43*a31*a15*a54", "1", "a33", "a34*a43", "0"],
        ["0", "0", "1", "a44", "0"],
        ["0", "0", "0", "1", "a55"],
    ];
    if !entries_match(&g, &matrix_entries(&g, &r), &want) {
        fails.push(format!("isc5 matrix {:?}", matrix_entries(&g, &r)));
    }
    let mut basis: Vec<Vec<i64>> = r.basis.cycles.iter().map(|c| c.exponent_vector(g.m())).collect();
    let mut paper: Vec<Vec<i64>> =
        ["a13*a31", "a34*a43", "a43*a31*a15*a54", "a13*a32*a21"].iter().map(|s| quotient(&g, s)).collect();
    basis.sort();
    paper.sort();
    if basis != paper {
        fails.push("isc5 cycle basis".into());
    }
    let pass = fails.is_empty();
    Verdict::from(pass, if pass { "identifiable4, unidentifiable4, isc5 reproduced".into() } else { fails.join("; ") })
}

fn identities_hold<F: Scalar>() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let fixtures = [
        identifiable4(),
        unidentifiable4(),
        isc5(),
        CompartmentGraph::directed_cycle(5),
        CompartmentGraph::complete(3),
        CompartmentGraph::new(2, [(1, 2), (2, 1)]).unwrap(),
    ];
    for g in &fixtures {
        for _ in 0..100 {
            let p: Vec<F> = random_point(g, &mut rng);
            let v = numeric_coefficients(g, &p).unwrap();
            if p[0] != v.d[0].clone() - v.c[0].clone() {
                return false;
            }
        }
    }
    let g = identifiable4();
    let (a12, a21) = (g.edge_parameter(g.edge_index(2, 1).unwrap()), g.edge_parameter(g.edge_index(1, 2).unwrap()));
    (0..100).all(|_| {
        let p: Vec<F> = random_point(&g, &mut rng);
        let v = numeric_coefficients(&g, &p).unwrap();
        let (c, d) = (&v.c, &v.d);
        let rhs = d[1].clone() - c[1].clone() + c[0].clone() * d[0].clone() - d[0].clone() * d[0].clone();
        p[a12].clone() * p[a21].clone() == rhs
    })
}

fn criterion_3() -> Verdict {
    let fp = identities_hold::<Fp>();
    let q = identities_hold::<BigRational>();
    Verdict::from(fp && q, format!("prime field: {fp}, rationals: {q}"))
}

fn oracle_agrees(g: &CompartmentGraph, seed: u64) -> bool {
    let (c, d) = symbolic_coefficients(g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..5).all(|_| {
        let p: Vec<Fp> = random_point(g, &mut rng);
        let v = numeric_coefficients(g, &p).unwrap();
        c.iter().map(|x| x.evaluate(&p)).collect::<Vec<_>>() == v.c
            && d.iter().map(|x| x.evaluate(&p)).collect::<Vec<_>>() == v.d
    })
}

fn criterion_4() -> Verdict {
    let mut small = Vec::new();
    for n in 1..=4 {
        let lo = if n == 1 { 0 } else { n };
        for m in lo..=n * (n - 1) {
            small.extend(enumerate_sc_graphs(n, m).unwrap());
        }
    }
    let bad_small = small.par_iter().enumerate().filter(|(i, g)| !oracle_agrees(g, *i as u64)).count();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let large: Vec<CompartmentGraph> = (0..500)
        .map(|_| {
            let m = rng.gen_range(5..=20);
            random_sc_graph(&mut rng, 5, m)
        })
        .collect();
    let bad_large = large.par_iter().enumerate().filter(|(i, g)| !oracle_agrees(g, 1000 + *i as u64)).count();
    Verdict::from(
        bad_small == 0 && bad_large == 0,
        format!("{} graphs with n <= 4 ({bad_small} disagree), 500 with n = 5 ({bad_large} disagree)", small.len()),
    )
}

fn criterion_5() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut bad = 0;
    for _ in 0..1000 {
        let g = random_graph(&mut rng);
        let p: Vec<Fp> = random_point(&g, &mut rng);
        let mut scale: Vec<Fp> = (0..g.n()).map(|_| Fp::random_nonzero(&mut rng)).collect();
        scale[0] = Fp::one();
        let mut q = p.clone();
        for (k, e) in g.edges().iter().enumerate() {
            let slot = g.edge_parameter(k);
            q[slot] = p[slot] * scale[e.target - 1] * scale[e.source - 1].inverse().unwrap();
        }
        if numeric_coefficients(&g, &p).unwrap() != numeric_coefficients(&g, &q).unwrap() {
            bad += 1;
        }
    }
    Verdict::from(bad == 0, format!("1000 pairs, {bad} differ"))
}

fn criterion_6() -> Verdict {
    let report = property_suite(5, CensusOptions::default()).unwrap();
    let detail: Vec<String> = report
        .results
        .iter()
        .map(|r| format!("{} {}/{}", r.name, r.checked - r.violations.len().min(r.checked), r.checked))
        .collect();
    Verdict::from(report.passed(), detail.join(", "))
}

fn criterion_7() -> Verdict {
    let mut total = 0;
    let mut failures = Vec::new();
    let mut single_tree = 0;
    for ((n, m), _) in TABLE {
        let graphs = expected_dimension_graphs(n, m, CensusOptions::default()).unwrap();
        let results: Vec<(usize, bool, Option<String>)> = graphs
            .par_iter()
            .map(|g| {
                let default = spanning_tree(g).unwrap();
                let mut trees = vec![default.clone()];
                if let Some(other) = spanning_trees(g, 2).into_iter().find(|t| t.edges != default.edges) {
                    trees.push(other);
                }
                let ok = trees.iter().all(|t| assemble(g, t).is_ok_and(|r| verify_reparametrization(g, &r).passed()));
                (trees.len(), ok, (!ok).then(|| g.to_json()))
            })
            .collect();
        total += results.len();
        single_tree += results.iter().filter(|r| r.0 < 2).count();
        failures.extend(results.into_iter().filter_map(|r| r.2));
    }
    Verdict::from(
        failures.is_empty(),
        format!(
            "{total} graphs, {} verified with two trees, {} failed{}",
            total - single_tree,
            failures.len(),
            failures.first().map(|g| format!(" (first: {g})")).unwrap_or_default()
        ),
    )
}

fn criterion_8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let graphs: Vec<CompartmentGraph> = (0..200)
        .map(|_| {
            let n = rng.gen_range(2..=5);
            let m = rng.gen_range(n..=2 * n - 2);
            random_sc_graph(&mut rng, n, m)
        })
        .collect();
    let mut upward = 0;
    let mut downward = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let a = image_dimension(g, DimensionOptions::default().with_trials(2).with_seed(11 + i as u64)).unwrap();
        let b = image_dimension(g, DimensionOptions::default().with_trials(4).with_seed(7919 + i as u64)).unwrap();
        if a.d < b.d {
            upward += 1;
            eprintln!("  criterion 8: {} rank {} with 2 trials, {} with 4", g, a.d, b.d);
        } else if a.d > b.d {
            downward.push(g.to_json());
        }
    }
    let exact = image_dimension(&isc5(), DimensionOptions::default().with_mode(ArithmeticMode::Rational)).unwrap().d;
    Verdict::from(
        downward.is_empty() && exact == 9,
        format!("200 graphs, {upward} resolved upward, {} downward", downward.len()),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 8] = [
        ("table reproduction", criterion_1),
        ("worked examples", criterion_2),
        ("identities", criterion_3),
        ("symbolic vs numeric", criterion_4),
        ("similarity invariance", criterion_5),
        ("proven properties", criterion_6),
        ("reparametrization soundness", criterion_7),
        ("randomization stability", criterion_8),
    ];
    let mut unexpected = 0;
    let mut summary = BTreeMap::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = f();
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {} {status} {name} [{:.1?}]: {}", k + 1, start.elapsed(), v.detail);
        if !v.pass && !v.known {
            unexpected += 1;
        }
        summary.insert(k + 1, v.pass);
    }
    let passed = summary.values().filter(|p| **p).count();
    println!("acceptance: {passed}/8 criteria pass, {unexpected} unexpected failures");
    if unexpected > 0 {
        std::process::exit(1);
    }
}
