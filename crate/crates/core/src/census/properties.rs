use rayon::prelude::*;
use serde::Serialize;

use super::{census_row, class_verdict, enumerate_sc_graphs_up_to, graph_from_canonical_form, CensusOptions, CensusRow};
use crate::charpoly::{has_expected_dimension, image_dimension};
use crate::error::Result;
use crate::graph::{add_exchange_vertex, automorphism_count, canonical_form, CompartmentGraph};

/// Outcome of one structural property over its range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub results: Vec<PropertyResult>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(PropertyResult::passed)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

fn describe(g: &CompartmentGraph) -> String {
    g.to_json()
}

/// Highest vertex count for the add-exchange property.
const ADD_EXCHANGE_MAX_N: usize = 4;
/// Highest vertex count for which every edge count above `2n - 2` is swept;
/// larger `n` only check `m = 2n - 1`.
const EDGE_BOUND_FULL_N: usize = 4;

/// Checks the proven structural statements over all graphs with at most
/// `n_max` vertices:
///
/// - `exchange-necessity`: `m = 2n - 2` and expected dimension imply an exchange;
/// - `minimal-isc`: inductively strongly connected with `m = 2n - 2` implies expected dimension;
/// - `directed-cycle`: directed cycles on 3 to 6 vertices have expected dimension;
/// - `add-exchange`: adding an exchange vertex preserves expected dimension (`n <= 4`);
/// - `edge-bound`: `m > 2n - 2` never has expected dimension, and the rank is at most `2n - 1`;
/// - `orbit-sizes`: class sizes equal `(n - 1)! / |Aut|` and spot checks agree.
pub fn property_suite(n_max: usize, opts: CensusOptions) -> Result<PropertyReport> {
    let dim = opts.dimension;
    let mut results = Vec::new();

    let rows: Vec<CensusRow> =
        (2..=n_max).map(|n| census_row(n, 2 * n - 2, opts.with_detail(true))).collect::<Result<_>>()?;
    let classes = || rows.iter().flat_map(|r| r.classes.iter().flatten());

    let mut necessity = PropertyResult { name: "exchange-necessity", checked: 0, violations: Vec::new() };
    let mut minimal = PropertyResult { name: "minimal-isc", checked: 0, violations: Vec::new() };
    let mut orbits = PropertyResult { name: "orbit-sizes", checked: 0, violations: Vec::new() };
    for class in classes() {
        let g = &class.representative;
        necessity.checked += 1;
        if class.expected && !class.exchange {
            necessity.violations.push(describe(g));
        }
        minimal.checked += 1;
        if class.isc && !class.expected {
            minimal.violations.push(describe(g));
        }
        orbits.checked += 1;
        let factorial: usize = (1..g.n()).product();
        if class.size * automorphism_count(g) != factorial {
            orbits.violations.push(format!("{} has {} members", describe(g), class.size));
        }
    }
    for row in &rows {
        if row.spot_mismatches > 0 {
            orbits.violations.push(format!("({},{}): {} spot checks disagree", row.n, row.m, row.spot_mismatches));
        }
    }
    results.extend([necessity, minimal]);

    let mut cycles = PropertyResult { name: "directed-cycle", checked: 0, violations: Vec::new() };
    for n in 3..=6 {
        let g = CompartmentGraph::directed_cycle(n);
        cycles.checked += 1;
        if !has_expected_dimension(&g, dim)? {
            cycles.violations.push(describe(&g));
        }
    }
    results.push(cycles);

    let mut add = PropertyResult { name: "add-exchange", checked: 0, violations: Vec::new() };
    for n in 1..=n_max.min(ADD_EXCHANGE_MAX_N) {
        let lo = if n == 1 { 0 } else { n };
        for m in lo..=2 * n - 2 {
            let codes = class_codes(n, m, opts)?;
            let found: Vec<(usize, Option<String>)> = codes
                .par_iter()
                .map(|code| {
                    if !class_verdict(code, dim)? {
                        return Ok((0, None));
                    }
                    let bigger = add_exchange_vertex(&graph_from_canonical_form(code));
                    let ok = class_verdict(&canonical_form(&bigger), dim)?;
                    Ok((1, (!ok).then(|| describe(&bigger))))
                })
                .collect::<Result<_>>()?;
            for (count, violation) in found {
                add.checked += count;
                add.violations.extend(violation);
            }
        }
    }
    results.push(add);

    let mut bound = PropertyResult { name: "edge-bound", checked: 0, violations: Vec::new() };
    for n in 2..=n_max {
        let top = if n <= EDGE_BOUND_FULL_N { n * (n - 1) } else { 2 * n - 1 };
        for m in 2 * n - 1..=top {
            let codes = class_codes(n, m, opts)?;
            let found: Vec<Option<String>> = codes
                .par_iter()
                .map(|code| {
                    let g = graph_from_canonical_form(code);
                    let short = has_expected_dimension(&g, dim)?;
                    let d = image_dimension(&g, dim)?.d;
                    Ok((short || d > 2 * n - 1).then(|| format!("{} has rank {d}", describe(&g))))
                })
                .collect::<Result<_>>()?;
            bound.checked += codes.len();
            bound.violations.extend(found.into_iter().flatten());
        }
    }
    results.push(bound);
    results.push(orbits);

    Ok(PropertyReport { results })
}

fn class_codes(n: usize, m: usize, opts: CensusOptions) -> Result<Vec<Vec<u8>>> {
    let graphs = enumerate_sc_graphs_up_to(n, m, opts.max_vertices)?;
    let mut codes: Vec<Vec<u8>> = graphs.par_iter().map(canonical_form).collect();
    codes.sort();
    codes.dedup();
    Ok(codes)
}
