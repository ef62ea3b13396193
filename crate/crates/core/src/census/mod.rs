//! Exhaustive census of small strongly connected graphs.
//!
//! Graphs are labeled with vertex 1 fixed as the input/output compartment;
//! symmetry classes are orbits under relabeling vertices `2..=n`.

mod conjectures;
mod properties;

pub use conjectures::{test_conjectures, ConjectureId, ConjectureReport, Counterexample};
pub use properties::{property_suite, PropertyReport, PropertyResult};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::charpoly::{has_expected_dimension, DimensionOptions};
use crate::error::{Error, Result};
use crate::graph::strongly_connected_within;
use crate::graph::{canonical_form, has_exchange, is_inductively_strongly_connected, CompartmentGraph};

/// Largest vertex count enumerated unless the caller raises the limit.
pub const DEFAULT_MAX_VERTICES: usize = 5;

/// Census settings; `max_vertices` is the enumeration guardrail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    pub dimension: DimensionOptions,
    pub max_vertices: usize,
    /// Keep per-class detail in the row.
    pub detail: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { dimension: DimensionOptions::default(), max_vertices: DEFAULT_MAX_VERTICES, detail: false }
    }
}

impl CensusOptions {
    pub fn with_seed(self, seed: u64) -> Self {
        CensusOptions { dimension: self.dimension.with_seed(seed), ..self }
    }

    pub fn with_trials(self, trials: usize) -> Self {
        CensusOptions { dimension: self.dimension.with_trials(trials), ..self }
    }

    pub fn with_detail(self, detail: bool) -> Self {
        CensusOptions { detail, ..self }
    }
}

/// All ordered pairs `(j, i)`, `j != i`, in lexicographic order.
pub fn possible_edges(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|j| (1..=n).filter(move |&i| i != j).map(move |i| (j, i))).collect()
}

/// Strongly connected graphs with `n` vertices and `m` edges, in
/// lexicographic order of their edge subsets.
pub fn enumerate_sc_graphs(n: usize, m: usize) -> Result<Vec<CompartmentGraph>> {
    enumerate_sc_graphs_up_to(n, m, DEFAULT_MAX_VERTICES)
}

pub fn enumerate_sc_graphs_up_to(n: usize, m: usize, max_vertices: usize) -> Result<Vec<CompartmentGraph>> {
    if n == 0 {
        return Err(Error::MalformedInput("a graph needs at least one vertex".into()));
    }
    if n > max_vertices {
        return Err(Error::LimitExceeded(format!("census enumeration is limited to n <= {max_vertices}, got n = {n}")));
    }
    let pairs = possible_edges(n);
    if m > pairs.len() {
        return Ok(Vec::new());
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..m).collect();
    loop {
        let mut outm = vec![0u64; n];
        let mut inm = vec![0u64; n];
        for &p in &pick {
            let (j, i) = pairs[p];
            outm[j - 1] |= 1 << (i - 1);
            inm[i - 1] |= 1 << (j - 1);
        }
        if strongly_connected_within(&outm, &inm, full) {
            out.push(CompartmentGraph::new(n, pick.iter().map(|&p| pairs[p])).expect("distinct pairs form a valid graph"));
        }
        if !next_combination(&mut pick, pairs.len()) {
            return Ok(out);
        }
    }
}

pub(crate) fn next_combination(pick: &mut [usize], total: usize) -> bool {
    let size = pick.len();
    let mut i = size;
    loop {
        if i == 0 {
            return false;
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
    true
}

/// The graph whose sorted edge list is a canonical form.
pub fn graph_from_canonical_form(code: &[u8]) -> CompartmentGraph {
    let n = code[0] as usize;
    CompartmentGraph::new(n, code[2..].chunks(2).map(|p| (p[0] as usize, p[1] as usize))).expect("canonical forms encode valid graphs")
}

/// FNV-1a over the seed and the canonical form, so each class gets its own
/// reproducible sample points.
pub fn class_seed(seed: u64, code: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in seed.to_le_bytes().iter().chain(code) {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Expected-dimension verdict of a class, computed on its canonical representative.
pub fn class_verdict(code: &[u8], opts: DimensionOptions) -> Result<bool> {
    has_expected_dimension(&graph_from_canonical_form(code), opts.with_seed(class_seed(opts.seed, code)))
}

/// One symmetry class of a census row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassDetail {
    pub representative: CompartmentGraph,
    pub size: usize,
    pub expected: bool,
    pub exchange: bool,
    pub isc: bool,
}

/// One row of the census table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub m: usize,
    /// Strongly connected graphs.
    pub a: usize,
    /// Graphs of `a` with expected dimension.
    pub b: usize,
    /// Symmetry classes.
    pub c: usize,
    /// Classes with an exchange; only when `m = 2n - 2`.
    pub d: Option<usize>,
    /// Classes with expected dimension.
    pub e: usize,
    /// Inductively strongly connected classes; only when `m = 2n - 2`.
    pub f: Option<usize>,
    /// Non-representative members re-checked individually.
    pub spot_checked: usize,
    /// Spot checks whose verdict differed from the class verdict.
    pub spot_mismatches: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<ClassDetail>>,
}

impl CensusRow {
    pub const CSV_HEADER: &'static str = "n,m,A,B,C,D,E,F";

    pub fn to_csv(&self) -> String {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        format!("{},{},{},{},{},{},{},{}", self.n, self.m, self.a, self.b, self.c, opt(self.d), self.e, opt(self.f))
    }

    /// `A/B/C/D/E/F` with `-` for absent columns.
    pub fn summary(&self) -> String {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
        format!("{}/{}/{}/{}/{}/{}", self.a, self.b, self.c, opt(self.d), self.e, opt(self.f))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("rows serialize")
    }
}

/// Stride for spot checks: every hundredth member of the enumeration.
const SPOT_STRIDE: usize = 100;

/// Computes one census row. Verdicts are computed once per symmetry class and
/// spot-checked on about 1% of the other members.
pub fn census_row(n: usize, m: usize, opts: CensusOptions) -> Result<CensusRow> {
    let graphs = enumerate_sc_graphs_up_to(n, m, opts.max_vertices)?;
    let codes: Vec<Vec<u8>> = graphs.par_iter().map(canonical_form).collect();
    let mut classes: BTreeMap<&[u8], Vec<usize>> = BTreeMap::new();
    for (idx, code) in codes.iter().enumerate() {
        classes.entry(code.as_slice()).or_default().push(idx);
    }
    let minimal = n >= 2 && m == 2 * n - 2;
    let dim = opts.dimension;

    let entries: Vec<(&[u8], &Vec<usize>)> = classes.iter().map(|(k, v)| (*k, v)).collect();
    let details: Vec<ClassDetail> = entries
        .par_iter()
        .map(|(code, members)| {
            let rep = graph_from_canonical_form(code);
            Ok(ClassDetail {
                expected: class_verdict(code, dim)?,
                exchange: has_exchange(&rep).is_some(),
                isc: minimal && is_inductively_strongly_connected(&rep).is_some(),
                size: members.len(),
                representative: rep,
            })
        })
        .collect::<Result<_>>()?;

    let verdict_of: BTreeMap<&[u8], bool> = entries.iter().zip(&details).map(|((code, _), d)| (*code, d.expected)).collect();
    let spot: Vec<usize> = (0..graphs.len()).step_by(SPOT_STRIDE).collect();
    let spot_mismatches = spot
        .par_iter()
        .map(|&idx| {
            let code = codes[idx].as_slice();
            let own = has_expected_dimension(&graphs[idx], dim.with_seed(class_seed(dim.seed, code) ^ idx as u64))?;
            Ok(usize::from(own != verdict_of[code]))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum();

    let row = CensusRow {
        n,
        m,
        a: graphs.len(),
        b: details.iter().filter(|d| d.expected).map(|d| d.size).sum(),
        c: details.len(),
        d: minimal.then(|| details.iter().filter(|d| d.exchange).count()),
        e: details.iter().filter(|d| d.expected).count(),
        f: minimal.then(|| details.iter().filter(|d| d.isc).count()),
        spot_checked: spot.len(),
        spot_mismatches,
        classes: opts.detail.then_some(details),
    };
    Ok(row)
}

/// Graphs of a row with expected dimension, one per labeled graph.
pub fn expected_dimension_graphs(n: usize, m: usize, opts: CensusOptions) -> Result<Vec<CompartmentGraph>> {
    let graphs = enumerate_sc_graphs_up_to(n, m, opts.max_vertices)?;
    let codes: Vec<Vec<u8>> = graphs.par_iter().map(canonical_form).collect();
    let mut verdicts: BTreeMap<&[u8], bool> = BTreeMap::new();
    for code in &codes {
        verdicts.entry(code.as_slice()).or_insert(false);
    }
    let keys: Vec<&[u8]> = verdicts.keys().copied().collect();
    let results: Vec<bool> = keys.par_iter().map(|code| class_verdict(code, opts.dimension)).collect::<Result<_>>()?;
    for (k, v) in keys.into_iter().zip(results) {
        verdicts.insert(k, v);
    }
    Ok(graphs.into_iter().zip(&codes).filter(|(_, c)| verdicts[c.as_slice()]).map(|(g, _)| g).collect())
}

/// Classes counted in column E but not in column F: expected dimension
/// without being inductively strongly connected. Only meaningful for
/// `m = 2n - 2`; other rows give an empty list.
pub fn non_isc_identifiable_classes(n: usize, m: usize, opts: CensusOptions) -> Result<Vec<CompartmentGraph>> {
    if n < 2 || m != 2 * n - 2 {
        return Ok(Vec::new());
    }
    let row = census_row(n, m, opts.with_detail(true))?;
    Ok(row
        .classes
        .unwrap_or_default()
        .into_iter()
        .filter(|c| c.expected && !c.isc)
        .map(|c| c.representative)
        .collect())
}
