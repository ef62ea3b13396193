use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{class_verdict, enumerate_sc_graphs_up_to, CensusOptions};
use crate::error::Result;
use crate::graph::{canonical_form, collapse_at, exchanges, CompartmentGraph};

/// The two collapse conjectures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ConjectureId {
    /// `m = 2n - 2`, and the collapsed graph has `2n - 4` edges and an exchange.
    #[serde(rename = "collapse-2n-4")]
    Collapse2n4,
    /// `m <= 2n - 2` and the collapsed graph has `n - 1` edges.
    #[serde(rename = "collapse-n-1")]
    CollapseN1,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 2] = [ConjectureId::Collapse2n4, ConjectureId::CollapseN1];

    pub fn as_str(self) -> &'static str {
        match self {
            ConjectureId::Collapse2n4 => "collapse-2n-4",
            ConjectureId::CollapseN1 => "collapse-n-1",
        }
    }

    /// Whether collapsing `g` to `collapsed` satisfies the hypothesis.
    pub fn applies(self, g: &CompartmentGraph, collapsed: &CompartmentGraph) -> bool {
        let n = g.n();
        match self {
            ConjectureId::Collapse2n4 => {
                g.m() == 2 * n - 2 && collapsed.m() + 4 == 2 * n && !exchanges(collapsed).is_empty()
            }
            ConjectureId::CollapseN1 => g.m() + 2 <= 2 * n && collapsed.m() + 1 == n,
        }
    }
}

/// A collapse where the expected-dimension verdicts of `G` and `G'` differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph: CompartmentGraph,
    pub exchange: usize,
    pub collapsed: CompartmentGraph,
    pub expected: bool,
    pub collapsed_expected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub id: ConjectureId,
    /// Labeled graphs with at least one collapse meeting the hypothesis.
    pub tested_graphs: usize,
    /// (graph, exchange vertex) pairs meeting the hypothesis.
    pub tested_collapses: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Collapses every strongly connected graph on `n` vertices (with
/// `n <= m <= 2n - 2`) at each of its exchange vertices and compares
/// expected-dimension verdicts wherever a conjecture's hypothesis holds.
pub fn test_conjectures(n: usize, opts: CensusOptions) -> Result<Vec<ConjectureReport>> {
    let mut collapses = Vec::new();
    if n >= 2 {
        for m in n..=2 * n - 2 {
            for g in enumerate_sc_graphs_up_to(n, m, opts.max_vertices)? {
                for v in exchanges(&g) {
                    let collapsed = collapse_at(&g, v)?;
                    if ConjectureId::ALL.iter().any(|id| id.applies(&g, &collapsed)) {
                        collapses.push((g.clone(), v, collapsed));
                    }
                }
            }
        }
    }

    let pairs: Vec<(Vec<u8>, Vec<u8>)> =
        collapses.par_iter().map(|(g, _, c)| (canonical_form(g), canonical_form(c))).collect();
    let mut verdicts: BTreeMap<Vec<u8>, bool> = BTreeMap::new();
    for (a, b) in &pairs {
        verdicts.insert(a.clone(), false);
        verdicts.insert(b.clone(), false);
    }
    let codes: Vec<Vec<u8>> = verdicts.keys().cloned().collect();
    let results: Vec<bool> = codes.par_iter().map(|c| class_verdict(c, opts.dimension)).collect::<Result<_>>()?;
    verdicts.extend(codes.into_iter().zip(results));

    Ok(ConjectureId::ALL
        .iter()
        .map(|&id| {
            let mut report = ConjectureReport { id, tested_graphs: 0, tested_collapses: 0, counterexamples: Vec::new() };
            let mut last: Option<&CompartmentGraph> = None;
            for ((g, v, collapsed), (a, b)) in collapses.iter().zip(&pairs) {
                if !id.applies(g, collapsed) {
                    continue;
                }
                report.tested_collapses += 1;
                if last != Some(g) {
                    report.tested_graphs += 1;
                    last = Some(g);
                }
                let (expected, collapsed_expected) = (verdicts[a], verdicts[b]);
                if expected != collapsed_expected {
                    report.counterexamples.push(Counterexample {
                        graph: g.clone(),
                        exchange: *v,
                        collapsed: collapsed.clone(),
                        expected,
                        collapsed_expected,
                    });
                }
            }
            report
        })
        .collect())
}
