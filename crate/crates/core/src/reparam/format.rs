use serde_json::{json, Value};

use super::basis::CycleBasis;
use super::tree::{rescaled_exponent_matrix, SpanningTree};
use super::{CycleExpression, ScalingReparametrization};
use crate::error::{Error, Result};
use crate::graph::{elementary_cycles, CompartmentGraph};

/// Renders a Laurent monomial over named variables: `a12*a23^-1`, or `1`.
pub fn format_monomial(exps: &[i64], names: &[String]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .zip(names)
        .filter(|(&e, _)| e != 0)
        .map(|(&e, name)| if e == 1 { name.clone() } else { format!("{name}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Inverse of [`format_monomial`]; repeated factors accumulate.
pub fn parse_monomial(text: &str, names: &[String]) -> Result<Vec<i64>> {
    let mut exps = vec![0i64; names.len()];
    let text = text.trim();
    if text == "1" {
        return Ok(exps);
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, e) = match factor.split_once('^') {
            Some((name, e)) => {
                let e: i64 = e.trim().parse().map_err(|_| Error::MalformedInput(format!("bad exponent in `{factor}`")))?;
                (name.trim(), e)
            }
            None => (factor, 1),
        };
        let slot = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::MalformedInput(format!("unknown variable `{name}`")))?;
        exps[slot] += e;
    }
    Ok(exps)
}

/// Edge parameter names in edge order.
pub fn edge_names(g: &CompartmentGraph) -> Vec<String> {
    g.edges().iter().map(|e| e.parameter_name()).collect()
}

fn cycle_names(r: usize) -> Vec<String> {
    (1..=r).map(|l| format!("q{l}")).collect()
}

/// Entry `(i, j)` of the reparametrized matrix as text.
pub fn matrix_entries(g: &CompartmentGraph, r: &ScalingReparametrization) -> Vec<Vec<String>> {
    let names = edge_names(g);
    let mut out = vec![vec!["0".to_string(); g.n()]; g.n()];
    for v in 1..=g.n() {
        out[v - 1][v - 1] = crate::graph::parameter_name(v, v);
    }
    for (k, e) in g.edges().iter().enumerate() {
        out[e.target - 1][e.source - 1] = format_monomial(&r.rescaled.row_i64(k), &names);
    }
    out
}

impl ScalingReparametrization {
    pub fn to_json_value(&self, g: &CompartmentGraph) -> Value {
        let names = edge_names(g);
        let qs = cycle_names(self.basis.len());
        let tree: Vec<[usize; 2]> = self.tree.edges.iter().map(|&k| [g.edge(k).source, g.edge(k).target]).collect();
        let f: Vec<Value> = self
            .scaling
            .iter()
            .enumerate()
            .map(|(v, exps)| json!({"vertex": v + 1, "monomial": format_monomial(exps, &names)}))
            .collect();
        let expressions: Vec<Value> = self
            .expressions
            .iter()
            .map(|x| {
                let e = g.edge(x.edge);
                json!({"edge": [e.source, e.target], "in_cycles": format_monomial(&x.exponents, &qs)})
            })
            .collect();
        json!({
            "tree_edges": tree,
            "f": f,
            "matrix": matrix_entries(g, self),
            "cycle_basis": self.basis.monomial_strings(g),
            "expressions": expressions,
        })
    }

    pub fn to_json(&self, g: &CompartmentGraph) -> String {
        serde_json::to_string_pretty(&self.to_json_value(g)).expect("json values serialize")
    }

    /// Reads back the output of [`ScalingReparametrization::to_json`] for the
    /// same graph. The result still has to pass
    /// [`verify_reparametrization`](super::verify_reparametrization).
    pub fn from_json(g: &CompartmentGraph, text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))?;
        let bad = |what: &str| Error::MalformedInput(format!("missing or malformed `{what}`"));
        let names = edge_names(g);

        let pairs: Vec<(usize, usize)> =
            serde_json::from_value(v.get("tree_edges").cloned().ok_or_else(|| bad("tree_edges"))?).map_err(|_| bad("tree_edges"))?;
        let tree = SpanningTree::from_pairs(g, &pairs)?;

        let mut scaling = vec![vec![0i64; g.m()]; g.n()];
        for item in v.get("f").and_then(Value::as_array).ok_or_else(|| bad("f"))? {
            let vertex = item.get("vertex").and_then(Value::as_u64).ok_or_else(|| bad("f.vertex"))? as usize;
            let mono = item.get("monomial").and_then(Value::as_str).ok_or_else(|| bad("f.monomial"))?;
            if vertex == 0 || vertex > g.n() {
                return Err(bad("f.vertex"));
            }
            scaling[vertex - 1] = parse_monomial(mono, &names)?;
        }

        let matrix: Vec<Vec<String>> =
            serde_json::from_value(v.get("matrix").cloned().ok_or_else(|| bad("matrix"))?).map_err(|_| bad("matrix"))?;
        if matrix.len() != g.n() || matrix.iter().any(|row| row.len() != g.n()) {
            return Err(bad("matrix"));
        }
        let mut rescaled = rescaled_exponent_matrix(g, &scaling);
        for (k, e) in g.edges().iter().enumerate() {
            for (col, x) in parse_monomial(&matrix[e.target - 1][e.source - 1], &names)?.into_iter().enumerate() {
                rescaled.set(k, col, x);
            }
        }

        let all = elementary_cycles(g);
        let mut cycles = Vec::new();
        for text in v.get("cycle_basis").and_then(Value::as_array).ok_or_else(|| bad("cycle_basis"))? {
            let exps = parse_monomial(text.as_str().ok_or_else(|| bad("cycle_basis"))?, &names)?;
            let cycle = all
                .nontrivial()
                .find(|c| c.exponent_vector(g.m()) == exps)
                .ok_or_else(|| Error::MalformedInput(format!("`{text}` is not a cycle of the graph")))?;
            cycles.push(cycle.clone());
        }
        let basis = CycleBasis::from_cycles(g, &tree, cycles)?;

        let qs = cycle_names(basis.len());
        let mut expressions = Vec::new();
        for item in v.get("expressions").and_then(Value::as_array).ok_or_else(|| bad("expressions"))? {
            let (j, i): (usize, usize) =
                serde_json::from_value(item.get("edge").cloned().ok_or_else(|| bad("expressions.edge"))?).map_err(|_| bad("expressions.edge"))?;
            let edge = g.edge_index(j, i).ok_or_else(|| bad("expressions.edge"))?;
            let text = item.get("in_cycles").and_then(Value::as_str).ok_or_else(|| bad("expressions.in_cycles"))?;
            expressions.push(CycleExpression { edge, exponents: parse_monomial(text, &qs)? });
        }
        Ok(ScalingReparametrization { tree, scaling, rescaled, basis, expressions, report: None })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn monomial_round_trip() {
        let ns = names(&["a12", "a21", "a3_10"]);
        for exps in [vec![0, 0, 0], vec![1, 0, 0], vec![2, -1, 0], vec![0, -3, 1]] {
            let s = format_monomial(&exps, &ns);
            assert_eq!(parse_monomial(&s, &ns).unwrap(), exps, "{s}");
        }
        assert_eq!(format_monomial(&[1, -1, 0], &ns), "a12*a21^-1");
        assert_eq!(format_monomial(&[0, 0, 0], &ns), "1");
    }

    #[test]
    fn parse_errors() {
        let ns = names(&["a12"]);
        assert!(parse_monomial("a13", &ns).is_err());
        assert!(parse_monomial("a12^x", &ns).is_err());
        assert_eq!(parse_monomial("a12 * a12^2", &ns).unwrap(), vec![3]);
    }
}
