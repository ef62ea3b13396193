#![allow(dead_code)]

use compartment_ident::graph::{is_strongly_connected, CompartmentGraph};
use rand::seq::SliceRandom;
use rand::Rng;

pub const IDENTIFIABLE4: &str = include_str!("../../fixtures/identifiable4.json");
pub const UNIDENTIFIABLE4: &str = include_str!("../../fixtures/unidentifiable4.json");
pub const ISC5: &str = include_str!("../../fixtures/isc5.json");

pub fn identifiable4() -> CompartmentGraph {
    CompartmentGraph::from_json(IDENTIFIABLE4).unwrap()
}

pub fn unidentifiable4() -> CompartmentGraph {
    CompartmentGraph::from_json(UNIDENTIFIABLE4).unwrap()
}

pub fn isc5() -> CompartmentGraph {
    CompartmentGraph::from_json(ISC5).unwrap()
}

/// A uniformly chosen strongly connected graph with `n` vertices and `m`
/// edges, by rejection sampling.
pub fn random_sc_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> CompartmentGraph {
    let pairs: Vec<(usize, usize)> =
        (1..=n).flat_map(|j| (1..=n).filter(move |&i| i != j).map(move |i| (j, i))).collect();
    loop {
        let picked: Vec<(usize, usize)> = pairs.choose_multiple(rng, m).copied().collect();
        let g = CompartmentGraph::new(n, picked).unwrap();
        if is_strongly_connected(&g) {
            return g;
        }
    }
}

/// Random strongly connected graph with 2 to 5 vertices and `n` to
/// `n(n-1)` edges.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R) -> CompartmentGraph {
    let n = rng.gen_range(2..=5);
    let m = rng.gen_range(n..=n * (n - 1));
    random_sc_graph(rng, n, m)
}
