use super::MonomialPolynomial;
use crate::graph::{elementary_cycles, CompartmentGraph, Cycle};

/// Characteristic polynomial coefficients of `A` and of `A` with row and
/// column 1 removed, expanded over collections of vertex-disjoint cycles.
///
/// A collection covering `i` vertices contributes to `c_i` with sign
/// `(-1)^i` times `-1` for every even-length cycle in it.
pub fn symbolic_coefficients(g: &CompartmentGraph) -> (Vec<MonomialPolynomial>, Vec<MonomialPolynomial>) {
    let cycles: Vec<Cycle> = elementary_cycles(g).as_slice().to_vec();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let c = expand(g, &cycles, all, g.n());
    let d = expand(g, &cycles, all & !1, g.n() - 1);
    (c, d)
}

fn expand(g: &CompartmentGraph, cycles: &[Cycle], allowed: u64, count: usize) -> Vec<MonomialPolynomial> {
    let nvars = g.parameter_count();
    let usable: Vec<(u64, usize, Vec<u32>)> = cycles
        .iter()
        .filter(|c| c.vertex_mask() & !allowed == 0)
        .map(|c| (c.vertex_mask(), c.len(), c.monomial(g)))
        .collect();
    let mut out = vec![MonomialPolynomial::zero(nvars); count];

    struct Walk<'a> {
        usable: &'a [(u64, usize, Vec<u32>)],
        out: &'a mut [MonomialPolynomial],
    }

    impl Walk<'_> {
        fn visit(&mut self, from: usize, occupied: u64, size: usize, even: usize, exps: &mut Vec<u32>) {
            let usable = self.usable;
            for (idx, (mask, len, mono)) in usable.iter().enumerate().skip(from) {
                let (mask, len) = (*mask, *len);
                if mask & occupied != 0 {
                    continue;
                }
                for (e, m) in exps.iter_mut().zip(mono) {
                    *e += m;
                }
                let size = size + len;
                let even = even + usize::from(len % 2 == 0);
                let negative = (size + even) % 2 == 1;
                self.out[size - 1].add_term(exps.clone(), if negative { -1 } else { 1 });
                self.visit(idx + 1, occupied | mask, size, even, exps);
                for (e, m) in exps.iter_mut().zip(mono) {
                    *e -= m;
                }
            }
        }
    }

    let mut exps = vec![0u32; nvars];
    Walk { usable: &usable, out: &mut out }.visit(0, 0, 0, 0, &mut exps);
    out
}
