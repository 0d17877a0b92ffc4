use std::collections::BTreeSet;

use crate::graphs::{acyclic_orientation_count, canonical_form, contract_labelled, flats, CanonGraph, Graph};
use crate::hopf::HopfAlgebra;
use crate::linear::{sign, LinComb, Scalar};

/// The incidence Hopf algebra on isomorphism classes of simple graphs.
#[derive(Clone, Copy, Debug, Default)]
pub struct GraphAlgebra;

fn canon(g: &Graph) -> CanonGraph {
    canonical_form(g).expect("subgraphs stay within the canonicalization bound")
}

impl HopfAlgebra for GraphAlgebra {
    type Key = CanonGraph;

    fn degree(&self, key: &CanonGraph) -> usize {
        key.vertex_count()
    }

    fn unit(&self) -> CanonGraph {
        CanonGraph::empty()
    }

    fn product(&self, a: &CanonGraph, b: &CanonGraph) -> LinComb<CanonGraph> {
        LinComb::basis(canon(&a.graph().disjoint_union(b.graph())))
    }

    /// Sum over ordered pairs `(V1, V2)` of complementary vertex sets, either possibly empty.
    fn coproduct(&self, key: &CanonGraph) -> LinComb<(CanonGraph, CanonGraph)> {
        let g = key.graph();
        let n = g.vertex_count();
        let mut out = LinComb::zero();
        for mask in 0u32..(1 << n) {
            let (v1, v2): (Vec<u32>, Vec<u32>) = (1..=n as u32).partition(|&v| mask >> (v - 1) & 1 == 1);
            out.add_term((canon(&g.induced(&v1)), canon(&g.induced(&v2))), Scalar::from(1));
        }
        out
    }

    /// Sum over flats `F` of `(-1)^{c(F)} a(G/F) F`.
    fn closed_antipode(&self, key: &CanonGraph) -> Option<LinComb<CanonGraph>> {
        let g = key.graph();
        let mut out = LinComb::zero();
        for f in flats(g) {
            let (quotient, comps) = contract_labelled(g, &f);
            let flat_graph = Graph::new(g.vertex_count(), f.iter().copied()).expect("flat edges are edges of g");
            out.add_term(canon(&flat_graph), sign(comps.len()) * acyclic_orientation_count(&quotient));
        }
        Some(out)
    }
}

/// Sum over flats of `a(G/F)`, the total weight of the closed form.
pub fn flat_orientation_total(g: &Graph) -> u64 {
    flats(g).iter().map(|f: &BTreeSet<_>| acyclic_orientation_count(&contract_labelled(g, f).0)).sum()
}
