use crate::combinat::{quasishuffle_compositions, shuffle, Composition};
use crate::hopf::HopfAlgebra;
use crate::linear::{sign, LinComb};
use crate::tableaux::{cut_edge_splits, superstandard_word, transpose};

fn deconcatenations(alpha: &Composition) -> LinComb<(Composition, Composition)> {
    let p = alpha.parts();
    (0..=p.len())
        .map(|i| {
            let (a, b) = p.split_at(i);
            ((Composition::from_nonzero(a.iter().copied()), Composition::from_nonzero(b.iter().copied())), 1.into())
        })
        .collect()
}

/// Quasisymmetric functions in the monomial basis `M_alpha`.
#[derive(Clone, Copy, Debug, Default)]
pub struct QSymM;

impl HopfAlgebra for QSymM {
    type Key = Composition;

    fn degree(&self, key: &Composition) -> usize {
        key.size()
    }

    fn unit(&self) -> Composition {
        Composition::empty()
    }

    fn product(&self, a: &Composition, b: &Composition) -> LinComb<Composition> {
        quasishuffle_compositions(a, b)
    }

    fn coproduct(&self, key: &Composition) -> LinComb<(Composition, Composition)> {
        deconcatenations(key)
    }

    /// `(-1)^{l(alpha)}` times the sum of `M_beta` over coarsenings of the reversal.
    fn closed_antipode(&self, key: &Composition) -> Option<LinComb<Composition>> {
        let s = sign(key.len());
        Some(key.reversal().coarsenings().into_iter().map(|b| (b, s.clone())).collect())
    }
}

/// Quasisymmetric functions in the fundamental basis `F_alpha`.
#[derive(Clone, Copy, Debug, Default)]
pub struct QSymF;

impl HopfAlgebra for QSymF {
    type Key = Composition;

    fn degree(&self, key: &Composition) -> usize {
        key.size()
    }

    fn unit(&self) -> Composition {
        Composition::empty()
    }

    /// Shuffle a word modelling `a` with a disjoint word modelling `b`.
    fn product(&self, a: &Composition, b: &Composition) -> LinComb<Composition> {
        let v = superstandard_word(a);
        let w = superstandard_word(b).shift(a.size() as u32);
        shuffle(&v, &w).map_keys(|u| u.descent_composition())
    }

    fn coproduct(&self, key: &Composition) -> LinComb<(Composition, Composition)> {
        cut_edge_splits(key).into_iter().map(|p| (p, 1.into())).collect()
    }

    fn closed_antipode(&self, key: &Composition) -> Option<LinComb<Composition>> {
        Some(LinComb::term(transpose(key), sign(key.size())))
    }
}

/// `F_alpha` as the sum of `M_beta` over refinements `beta` of `alpha`.
pub fn f_to_m(v: &LinComb<Composition>) -> LinComb<Composition> {
    v.linear_extend(|a| a.refinements().into_iter().map(|b| (b, 1.into())).collect())
}

/// Inverse change of basis by Mobius inversion on refinement order.
pub fn m_to_f(v: &LinComb<Composition>) -> LinComb<Composition> {
    v.linear_extend(|a| {
        a.refinements()
            .into_iter()
            .map(|b| {
                let s = sign(b.len() - a.len());
                (b, s)
            })
            .collect()
    })
}
