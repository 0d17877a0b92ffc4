use crate::combinat::{compositions_up_to, multishuffle, Composition};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linear::{sign, LinComb};
use crate::tableaux::{collapse_count, cut_cell_splits, cut_edge_splits, superstandard_word, transpose};

/// Multi-quasisymmetric functions in the `F~` basis, truncated above `cap`.
#[derive(Clone, Copy, Debug)]
pub struct MQSym {
    cap: usize,
}

impl MQSym {
    pub fn new(cap: usize) -> Self {
        MQSym { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Rejects keys that do not fit under the cap.
    pub fn check(&self, alpha: &Composition) -> Result<()> {
        if alpha.size() > self.cap {
            return Err(Error::CapTooSmall { cap: self.cap, degree: alpha.size() });
        }
        Ok(())
    }

    /// Multishuffles of the two model words with at most `cap` letters.
    pub fn product_words(&self, a: &Composition, b: &Composition) -> Vec<crate::combinat::Word> {
        if a.size() + b.size() > self.cap {
            return Vec::new();
        }
        let v = superstandard_word(a);
        let w = superstandard_word(b).shift(a.size() as u32);
        multishuffle(&v, &w, self.cap).expect("model words use disjoint alphabets")
    }
}

impl HopfAlgebra for MQSym {
    type Key = Composition;

    fn degree(&self, key: &Composition) -> usize {
        key.size()
    }

    fn unit(&self) -> Composition {
        Composition::empty()
    }

    /// Every multishuffle word contributes `F~` of its descent composition.
    fn product(&self, a: &Composition, b: &Composition) -> LinComb<Composition> {
        self.product_words(a, b).into_iter().map(|w| (w.descent_composition(), 1.into())).collect()
    }

    /// Cut-edge splits interleaved with cut-cell splits.
    fn coproduct(&self, key: &Composition) -> LinComb<(Composition, Composition)> {
        cut_edge_splits(key)
            .into_iter()
            .chain(if key.is_empty() { Vec::new() } else { cut_cell_splits(key) })
            .map(|p| (p, 1.into()))
            .collect()
    }

    fn degree_cap(&self) -> Option<usize> {
        Some(self.cap)
    }

    /// `sum_{|beta| <= cap} (-1)^{|beta|} c_{beta, alpha^t} F~_beta`.
    fn closed_antipode(&self, key: &Composition) -> Option<LinComb<Composition>> {
        if key.is_empty() {
            return Some(LinComb::basis(Composition::empty()));
        }
        let t = transpose(key);
        Some(
            compositions_up_to(self.cap)
                .into_iter()
                .filter_map(|b| {
                    let c = collapse_count(&b, &t);
                    (c > 0).then(|| {
                        let coeff = sign(b.size()) * c;
                        (b, coeff)
                    })
                })
                .collect(),
        )
    }
}
