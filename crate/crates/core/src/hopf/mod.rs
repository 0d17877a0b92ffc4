//! Graded connected Hopf algebras and the machinery shared by every instance.

pub mod involution;
pub mod takeuchi;

use crate::linear::{BasisKey, LinComb, Scalar};

pub use involution::{
    graph_flat_signed_set, orientation_class_signed_set, poly_osp_involution, poly_osp_signed_set,
    verify_involution, InvolutionReport, SignedSet,
};
pub use takeuchi::{antipode_axiom_check, iterated_coproduct, takeuchi_antipode, takeuchi_literal, Takeuchi};

/// A graded connected bialgebra presented on a basis.
///
/// `degree_cap` switches on filtered truncation: every result is taken
/// modulo basis elements of degree above the cap.
pub trait HopfAlgebra: Send + Sync {
    type Key: BasisKey;

    fn degree(&self, key: &Self::Key) -> usize;

    /// The unique degree-zero basis key.
    fn unit(&self) -> Self::Key;

    fn product(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;

    fn coproduct(&self, key: &Self::Key) -> LinComb<(Self::Key, Self::Key)>;

    fn counit(&self, key: &Self::Key) -> Scalar {
        Scalar::from(u8::from(self.degree(key) == 0))
    }

    fn degree_cap(&self) -> Option<usize> {
        None
    }

    /// A cancellation-free antipode formula, where one is known.
    fn closed_antipode(&self, _key: &Self::Key) -> Option<LinComb<Self::Key>> {
        None
    }
}

/// Drops every term above the degree cap, if the algebra has one.
pub fn truncate<H: HopfAlgebra>(h: &H, mut v: LinComb<H::Key>) -> LinComb<H::Key> {
    if let Some(cap) = h.degree_cap() {
        v.retain(|k| h.degree(k) <= cap);
    }
    v
}

/// Bilinear extension of the product, truncated at the cap.
pub fn multiply<H: HopfAlgebra>(h: &H, a: &LinComb<H::Key>, b: &LinComb<H::Key>) -> LinComb<H::Key> {
    let mut out = LinComb::zero();
    for (x, cx) in a {
        for (y, cy) in b {
            out.add_scaled(&h.product(x, y), &(cx * cy));
        }
    }
    truncate(h, out)
}

/// Linear extension of the coproduct.
pub fn coproduct_lc<H: HopfAlgebra>(h: &H, v: &LinComb<H::Key>) -> LinComb<(H::Key, H::Key)> {
    v.linear_extend(|k| h.coproduct(k))
}
