//! Concrete Hopf algebras and their cancellation-free antipode formulas.

pub mod graph;
pub mod mqsym;
pub mod nsym;
pub mod poly;
pub mod psym;
pub mod qsym;
pub mod shuffle;
pub mod ssym;

pub use graph::GraphAlgebra;
pub use mqsym::MQSym;
pub use nsym::{NSymH, NSymImmaculate};
pub use poly::{Monomial, Poly};
pub use psym::PSym;
pub use qsym::{f_to_m, m_to_f, QSymF, QSymM};
pub use shuffle::ShuffleAlgebra;
pub use ssym::SSym;

use crate::linear::{BasisKey, LinComb};

/// Evidence for one instance of a conjectured closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureCase<K: Ord> {
    pub instance: String,
    pub predicted: Option<LinComb<K>>,
    pub computed: LinComb<K>,
    pub holds: bool,
    /// Why the prediction could not be formed, if it could not.
    pub note: Option<String>,
}

impl<K: BasisKey> ConjectureCase<K> {
    pub fn compare(instance: String, predicted: crate::Result<LinComb<K>>, computed: LinComb<K>) -> Self {
        match predicted {
            Ok(p) => ConjectureCase { instance, holds: p == computed, predicted: Some(p), computed, note: None },
            Err(e) => ConjectureCase { instance, predicted: None, computed, holds: false, note: Some(e.to_string()) },
        }
    }
}
