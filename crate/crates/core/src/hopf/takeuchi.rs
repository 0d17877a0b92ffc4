use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::{multiply, truncate, HopfAlgebra};
use crate::linear::{sign, LinComb, Scalar, TensorKey};
use crate::par::Execution;

/// `Delta^{k-1}(key)`, expanding the first tensor factor at each step.
pub fn iterated_coproduct<H: HopfAlgebra>(h: &H, key: &H::Key, k: usize) -> LinComb<TensorKey<H::Key>> {
    assert!(k >= 1, "iterated coproduct needs at least one factor");
    let mut acc = LinComb::basis(TensorKey(vec![key.clone()]));
    for _ in 1..k {
        let mut next = LinComb::zero();
        for (t, c) in &acc {
            for ((a, b), d) in &h.coproduct(&t.0[0]) {
                let mut parts = Vec::with_capacity(t.0.len() + 1);
                parts.push(a.clone());
                parts.push(b.clone());
                parts.extend_from_slice(&t.0[1..]);
                next.add_term(TensorKey(parts), c * d);
            }
        }
        acc = next;
    }
    acc
}

/// The largest number of positive-degree factors that can survive.
fn max_factors<H: HopfAlgebra>(h: &H, key: &H::Key) -> usize {
    h.degree_cap().unwrap_or_else(|| h.degree(key))
}

/// Takeuchi's alternating sum evaluated term by term: iterate the coproduct,
/// discard tensors with a degree-zero factor, multiply out and sign.
pub fn takeuchi_literal<H: HopfAlgebra>(h: &H, key: &H::Key) -> LinComb<H::Key> {
    let mut out = LinComb::term(h.unit(), h.counit(key));
    for k in 1..=max_factors(h, key) {
        let mut layer = LinComb::zero();
        for (t, c) in &iterated_coproduct(h, key, k) {
            if t.0.iter().any(|f| h.degree(f) == 0) {
                continue;
            }
            let mut prod = LinComb::basis(t.0[0].clone());
            for f in &t.0[1..] {
                prod = multiply(h, &prod, &LinComb::basis(f.clone()));
            }
            layer.add_scaled(&prod, c);
        }
        out.add_scaled(&layer, &sign(k));
    }
    truncate(h, out)
}

type Memo<K, V> = RwLock<HashMap<K, Arc<V>>>;
type Pair<K> = (K, K);

/// Memoized Takeuchi evaluator.
///
/// Writes `P_k(x) = m^{k-1} pi^{k} Delta^{k-1}(x)` and uses coassociativity to
/// peel off the first factor: `P_1(x) = x` and `P_k(x)` is the sum over
/// `Delta(x) = sum a (x) b` with `a, b` of positive degree of `a * P_{k-1}(b)`.
/// Then `S(x) = sum_k (-1)^k P_k(x)`.
pub struct Takeuchi<'h, H: HopfAlgebra> {
    h: &'h H,
    exec: Execution,
    layers: Memo<(H::Key, usize), LinComb<H::Key>>,
    products: Memo<Pair<H::Key>, LinComb<H::Key>>,
}

impl<'h, H: HopfAlgebra> Takeuchi<'h, H> {
    pub fn new(h: &'h H) -> Self {
        Self::with_execution(h, Execution::default())
    }

    pub fn with_execution(h: &'h H, exec: Execution) -> Self {
        Takeuchi { h, exec, layers: RwLock::default(), products: RwLock::default() }
    }

    pub fn algebra(&self) -> &'h H {
        self.h
    }

    pub fn antipode(&self, key: &H::Key) -> LinComb<H::Key> {
        let h = self.h;
        if h.degree(key) == 0 {
            return LinComb::term(h.unit(), h.counit(key));
        }
        let mut out = LinComb::zero();
        for k in 1..=max_factors(h, key) {
            out.add_scaled(&self.layer(key, k), &sign(k));
        }
        out
    }

    /// Antipode of a linear combination.
    pub fn antipode_lc(&self, v: &LinComb<H::Key>) -> LinComb<H::Key> {
        v.linear_extend(|k| self.antipode(k))
    }

    /// Antipodes of many keys, spread over the execution backend.
    pub fn antipodes(&self, keys: &[H::Key]) -> Vec<LinComb<H::Key>> {
        self.exec.map(keys, |k| self.antipode(k))
    }

    fn product(&self, a: &H::Key, b: &H::Key) -> Arc<LinComb<H::Key>> {
        let pair = (a.clone(), b.clone());
        if let Some(v) = self.products.read().expect("product memo poisoned").get(&pair) {
            return v.clone();
        }
        let v = Arc::new(truncate(self.h, self.h.product(a, b)));
        self.products.write().expect("product memo poisoned").insert(pair, v.clone());
        v
    }

    /// `P_k(key)`.
    pub fn layer(&self, key: &H::Key, k: usize) -> Arc<LinComb<H::Key>> {
        let h = self.h;
        if k == 0 || h.degree(key) == 0 || k > max_factors(h, key).max(1) {
            return Arc::new(LinComb::zero());
        }
        if k == 1 {
            return Arc::new(truncate(h, LinComb::basis(key.clone())));
        }
        let memo_key = (key.clone(), k);
        if let Some(v) = self.layers.read().expect("layer memo poisoned").get(&memo_key) {
            return v.clone();
        }
        let terms: Vec<(Pair<H::Key>, Scalar)> = h
            .coproduct(key)
            .into_iter()
            .filter(|((a, b), _)| h.degree(a) > 0 && h.degree(b) > 0)
            .collect();
        let parts = self.exec.map(&terms, |((a, b), c)| {
            let mut acc = LinComb::zero();
            for (y, cy) in self.layer(b, k - 1).iter() {
                acc.add_scaled(&self.product(a, y), &(c * cy));
            }
            acc
        });
        let mut out = LinComb::zero();
        for p in &parts {
            out += p;
        }
        let out = Arc::new(out);
        self.layers.write().expect("layer memo poisoned").insert(memo_key, out.clone());
        out
    }
}

/// Takeuchi's antipode of a single basis key with a fresh memo.
pub fn takeuchi_antipode<H: HopfAlgebra>(h: &H, key: &H::Key) -> LinComb<H::Key> {
    Takeuchi::new(h).antipode(key)
}

/// Whether `sum S(key_(1)) key_(2)` equals `epsilon(key) 1`, modulo the cap.
pub fn antipode_axiom_check<H, F>(h: &H, key: &H::Key, s: F) -> bool
where
    H: HopfAlgebra,
    F: Fn(&H::Key) -> LinComb<H::Key>,
{
    let mut lhs = LinComb::zero();
    for ((a, b), c) in &h.coproduct(key) {
        lhs.add_scaled(&multiply(h, &s(a), &LinComb::basis(b.clone())), c);
    }
    lhs == truncate(h, LinComb::term(h.unit(), h.counit(key)))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Divided-power-free polynomial algebra used only to exercise the evaluator.
    struct Poly;

    impl HopfAlgebra for Poly {
        type Key = u32;
        fn degree(&self, k: &u32) -> usize {
            *k as usize
        }
        fn unit(&self) -> u32 {
            0
        }
        fn product(&self, a: &u32, b: &u32) -> LinComb<u32> {
            LinComb::basis(a + b)
        }
        fn coproduct(&self, k: &u32) -> LinComb<(u32, u32)> {
            let mut binom = Scalar::from(1);
            let mut out = LinComb::zero();
            for i in 0..=*k {
                out.add_term((i, k - i), binom.clone());
                binom = binom * (k - i) / (i + 1);
            }
            out
        }
    }

    #[test]
    fn iterated_coproduct_small() {
        assert_eq!(iterated_coproduct(&Poly, &1, 1), LinComb::basis(TensorKey(vec![1])));
        let d = iterated_coproduct(&Poly, &1, 2);
        assert_eq!(d.len(), 2);
        assert_eq!(d.coefficient(&TensorKey(vec![0, 1])), Scalar::from(1));
        // Delta^{k-1}(x^n) has k^n terms counted with multiplicity.
        let d = iterated_coproduct(&Poly, &3, 3);
        let total: Scalar = d.iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, Scalar::from(27));
    }

    #[test]
    fn memoized_matches_literal() {
        for n in 0..=6u32 {
            let want = LinComb::term(n, sign(n as usize));
            assert_eq!(takeuchi_antipode(&Poly, &n), want);
            assert_eq!(takeuchi_literal(&Poly, &n), want);
            assert!(antipode_axiom_check(&Poly, &n, |k| LinComb::term(*k, sign(*k as usize))));
        }
        assert!(!antipode_axiom_check(&Poly, &2, |k| LinComb::basis(*k)));
    }

    #[test]
    fn sequential_matches_parallel() {
        let keys: Vec<u32> = (0..8).collect();
        let a = Takeuchi::with_execution(&Poly, Execution::Parallel).antipodes(&keys);
        let b = Takeuchi::with_execution(&Poly, Execution::Sequential).antipodes(&keys);
        assert_eq!(a, b);
    }
}
