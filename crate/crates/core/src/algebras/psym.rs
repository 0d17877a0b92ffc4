use std::collections::BTreeMap;

use crate::algebras::{ConjectureCase, SSym};
use crate::combinat::{partitions_of, Composition, Permutation, Word};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, Takeuchi};
use crate::linear::{sign, LinComb, Scalar};
use crate::tableaux::{
    column_superstandard, jdt_rectify, knuth_class, rsk_insert, standard_tableaux_of_size, SkewTableau, Tableau,
};

/// The Poirier–Reutenauer algebra: sums over Knuth classes inside SSym.
#[derive(Clone, Copy, Debug, Default)]
pub struct PSym;

/// `P = sum of the permutations whose insertion tableau is P`.
pub fn embed(p: &Tableau) -> LinComb<Permutation> {
    knuth_class(p).into_iter().map(|pi| (pi, Scalar::from(1))).collect()
}

pub fn embed_lc(v: &LinComb<Tableau>) -> LinComb<Permutation> {
    v.linear_extend(embed)
}

fn is_row_word(w: &Word) -> bool {
    rsk_insert(w).row_word() == *w
}

impl HopfAlgebra for PSym {
    type Key = Tableau;

    fn degree(&self, key: &Tableau) -> usize {
        key.size()
    }

    fn unit(&self) -> Tableau {
        Tableau::empty()
    }

    /// Every standard `R` with `R|_{<=|P|} = P` and `st(jdt(R/P)) = Q`.
    fn product(&self, a: &Tableau, b: &Tableau) -> LinComb<Tableau> {
        let m = a.size() as u32;
        standard_tableaux_of_size(a.size() + b.size())
            .into_iter()
            .filter(|r| r.restrict_to(m) == *a && jdt_rectify(SkewTableau::complement_of(r, m)).standardize() == *b)
            .map(|r| (r, Scalar::from(1)))
            .collect()
    }

    /// Splits each word in the class of `R` into a row-word prefix and suffix.
    fn coproduct(&self, key: &Tableau) -> LinComb<(Tableau, Tableau)> {
        let mut out = LinComb::zero();
        for pi in knuth_class(key) {
            let v = pi.values();
            for i in 0..=v.len() {
                let (l, r) = v.split_at(i);
                let (l, r) = (Word::new(l.to_vec()).expect("positive"), Word::new(r.to_vec()).expect("positive"));
                if is_row_word(&l) && is_row_word(&r) {
                    out.add_term((rsk_insert(&l).standardize(), rsk_insert(&r).standardize()), Scalar::from(1));
                }
            }
        }
        out
    }

    fn closed_antipode(&self, key: &Tableau) -> Option<LinComb<Tableau>> {
        let n = key.size();
        let shape = key.shape();
        let s = sign(n);
        if n == 0 {
            return Some(LinComb::basis(Tableau::empty()));
        }
        // A single row or column has a one-word class.
        if shape.len() == 1 || shape.parts().iter().all(|&p| p == 1) {
            return Some(LinComb::term(key.conjugate(), s));
        }
        if shape.len() == 2 && shape.parts()[1] == 1 && *key == column_superstandard(&shape).ok()? {
            let t = column_superstandard(&conjugate(&shape)).ok()?;
            return Some(LinComb::term(t, s));
        }
        None
    }
}

fn conjugate(lambda: &Composition) -> Composition {
    crate::algebras::nsym::conjugate_partition(lambda)
}

/// Regroups an SSym element by insertion tableau, failing unless it is constant on each class.
pub fn regroup(v: &LinComb<Permutation>) -> Result<LinComb<Tableau>> {
    let mut classes: BTreeMap<Tableau, Scalar> = BTreeMap::new();
    for (pi, c) in v {
        let p = rsk_insert(&pi.as_word());
        match classes.get(&p) {
            Some(prev) if prev != c => {
                return Err(Error::NotKnuthConstant(format!("class of {p} carries {prev} and {c}")));
            }
            Some(_) => {}
            None => {
                classes.insert(p, c.clone());
            }
        }
    }
    for (p, c) in &classes {
        if let Some(pi) = knuth_class(p).into_iter().find(|pi| v.coefficient(pi) != *c) {
            return Err(Error::NotKnuthConstant(format!("{pi} has coefficient {} but class {p} has {c}", v.coefficient(&pi))));
        }
    }
    Ok(classes.into_iter().collect())
}

/// `S(P)` computed in SSym on the embedding and regrouped.
pub fn antipode_via_ssym(tk: &Takeuchi<'_, SSym>, p: &Tableau) -> Result<LinComb<Tableau>> {
    if !p.is_standard() {
        return Err(Error::Precondition(format!("{p} is not standard")));
    }
    regroup(&tk.antipode_lc(&embed(p)))
}

/// Hooks `(n-k, 1^k)` of size `n`.
pub fn hooks(n: usize) -> Vec<Composition> {
    partitions_of(n).into_iter().filter(|l| l.parts().iter().skip(1).all(|&p| p == 1)).collect()
}

/// Compares `S(P_lambda)` with `(-1)^n P_{lambda^t}` for every hook of size `n`.
pub fn hook_conjecture_check(tk: &Takeuchi<'_, SSym>, n: usize) -> Vec<ConjectureCase<Tableau>> {
    hooks(n)
        .into_iter()
        .map(|lambda| {
            let p = column_superstandard(&lambda).expect("hook is a partition");
            let predicted = column_superstandard(&conjugate(&lambda)).map(|t| LinComb::term(t, sign(n)));
            let instance = format!("lambda={lambda} P={p}");
            match antipode_via_ssym(tk, &p) {
                Ok(computed) => ConjectureCase::compare(instance, predicted, computed),
                Err(e) => ConjectureCase {
                    instance,
                    predicted: predicted.ok(),
                    computed: LinComb::zero(),
                    holds: false,
                    note: Some(e.to_string()),
                },
            }
        })
        .collect()
}
