use crate::algebras::ConjectureCase;
use crate::combinat::{concat_lc, delta, eta, shift, shuffle, shuffle_lc, standardize, Permutation, Word};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, Takeuchi};
use crate::linear::{sign, LinComb, Scalar};

/// The Malvenuto–Reutenauer algebra on permutations.
#[derive(Clone, Copy, Debug, Default)]
pub struct SSym;

impl HopfAlgebra for SSym {
    type Key = Permutation;

    fn degree(&self, key: &Permutation) -> usize {
        key.len()
    }

    fn unit(&self) -> Permutation {
        Permutation::identity(0)
    }

    fn product(&self, a: &Permutation, b: &Permutation) -> LinComb<Permutation> {
        shuffle(&a.as_word(), &shift(b, a.len() as u32)).map_keys(standardize)
    }

    fn coproduct(&self, key: &Permutation) -> LinComb<(Permutation, Permutation)> {
        let v = key.values();
        (0..=v.len())
            .map(|i| {
                let (l, r) = v.split_at(i);
                ((standardize(&word_of(l)), standardize(&word_of(r))), Scalar::from(1))
            })
            .collect()
    }

    fn closed_antipode(&self, key: &Permutation) -> Option<LinComb<Permutation>> {
        let n = key.len() as u32;
        if *key == Permutation::identity(n as usize) {
            return Some(antipode_identity(n));
        }
        if *key == Permutation::reverse_identity(n as usize) {
            return Some(antipode_reverse(n));
        }
        for k in 1..n {
            if key.as_word() == delta(k, 1).concat(&eta(k + 1, n)) {
                return antipode_hookperm(k, n).ok();
            }
            if key.as_word() == eta(1, k).concat(&delta(n, k + 1)) {
                return antipode_hookperm_corollary(k, n).ok();
            }
        }
        None
    }
}

fn word_of(letters: &[u32]) -> Word {
    Word::new(letters.to_vec()).expect("letters are positive")
}

fn letter(x: u32) -> LinComb<Word> {
    LinComb::basis(word_of(&[x]))
}

fn word(letters: &[u32]) -> LinComb<Word> {
    LinComb::basis(word_of(letters))
}

fn lw(w: Word) -> LinComb<Word> {
    LinComb::basis(w)
}

fn sh(a: &LinComb<Word>, b: &LinComb<Word>) -> LinComb<Word> {
    shuffle_lc(a, b)
}

fn cat(a: &LinComb<Word>, b: &LinComb<Word>) -> LinComb<Word> {
    concat_lc(a, b)
}

/// Reads a word combination as permutations; fails on a non-permutation word.
pub fn as_permutations(v: &LinComb<Word>) -> Result<LinComb<Permutation>> {
    v.iter()
        .map(|(w, c)| {
            Permutation::try_from(w.clone())
                .map(|p| (p, c.clone()))
                .map_err(|_| Error::Precondition(format!("{w} is not a permutation")))
        })
        .collect()
}

/// `S(12...n) = (-1)^n n...1`.
pub fn antipode_identity(n: u32) -> LinComb<Permutation> {
    LinComb::term(Permutation::reverse_identity(n as usize), sign(n as usize))
}

/// `S(n...1) = (-1)^n 12...n`.
pub fn antipode_reverse(n: u32) -> LinComb<Permutation> {
    LinComb::term(Permutation::identity(n as usize), sign(n as usize))
}

/// The signed shuffle sets of `S(delta_{k,1} eta_{k+1,n})`, one per final letter `j`.
pub fn hookperm_summands(k: u32, n: u32) -> Result<Vec<(Scalar, LinComb<Word>)>> {
    if !(1 <= k && k < n) {
        return Err(Error::Precondition(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    Ok((1..=k)
        .map(|j| {
            let inner = cat(&sh(&lw(delta(k, j + 1)), &lw(delta(n, k + 2))), &letter(k + 1));
            let body = cat(&sh(&lw(eta(1, j - 1)), &inner), &letter(j));
            (sign((n + k + j) as usize), body)
        })
        .collect())
}

/// Signed shuffle sets of `S(eta_{1,k} delta_{n,k+1})`, one per leading letter `j`.
pub fn hookperm_corollary_summands(k: u32, n: u32) -> Result<Vec<(Scalar, LinComb<Word>)>> {
    if !(1 <= k && k < n) {
        return Err(Error::Precondition(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    Ok((k + 1..=n)
        .map(|j| {
            let head = cat(&letter(k), &sh(&lw(delta(k - 1, 1)), &lw(delta(j - 1, k + 1))));
            let body = cat(&letter(j), &sh(&head, &lw(eta(j + 1, n))));
            (sign((n + k + j + 1) as usize), body)
        })
        .collect())
}

fn sum_summands(parts: Vec<(Scalar, LinComb<Word>)>) -> Result<LinComb<Permutation>> {
    let mut out = LinComb::zero();
    for (s, v) in parts {
        out.add_scaled(&v, &s);
    }
    as_permutations(&out)
}

pub fn antipode_hookperm(k: u32, n: u32) -> Result<LinComb<Permutation>> {
    sum_summands(hookperm_summands(k, n)?)
}

pub fn antipode_hookperm_corollary(k: u32, n: u32) -> Result<LinComb<Permutation>> {
    sum_summands(hookperm_corollary_summands(k, n)?)
}

/// `sum_{k=0}^n (-1)^k (eta_k shuffle delta_{k+1})`, which vanishes for `n >= 1`.
pub fn binomial_lemma_sum(n: u32) -> LinComb<Word> {
    let mut out = LinComb::zero();
    for k in 0..=n {
        out.add_scaled(&sh(&lw(eta(1, k)), &lw(delta(n, k + 1))), &sign(k as usize));
    }
    out
}

/// Checks `[pi] S(sigma) = [sigma^-1] S(pi^-1)` over all of `S_n`.
pub fn duality_check(tk: &Takeuchi<'_, SSym>, n: usize) -> bool {
    let perms = Permutation::all(n);
    let anti = tk.antipodes(&perms);
    let at = |p: &Permutation| &anti[perms.binary_search(p).expect("sorted")];
    perms.iter().all(|sigma| {
        let s = at(sigma);
        perms.iter().all(|pi| s.coefficient(pi) == at(&pi.inverse()).coefficient(&sigma.inverse()))
    })
}

/// Checks `[pi] S(sigma) = [pi^o] S(sigma^o)` over all of `S_n`.
pub fn rotation_check(tk: &Takeuchi<'_, SSym>, n: usize) -> bool {
    let perms = Permutation::all(n);
    let anti = tk.antipodes(&perms);
    let at = |p: &Permutation| &anti[perms.binary_search(p).expect("sorted")];
    perms.iter().all(|sigma| {
        let s = at(sigma);
        let so = at(&sigma.rotate180());
        perms.iter().all(|pi| s.coefficient(pi) == so.coefficient(&pi.rotate180()))
    })
}

/// `sigma_A = delta_A eta_{[n] - A}`.
pub fn sigma_a(a: &[u32], n: u32) -> Result<Permutation> {
    let mut head: Vec<u32> = a.to_vec();
    head.sort_unstable_by(|x, y| y.cmp(x));
    head.dedup();
    if head.iter().any(|&x| x == 0 || x > n) {
        return Err(Error::Precondition(format!("{a:?} is not a subset of [{n}]")));
    }
    let tail = (1..=n).filter(|x| !head.contains(x));
    Permutation::new(head.iter().copied().chain(tail).collect())
}

/// Which conjectured family a check belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SsymConjecture {
    Singleton,
    PairWithTwo,
}

impl std::str::FromStr for SsymConjecture {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "singleton" | "ssym-singleton" => Ok(Self::Singleton),
            "pair-with-2" | "pair2" | "ssym-pair2" => Ok(Self::PairWithTwo),
            _ => Err(Error::Precondition(format!("unknown conjecture {s:?}"))),
        }
    }
}

fn max_letter(v: &LinComb<Word>) -> u32 {
    v.keys().flat_map(|w| w.letters().iter().copied()).max().unwrap_or(0)
}

/// Adds the signed summands, skipping any that mention a letter above `n`.
fn conjectured(n: u32, summands: Vec<(Scalar, LinComb<Word>)>) -> LinComb<Word> {
    let mut out = LinComb::zero();
    for (s, v) in summands {
        if max_letter(&v) <= n {
            out.add_scaled(&v, &s);
        }
    }
    out
}

/// The conjectured expression for `S(sigma_{a})`, `1 < a <= n`.
pub fn singleton_prediction(a: u32, n: u32) -> LinComb<Word> {
    let mut terms = vec![
        (sign(n as usize - 1), cat(&cat(&sh(&letter(2), &lw(delta(n, 4))), &letter(3)), &letter(1))),
        (
            sign((n + a) as usize),
            cat(&sh(&cat(&letter(a - 1), &lw(eta(1, a - 2))), &lw(delta(n, a + 1))), &letter(a)),
        ),
    ];
    for j in 2..a {
        let s = sign((n + j) as usize);
        terms.push((s.clone(), cat(&sh(&cat(&letter(j - 1), &lw(eta(1, j - 2))), &lw(delta(n, j + 1))), &letter(j))));
        terms.push((s, cat(&sh(&cat(&letter(j + 1), &lw(eta(1, j - 1))), &lw(delta(n, j + 2))), &letter(j))));
    }
    conjectured(n, terms)
}

/// The conjectured expression for `S(sigma_{a,2})`, `2 < a <= n`.
pub fn pair_prediction(a: u32, n: u32) -> LinComb<Word> {
    let sn = sign(n as usize);
    let mut terms = vec![
        (sn.clone(), cat(&cat(&sh(&word(&[3, 2]), &lw(delta(n, 5))), &letter(4)), &letter(1))),
        (sn, cat(&sh(&word(&[1, 2]), &lw(delta(n, 4))), &letter(3))),
        (
            sign(n as usize - 1),
            cat(&sh(&letter(1), &cat(&sh(&letter(3), &lw(delta(n, 5))), &letter(4))), &letter(2)),
        ),
    ];
    for j in 3..a {
        let s = sign((n + j) as usize);
        let tail = lw(eta(3, j - 1));
        let first = cat(&sh(&cat(&word(&[j + 1, 2, 1]), &tail), &lw(delta(n, j + 2))), &letter(j));
        let second = cat(&sh(&cat(&word(&[j, 2, 1]), &tail), &lw(delta(n, j + 2))), &letter(j + 1));
        terms.push((s.clone(), first));
        terms.push((-s, second));
    }
    conjectured(n, terms)
}

/// Compares each conjectured expression against Takeuchi for every admissible `a <= n`.
pub fn conjecture_check(tk: &Takeuchi<'_, SSym>, which: SsymConjecture, n: u32) -> Vec<ConjectureCase<Permutation>> {
    let lo = match which {
        SsymConjecture::Singleton => 2,
        SsymConjecture::PairWithTwo => 3,
    };
    (lo..=n)
        .map(|a| {
            let (set, predicted) = match which {
                SsymConjecture::Singleton => (vec![a], singleton_prediction(a, n)),
                SsymConjecture::PairWithTwo => (vec![a, 2], pair_prediction(a, n)),
            };
            let sigma = sigma_a(&set, n).expect("admissible set");
            let computed = tk.antipode(&sigma);
            let instance = format!("n={n} A={set:?} sigma={sigma}");
            ConjectureCase::compare(instance, as_permutations(&predicted), computed)
        })
        .collect()
}
