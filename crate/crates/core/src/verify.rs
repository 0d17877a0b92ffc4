//! Closed form against Takeuchi, plus the antipode axiom, over families of keys.

use std::fmt;
use std::str::FromStr;

use crate::algebras::{GraphAlgebra, MQSym, Monomial, NSymH, NSymImmaculate, PSym, Poly, QSymF, QSymM, SSym, ShuffleAlgebra};
use crate::codec::{parse, render, KeyCodec};
use crate::combinat::{compositions_up_to, Permutation, Word};
use crate::error::{Error, Result};
use crate::graphs::graph_classes;
use crate::hopf::{antipode_axiom_check, Takeuchi};
use crate::linear::{LinComb, Scalar};
use crate::par::Execution;
use crate::tableaux::standard_tableaux_of_size;

/// Environment variable that can only lower the size bounds.
pub const MAX_SIZE_ENV: &str = "ANTIPODE_MAX_SIZE";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraId {
    Poly,
    Shuffle,
    QSymM,
    QSymF,
    MQSym,
    Graph,
    NSymH,
    NSymImm,
    SSym,
    PSym,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 10] = [
        AlgebraId::Poly,
        AlgebraId::Shuffle,
        AlgebraId::QSymM,
        AlgebraId::QSymF,
        AlgebraId::MQSym,
        AlgebraId::Graph,
        AlgebraId::NSymH,
        AlgebraId::NSymImm,
        AlgebraId::SSym,
        AlgebraId::PSym,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::Poly => "poly",
            AlgebraId::Shuffle => "shuffle",
            AlgebraId::QSymM => "qsym-m",
            AlgebraId::QSymF => "qsym-f",
            AlgebraId::MQSym => "mqsym",
            AlgebraId::Graph => "graph",
            AlgebraId::NSymH => "nsym-h",
            AlgebraId::NSymImm => "nsym-imm",
            AlgebraId::SSym => "ssym",
            AlgebraId::PSym => "psym",
        }
    }

    /// Largest key degree accepted before the environment override.
    pub fn hard_bound(self) -> usize {
        match self {
            AlgebraId::Poly => 40,
            AlgebraId::Shuffle => 8,
            AlgebraId::QSymM | AlgebraId::QSymF => 8,
            AlgebraId::MQSym => 8,
            AlgebraId::Graph => 6,
            AlgebraId::NSymH => 7,
            AlgebraId::NSymImm => 6,
            AlgebraId::SSym => 7,
            AlgebraId::PSym => 6,
        }
    }

    /// Bound after applying [`MAX_SIZE_ENV`], which can only lower it.
    pub fn bound(self) -> usize {
        let env = std::env::var(MAX_SIZE_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok());
        env.map_or(self.hard_bound(), |e| e.min(self.hard_bound()))
    }

    pub fn check_size(self, size: usize) -> Result<()> {
        let bound = self.bound();
        if size > bound {
            return Err(Error::SizeBound { what: self.name(), size, bound });
        }
        Ok(())
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraId::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown algebra {s:?}")))
    }
}

/// A signed term of a rendered combination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub key: String,
    pub coeff: Scalar,
}

/// Both antipode routes for one key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub key: String,
    pub takeuchi: String,
    pub terms: Vec<Term>,
    pub closed: Option<String>,
    /// `None` when no closed form covers the key.
    pub agree: Option<bool>,
}

fn terms<H: KeyCodec>(h: &H, v: &LinComb<H::Key>) -> Vec<Term> {
    v.iter().map(|(k, c)| Term { key: h.render_key(k), coeff: c.clone() }).collect()
}

fn evaluate_with<H: KeyCodec>(
    h: &H,
    id: AlgebraId,
    input: &str,
    exec: Execution,
    check: impl Fn(&H::Key) -> Result<()>,
) -> Result<Evaluation> {
    let single = h.parse_input(input);
    let v = match &single {
        Ok(key) => LinComb::basis(key.clone()),
        Err(e) => parse(h, input).map_err(|_| e.clone())?,
    };
    for key in v.keys() {
        id.check_size(h.degree(key))?;
        check(key)?;
    }
    let tk = Takeuchi::with_execution(h, exec);
    let s = v.linear_extend(|k| tk.antipode(k));
    let closed = v.iter().try_fold(LinComb::zero(), |mut acc, (k, c)| {
        acc.add_scaled(&h.closed_antipode(k)?, c);
        Some(acc)
    });
    Ok(Evaluation {
        key: match single {
            Ok(key) => h.render_key(&key),
            Err(_) => render(h, &v),
        },
        takeuchi: render(h, &s),
        terms: terms(h, &s),
        agree: closed.as_ref().map(|c| *c == s),
        closed: closed.map(|c| render(h, &c)),
    })
}

fn mqsym_for(max_degree: Option<usize>) -> Result<MQSym> {
    let cap = max_degree.ok_or_else(|| Error::Precondition("mqsym requires a maximum degree".into()))?;
    AlgebraId::MQSym.check_size(cap)?;
    Ok(MQSym::new(cap))
}

/// Computes the antipode of `input`, a key or a linear combination, both ways.
pub fn evaluate(id: AlgebraId, input: &str, max_degree: Option<usize>, exec: Execution) -> Result<Evaluation> {
    match id {
        AlgebraId::Poly => evaluate_with(&Poly, id, input, exec, |_| Ok(())),
        AlgebraId::Shuffle => evaluate_with(&ShuffleAlgebra, id, input, exec, |_| Ok(())),
        AlgebraId::QSymM => evaluate_with(&QSymM, id, input, exec, |_| Ok(())),
        AlgebraId::QSymF => evaluate_with(&QSymF, id, input, exec, |_| Ok(())),
        AlgebraId::MQSym => {
            let h = mqsym_for(max_degree)?;
            evaluate_with(&h, id, input, exec, |k| h.check(k))
        }
        AlgebraId::Graph => evaluate_with(&GraphAlgebra, id, input, exec, |_| Ok(())),
        AlgebraId::NSymH => evaluate_with(&NSymH, id, input, exec, |_| Ok(())),
        AlgebraId::NSymImm => evaluate_with(&NSymImmaculate, id, input, exec, |_| Ok(())),
        AlgebraId::SSym => evaluate_with(&SSym, id, input, exec, |_| Ok(())),
        AlgebraId::PSym => evaluate_with(&PSym, id, input, exec, |_| Ok(())),
    }
}

/// Outcome for one key of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyCheck {
    pub key: String,
    /// `None` when no closed form covers the key.
    pub agree: Option<bool>,
    pub axiom: bool,
}

impl KeyCheck {
    pub fn ok(&self) -> bool {
        self.axiom && self.agree != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub algebra: AlgebraId,
    pub checks: Vec<KeyCheck>,
}

impl Sweep {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(KeyCheck::ok)
    }

    /// Keys whose closed form was compared.
    pub fn compared(&self) -> usize {
        self.checks.iter().filter(|c| c.agree.is_some()).count()
    }
}

/// Runs both checks on every key with a shared memo.
pub fn sweep_keys<H: KeyCodec>(h: &H, keys: &[H::Key], exec: Execution) -> Vec<KeyCheck> {
    let tk = Takeuchi::with_execution(h, exec);
    let anti = tk.antipodes(keys);
    exec.map(&keys.iter().zip(anti).collect::<Vec<_>>(), |(k, s)| KeyCheck {
        key: h.render_key(k),
        agree: h.closed_antipode(k).map(|c| c == *s),
        axiom: antipode_axiom_check(h, k, |x| tk.antipode(x)),
    })
}

/// Words of length at most `len` over the letters `1..=alphabet`.
pub fn words_over(alphabet: u32, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..len {
        frontier = frontier
            .iter()
            .flat_map(|w| (1..=alphabet).map(move |a| w.concat(&Word::new(vec![a]).expect("positive"))))
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

/// Permutations of size at most `n`.
pub fn permutations_up_to(n: usize) -> Vec<Permutation> {
    (0..=n).flat_map(Permutation::all).collect()
}

/// The default sweep for `id` over keys of size at most `max_size`.
pub fn verify(id: AlgebraId, max_size: usize, max_degree: Option<usize>, exec: Execution) -> Result<Sweep> {
    id.check_size(max_size)?;
    let checks = match id {
        AlgebraId::Poly => sweep_keys(&Poly, &(0..=max_size as u32).map(Monomial).collect::<Vec<_>>(), exec),
        AlgebraId::Shuffle => {
            let mut keys = words_over(2, max_size);
            keys.extend(permutations_up_to(max_size.min(5)).into_iter().map(Word::from));
            keys.sort();
            keys.dedup();
            sweep_keys(&ShuffleAlgebra, &keys, exec)
        }
        AlgebraId::QSymM => sweep_keys(&QSymM, &compositions_up_to(max_size), exec),
        AlgebraId::QSymF => sweep_keys(&QSymF, &compositions_up_to(max_size), exec),
        AlgebraId::MQSym => {
            let h = mqsym_for(Some(max_degree.unwrap_or(max_size + 2)))?;
            if h.cap() < max_size {
                return Err(Error::CapTooSmall { cap: h.cap(), degree: max_size });
            }
            sweep_keys(&h, &compositions_up_to(max_size), exec)
        }
        AlgebraId::Graph => {
            let mut keys = Vec::new();
            for n in 0..=max_size {
                keys.extend(graph_classes(n)?);
            }
            sweep_keys(&GraphAlgebra, &keys, exec)
        }
        AlgebraId::NSymH => sweep_keys(&NSymH, &compositions_up_to(max_size), exec),
        AlgebraId::NSymImm => sweep_keys(&NSymImmaculate, &compositions_up_to(max_size), exec),
        AlgebraId::SSym => sweep_keys(&SSym, &permutations_up_to(max_size), exec),
        AlgebraId::PSym => {
            let keys: Vec<_> = (0..=max_size).flat_map(standard_tableaux_of_size).collect();
            sweep_keys(&PSym, &keys, exec)
        }
    };
    Ok(Sweep { algebra: id, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for a in AlgebraId::ALL {
            assert_eq!(a.name().parse::<AlgebraId>().unwrap(), a);
        }
        assert!("qsym".parse::<AlgebraId>().is_err());
    }

    #[test]
    fn word_counts() {
        assert_eq!(words_over(2, 3).len(), 1 + 2 + 4 + 8);
        assert_eq!(permutations_up_to(3).len(), 1 + 1 + 2 + 6);
    }

    #[test]
    fn evaluations() {
        let e = evaluate(AlgebraId::Poly, "3", None, Execution::Sequential).unwrap();
        assert_eq!(e.takeuchi, "-x^3");
        assert_eq!(e.agree, Some(true));
        let e = evaluate(AlgebraId::SSym, "123", None, Execution::Sequential).unwrap();
        assert_eq!(e.takeuchi, "-321");
        assert!(matches!(evaluate(AlgebraId::MQSym, "2,1", None, Execution::Sequential), Err(Error::Precondition(_))));
        assert!(matches!(evaluate(AlgebraId::SSym, "12345678", None, Execution::Sequential), Err(Error::SizeBound { .. })));
    }

    #[test]
    fn combinations_are_evaluated_linearly() {
        let e = evaluate(AlgebraId::Poly, "2*x - x^2", None, Execution::Sequential).unwrap();
        assert_eq!(e.key, "2*x - x^2");
        assert_eq!(e.takeuchi, "-2*x - x^2");
        assert_eq!(e.agree, Some(true));
        // QSym is commutative, so applying the antipode twice returns the input.
        let once = evaluate(AlgebraId::QSymF, "F[1,2]", None, Execution::Sequential).unwrap();
        let twice = evaluate(AlgebraId::QSymF, &once.takeuchi, None, Execution::Sequential).unwrap();
        assert_eq!(twice.takeuchi, "F[1,2]");
        assert!(matches!(
            evaluate(AlgebraId::MQSym, "Ft[1] + Ft[3,2]", Some(4), Execution::Sequential),
            Err(Error::CapTooSmall { cap: 4, degree: 5 })
        ));
    }

    #[test]
    fn small_sweeps_pass() {
        for a in AlgebraId::ALL {
            let s = verify(a, 3, None, Execution::Parallel).unwrap();
            assert!(s.passed(), "{a}: {:?}", s.checks.iter().filter(|c| !c.ok()).collect::<Vec<_>>());
        }
    }
}
