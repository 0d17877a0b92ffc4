use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::combinat::Composition;
use crate::error::{parse_err, Error, Result};
use crate::linear::{LinComb, Scalar};

/// A finite word over the positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u32>);

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Precondition("word letters must be positive".into()));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    /// `l(w)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn has_distinct_letters(&self) -> bool {
        let set: BTreeSet<_> = self.0.iter().collect();
        set.len() == self.0.len()
    }

    pub fn alphabet(&self) -> BTreeSet<u32> {
        self.0.iter().copied().collect()
    }

    /// `w^o`: reverse the word and complement each letter inside its alphabet's
    /// bounding interval `[min, max]`.
    pub fn rotate180(&self) -> Word {
        let (Some(&lo), Some(&hi)) = (self.0.iter().min(), self.0.iter().max()) else {
            return Word::empty();
        };
        Word(self.0.iter().rev().map(|&c| lo + hi - c).collect())
    }

    /// Positions `i` (1-based) with `w_i > w_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The composition of `l(w)` whose subset is the descent set of `w`.
    pub fn descent_composition(&self) -> Composition {
        Composition::from_descent_set(self.len(), &self.descent_set())
    }

    /// Order-isomorphic permutation; ties are broken left to right.
    pub fn standardize(&self) -> Permutation {
        let mut idx: Vec<usize> = (0..self.0.len()).collect();
        idx.sort_by_key(|&i| (self.0[i], i));
        let mut out = vec![0u32; self.0.len()];
        for (rank, &i) in idx.iter().enumerate() {
            out[i] = rank as u32 + 1;
        }
        Permutation(out)
    }

    /// Layer lengths when the word is a colayered permutation of an interval.
    pub fn colayered_layers(&self) -> Option<Composition> {
        if self.is_empty() {
            return Some(Composition::empty());
        }
        if !self.has_distinct_letters() {
            return None;
        }
        let lo = *self.0.iter().min().unwrap();
        let hi = *self.0.iter().max().unwrap();
        if (hi - lo) as usize + 1 != self.len() {
            return None;
        }
        let mut layers = Vec::new();
        let mut start = 0;
        for i in 1..=self.0.len() {
            if i == self.0.len() || self.0[i] != self.0[i - 1] + 1 {
                layers.push(&self.0[start..i]);
                start = i;
            }
        }
        // Each run must sit directly below the previous one in value.
        for pair in layers.windows(2) {
            if pair[1].last().unwrap() + 1 != pair[0][0] {
                return None;
            }
        }
        Some(Composition::from_nonzero(layers.iter().map(|l| l.len() as u32)))
    }

    /// `sigma + m`.
    pub fn shift(&self, m: u32) -> Word {
        Word(self.0.iter().map(|&c| c + m).collect())
    }
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len() as u32;
        let mut seen = vec![false; values.len()];
        for &v in &values {
            if v == 0 || v > n || seen[v as usize - 1] {
                return Err(Error::Precondition(format!("{values:?} is not a permutation of [{n}]")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// `n ... 2 1`.
    pub fn reverse_identity(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v as u32 + 1);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_word(&self) -> Word {
        Word(self.0.clone())
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0u32; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            out[v as usize - 1] = i as u32 + 1;
        }
        Permutation(out)
    }

    /// `sigma^o = (n+1-b_n) ... (n+1-b_1)`.
    pub fn rotate180(&self) -> Permutation {
        let n = self.0.len() as u32;
        Permutation(self.0.iter().rev().map(|&b| n + 1 - b).collect())
    }

    pub fn descent_composition(&self) -> Composition {
        self.as_word().descent_composition()
    }

    pub fn inversions(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }
}

impl From<Permutation> for Word {
    fn from(p: Permutation) -> Word {
        Word(p.0)
    }
}

impl TryFrom<Word> for Permutation {
    type Error = Error;

    fn try_from(w: Word) -> Result<Permutation> {
        Permutation::new(w.0)
    }
}

pub fn standardize(w: &Word) -> Permutation {
    w.standardize()
}

pub fn descent_composition(w: &Word) -> Composition {
    w.descent_composition()
}

pub fn shift(sigma: &Permutation, m: u32) -> Word {
    sigma.as_word().shift(m)
}

pub fn rotate180(sigma: &Permutation) -> Permutation {
    sigma.rotate180()
}

/// `eta_{k,l} = k (k+1) ... l`, empty when `k > l`.
pub fn eta(k: u32, l: u32) -> Word {
    Word((k.max(1)..=l).collect())
}

/// `delta_{l,k} = l (l-1) ... k`, empty when `k > l`.
pub fn delta(l: u32, k: u32) -> Word {
    Word((k.max(1)..=l).rev().collect())
}

pub fn colayered_layers(v: &Word) -> Option<Composition> {
    v.colayered_layers()
}

/// All interleavings of `v` and `w`, counted with multiplicity.
pub fn shuffle(v: &Word, w: &Word) -> LinComb<Word> {
    let mut out = LinComb::zero();
    let (a, b) = (v.letters(), w.letters());
    let mut buf = Vec::with_capacity(a.len() + b.len());
    fn rec(a: &[u32], b: &[u32], buf: &mut Vec<u32>, out: &mut LinComb<Word>) {
        if a.is_empty() || b.is_empty() {
            let mut word = buf.clone();
            word.extend_from_slice(a);
            word.extend_from_slice(b);
            out.add_term(Word(word), Scalar::from(1));
            return;
        }
        buf.push(a[0]);
        rec(&a[1..], b, buf, out);
        buf.pop();
        buf.push(b[0]);
        rec(a, &b[1..], buf, out);
        buf.pop();
    }
    rec(a, b, &mut buf, &mut out);
    out
}

/// Linear extension of [`shuffle`] to both arguments.
pub fn shuffle_lc(v: &LinComb<Word>, w: &LinComb<Word>) -> LinComb<Word> {
    let mut out = LinComb::zero();
    for (x, cx) in v {
        for (y, cy) in w {
            out.add_scaled(&shuffle(x, y), &(cx * cy));
        }
    }
    out
}

/// Concatenation extended bilinearly.
pub fn concat_lc(v: &LinComb<Word>, w: &LinComb<Word>) -> LinComb<Word> {
    let mut out = LinComb::zero();
    for (x, cx) in v {
        for (y, cy) in w {
            out.add_term(x.concat(y), cx * cy);
        }
    }
    out
}

/// All multishuffles of `v` and `w` of length at most `max_len`.
///
/// A multishuffle is a shuffle of a multiword on `v` with a multiword on `w`
/// that has no two equal adjacent letters. Output is sorted and duplicate free.
pub fn multishuffle(v: &Word, w: &Word, max_len: usize) -> Result<Vec<Word>> {
    if !v.alphabet().is_disjoint(&w.alphabet()) {
        return Err(Error::SharedAlphabet);
    }
    if max_len < v.len() + w.len() {
        return Err(Error::Precondition(format!(
            "max_len {max_len} is below l(v)+l(w) = {}",
            v.len() + w.len()
        )));
    }
    let mut out = BTreeSet::new();
    let mut buf = Vec::with_capacity(max_len);
    multishuffle_rec(v.letters(), w.letters(), 0, 0, max_len, &mut buf, &mut out);
    Ok(out.into_iter().collect())
}

fn multishuffle_rec(
    v: &[u32],
    w: &[u32],
    i: usize,
    j: usize,
    max_len: usize,
    buf: &mut Vec<u32>,
    out: &mut BTreeSet<Word>,
) {
    if i == v.len() && j == w.len() {
        out.insert(Word(buf.clone()));
    }
    let remaining = (v.len() - i) + (w.len() - j);
    if buf.len() + remaining > max_len {
        return;
    }
    let last = buf.last().copied();
    let mut candidates: Vec<(u32, usize, usize)> = Vec::with_capacity(4);
    if i > 0 {
        candidates.push((v[i - 1], i, j));
    }
    if i < v.len() {
        candidates.push((v[i], i + 1, j));
    }
    if j > 0 {
        candidates.push((w[j - 1], i, j));
    }
    if j < w.len() {
        candidates.push((w[j], i, j + 1));
    }
    for (letter, ni, nj) in candidates {
        if Some(letter) == last {
            continue;
        }
        let rem_after = (v.len() - ni) + (w.len() - nj);
        if buf.len() + 1 + rem_after > max_len {
            continue;
        }
        buf.push(letter);
        multishuffle_rec(v, w, ni, nj, max_len, buf, out);
        buf.pop();
    }
}

fn fmt_letters(letters: &[u32], f: &mut fmt::Formatter<'_>, empty: &str) -> fmt::Result {
    if letters.is_empty() {
        return f.write_str(empty);
    }
    if letters.iter().all(|&c| c <= 9) {
        for c in letters {
            write!(f, "{c}")?;
        }
        Ok(())
    } else if letters.len() == 1 {
        // A lone multi-digit letter would read back as several letters.
        write!(f, "({})", letters[0])
    } else {
        let parts: Vec<String> = letters.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses `3142`, `3,1,4,2`, `(10)`, or an empty marker (`-`, `ε`, empty string).
pub(crate) fn parse_letters(s: &str) -> Result<Vec<u32>> {
    let t = s.trim();
    if t.is_empty() || t == "-" || t == "ε" {
        return Ok(Vec::new());
    }
    let inner = t.strip_prefix('(').and_then(|r| r.strip_suffix(')'));
    let t = inner.unwrap_or(t);
    let mut out = Vec::new();
    if inner.is_some() || t.contains(',') {
        let mut pos = 0;
        for piece in t.split(',') {
            let v: u32 = piece
                .trim()
                .parse()
                .map_err(|_| parse_err(s, pos, format!("expected a positive integer, found {piece:?}")))?;
            if v == 0 {
                return Err(parse_err(s, pos, "letters must be positive"));
            }
            out.push(v);
            pos += piece.len() + 1;
        }
    } else {
        for (pos, ch) in t.char_indices() {
            match ch.to_digit(10) {
                Some(d) if d > 0 => out.push(d),
                _ => return Err(parse_err(s, pos, format!("unexpected character {ch:?}"))),
            }
        }
    }
    Ok(out)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.0, f, "ε")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.0, f, "ε")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.0, f, "ε")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.0, f, "ε")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Word(parse_letters(s)?))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        Permutation::new(letters).map_err(|e| parse_err(s, 0, e.to_string()))
    }
}

#[macro_export]
#[doc(hidden)]
macro_rules! word {
    ($s:expr) => {
        $s.parse::<$crate::combinat::Word>().unwrap()
    };
}

#[macro_export]
#[doc(hidden)]
macro_rules! perm {
    ($s:expr) => {
        $s.parse::<$crate::combinat::Permutation>().unwrap()
    };
}
