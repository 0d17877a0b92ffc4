use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};

/// A finite sequence of positive integers.
///
/// Ordering is lexicographic on the parts, which coincides with the order of
/// the text form whenever every part is a single digit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Precondition(format!("composition part {pos} is zero")));
        }
        Ok(Composition(parts))
    }

    /// Builds a composition from a sequence of nonnegative integers, dropping zeros.
    pub fn from_nonzero(parts: impl IntoIterator<Item = u32>) -> Self {
        Composition(parts.into_iter().filter(|&p| p != 0).collect())
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `(n)`, or the empty composition when `n == 0`.
    pub fn row(n: u32) -> Self {
        Self::from_nonzero([n])
    }

    /// `(1^n)`.
    pub fn column(n: u32) -> Self {
        Composition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// `|alpha|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// `l(alpha)`, the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversal(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// The subset `{a1, a1+a2, ..., a1+...+a_{l-1}}` of `[n-1]`.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0usize;
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for &p in self.0.iter().take(self.len().saturating_sub(1)) {
            acc += p as usize;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`Composition::descent_set`] for compositions of `n`.
    pub fn from_descent_set(n: usize, set: &[usize]) -> Self {
        if n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0usize;
        for &s in set {
            debug_assert!(s > prev && s < n);
            parts.push((s - prev) as u32);
            prev = s;
        }
        parts.push((n - prev) as u32);
        Composition(parts)
    }

    /// All `beta >= self` in refinement order: sums of adjacent parts.
    pub fn coarsenings(&self) -> Vec<Composition> {
        if self.is_empty() {
            return vec![Composition::empty()];
        }
        let gaps = self.len() - 1;
        (0u32..(1 << gaps))
            .map(|mask| {
                let mut parts = vec![self.0[0]];
                for i in 0..gaps {
                    if mask & (1 << i) != 0 {
                        *parts.last_mut().unwrap() += self.0[i + 1];
                    } else {
                        parts.push(self.0[i + 1]);
                    }
                }
                Composition(parts)
            })
            .collect()
    }

    /// All `beta <= self`: each part split into a composition of itself.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut acc = vec![Vec::<u32>::new()];
        for &p in &self.0 {
            let pieces = compositions_of(p as usize);
            acc = acc
                .iter()
                .flat_map(|prefix| {
                    pieces.iter().map(move |c| {
                        let mut v = prefix.clone();
                        v.extend_from_slice(&c.0);
                        v
                    })
                })
                .collect();
        }
        acc.into_iter().map(Composition).collect()
    }

    /// The completion: each part `a` followed by `a - 1` zeros.
    pub fn completion(&self) -> Vec<u32> {
        self.0
            .iter()
            .flat_map(|&a| std::iter::once(a).chain(std::iter::repeat_n(0, a as usize - 1)))
            .collect()
    }
}

/// All compositions of `n`, largest first part first; `[()]` for `n = 0`.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn rec(n: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in (1..=n).rev() {
            prefix.push(first);
            rec(n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(1 << n.saturating_sub(1));
    rec(n as u32, &mut Vec::new(), &mut out);
    out
}

/// All compositions with `0 <= |alpha| <= n`, by increasing size.
pub fn compositions_up_to(n: usize) -> Vec<Composition> {
    (0..=n).flat_map(compositions_of).collect()
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Composition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

pub fn reversal(alpha: &Composition) -> Composition {
    alpha.reversal()
}

pub fn coarsenings(alpha: &Composition) -> Vec<Composition> {
    alpha.coarsenings()
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Grammar: `3,1,2`; the empty composition is `-` (or the empty string).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "-" || t == "()" {
            return Ok(Composition::empty());
        }
        let inner = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        let offset = if inner.len() == t.len() { 0 } else { 1 };
        let mut parts = Vec::new();
        let mut pos = offset;
        for piece in inner.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| parse_err(s, pos, format!("expected a positive integer, found {piece:?}")))?;
            if p == 0 {
                return Err(parse_err(s, pos, "composition parts must be positive"));
            }
            parts.push(p);
            pos += piece.len() + 1;
        }
        Ok(Composition(parts))
    }
}

#[macro_export]
#[doc(hidden)]
macro_rules! comp {
    ($($p:expr),* $(,)?) => {
        $crate::combinat::Composition::new(vec![$($p),*]).unwrap()
    };
}
