use crate::combinat::Composition;
use crate::linear::{LinComb, Scalar};

/// One component of a quasishuffle vector: a single variable from one side,
/// or the sum of one variable from each side. Indices are 0-based positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QPart {
    Left(usize),
    Right(usize),
    Both(usize, usize),
}

/// All quasishuffles of `(a_1..a_p)` and `(b_1..b_q)` as formal variable vectors.
pub fn quasishuffle(p: usize, q: usize) -> Vec<Vec<QPart>> {
    fn rec(i: usize, j: usize, p: usize, q: usize, cur: &mut Vec<QPart>, out: &mut Vec<Vec<QPart>>) {
        if i == p && j == q {
            out.push(cur.clone());
            return;
        }
        if i < p {
            cur.push(QPart::Left(i));
            rec(i + 1, j, p, q, cur, out);
            cur.pop();
        }
        if i < p && j < q {
            cur.push(QPart::Both(i, j));
            rec(i + 1, j + 1, p, q, cur, out);
            cur.pop();
        }
        if j < q {
            cur.push(QPart::Right(j));
            rec(i, j + 1, p, q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, 0, p, q, &mut Vec::with_capacity(p + q), &mut out);
    out
}

/// Quasishuffle product of compositions: each variable evaluates to its part.
pub fn quasishuffle_compositions(alpha: &Composition, beta: &Composition) -> LinComb<Composition> {
    let (a, b) = (alpha.parts(), beta.parts());
    quasishuffle(a.len(), b.len())
        .into_iter()
        .map(|v| {
            let parts = v.into_iter().map(|c| match c {
                QPart::Left(i) => a[i],
                QPart::Right(j) => b[j],
                QPart::Both(i, j) => a[i] + b[j],
            });
            (Composition::from_nonzero(parts), Scalar::from(1))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use std::collections::BTreeSet;

    fn render(v: &[QPart]) -> String {
        let names = |side: char, i: usize| ((side as u8) + i as u8) as char;
        v.iter()
            .map(|c| match *c {
                QPart::Left(i) => names('a', i).to_string(),
                QPart::Right(j) => names('c', j).to_string(),
                QPart::Both(i, j) => format!("{}+{}", names('a', i), names('c', j)),
            })
            .collect::<Vec<_>>()
            .join(",")
    }

    #[test]
    fn worked_example() {
        let got: BTreeSet<String> = quasishuffle(2, 1).iter().map(|v| render(v)).collect();
        let want: BTreeSet<String> =
            ["a,b,c", "a,b+c", "a,c,b", "a+c,b", "c,a,b"].iter().map(|s| s.to_string()).collect();
        assert_eq!(got, want);
        assert_eq!(quasishuffle(3, 0), vec![vec![QPart::Left(0), QPart::Left(1), QPart::Left(2)]]);
        assert_eq!(quasishuffle(1, 1).len(), 3);
    }

    /// Delannoy numbers count lattice paths with unit east, north and diagonal steps.
    fn delannoy(p: usize, q: usize) -> usize {
        let mut d = vec![vec![1usize; q + 1]; p + 1];
        for i in 1..=p {
            for j in 1..=q {
                d[i][j] = d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
            }
        }
        d[p][q]
    }

    /// Brute force: every vector over the component alphabet, filtered by the
    /// restriction condition.
    fn brute(p: usize, q: usize) -> usize {
        let mut alphabet: Vec<QPart> = (0..p).map(QPart::Left).chain((0..q).map(QPart::Right)).collect();
        for i in 0..p {
            for j in 0..q {
                alphabet.push(QPart::Both(i, j));
            }
        }
        let mut count = 0;
        for len in p.max(q)..=p + q {
            let mut idx = vec![0usize; len];
            loop {
                let v: Vec<QPart> = idx.iter().map(|&k| alphabet[k]).collect();
                let left: Vec<usize> = v
                    .iter()
                    .filter_map(|c| match *c {
                        QPart::Left(i) | QPart::Both(i, _) => Some(i),
                        _ => None,
                    })
                    .collect();
                let right: Vec<usize> = v
                    .iter()
                    .filter_map(|c| match *c {
                        QPart::Right(j) | QPart::Both(_, j) => Some(j),
                        _ => None,
                    })
                    .collect();
                if left == (0..p).collect::<Vec<_>>() && right == (0..q).collect::<Vec<_>>() {
                    count += 1;
                }
                let mut k = 0;
                while k < len {
                    idx[k] += 1;
                    if idx[k] < alphabet.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == len {
                    break;
                }
            }
        }
        count
    }

    #[test]
    fn counts_match_brute_force() {
        for p in 0..=6 {
            for q in 0..=(6 - p) {
                let n = quasishuffle(p, q).len();
                assert_eq!(n, delannoy(p, q));
                if p + q <= 6 {
                    assert_eq!(n, brute(p, q), "p={p} q={q}");
                }
            }
        }
    }

    #[test]
    fn composition_product() {
        let got = quasishuffle_compositions(&comp![1], &comp![2]);
        let want: LinComb<Composition> =
            [comp![1, 2], comp![2, 1], comp![3]].into_iter().map(|c| (c, Scalar::from(1))).collect();
        assert_eq!(got, want);
        let sq = quasishuffle_compositions(&comp![1], &comp![1]);
        assert_eq!(sq.coefficient(&comp![1, 1]), Scalar::from(2));
    }
}
