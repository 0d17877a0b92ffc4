use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::combinat::{partitions_of, Composition, Permutation, Word};
use crate::error::{parse_err, Error, Result};

/// A filling of a left-justified shape, rows listed top to bottom.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a tableau; empty rows are rejected.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::Precondition("tableau rows must be nonempty".into()));
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Composition {
        Composition::from_nonzero(self.rows.iter().map(|r| r.len() as u32))
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<u32> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Concatenation of the rows from the bottom row up.
    pub fn row_word(&self) -> Word {
        Word::new(self.rows.iter().rev().flatten().copied().collect()).expect("positive entries")
    }

    /// Partition shape, strictly increasing rows and columns, entries exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        if !self.shape().is_partition() {
            return false;
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|p| p[1].iter().enumerate().all(|(j, &v)| p[0][j] < v));
        let mut entries: Vec<u32> = self.rows.iter().flatten().copied().collect();
        entries.sort_unstable();
        rows_ok && cols_ok && entries.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }

    /// Strictly increasing rows and weakly increasing first column.
    pub fn is_dual_immaculate(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && self.rows.windows(2).all(|p| p[0][0] <= p[1][0])
    }

    /// Multiplicity of each value `1..=max`.
    pub fn content(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut out = vec![0u32; max];
        for &v in self.rows.iter().flatten() {
            out[v as usize - 1] += 1;
        }
        out
    }

    /// Entries `<= m`, which form a subtableau when the tableau is standard.
    pub fn restrict_to(&self, m: u32) -> Tableau {
        Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().copied().filter(|&v| v <= m).collect::<Vec<_>>())
                .filter(|r| !r.is_empty())
                .collect(),
        }
    }

    /// Relabels entries order-preservingly onto `1..=n`.
    pub fn standardize(&self) -> Tableau {
        let mut values: Vec<u32> = self.rows.iter().flatten().copied().collect();
        values.sort_unstable();
        let rank = |v: u32| values.binary_search(&v).expect("present") as u32 + 1;
        Tableau {
            rows: self.rows.iter().map(|r| r.iter().map(|&v| rank(v)).collect()).collect(),
        }
    }

    /// Transposed (conjugate) tableau.
    pub fn conjugate(&self) -> Tableau {
        let cols = self.rows.first().map_or(0, Vec::len);
        Tableau {
            rows: (0..cols)
                .map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect())
                .collect(),
        }
    }
}

/// `P_lambda`: columns filled consecutively, first column `1..=k`.
pub fn column_superstandard(lambda: &Composition) -> Result<Tableau> {
    if !lambda.is_partition() {
        return Err(Error::Precondition(format!("{lambda:?} is not a partition")));
    }
    let parts = lambda.parts();
    let mut rows: Vec<Vec<u32>> = parts.iter().map(|&p| Vec::with_capacity(p as usize)).collect();
    let mut next = 1;
    let width = parts.first().copied().unwrap_or(0) as usize;
    for j in 0..width {
        for (i, &p) in parts.iter().enumerate() {
            if (p as usize) > j {
                rows[i].push(next);
                next += 1;
            }
        }
    }
    Ok(Tableau { rows })
}

/// All standard Young tableaux of partition shape `lambda`.
pub fn standard_tableaux(lambda: &Composition) -> Vec<Tableau> {
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let n: usize = shape.iter().sum();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    fn rec(v: u32, n: usize, shape: &[usize], rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
        if v as usize > n {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            let fits = len < shape[i] && (i == 0 || rows[i - 1].len() > len);
            if fits {
                rows[i].push(v);
                rec(v + 1, n, shape, rows, out);
                rows[i].pop();
            }
        }
    }
    rec(1, n, &shape, &mut rows, &mut out);
    out
}

/// All standard Young tableaux with `n` cells.
pub fn standard_tableaux_of_size(n: usize) -> Vec<Tableau> {
    partitions_of(n).iter().flat_map(standard_tableaux).collect()
}

/// Row insertion of a distinct-letter word; returns the insertion tableau.
pub fn rsk_insert(w: &Word) -> Tableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &x in w.letters() {
        let mut x = x;
        let mut i = 0;
        loop {
            if i == rows.len() {
                rows.push(vec![x]);
                break;
            }
            match rows[i].iter().position(|&y| y > x) {
                Some(j) => {
                    x = std::mem::replace(&mut rows[i][j], x);
                    i += 1;
                }
                None => {
                    rows[i].push(x);
                    break;
                }
            }
        }
    }
    Tableau { rows }
}

/// Elementary Knuth moves applicable to a permutation.
///
/// On a consecutive triple `abc` one may swap `b, c` when `a` lies between
/// them in value, and swap `a, b` when `c` lies between them.
fn knuth_neighbours(p: &[u32]) -> Vec<Vec<u32>> {
    let between = |x: u32, lo: u32, hi: u32| lo.min(hi) < x && x < lo.max(hi);
    let mut out = Vec::new();
    for i in 0..p.len().saturating_sub(2) {
        let (a, b, c) = (p[i], p[i + 1], p[i + 2]);
        if between(a, b, c) {
            let mut q = p.to_vec();
            q.swap(i + 1, i + 2);
            out.push(q);
        }
        if between(c, a, b) {
            let mut q = p.to_vec();
            q.swap(i, i + 1);
            out.push(q);
        }
    }
    out
}

/// The Knuth class of a standard tableau: every permutation inserting to it.
pub fn knuth_class(p: &Tableau) -> Vec<Permutation> {
    let start = p.row_word().into_letters();
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(w) = queue.pop_front() {
        for q in knuth_neighbours(&w) {
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.into_iter()
        .map(|v| Permutation::new(v).expect("Knuth moves preserve permutations"))
        .collect()
}

/// A standard filling of a skew shape `outer / inner`; `None` marks inner cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTableau {
    grid: Vec<Vec<Option<u32>>>,
}

impl SkewTableau {
    /// Row `i` has `inner[i]` removed cells followed by `rows[i]`.
    pub fn new(inner: Vec<usize>, rows: Vec<Vec<u32>>) -> Self {
        let len = inner.len().max(rows.len());
        let grid = (0..len)
            .map(|i| {
                let skip = inner.get(i).copied().unwrap_or(0);
                let entries = rows.get(i).map(Vec::as_slice).unwrap_or(&[]);
                std::iter::repeat_n(None, skip).chain(entries.iter().map(|&v| Some(v))).collect()
            })
            .collect();
        SkewTableau { grid }
    }

    /// `R / P` where `P` is the subtableau of `R` holding entries `<= m`.
    pub fn complement_of(r: &Tableau, m: u32) -> Self {
        SkewTableau {
            grid: r
                .rows()
                .iter()
                .map(|row| row.iter().map(|&v| (v > m).then_some(v)).collect())
                .collect(),
        }
    }

    fn value(&self, i: usize, j: usize) -> Option<u32> {
        self.grid.get(i).and_then(|r| r.get(j)).copied().flatten()
    }

    /// An inner corner: a removed cell whose right and lower neighbours are not removed.
    fn inner_corner(&self) -> Option<(usize, usize)> {
        (0..self.grid.len()).rev().find_map(|i| {
            let j = self.grid[i].iter().take_while(|c| c.is_none()).count();
            if j == 0 {
                return None;
            }
            let below_removed = self.grid.get(i + 1).and_then(|r| r.get(j - 1)).is_some_and(Option::is_none);
            (!below_removed).then_some((i, j - 1))
        })
    }

    /// Jeu de taquin rectification.
    pub fn rectify(mut self) -> Tableau {
        while let Some((mut i, mut j)) = self.inner_corner() {
            loop {
                let right = self.value(i, j + 1);
                let below = self.value(i + 1, j);
                match (right, below) {
                    (None, None) => {
                        self.grid[i].truncate(j);
                        break;
                    }
                    (Some(r), b) if b.is_none_or(|b| r < b) => {
                        self.grid[i][j] = Some(r);
                        self.grid[i][j + 1] = None;
                        j += 1;
                    }
                    (_, Some(b)) => {
                        self.grid[i][j] = Some(b);
                        self.grid[i + 1][j] = None;
                        i += 1;
                    }
                    (Some(_), None) => unreachable!(),
                }
            }
        }
        Tableau {
            rows: self
                .grid
                .into_iter()
                .map(|r| r.into_iter().flatten().collect::<Vec<_>>())
                .filter(|r| !r.is_empty())
                .collect(),
        }
    }
}

pub fn jdt_rectify(skew: SkewTableau) -> Tableau {
    skew.rectify()
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("-");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join("/"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Grammar: rows joined by `/`, entries by `,`, e.g. `1,4/2,5/3`; `-` is empty.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "-" || t == "∅" {
            return Ok(Tableau::empty());
        }
        let mut rows = Vec::new();
        let mut pos = 0;
        for row in t.split('/') {
            let mut entries = Vec::new();
            for e in row.split(',') {
                let v: u32 = e
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(s, pos, format!("expected a positive integer, found {e:?}")))?;
                if v == 0 {
                    return Err(parse_err(s, pos, "entries must be positive"));
                }
                entries.push(v);
                pos += e.len() + 1;
            }
            rows.push(entries);
        }
        Ok(Tableau { rows })
    }
}

#[macro_export]
#[doc(hidden)]
macro_rules! tab {
    ($s:expr) => {
        $s.parse::<$crate::tableaux::Tableau>().unwrap()
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::eta;
    use crate::{comp, perm, word};
    use std::collections::BTreeMap;

    #[test]
    fn row_word_examples() {
        assert_eq!(tab!("2,7/1,3,9/4/5,6,8").row_word(), word!("568413927"));
        assert_eq!(tab!("1,2,3,4").row_word(), word!("1234"));
        let p = column_superstandard(&comp![2, 2, 1]).unwrap();
        assert_eq!(p, tab!("1,4/2,5/3"));
        assert_eq!(p.row_word(), word!("32514"));
    }

    #[test]
    fn column_superstandard_shapes() {
        assert_eq!(column_superstandard(&comp![4]).unwrap(), tab!("1,2,3,4"));
        assert_eq!(column_superstandard(&comp![1, 1, 1]).unwrap(), tab!("1/2/3"));
        assert!(column_superstandard(&comp![1, 2]).is_err());
    }

    #[test]
    fn rsk_examples() {
        let p = tab!("1,4/2,5/3");
        for w in ["32154", "32514", "32541", "35214", "35241"] {
            assert_eq!(rsk_insert(&word!(w)), p);
        }
        assert_eq!(rsk_insert(&word!("12345")), tab!("1,2,3,4,5"));
        assert_eq!(rsk_insert(&word!("4321")), tab!("1/2/3/4"));
    }

    #[test]
    fn knuth_class_examples() {
        let class: Vec<String> = knuth_class(&tab!("1,4/2,5/3")).iter().map(|p| p.to_string()).collect();
        assert_eq!(class, vec!["32154", "32514", "32541", "35214", "35241"]);
        assert_eq!(knuth_class(&tab!("1,2,3,4")), vec![perm!("1234")]);
        for n in 2..=7u32 {
            let p = column_superstandard(&Composition::new(vec![n - 1, 1]).unwrap()).unwrap();
            let got: BTreeSet<Permutation> = knuth_class(&p).into_iter().collect();
            let want: BTreeSet<Permutation> = (1..n)
                .map(|i| {
                    let w = eta(2, i + 1).concat(&word!("1")).concat(&eta(i + 2, n));
                    Permutation::try_from(w).unwrap()
                })
                .collect();
            assert_eq!(got, want, "n = {n}");
        }
    }

    #[test]
    fn knuth_classes_match_insertion_filter() {
        for n in 1..=6 {
            let mut by_p: BTreeMap<Tableau, BTreeSet<Permutation>> = BTreeMap::new();
            for s in Permutation::all(n) {
                by_p.entry(rsk_insert(&s.as_word())).or_default().insert(s);
            }
            let syt = standard_tableaux_of_size(n);
            assert_eq!(syt.len(), by_p.len());
            let mut total = 0;
            for p in syt {
                let class: BTreeSet<Permutation> = knuth_class(&p).into_iter().collect();
                total += class.len();
                assert_eq!(Some(&class), by_p.get(&p), "{p}");
            }
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn standard_tableaux_counts() {
        // Number of involutions of [n].
        let counts: Vec<usize> = (0..=7).map(|n| standard_tableaux_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76, 232]);
        assert!(standard_tableaux_of_size(5).iter().all(Tableau::is_standard));
    }

    #[test]
    fn jdt_examples() {
        let p = tab!("1,3/2");
        assert_eq!(SkewTableau::new(vec![], p.rows().to_vec()).rectify(), p);
        assert_eq!(SkewTableau::new(vec![2, 1], vec![vec![], vec![], vec![5]]).rectify(), tab!("5"));
        // R / P for P = 1,2/3 inside each four products in the worked example.
        for r in ["1,2,4,5/3", "1,2,5/3,4", "1,2,5/3/4", "1,2/3,5/4"] {
            let skew = SkewTableau::complement_of(&tab!(r), 3);
            assert_eq!(skew.rectify().standardize(), tab!("1,2"), "{r}");
        }
    }

    /// Rectification preserves Knuth equivalence: the rectified row word inserts to the same tableau.
    #[test]
    fn jdt_matches_insertion_of_reading_word() {
        for n in 2..=6 {
            for r in standard_tableaux_of_size(n) {
                for m in 0..=n as u32 {
                    let skew = SkewTableau::complement_of(&r, m);
                    let word: Vec<u32> = r
                        .rows()
                        .iter()
                        .rev()
                        .flat_map(|row| row.iter().copied().filter(|&v| v > m))
                        .collect();
                    let rect = skew.rectify();
                    assert_eq!(rect, rsk_insert(&Word::new(word).unwrap()), "{r} / {m}");
                }
            }
        }
    }

    #[test]
    fn dual_immaculate_predicate() {
        let t = tab!("1,3,4/1/2,6/2,4");
        assert!(t.is_dual_immaculate());
        assert_eq!(t.content(), vec![2, 2, 1, 2, 0, 1]);
        assert_eq!(t.shape(), comp![3, 1, 2, 2]);
    }

    #[test]
    fn parse_display_round_trip() {
        let t = tab!("1,4/2,5/3");
        assert_eq!(t.to_string(), "1,4/2,5/3");
        assert!("1,x/2".parse::<Tableau>().is_err());
    }
}
