//! Rim-hook (ribbon) diagrams of compositions.
//!
//! The cells of the ribbon of `alpha` are numbered `0..|alpha|` from southwest
//! to northeast. Between consecutive cells there is a step: right within a row,
//! up between rows. Every operation here is phrased in terms of that step word.

use std::fmt;

use crate::combinat::{Composition, Word};

/// Step between consecutive cells of a ribbon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Right,
    Up,
}

/// The step word of `alpha`, of length `|alpha| - 1` (empty for `|alpha| <= 1`).
pub fn step_word(alpha: &Composition) -> Vec<Step> {
    let mut out = Vec::with_capacity(alpha.size().saturating_sub(1));
    for (i, &p) in alpha.parts().iter().enumerate() {
        if i > 0 {
            out.push(Step::Up);
        }
        out.extend(std::iter::repeat_n(Step::Right, p as usize - 1));
    }
    out
}

/// Inverse of [`step_word`] for a ribbon with `steps.len() + 1` cells.
pub fn from_step_word(steps: &[Step]) -> Composition {
    let mut parts = vec![1u32];
    for s in steps {
        match s {
            Step::Right => *parts.last_mut().unwrap() += 1,
            Step::Up => parts.push(1),
        }
    }
    Composition::from_nonzero(parts)
}

/// The ribbon formed by cells `lo..hi` of `alpha` (empty when `lo == hi`).
fn sub_ribbon(steps: &[Step], lo: usize, hi: usize) -> Composition {
    if lo >= hi {
        Composition::empty()
    } else {
        from_step_word(&steps[lo..hi - 1])
    }
}

/// All `(beta, gamma)` with `alpha = beta | gamma`, cutting before each cell and at the end.
pub fn cut_edge_splits(alpha: &Composition) -> Vec<(Composition, Composition)> {
    let n = alpha.size();
    let steps = step_word(alpha);
    (0..=n).map(|i| (sub_ribbon(&steps, 0, i), sub_ribbon(&steps, i, n))).collect()
}

/// All `(beta, gamma)` with `alpha = beta . gamma`, sharing one cell, southwest first.
pub fn cut_cell_splits(alpha: &Composition) -> Vec<(Composition, Composition)> {
    let n = alpha.size();
    let steps = step_word(alpha);
    (0..n).map(|i| (sub_ribbon(&steps, 0, i + 1), sub_ribbon(&steps, i, n))).collect()
}

/// Reflection of the ribbon in the main diagonal.
///
/// Reflection turns right steps into up steps and reverses the direction of
/// travel, so the new step word is the swapped word read backwards.
pub fn transpose(alpha: &Composition) -> Composition {
    if alpha.is_empty() {
        return Composition::empty();
    }
    let steps: Vec<Step> = step_word(alpha)
        .into_iter()
        .rev()
        .map(|s| match s {
            Step::Right => Step::Up,
            Step::Up => Step::Right,
        })
        .collect();
    from_step_word(&steps)
}

/// Row word of the superstandard filling: rows are labelled left to right
/// starting from the top row, then read from the bottom row up.
pub fn superstandard_word(alpha: &Composition) -> Word {
    let parts = alpha.parts();
    let mut start = vec![0u32; parts.len()];
    let mut next = 1;
    for i in (0..parts.len()).rev() {
        start[i] = next;
        next += parts[i];
    }
    let letters = parts.iter().zip(&start).flat_map(|(&p, &s)| s..s + p).collect();
    Word::new(letters).expect("labels are positive")
}

/// Number of ways to collapse edge-connected groups of cells of `alpha` so
/// that the result is the ribbon `beta`.
///
/// Groups of a ribbon are runs of consecutive cells, and the collapsed ribbon
/// keeps exactly the steps between groups, so this counts the occurrences of
/// the step word of `beta` as a subsequence of the step word of `alpha`.
pub fn collapse_count(alpha: &Composition, beta: &Composition) -> u64 {
    if alpha.is_empty() || beta.is_empty() {
        return u64::from(alpha.is_empty() && beta.is_empty());
    }
    let a = step_word(alpha);
    let b = step_word(beta);
    if b.len() > a.len() {
        return 0;
    }
    // ways[j] = number of ways to embed the first j letters of b
    let mut ways = vec![0u64; b.len() + 1];
    ways[0] = 1;
    for s in &a {
        for j in (0..b.len()).rev() {
            if b[j] == *s {
                ways[j + 1] += ways[j];
            }
        }
    }
    ways[b.len()]
}

/// Separator between consecutive pieces of a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sep {
    /// `|`, a cut edge.
    Edge,
    /// `.`, a shared cut cell.
    Cell,
}

/// `alpha = alpha_1 o_1 alpha_2 o_2 ... alpha_k` with each `o_i` an edge or cell cut.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decomposition {
    source: Composition,
    pieces: Vec<Composition>,
    seps: Vec<Sep>,
}

impl Decomposition {
    pub fn pieces(&self) -> &[Composition] {
        &self.pieces
    }

    pub fn seps(&self) -> &[Sep] {
        &self.seps
    }

    pub fn total_cells(&self) -> usize {
        self.pieces.iter().map(Composition::size).sum()
    }

    pub fn source(&self) -> &Composition {
        &self.source
    }

    /// Cell interval `lo..hi` of each piece inside the source ribbon.
    pub fn intervals(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.pieces.len());
        let mut lo = 0usize;
        for (k, piece) in self.pieces.iter().enumerate() {
            let hi = lo + piece.size();
            out.push((lo, hi));
            lo = match self.seps.get(k) {
                Some(Sep::Cell) => hi - 1,
                _ => hi,
            };
        }
        out
    }

    /// True when each piece is the sub-ribbon of the source on its interval and
    /// the intervals tile the source.
    pub fn reassembles(&self) -> bool {
        let steps = step_word(&self.source);
        let iv = self.intervals();
        iv.last().map(|&(_, hi)| hi) == Some(self.source.size())
            && iv.iter().zip(&self.pieces).all(|(&(lo, hi), p)| sub_ribbon(&steps, lo, hi) == *p)
    }

    /// Superstandard piece words: the diagram is labelled left to right in
    /// each row from the top row down, where a cut cell is split into a left
    /// half (earlier piece) and a right half (later piece).
    pub fn piece_words(&self) -> Vec<Word> {
        let steps = step_word(&self.source);
        let n = self.source.size();
        let mut row_of = vec![0usize; n];
        for i in 1..n {
            row_of[i] = row_of[i - 1] + usize::from(steps[i - 1] == Step::Up);
        }
        let intervals = self.intervals();
        let mut instances: Vec<(usize, usize, usize)> = Vec::new();
        for (k, &(lo, hi)) in intervals.iter().enumerate() {
            for (c, &row) in row_of.iter().enumerate().take(hi).skip(lo) {
                instances.push((row, c, k));
            }
        }
        instances.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
        let mut label = std::collections::HashMap::new();
        for (idx, &(_, c, k)) in instances.iter().enumerate() {
            label.insert((c, k), idx as u32 + 1);
        }
        intervals
            .iter()
            .enumerate()
            .map(|(k, &(lo, hi))| {
                // Row word: bottom row first, each row left to right.
                let mut cells: Vec<usize> = (lo..hi).collect();
                cells.sort_by_key(|&c| (row_of[c], c));
                Word::new(cells.into_iter().map(|c| label[&(c, k)]).collect()).expect("positive labels")
            })
            .collect()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.pieces.iter().enumerate() {
            if k > 0 {
                f.write_str(match self.seps[k - 1] {
                    Sep::Edge => "|",
                    Sep::Cell => ".",
                })?;
            }
            write!(f, "{p:?}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All decompositions of a nonempty `alpha` into nonempty pieces whose total
/// cell count is at most `max_cells`.
///
/// Every cell cut adds one cell, so a cap on total cells is what makes the
/// family finite: `(1) = (1).(1) = (1).(1).(1) = ...`.
pub fn decompositions(alpha: &Composition, max_cells: usize) -> Vec<Decomposition> {
    fn rec(
        source: &Composition,
        rest: &Composition,
        used: usize,
        max_cells: usize,
        pieces: &mut Vec<Composition>,
        seps: &mut Vec<Sep>,
        out: &mut Vec<Decomposition>,
    ) {
        if used + rest.size() > max_cells {
            return;
        }
        pieces.push(rest.clone());
        out.push(Decomposition {
            source: source.clone(),
            pieces: pieces.clone(),
            seps: seps.clone(),
        });
        pieces.pop();
        for (beta, gamma) in cut_edge_splits(rest) {
            if beta.is_empty() || gamma.is_empty() {
                continue;
            }
            pieces.push(beta.clone());
            seps.push(Sep::Edge);
            rec(source, &gamma, used + beta.size(), max_cells, pieces, seps, out);
            seps.pop();
            pieces.pop();
        }
        for (beta, gamma) in cut_cell_splits(rest) {
            pieces.push(beta.clone());
            seps.push(Sep::Cell);
            rec(source, &gamma, used + beta.size(), max_cells, pieces, seps, out);
            seps.pop();
            pieces.pop();
        }
    }
    if alpha.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(alpha, alpha, 0, max_cells, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::compositions_of;
    use crate::{comp, word};
    use std::collections::{BTreeMap, BTreeSet};

    #[test]
    fn cut_edge_examples() {
        let e = Composition::empty();
        assert_eq!(
            cut_edge_splits(&comp![3, 1]),
            vec![
                (e.clone(), comp![3, 1]),
                (comp![1], comp![2, 1]),
                (comp![2], comp![1, 1]),
                (comp![3], comp![1]),
                (comp![3, 1], e.clone()),
            ]
        );
        assert_eq!(cut_edge_splits(&comp![1]), vec![(e.clone(), comp![1]), (comp![1], e.clone())]);
        assert_eq!(cut_edge_splits(&comp![2]), vec![(e.clone(), comp![2]), (comp![1], comp![1]), (comp![2], e)]);
    }

    #[test]
    fn cut_cell_examples() {
        assert_eq!(
            cut_cell_splits(&comp![3, 1]),
            vec![
                (comp![1], comp![3, 1]),
                (comp![2], comp![2, 1]),
                (comp![3], comp![1, 1]),
                (comp![3, 1], comp![1]),
            ]
        );
        assert_eq!(cut_cell_splits(&comp![1]), vec![(comp![1], comp![1])]);
        assert_eq!(cut_cell_splits(&comp![2]), vec![(comp![1], comp![2]), (comp![2], comp![1])]);
    }

    /// Geometric oracle: place the ribbon's cells on the grid, reflect across
    /// the main diagonal in English coordinates, and read the image back.
    fn transpose_geometric(alpha: &Composition) -> Composition {
        if alpha.is_empty() {
            return Composition::empty();
        }
        // English coordinates (row grows downward): the ribbon climbs, so an
        // up step decreases the row index.
        let mut cells = vec![(0i64, 0i64)];
        for s in step_word(alpha) {
            let (r, c) = *cells.last().unwrap();
            cells.push(match s {
                Step::Right => (r, c + 1),
                Step::Up => (r - 1, c),
            });
        }
        let mut image: Vec<(i64, i64)> = cells.iter().map(|&(r, c)| (c, r)).collect();
        // Start from the southwest end: largest row, then smallest column.
        image.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let steps: Vec<Step> = image
            .windows(2)
            .map(|w| if w[0].0 == w[1].0 { Step::Right } else { Step::Up })
            .collect();
        from_step_word(&steps)
    }

    fn transpose_by_descents(alpha: &Composition) -> Composition {
        let n = alpha.size();
        let s: BTreeSet<usize> = alpha.reversal().descent_set().into_iter().collect();
        let comp: Vec<usize> = (1..n).filter(|i| !s.contains(i)).collect();
        Composition::from_descent_set(n, &comp)
    }

    #[test]
    fn transpose_characterizations_agree() {
        for n in 0..=7 {
            for a in compositions_of(n) {
                let t = transpose(&a);
                assert_eq!(t, transpose_geometric(&a), "{a:?}");
                assert_eq!(t, transpose_by_descents(&a), "{a:?}");
                assert_eq!(transpose(&t), a);
            }
        }
        assert_eq!(transpose(&comp![4]), comp![1, 1, 1, 1]);
        assert_eq!(transpose(&comp![2, 1]), comp![2, 1]);
        assert_eq!(transpose(&comp![3, 1]), comp![2, 1, 1]);
    }

    #[test]
    fn superstandard_words() {
        assert_eq!(superstandard_word(&comp![1, 1]), word!("21"));
        assert_eq!(superstandard_word(&comp![2, 1]), word!("231"));
        assert_eq!(superstandard_word(&comp![4]), word!("1234"));
        assert_eq!(superstandard_word(&comp![4, 2, 3]), word!("678945123"));
        for n in 0..=6 {
            for a in compositions_of(n) {
                let w = superstandard_word(&a);
                assert_eq!(w.descent_composition(), a);
                assert_eq!(w.colayered_layers(), Some(a.clone()));
            }
        }
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(collapse_count(&comp![3, 1, 1], &comp![2, 1]), 4);
        assert_eq!(collapse_count(&comp![2], &comp![1]), 1);
        for n in 1..=5 {
            for a in compositions_of(n) {
                assert_eq!(collapse_count(&a, &a), 1);
            }
        }
    }

    /// Oracle: set partitions of the grid cells into edge-connected blocks,
    /// contracted along grid adjacency.
    fn collapse_oracle(alpha: &Composition) -> BTreeMap<Composition, u64> {
        let n = alpha.size();
        let mut cells = vec![(0i64, 0i64)];
        for s in step_word(alpha) {
            let (x, y) = *cells.last().unwrap();
            cells.push(match s {
                Step::Right => (x + 1, y),
                Step::Up => (x, y + 1),
            });
        }
        let adjacent = |a: usize, b: usize| {
            let (p, q) = (cells[a], cells[b]);
            (p.0 - q.0).abs() + (p.1 - q.1).abs() == 1
        };
        let mut out = BTreeMap::new();
        let mut assign = vec![0usize; n];
        fn partitions(i: usize, k: usize, assign: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize], usize)) {
            if i == assign.len() {
                visit(assign, k);
                return;
            }
            for b in 0..=k {
                assign[i] = b;
                partitions(i + 1, k.max(b + 1), assign, visit);
            }
        }
        partitions(0, 0, &mut assign, &mut |blocks, k| {
            // Each block must be connected under grid adjacency.
            for b in 0..k {
                let members: Vec<usize> = (0..n).filter(|&c| blocks[c] == b).collect();
                let mut seen = vec![members[0]];
                let mut frontier = vec![members[0]];
                while let Some(c) = frontier.pop() {
                    for &d in &members {
                        if !seen.contains(&d) && adjacent(c, d) {
                            seen.push(d);
                            frontier.push(d);
                        }
                    }
                }
                if seen.len() != members.len() {
                    return;
                }
            }
            // Walk the quotient: blocks in order of their first cell.
            let mut order: Vec<usize> = Vec::new();
            for &b in blocks.iter().take(n) {
                if !order.contains(&b) {
                    order.push(b);
                }
            }
            let mut steps = Vec::new();
            for w in order.windows(2) {
                let joins: Vec<(usize, usize)> = (0..n)
                    .flat_map(|a| (0..n).map(move |b| (a, b)))
                    .filter(|&(a, b)| blocks[a] == w[0] && blocks[b] == w[1] && adjacent(a, b))
                    .collect();
                assert_eq!(joins.len(), 1);
                let (a, b) = joins[0];
                steps.push(if cells[a].1 == cells[b].1 { Step::Right } else { Step::Up });
            }
            *out.entry(from_step_word(&steps)).or_insert(0) += 1;
        });
        out
    }

    #[test]
    fn collapse_matches_geometric_oracle() {
        for n in 1..=6 {
            for a in compositions_of(n) {
                let oracle = collapse_oracle(&a);
                for m in 1..=n {
                    for b in compositions_of(m) {
                        assert_eq!(collapse_count(&a, &b), oracle.get(&b).copied().unwrap_or(0), "{a:?} {b:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let three: BTreeSet<String> = decompositions(&comp![3], 6).iter().map(|d| d.to_string()).collect();
        assert!(three.contains("(1).(2)|(1)"));
        assert!(three.contains("(1)|(2).(1)"));
        let one: Vec<String> = decompositions(&comp![1], 3).iter().map(|d| d.to_string()).collect();
        assert_eq!(one, vec!["(1)", "(1).(1)", "(1).(1).(1)"]);
        assert_eq!(decompositions(&comp![2], 2).len(), 2);
    }

    #[test]
    fn superstandard_piece_words_example() {
        let alpha = comp![3, 1, 1];
        let d = decompositions(&alpha, 8)
            .into_iter()
            .find(|d| d.to_string() == "(1).(2).(1)|(1)|(1).(1,1)")
            .expect("decomposition present");
        let words: Vec<String> = d.piece_words().iter().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["4", "56", "7", "8", "2", "31"]);
    }

    #[test]
    fn decomposition_pieces_cover_source() {
        for n in 1..=4 {
            for a in compositions_of(n) {
                for d in decompositions(&a, n + 3) {
                    let cells = d.total_cells();
                    let cuts = d.seps().iter().filter(|s| **s == Sep::Cell).count();
                    assert_eq!(cells, n + cuts);
                    assert!(cells <= n + 3);
                    assert!(d.reassembles());
                }
            }
        }
    }
}
