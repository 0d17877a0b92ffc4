use std::fmt;
use std::str::FromStr;

use crate::combinat::{compositions_of, Composition};
use crate::error::{parse_err, Error, Result};
use crate::tableaux::Tableau;

/// All dual immaculate tableaux of any composition shape with the given content.
///
/// Shapes range over compositions of the content total; each shape is filled
/// row by row with strictly increasing rows whose first entries weakly increase.
pub fn dual_immaculate_tableaux(content: &[u32]) -> Vec<Tableau> {
    let total: u32 = content.iter().sum();
    let mut out = Vec::new();
    for shape in compositions_of(total as usize) {
        let mut remaining = content.to_vec();
        let mut rows = Vec::with_capacity(shape.len());
        fill_rows(shape.parts(), 0, 1, &mut remaining, &mut rows, &mut out);
    }
    out.sort();
    out
}

fn fill_rows(
    shape: &[u32],
    row: usize,
    min_first: u32,
    remaining: &mut [u32],
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Tableau>,
) {
    if row == shape.len() {
        out.push(Tableau::new(rows.clone()).expect("rows are nonempty"));
        return;
    }
    let mut cur = Vec::with_capacity(shape[row] as usize);
    choose_row(shape, row, min_first, remaining, &mut cur, rows, out);
}

#[allow(clippy::too_many_arguments)]
fn choose_row(
    shape: &[u32],
    row: usize,
    next_min: u32,
    remaining: &mut [u32],
    cur: &mut Vec<u32>,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Tableau>,
) {
    let need = shape[row] as usize - cur.len();
    if need == 0 {
        let first = cur[0];
        rows.push(cur.clone());
        fill_rows(shape, row + 1, first, remaining, rows, out);
        rows.pop();
        return;
    }
    let max = remaining.len() as u32;
    for v in next_min..=max {
        // Not enough larger values left to finish the row.
        if (max - v + 1) < need as u32 {
            break;
        }
        if remaining[v as usize - 1] == 0 {
            continue;
        }
        remaining[v as usize - 1] -= 1;
        cur.push(v);
        choose_row(shape, row, v + 1, remaining, cur, rows, out);
        cur.pop();
        remaining[v as usize - 1] += 1;
    }
}

/// A frozen cell: a fixed entry, or a cell forced to be absent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frozen {
    Value(u32),
    Empty,
}

/// A frozen tableau together with a content vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrozenTableau {
    rows: Vec<Vec<Frozen>>,
    content: Vec<u32>,
}

impl FrozenTableau {
    /// Validates the frozen shape and the content condition.
    ///
    /// Frozen values are left-justified in each row; a forced-empty cell may
    /// only end a row, or stand alone as the bottom cell of the first column.
    /// The content of the frozen values must agree with `content` in every
    /// position but the last, where it may be smaller.
    pub fn new(rows: Vec<Vec<Frozen>>, content: Vec<u32>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::MalformedFrozen(format!("row {} has no frozen cells", i + 1)));
            }
            if let Some(k) = row.iter().position(|c| *c == Frozen::Empty) {
                if k + 1 != row.len() {
                    return Err(Error::MalformedFrozen(format!("empty cell inside row {}", i + 1)));
                }
                if k == 0 && i + 1 != rows.len() {
                    return Err(Error::MalformedFrozen(
                        "an empty first-column cell must be the bottom frozen cell".into(),
                    ));
                }
            }
            let values: Vec<u32> = row
                .iter()
                .filter_map(|c| match c {
                    Frozen::Value(v) => Some(*v),
                    Frozen::Empty => None,
                })
                .collect();
            if values.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::MalformedFrozen(format!("row {} does not strictly increase", i + 1)));
            }
        }
        let t = FrozenTableau { rows, content };
        let frozen = t.frozen_content();
        let m = t.content.len();
        let ok = frozen.len() <= m
            && (0..m).all(|i| {
                let f = frozen.get(i).copied().unwrap_or(0);
                if i + 1 < m {
                    f == t.content[i]
                } else {
                    f <= t.content[i]
                }
            });
        if !ok {
            return Err(Error::Precondition(format!(
                "frozen content {frozen:?} is not a truncation of {:?}",
                t.content
            )));
        }
        Ok(t)
    }

    pub fn content(&self) -> &[u32] {
        &self.content
    }

    fn frozen_content(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for c in self.rows.iter().flatten() {
            if let Frozen::Value(v) = c {
                if out.len() < *v as usize {
                    out.resize(*v as usize, 0);
                }
                out[*v as usize - 1] += 1;
            }
        }
        out
    }

    /// Whether `t` agrees with every frozen cell.
    pub fn admits(&self, t: &Tableau) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, c)| match c {
                Frozen::Value(v) => t.entry(i, j) == Some(*v),
                Frozen::Empty => t.entry(i, j).is_none(),
            })
        })
    }
}

/// `T(T*, v)`: every dual immaculate tableau with content `v` extending `T*`.
pub fn frozen_set(frozen: &FrozenTableau) -> Vec<Tableau> {
    dual_immaculate_tableaux(&frozen.content)
        .into_iter()
        .filter(|t| frozen.admits(t))
        .collect()
}

/// `T_1^*`: `n` frozen ones down the first column with a frozen two beside the last.
pub fn two_row_frozen_first(m: u32, n: u32) -> Result<FrozenTableau> {
    let mut rows: Vec<Vec<Frozen>> = (0..n).map(|_| vec![Frozen::Value(1)]).collect();
    rows.last_mut()
        .ok_or_else(|| Error::Precondition("n must be positive".into()))?
        .push(Frozen::Value(2));
    FrozenTableau::new(rows, vec![n, m])
}

/// `T_2^*`: `n - 1` frozen ones down the first column, then a forced-empty cell.
pub fn two_row_frozen_second(m: u32, n: u32) -> Result<FrozenTableau> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let mut rows: Vec<Vec<Frozen>> = (0..n - 1).map(|_| vec![Frozen::Value(1)]).collect();
    rows.push(vec![Frozen::Empty]);
    FrozenTableau::new(rows, vec![n - 1, m + 1])
}

impl fmt::Display for FrozenTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| match c {
                        Frozen::Value(v) => v.to_string(),
                        Frozen::Empty => "e".to_string(),
                    })
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        let content: Vec<String> = self.content.iter().map(u32::to_string).collect();
        write!(f, "{};{}", rows.join("/"), content.join(","))
    }
}

impl FromStr for FrozenTableau {
    type Err = Error;

    /// Grammar: frozen rows as in the tableau grammar with `e` for a forced-empty
    /// cell, then `;` and the content, e.g. `1/1/1/1,2;4,2`.
    fn from_str(s: &str) -> Result<Self> {
        let (shape, content) = s.split_once(';').ok_or_else(|| parse_err(s, 0, "expected `rows;content`"))?;
        let mut rows = Vec::new();
        for row in shape.split('/') {
            let cells = row
                .split(',')
                .map(|c| match c.trim() {
                    "e" => Ok(Frozen::Empty),
                    v => v.parse().map(Frozen::Value).map_err(|_| parse_err(s, 0, format!("bad cell {v:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(cells);
        }
        let content = content
            .split(',')
            .map(|v| v.trim().parse::<u32>().map_err(|_| parse_err(s, shape.len() + 1, "bad content")))
            .collect::<Result<Vec<_>>>()?;
        FrozenTableau::new(rows, content)
    }
}

/// Shapes of the tableaux in a list, as compositions.
pub fn shapes(ts: &[Tableau]) -> Vec<Composition> {
    ts.iter().map(Tableau::shape).collect()
}
