use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};

/// An ordered set partition `(B_1, ..., B_k)` of `[n]`; each block is kept sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<u32>>,
}

impl OrderedSetPartition {
    /// Validates that the blocks are nonempty, disjoint, and cover `[n]`.
    pub fn new(blocks: Vec<Vec<u32>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::Precondition("empty block in ordered set partition".into()));
            }
            for &x in b {
                if x == 0 || x as usize > n || seen[x as usize - 1] {
                    return Err(Error::Precondition(format!("blocks {blocks:?} do not partition [{n}]")));
                }
                seen[x as usize - 1] = true;
            }
        }
        Ok(Self::from_blocks_unchecked(blocks))
    }

    pub(crate) fn from_blocks_unchecked(mut blocks: Vec<Vec<u32>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        OrderedSetPartition { blocks }
    }

    /// The all-singletons partition in the given order.
    pub fn singletons(order: &[u32]) -> Self {
        OrderedSetPartition {
            blocks: order.iter().map(|&x| vec![x]).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Vec<u32>> {
        self.blocks
    }

    /// Number of blocks `k`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

/// Every ordered set partition of `[n]`, blocks chosen by increasing bitmask.
pub fn ordered_set_partitions(n: usize) -> impl Iterator<Item = OrderedSetPartition> {
    ordered_set_partitions_of(&(1..=n as u32).collect::<Vec<_>>()).into_iter()
}

/// Every ordered set partition of an arbitrary finite ground set.
pub fn ordered_set_partitions_of(ground: &[u32]) -> Vec<OrderedSetPartition> {
    fn rec(rest: &[u32], cur: &mut Vec<Vec<u32>>, out: &mut Vec<OrderedSetPartition>) {
        if rest.is_empty() {
            out.push(OrderedSetPartition::from_blocks_unchecked(cur.clone()));
            return;
        }
        let m = rest.len();
        for mask in 1u32..(1 << m) {
            let (block, remaining): (Vec<u32>, Vec<u32>) = {
                let mut b = Vec::new();
                let mut r = Vec::new();
                for (i, &x) in rest.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        b.push(x);
                    } else {
                        r.push(x);
                    }
                }
                (b, r)
            };
            cur.push(block);
            rec(&remaining, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(ground, &mut Vec::new(), &mut out);
    out
}

fn fmt_block(b: &[u32]) -> String {
    if b.iter().all(|&x| x <= 9) {
        b.iter().map(u32::to_string).collect()
    } else {
        b.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.blocks.iter().map(|b| fmt_block(b)).collect();
        write!(f, "({})", blocks.join(","))
    }
}

impl fmt::Debug for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for OrderedSetPartition {
    type Err = Error;

    /// Grammar: `(5,3,4,26,8,7,1)`; a block with multi-digit elements separates them by spaces.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| parse_err(s, 0, "expected parenthesized blocks"))?;
        if inner.trim().is_empty() {
            return Ok(OrderedSetPartition::default());
        }
        let mut blocks = Vec::new();
        let mut pos = 1;
        for piece in inner.split(',') {
            let piece_t = piece.trim();
            let block: Vec<u32> = if piece_t.contains(' ') {
                piece_t
                    .split_whitespace()
                    .map(|x| x.parse::<u32>().map_err(|_| parse_err(s, pos, "bad block element")))
                    .collect::<Result<_>>()?
            } else {
                piece_t
                    .chars()
                    .map(|c| c.to_digit(10).ok_or_else(|| parse_err(s, pos, format!("unexpected {c:?}"))))
                    .collect::<Result<_>>()?
            };
            blocks.push(block);
            pos += piece.len() + 1;
        }
        OrderedSetPartition::new(blocks).map_err(|e| parse_err(s, 0, e.to_string()))
    }
}
