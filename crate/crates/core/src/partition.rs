//! Integer partitions and the boxes of their Young diagrams.
//!
//! Diagrams are drawn in French convention: row 1 is the longest row and
//! sits at the bottom, columns run left to right. Both indices are 1-based.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_partitions`] unless a bound is given.
pub const DEFAULT_ENUMERATION_BOUND: usize = 40;

/// A box of a Young diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// The box one step north-east.
    pub const fn excited(self) -> Self {
        Cell { row: self.row + 1, col: self.col + 1 }
    }

    /// Index of the diagonal hook containing this box.
    pub fn diagonal_index(self) -> usize {
        self.row.min(self.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::NonPositivePart { position: i + 1 });
            }
            if i > 0 && p > parts[i - 1] {
                return Err(Error::IncreasingParts { position: i + 1, value: p });
            }
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts that may contain trailing zeros.
    pub(crate) fn from_padded(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `[n]`.
    pub fn row(n: usize) -> Self {
        Partition::from_padded(vec![n])
    }

    /// The one-column partition `[1^n]`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The rectangle `[width^height]`.
    pub fn rectangle(width: usize, height: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![width; height] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based); zero past the first row's end.
    pub fn col_len(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// All boxes, row by row from the bottom.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.row_len(1);
        Partition { parts: (1..=first).map(|j| self.col_len(j)).collect() }
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.contains_cell(cell) {
            return Err(Error::OutsideDiagram { row: cell.row, col: cell.col });
        }
        Ok(self.hook_unchecked(cell))
    }

    pub(crate) fn hook_unchecked(&self, cell: Cell) -> usize {
        let arm = self.row_len(cell.row) - cell.col;
        let leg = self.col_len(cell.col) - cell.row;
        arm + leg + 1
    }

    /// Maximal hook length `λ₁ + λ′₁ − 1`; zero for the empty partition.
    pub fn max_hook(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.parts[0] + self.parts.len() - 1
        }
    }

    /// Largest `i` with `min(λ_i, λ′_i) ≥ i`.
    pub fn diagonal_length(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Boxes `(i, λ_i)` with `λ_i > λ_{i+1}`, ordered by row.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.row_len(i) > self.row_len(i + 1))
            .map(|i| Cell::new(i, self.row_len(i)))
            .collect()
    }

    /// True iff `inner_i ≤ self_i` for every row.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len()
            && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// All partitions `μ ⊂ self` with `|μ| = k`, in reverse-lexicographic order.
    pub fn subpartitions_of_size(&self, k: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        self.sub_rec(0, k, usize::MAX, &mut cur, &mut out);
        out
    }

    fn sub_rec(
        &self,
        row: usize,
        remaining: usize,
        cap: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if row >= self.len() {
            return;
        }
        let hi = self.parts[row].min(cap).min(remaining);
        // remaining rows can hold at most hi each
        for p in (1..=hi).rev() {
            let room: usize = self.parts[row + 1..].iter().map(|&q| q.min(p)).sum();
            if p + room < remaining {
                break;
            }
            cur.push(p);
            self.sub_rec(row + 1, remaining - p, p, cur, out);
            cur.pop();
        }
    }

    /// All partitions contained in `self`, including the empty one.
    pub fn subpartitions(&self) -> Vec<Partition> {
        (0..=self.size()).flat_map(|k| self.subpartitions_of_size(k)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Splits `"[a,b,c]"`, `"(a,b,c)"` or `"a,b,c"` into 1-based positioned
/// positive integers.
pub(crate) fn parse_list(text: &str, open: char, close: char) -> Result<Vec<usize>> {
    let mut body = text.trim();
    if let Some(rest) = body.strip_prefix(open) {
        body = rest.strip_suffix(close).ok_or_else(|| Error::MalformedToken {
            position: 0,
            token: text.trim().to_string(),
        })?;
    } else if body.ends_with(close) {
        return Err(Error::MalformedToken { position: 0, token: text.trim().to_string() });
    }
    let body = body.trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .enumerate()
        .map(|(i, tok)| {
            let tok = tok.trim();
            if let Some(digits) = tok.strip_prefix('-') {
                if digits.parse::<u64>().is_ok() {
                    return Err(Error::NonPositivePart { position: i + 1 });
                }
            }
            match tok.parse::<usize>() {
                Ok(0) => Err(Error::NonPositivePart { position: i + 1 }),
                Ok(v) => Ok(v),
                Err(_) => Err(Error::MalformedToken { position: i + 1, token: tok.to_string() }),
            }
        })
        .collect()
}

pub fn parse_partition(text: &str) -> Result<Partition> {
    Partition::new(parse_list(text, '[', ']')?)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// All partitions of `n` in reverse-lexicographic order, `n ≤ 40`.
pub fn enumerate_partitions(n: usize) -> Result<Partitions> {
    enumerate_partitions_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_partitions_bounded(n: usize, bound: usize) -> Result<Partitions> {
    if n > bound {
        return Err(Error::AboveBound { size: n, bound });
    }
    Ok(Partitions { next: Some(if n == 0 { Vec::new() } else { vec![n] }) })
}

/// Iterator behind [`enumerate_partitions`].
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // rightmost part larger than one
        if let Some(pos) = current.iter().rposition(|&p| p > 1) {
            let mut succ = current[..pos].to_vec();
            let head = current[pos] - 1;
            let mut rest = current.len() - pos;
            succ.push(head);
            while rest > 0 {
                let take = rest.min(head);
                succ.push(take);
                rest -= take;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}
