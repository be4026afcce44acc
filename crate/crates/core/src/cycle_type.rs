use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::factorial;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, parse_list};

/// Cycle lengths of a permutation, kept in the order they were given.
///
/// The order is irrelevant for characters but matters for ribbon tableau
/// counts, so it is never normalized implicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    lengths: Vec<usize>,
}

impl CycleType {
    pub fn new(lengths: Vec<usize>) -> Result<Self> {
        if let Some(i) = lengths.iter().position(|&l| l == 0) {
            return Err(Error::NonPositivePart { position: i + 1 });
        }
        Ok(CycleType { lengths })
    }

    /// The identity of `S_n`, `(1^n)`.
    pub fn identity(n: usize) -> Self {
        CycleType { lengths: vec![1; n] }
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn size(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// `cyc_j`: number of cycles of length `j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.lengths.iter().filter(|&&l| l == j).count()
    }

    /// `cyc`: total number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        self.lengths.len()
    }

    /// `supp`: number of points moved.
    pub fn support(&self) -> usize {
        self.lengths.iter().filter(|&&l| l >= 2).sum()
    }

    /// `|σ|`: minimal number of transpositions, `Σ (j − 1) cyc_j`.
    pub fn word_length(&self) -> usize {
        self.lengths.iter().map(|&l| l - 1).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.lengths.iter().all(|&l| l == 1)
    }

    /// `z_α = Π_j j^{cyc_j} cyc_j!`.
    pub fn centralizer(&self) -> BigUint {
        let max = self.lengths.iter().copied().max().unwrap_or(0);
        (1..=max).fold(BigUint::one(), |acc, j| {
            let m = self.multiplicity(j);
            acc * BigUint::from(j).pow(m as u32) * factorial(m)
        })
    }

    /// Size of the conjugacy class, `n!/z_α`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.size()) / self.centralizer()
    }

    /// Same multiset, weakly decreasing.
    pub fn sorted_desc(&self) -> CycleType {
        let mut lengths = self.lengths.clone();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { lengths }
    }

    pub fn with_order(&self, lengths: Vec<usize>) -> Result<CycleType> {
        let candidate = CycleType::new(lengths)?;
        if candidate.sorted_desc() != self.sorted_desc() {
            return Err(Error::OutOfRange(format!("{candidate} is not a reordering of {self}")));
        }
        Ok(candidate)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.lengths.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

/// Accepts `"(3,1,1)"`, `"[3,1,1]"` or `"3,1,1"` in any order.
pub fn parse_cycle_type(text: &str) -> Result<CycleType> {
    let trimmed = text.trim();
    let lengths = if trimmed.starts_with('[') {
        parse_list(trimmed, '[', ']')?
    } else {
        parse_list(trimmed, '(', ')')?
    };
    CycleType::new(lengths)
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_cycle_type(s)
    }
}

/// Every cycle type of `S_n`, each in decreasing order.
pub fn all_cycle_types(n: usize) -> Result<Vec<CycleType>> {
    Ok(enumerate_partitions(n)?
        .map(|p| CycleType { lengths: p.into_parts() })
        .collect())
}
