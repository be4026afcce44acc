//! Thick hooks, thick hook decompositions, stairs decompositions, minimally
//! excited rows and the closed-form excited-sum bounds built on them.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{binomial, e_squared_upper, e_upper, isqrt, rational_pow, ratio};
use crate::error::{Error, Result};
use crate::excited::{enumerate_excited, excitation_closure, ExcitedDiagram};
use crate::partition::{Cell, Partition};

/// `λ^{lo→hi}`: the union of the hooks of diagonal boxes `lo..=hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThickHook {
    pub lo: usize,
    pub hi: usize,
    cells: Vec<Cell>,
}

impl ThickHook {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        (self.lo..=self.hi).contains(&cell.diagonal_index())
    }
}

pub fn thick_hook(p: &Partition, lo: usize, hi: usize) -> Result<ThickHook> {
    let delta = p.diagonal_length();
    if lo == 0 || lo > hi || hi > delta {
        return Err(Error::DiagonalRange { lo, hi, delta });
    }
    let cells = p.cells().filter(|c| (lo..=hi).contains(&c.diagonal_index())).collect();
    Ok(ThickHook { lo, hi, cells })
}

/// Size of `λ^{lo→hi}` without materializing boxes.
fn thick_hook_size(p: &Partition, lo: usize, hi: usize) -> usize {
    (lo..=hi).map(|i| p.hook_unchecked(Cell::new(i, i))).sum()
}

/// Why a decomposition failed validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Defect {
    NoHooks,
    CutsNotIncreasing { index: usize },
    CutsMissDiagonal { last: usize, delta: usize },
    NotAPartitionOfShape,
    SizeOutsideWindow { index: usize, size: usize, a: usize, b: usize },
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::NoHooks => write!(f, "no thick hooks"),
            Defect::CutsNotIncreasing { index } => write!(f, "cut {index} does not increase"),
            Defect::CutsMissDiagonal { last, delta } => {
                write!(f, "last cut {last} differs from diagonal length {delta}")
            }
            Defect::NotAPartitionOfShape => write!(f, "hooks do not partition the diagram"),
            Defect::SizeOutsideWindow { index, size, a, b } => {
                write!(f, "|T_{index}| = {size} outside [{a},{b}]")
            }
        }
    }
}

/// Cut points `0 = i₀ < i₁ < … < i_p = δ(λ)` with a declared size window
/// `[a, b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThickHookDecomposition {
    source: Partition,
    cuts: Vec<usize>,
    hooks: Vec<ThickHook>,
    pub a: usize,
    pub b: usize,
}

impl ThickHookDecomposition {
    /// Takes `i₁, …, i_p` (the leading zero is implicit). Call
    /// [`validate_decomposition`] to check it.
    pub fn from_cuts(source: &Partition, cuts: Vec<usize>, a: usize, b: usize) -> Self {
        let delta = source.diagonal_length();
        let mut hooks = Vec::with_capacity(cuts.len());
        let mut prev = 0;
        for &cut in &cuts {
            if cut > prev && cut <= delta {
                hooks.push(thick_hook(source, prev + 1, cut).expect("range checked"));
            }
            prev = cut;
        }
        ThickHookDecomposition { source: source.clone(), cuts, hooks, a, b }
    }

    pub fn source(&self) -> &Partition {
        &self.source
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    pub fn hooks(&self) -> &[ThickHook] {
        &self.hooks
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.hooks.iter().map(ThickHook::size).collect()
    }

    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    /// Index (0-based) of the thick hook holding `cell`.
    pub fn hook_of(&self, cell: Cell) -> Option<usize> {
        let d = cell.diagonal_index();
        self.cuts.iter().position(|&c| d <= c)
    }

    fn counts_per_hook(&self, diagram: &ExcitedDiagram) -> Vec<usize> {
        let mut counts = vec![0; self.len()];
        for &c in diagram.cells() {
            if let Some(j) = self.hook_of(c) {
                counts[j] += 1;
            }
        }
        counts
    }
}

pub fn validate_decomposition(d: &ThickHookDecomposition) -> std::result::Result<(), Defect> {
    if d.cuts.is_empty() {
        return Err(Defect::NoHooks);
    }
    let mut prev = 0;
    for (i, &c) in d.cuts.iter().enumerate() {
        if c <= prev {
            return Err(Defect::CutsNotIncreasing { index: i + 1 });
        }
        prev = c;
    }
    let delta = d.source.diagonal_length();
    if prev != delta {
        return Err(Defect::CutsMissDiagonal { last: prev, delta });
    }
    let mut seen = BTreeSet::new();
    for h in &d.hooks {
        for &c in h.cells() {
            if !seen.insert(c) {
                return Err(Defect::NotAPartitionOfShape);
            }
        }
    }
    if seen.len() != d.source.size() || !seen.iter().all(|&c| d.source.contains_cell(c)) {
        return Err(Defect::NotAPartitionOfShape);
    }
    for (j, h) in d.hooks.iter().enumerate() {
        if h.size() < d.a || h.size() > d.b {
            return Err(Defect::SizeOutsideWindow { index: j + 1, size: h.size(), a: d.a, b: d.b });
        }
    }
    Ok(())
}

/// Greedy `(a, 4a)` decomposition: each thick hook is grown as far as the
/// `4a` cap allows, then an undersized last hook takes diagonal hooks from
/// its neighbour until it reaches `a`.
pub fn build_thick_hook_decomposition(p: &Partition, a: usize) -> Result<ThickHookDecomposition> {
    if p.is_empty() {
        return Err(Error::OutOfRange("cannot decompose the empty partition".into()));
    }
    let s = p.max_hook();
    if a < s {
        return Err(Error::BelowMaxHook { a, s });
    }
    let n = p.size();
    if a > n {
        return Err(Error::OutOfRange(format!(
            "a = {a} exceeds |λ| = {n}; no thick hook can reach the lower bound"
        )));
    }
    let cap = 4 * a;
    let delta = p.diagonal_length();
    let mut cuts = Vec::new();
    let mut start = 1;
    while start <= delta {
        let mut end = start;
        let mut size = thick_hook_size(p, start, start);
        while end < delta {
            let next = p.hook_unchecked(Cell::new(end + 1, end + 1));
            if size + next > cap {
                break;
            }
            size += next;
            end += 1;
        }
        cuts.push(end);
        start = end + 1;
    }
    let p_len = cuts.len();
    if p_len >= 2 {
        let lower_start = |cuts: &[usize]| cuts[p_len - 2] + 1;
        while thick_hook_size(p, lower_start(&cuts), delta) < a {
            let before = if p_len >= 3 { cuts[p_len - 3] } else { 0 };
            if cuts[p_len - 2] <= before + 1 {
                break;
            }
            cuts[p_len - 2] -= 1;
        }
    }
    Ok(ThickHookDecomposition::from_cuts(p, cuts, a, cap))
}

/// `E_{T,ℓ}`: the minimal excited diagram of `[ℓ]` with `ℓ_j` boxes in the
/// thick hook `T_j`, or `None` when no excited diagram has those counts.
///
/// Found by filtering `𝓔(λ, [ℓ])`; boxes of an excited row keep their
/// diagonal order, so the minimum is the component-wise smallest shift
/// vector.
pub fn minimally_excited_row(
    p: &Partition,
    d: &ThickHookDecomposition,
    counts: &[usize],
) -> Result<Option<ExcitedDiagram>> {
    if counts.len() != d.len() {
        return Err(Error::LengthMismatch { expected: d.len(), got: counts.len() });
    }
    let ell: usize = counts.iter().sum();
    check_row_length(p, ell)?;
    let members: Vec<ExcitedDiagram> = enumerate_excited(p, &Partition::row(ell))?
        .into_iter()
        .filter(|e| d.counts_per_hook(e) == counts)
        .collect();
    Ok(componentwise_minimum(members))
}

fn check_row_length(p: &Partition, ell: usize) -> Result<()> {
    if ell == 0 || ell > p.row_len(1) {
        return Err(Error::OutOfRange(format!("row length {ell} not in [1, {}]", p.row_len(1))));
    }
    Ok(())
}

/// Shift of each box of an excited row, indexed by its original column.
fn row_shifts(e: &ExcitedDiagram) -> Vec<usize> {
    let mut shifts: Vec<(usize, usize)> =
        e.cells().iter().map(|c| (c.col + 1 - c.row, c.row - 1)).collect();
    shifts.sort_unstable();
    shifts.into_iter().map(|(_, t)| t).collect()
}

fn componentwise_minimum(members: Vec<ExcitedDiagram>) -> Option<ExcitedDiagram> {
    let shifts: Vec<Vec<usize>> = members.iter().map(row_shifts).collect();
    let first = shifts.first()?;
    let floor: Vec<usize> = (0..first.len())
        .map(|i| shifts.iter().map(|s| s[i]).min().unwrap_or(0))
        .collect();
    let pos = shifts
        .iter()
        .position(|s| *s == floor)
        .or_else(|| (0..shifts.len()).min_by_key(|&i| shifts[i].iter().sum::<usize>()))?;
    members.into_iter().nth(pos)
}

/// All diagrams reachable from `e` by excitations inside `p`.
pub fn excitations_of(p: &Partition, e: &ExcitedDiagram) -> BTreeSet<ExcitedDiagram> {
    excitation_closure(p, e.clone())
}

/// Number of count vectors `ℓ = (ℓ_j)` for which some excited diagram of
/// `[ℓ]` has exactly `ℓ_j` boxes in `T_j`.
pub fn count_feasible_sequences(p: &Partition, d: &ThickHookDecomposition, ell: usize) -> Result<usize> {
    Ok(feasible_sequences(p, d, ell)?.len())
}

pub fn feasible_sequences(
    p: &Partition,
    d: &ThickHookDecomposition,
    ell: usize,
) -> Result<BTreeSet<Vec<usize>>> {
    check_row_length(p, ell)?;
    Ok(enumerate_excited(p, &Partition::row(ell))?
        .iter()
        .map(|e| d.counts_per_hook(e))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Row,
    Column,
}

/// One line of a stairs decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub orientation: Orientation,
    pub diagonal: usize,
    pub length: usize,
    pub anchor: Cell,
}

impl Line {
    pub fn cells(&self) -> Vec<Cell> {
        (0..self.length)
            .map(|t| match self.orientation {
                Orientation::Row => Cell::new(self.anchor.row, self.anchor.col + t),
                Orientation::Column => Cell::new(self.anchor.row + t, self.anchor.col),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StairsDecomposition {
    source: Partition,
    lines: Vec<Line>,
}

impl StairsDecomposition {
    pub fn source(&self) -> &Partition {
        &self.source
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.lines.iter().map(|l| l.length).collect()
    }
}

/// Frobenius-coordinate slicing: for each diagonal box `(i,i)` a row line
/// starting at it and, when non-empty, the column strictly above it.
pub fn stairs_decomposition(mu: &Partition) -> StairsDecomposition {
    let mut lines = Vec::new();
    for i in 1..=mu.diagonal_length() {
        lines.push(Line {
            orientation: Orientation::Row,
            diagonal: i,
            length: mu.row_len(i) + 1 - i,
            anchor: Cell::new(i, i),
        });
        let above = mu.col_len(i) - i;
        if above >= 1 {
            lines.push(Line {
                orientation: Orientation::Column,
                diagonal: i,
                length: above,
                anchor: Cell::new(i + 1, i),
            });
        }
    }
    StairsDecomposition { source: mu.clone(), lines }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowBoundCase {
    /// `ℓ ≤ n/s`: `(8n/ℓ)^ℓ`.
    Short,
    /// `ℓ ≥ n/s`: `(4e²)^ℓ s^ℓ`.
    Long,
}

pub fn row_bound_case(p: &Partition, ell: usize) -> RowBoundCase {
    if ell * p.max_hook() <= p.size() {
        RowBoundCase::Short
    } else {
        RowBoundCase::Long
    }
}

/// The long-row argument assumes `⌊n/s⌋ ≥ 2`; this flags instances where
/// that fails.
pub fn row_bound_edge_regime(p: &Partition, ell: usize) -> bool {
    row_bound_case(p, ell) == RowBoundCase::Long && p.size() / p.max_hook() < 2
}

/// Upper bound on `S(λ, [ℓ])`, with `e²` replaced by `7.39`.
pub fn bound_s_row(p: &Partition, ell: usize) -> Result<BigRational> {
    check_row_length(p, ell)?;
    let n = p.size();
    Ok(match row_bound_case(p, ell) {
        RowBoundCase::Short => rational_pow(&ratio(8 * n, ell), ell),
        RowBoundCase::Long => {
            let c = e_squared_upper() * BigRational::from_integer(BigInt::from(4 * p.max_hook()));
            rational_pow(&c, ell)
        }
    })
}

/// `binom(ℓ + ⌊n/a⌋, ℓ) (4a)^ℓ` for `a ∈ [s(λ), n]`.
pub fn bound_s_general(p: &Partition, a: usize, ell: usize) -> Result<BigUint> {
    let (s, n) = (p.max_hook(), p.size());
    if a < s || a > n {
        return Err(Error::OutOfRange(format!("a = {a} not in [{s}, {n}]")));
    }
    check_row_length(p, ell)?;
    Ok(binomial(ell + n / a, ell) * BigUint::from(4 * a).pow(ell as u32))
}

/// `2e · 4e²`, each factor rounded up.
pub fn general_excited_constant() -> BigRational {
    ratio(8, 1) * e_upper() * e_squared_upper()
}

/// `(C · max(n/√k, s))^k`, with `n/√k` replaced by `n/⌊√k⌋` when it is the
/// larger term (exact when `k` is a square).
pub fn bound_skew_general(n: usize, k: usize, s: usize, c: &BigRational) -> Result<BigRational> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("k = {k} not in [1, {n}]")));
    }
    if s == 0 {
        return Err(Error::OutOfRange("s must be positive".into()));
    }
    if !c.is_positive() || c.is_zero() {
        return Err(Error::OutOfRange("C must be positive".into()));
    }
    let m = if n * n <= s * s * k {
        ratio(s, 1)
    } else {
        ratio(n, isqrt(k))
    };
    Ok(rational_pow(&(c * m), k))
}
