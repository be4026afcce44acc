//! Excited diagrams, excited sums and the Naruse hook length formula.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::arith::falling_factorial;
use crate::dimensions::dim_hlf;
use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

/// A set of boxes of `λ` obtained from `μ` by simple excitations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExcitedDiagram {
    cells: Vec<Cell>,
    origin: Partition,
}

impl ExcitedDiagram {
    /// The unexcited diagram: `μ` in its own position.
    pub fn unexcited(origin: &Partition) -> Self {
        ExcitedDiagram { cells: origin.cells().collect(), origin: origin.clone() }
    }

    pub(crate) fn from_cells(mut cells: Vec<Cell>, origin: Partition) -> Self {
        cells.sort_unstable();
        ExcitedDiagram { cells, origin }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn origin(&self) -> &Partition {
        &self.origin
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    /// `H(λ, E)`.
    pub fn hook_product(&self, outer: &Partition) -> BigUint {
        self.cells.iter().fold(BigUint::one(), |acc, &c| acc * outer.hook_unchecked(c))
    }

    fn is_inside(&self, outer: &Partition) -> bool {
        self.cells.iter().all(|&c| outer.contains_cell(c))
    }

    fn is_excitable(&self, outer: &Partition, u: Cell) -> bool {
        let up = Cell::new(u.row + 1, u.col);
        let right = Cell::new(u.row, u.col + 1);
        let diag = u.excited();
        outer.contains_cell(diag)
            && !self.contains(up)
            && !self.contains(right)
            && !self.contains(diag)
    }

    /// Moves box `u` one step north-east.
    fn excite(&self, u: Cell) -> ExcitedDiagram {
        let cells = self.cells.iter().map(|&c| if c == u { u.excited() } else { c }).collect();
        ExcitedDiagram::from_cells(cells, self.origin.clone())
    }
}

/// Boxes `u ∈ E` with `URS(u) ⊂ λ` and `E ∩ URS(u) = {u}`.
pub fn excitable_boxes(outer: &Partition, diagram: &ExcitedDiagram) -> Result<Vec<Cell>> {
    if let Some(c) = diagram.cells.iter().find(|&&c| !outer.contains_cell(c)) {
        return Err(Error::OutsideDiagram { row: c.row, col: c.col });
    }
    Ok(diagram.cells.iter().copied().filter(|&u| diagram.is_excitable(outer, u)).collect())
}

fn check_contained(outer: &Partition, inner: &Partition) -> Result<()> {
    if outer.contains(inner) {
        Ok(())
    } else {
        Err(Error::NotContained { outer: outer.to_string(), inner: inner.to_string() })
    }
}

/// `𝓔(λ, μ)`, sorted lexicographically by box list.
pub fn enumerate_excited(outer: &Partition, inner: &Partition) -> Result<Vec<ExcitedDiagram>> {
    check_contained(outer, inner)?;
    Ok(excitation_closure(outer, ExcitedDiagram::unexcited(inner)).into_iter().collect())
}

/// Breadth-first closure of `start` under simple excitations inside `outer`.
pub(crate) fn excitation_closure(outer: &Partition, start: ExcitedDiagram) -> BTreeSet<ExcitedDiagram> {
    debug_assert!(start.is_inside(outer));
    let mut seen: HashSet<ExcitedDiagram> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(d) = queue.pop_front() {
        for &u in &d.cells {
            if d.is_excitable(outer, u) {
                let next = d.excite(u);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// `S(λ, μ) = Σ_{E ∈ 𝓔(λ,μ)} H(λ, E)`.
pub fn excited_sum(outer: &Partition, inner: &Partition) -> Result<BigUint> {
    Ok(enumerate_excited(outer, inner)?.iter().map(|e| e.hook_product(outer)).sum())
}

/// `S(λ, μ) / n^{↓k}`, which equals `d_{λ\μ} / d_λ`.
pub fn naruse_ratio(outer: &Partition, inner: &Partition) -> Result<BigRational> {
    let sum = excited_sum(outer, inner)?;
    Ok(ratio_from_sum(outer, inner, &sum))
}

fn ratio_from_sum(outer: &Partition, inner: &Partition, sum: &BigUint) -> BigRational {
    let ff = falling_factorial(outer.size(), inner.size()).expect("inner fits in outer");
    BigRational::new(BigInt::from(sum.clone()), BigInt::from(ff))
}

/// `d_{λ\μ}` through the excited-diagram route.
pub fn skew_dim_naruse(outer: &Partition, inner: &Partition) -> Result<BigUint> {
    let scaled = naruse_ratio(outer, inner)? * BigRational::from_integer(BigInt::from(dim_hlf(outer)));
    debug_assert!(scaled.is_integer());
    Ok(scaled.to_integer().to_biguint().unwrap_or_default())
}

/// `H(λ, μ)` with `μ` at its unexcited position.
pub fn unexcited_hook_product(outer: &Partition, inner: &Partition) -> Result<BigUint> {
    check_contained(outer, inner)?;
    Ok(ExcitedDiagram::unexcited(inner).hook_product(outer))
}

/// Memo of excited sums keyed by `(λ, μ)`, scoped to one sweep.
#[derive(Debug, Default)]
pub struct ExcitedSums {
    cache: HashMap<(Partition, Partition), BigUint>,
}

impl ExcitedSums {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, outer: &Partition, inner: &Partition) -> Result<BigUint> {
        let key = (outer.clone(), inner.clone());
        if let Some(v) = self.cache.get(&key) {
            return Ok(v.clone());
        }
        let v = excited_sum(outer, inner)?;
        self.cache.insert(key, v.clone());
        Ok(v)
    }

    pub fn ratio(&mut self, outer: &Partition, inner: &Partition) -> Result<BigRational> {
        let sum = self.get(outer, inner)?;
        Ok(ratio_from_sum(outer, inner, &sum))
    }

    pub fn len(&self) -> usize {
        self.cache.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cache.is_empty()
    }
}
