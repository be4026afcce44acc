//! Ribbons, ribbon tableaux and irreducible characters of the symmetric
//! group via the Murnaghan–Nakayama rule.
//!
//! Ribbon removal works on bead positions (`β_i = λ_i + L − i`): peeling a
//! ribbon of size `j` slides one bead down by `j` onto an empty position, and
//! the ribbon's height is the number of beads jumped over.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cycle_type::CycleType;
use crate::dimensions::{dim_hlf, skew_dim_det, SkewShape};
use crate::error::{Error, Result};
use crate::excited::skew_dim_naruse;
use crate::partition::{Cell, Partition};

/// A border strip `λ\ν` together with the shape left after removing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ribbon {
    cells: Vec<Cell>,
    height: usize,
    remainder: Partition,
}

impl Ribbon {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Highest row index minus lowest row index.
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn remainder(&self) -> &Partition {
        &self.remainder
    }

    pub fn lowest_row(&self) -> usize {
        self.cells.iter().map(|c| c.row).min().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }
}

/// Shapes reachable by removing one ribbon of size `j`, with heights,
/// ordered by the ribbon's lowest row.
fn peel(parts: &[usize], j: usize) -> Vec<(Vec<usize>, usize)> {
    let len = parts.len();
    if j == 0 || len == 0 {
        return Vec::new();
    }
    let beta: Vec<usize> = parts.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut out = Vec::new();
    for i in 0..len {
        let Some(target) = beta[i].checked_sub(j) else { continue };
        if beta.contains(&target) {
            continue;
        }
        // beads strictly between target and beta[i] sit at indices i+1..
        let height = beta[i + 1..].iter().take_while(|&&b| b > target).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(k, &b)| b - (len - 1 - k))
            .take_while(|&p| p > 0)
            .collect();
        out.push((shape, height));
    }
    out
}

/// Every ribbon of size `j` whose removal leaves a partition.
pub fn removable_ribbons(p: &Partition, j: usize) -> Vec<Ribbon> {
    peel(p.parts(), j)
        .into_iter()
        .map(|(shape, height)| {
            let remainder = Partition::from_padded(shape);
            let cells = p.cells().filter(|&c| !remainder.contains_cell(c)).collect();
            Ribbon { cells, height, remainder }
        })
        .collect()
}

fn check_weight(p: &Partition, alpha: &CycleType) -> Result<()> {
    if alpha.size() != p.size() {
        return Err(Error::WeightMismatch { weight: alpha.size(), size: p.size() });
    }
    Ok(())
}

/// `|RT(λ, α)|` for `α` in the order given: the ribbon of size `α_N` is the
/// outermost one and is peeled first.
pub fn count_ribbon_tableaux(p: &Partition, alpha: &CycleType) -> Result<BigUint> {
    check_weight(p, alpha)?;
    let mut memo = HashMap::new();
    Ok(count_rec(p.parts(), alpha.lengths(), alpha.lengths().len(), &mut memo))
}

fn count_rec(
    parts: &[usize],
    alpha: &[usize],
    remaining: usize,
    memo: &mut HashMap<(Vec<usize>, usize), BigUint>,
) -> BigUint {
    if remaining == 0 {
        return if parts.is_empty() { BigUint::one() } else { BigUint::zero() };
    }
    let key = (parts.to_vec(), remaining);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let total = peel(parts, alpha[remaining - 1])
        .into_iter()
        .map(|(shape, _)| count_rec(&shape, alpha, remaining - 1, memo))
        .sum();
    memo.insert(key, total);
    memo[&(parts.to_vec(), remaining)].clone()
}

/// `ch^λ(α)` together with `d_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterValue {
    pub value: BigInt,
    pub dimension: BigUint,
}

impl CharacterValue {
    /// `χ^λ = ch^λ / d_λ`.
    pub fn normalized(&self) -> BigRational {
        BigRational::new(self.value.clone(), BigInt::from(self.dimension.clone()))
    }
}

/// Signed ribbon-tableau sum, peeling the largest cycles first.
pub fn character_mn(p: &Partition, alpha: &CycleType) -> Result<CharacterValue> {
    Ok(CharacterValue { value: character_value(p, alpha)?, dimension: dim_hlf(p) })
}

/// `ch^λ(α)` without the dimension.
pub fn character_value(p: &Partition, alpha: &CycleType) -> Result<BigInt> {
    check_weight(p, alpha)?;
    let order = alpha.sorted_desc();
    let mut memo = HashMap::new();
    Ok(mn_rec(p.parts(), order.lengths(), 0, &mut memo))
}

/// Same signed sum, but peeling in exactly the order given (last entry
/// first); used to check order independence.
pub fn character_value_in_order(p: &Partition, alpha: &CycleType) -> Result<BigInt> {
    check_weight(p, alpha)?;
    let reversed: Vec<usize> = alpha.lengths().iter().rev().copied().collect();
    let mut memo = HashMap::new();
    Ok(mn_rec(p.parts(), &reversed, 0, &mut memo))
}

fn mn_rec(
    parts: &[usize],
    order: &[usize],
    consumed: usize,
    memo: &mut HashMap<(Vec<usize>, usize), BigInt>,
) -> BigInt {
    if consumed == order.len() {
        return if parts.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    let key = (parts.to_vec(), consumed);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for (shape, height) in peel(parts, order[consumed]) {
        let sub = mn_rec(&shape, order, consumed + 1, memo);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `σ*`: the fixed points of `σ` removed, longest cycles first.
pub fn sigma_star(alpha: &CycleType) -> Result<CycleType> {
    if alpha.is_identity() {
        return Err(Error::IdentityCycleType);
    }
    let lengths = alpha.sorted_desc().lengths().iter().copied().filter(|&l| l >= 2).collect();
    CycleType::new(lengths)
}

/// Which skew-dimension route the branching identity uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SkewRoute {
    #[default]
    Determinant,
    Naruse,
}

/// `Σ_{μ ⊂ λ, |μ| = supp(α)} ch^μ(σ*) d_{λ\μ}`.
pub fn character_branching(p: &Partition, alpha: &CycleType) -> Result<CharacterValue> {
    character_branching_via(p, alpha, SkewRoute::Determinant)
}

pub fn character_branching_via(
    p: &Partition,
    alpha: &CycleType,
    route: SkewRoute,
) -> Result<CharacterValue> {
    check_weight(p, alpha)?;
    let star = sigma_star(alpha)?;
    let k = star.size();
    let mut value = BigInt::zero();
    for mu in p.subpartitions_of_size(k) {
        let ch = character_value(&mu, &star)?;
        if ch.is_zero() {
            continue;
        }
        let skew = match route {
            SkewRoute::Determinant => skew_dim_det(&SkewShape::new(p.clone(), mu)?),
            SkewRoute::Naruse => skew_dim_naruse(p, &mu)?,
        };
        value += ch * BigInt::from(skew);
    }
    Ok(CharacterValue { value, dimension: dim_hlf(p) })
}

/// `2ⁿ δ(λ)^{cyc(α)}`.
pub fn diag_cycle_bound(p: &Partition, alpha: &CycleType) -> Result<BigUint> {
    check_weight(p, alpha)?;
    let delta = BigUint::from(p.diagonal_length());
    Ok(BigUint::from(2u32).pow(p.size() as u32) * delta.pow(alpha.cycle_count() as u32))
}

/// `Π_i 2 δ(λ) α_i`, the intermediate bound on `|RT(λ, α)|`.
pub fn ribbon_tableaux_bound(p: &Partition, alpha: &CycleType) -> Result<BigUint> {
    check_weight(p, alpha)?;
    let delta = p.diagonal_length();
    Ok(alpha.lengths().iter().fold(BigUint::one(), |acc, &a| acc * (2 * delta * a)))
}

/// `|ch| ≤ d` sanity helper.
pub fn within_trivial_bound(c: &CharacterValue) -> bool {
    c.value.abs() <= BigInt::from(c.dimension.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle_type::{all_cycle_types, parse_cycle_type};
    use crate::partition::enumerate_partitions;
    use std::collections::BTreeSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ct(text: &str) -> CycleType {
        parse_cycle_type(text).unwrap()
    }

    /// Box-set search: every ν ⊂ λ one size-j step down whose difference is
    /// connected and has no 2×2 block.
    fn naive_ribbons(lam: &Partition, j: usize) -> Vec<(Partition, usize)> {
        if j > lam.size() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for nu in lam.subpartitions_of_size(lam.size() - j) {
            let cells: BTreeSet<Cell> = lam.cells().filter(|&c| !nu.contains_cell(c)).collect();
            let square = cells.iter().any(|c| {
                cells.contains(&Cell::new(c.row + 1, c.col))
                    && cells.contains(&Cell::new(c.row, c.col + 1))
                    && cells.contains(&c.excited())
            });
            if square || !connected(&cells) {
                continue;
            }
            let rows: Vec<usize> = cells.iter().map(|c| c.row).collect();
            let height = rows.iter().max().unwrap() - rows.iter().min().unwrap();
            out.push((nu, height));
        }
        out.sort();
        out
    }

    fn connected(cells: &BTreeSet<Cell>) -> bool {
        let Some(&start) = cells.iter().next() else { return false };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            let nbrs = [
                Cell::new(c.row + 1, c.col),
                Cell::new(c.row.wrapping_sub(1), c.col),
                Cell::new(c.row, c.col + 1),
                Cell::new(c.row, c.col.wrapping_sub(1)),
            ];
            for nb in nbrs {
                if cells.contains(&nb) && seen.insert(nb) {
                    stack.push(nb);
                }
            }
        }
        seen.len() == cells.len()
    }

    #[test]
    fn ribbons_match_box_set_search_to_ten() {
        for n in 1..=10 {
            for lam in enumerate_partitions(n).unwrap() {
                for j in 1..=n {
                    let mut fast: Vec<(Partition, usize)> = removable_ribbons(&lam, j)
                        .into_iter()
                        .map(|r| (r.remainder().clone(), r.height()))
                        .collect();
                    fast.sort();
                    assert_eq!(fast, naive_ribbons(&lam, j), "{lam} j={j}");
                }
            }
        }
    }

    #[test]
    fn ribbons_through_a_corner() {
        let lam = p(&[7, 5, 4, 2, 1]);
        let through: Vec<_> = removable_ribbons(&lam, 6)
            .into_iter()
            .filter(|r| r.contains(Cell::new(3, 4)))
            .collect();
        assert_eq!(through.len(), 3);
        for r in &through {
            assert_eq!(r.size(), 6);
        }
    }

    #[test]
    fn row_has_single_flat_ribbon() {
        let row = Partition::row(8);
        for j in 1..=8 {
            let rs = removable_ribbons(&row, j);
            assert_eq!(rs.len(), 1);
            assert_eq!(rs[0].height(), 0);
            assert_eq!(rs[0].remainder(), &Partition::row(8 - j));
        }
    }

    #[test]
    fn ribbon_count_bounded_by_corners() {
        for n in 1..=12 {
            for lam in enumerate_partitions(n).unwrap() {
                let delta = lam.diagonal_length();
                assert!(lam.corners().len() <= 2 * delta);
                for j in 1..=n {
                    assert!(removable_ribbons(&lam, j).len() <= 2 * delta * j, "{lam} j={j}");
                }
            }
        }
    }

    #[test]
    fn ribbons_sorted_by_lowest_row() {
        let lam = p(&[6, 4, 4, 2, 1]);
        let rows: Vec<usize> = removable_ribbons(&lam, 3).iter().map(Ribbon::lowest_row).collect();
        let mut sorted = rows.clone();
        sorted.sort_unstable();
        assert_eq!(rows, sorted);
    }

    #[test]
    fn ribbon_tableau_counts_from_examples() {
        assert_eq!(count_ribbon_tableaux(&p(&[3, 2]), &ct("(3,1,1)")).unwrap(), BigUint::from(3u32));
        assert_eq!(count_ribbon_tableaux(&p(&[3, 2]), &ct("(1,3,1)")).unwrap(), BigUint::one());
        assert_eq!(count_ribbon_tableaux(&p(&[3, 2]), &ct("(1,1,3)")).unwrap(), BigUint::one());
        let lam = p(&[4, 3, 3]);
        assert_eq!(count_ribbon_tableaux(&lam, &ct("(3,3,2,1,1)")).unwrap(), BigUint::from(12u32));
        assert_eq!(count_ribbon_tableaux(&lam, &ct("(1,3,3,2,1)")).unwrap(), BigUint::from(2u32));
        assert!(matches!(
            count_ribbon_tableaux(&lam, &ct("(3,1)")),
            Err(Error::WeightMismatch { weight: 4, size: 10 })
        ));
    }

    #[test]
    fn characters_from_examples() {
        assert_eq!(character_mn(&p(&[3, 2]), &ct("(3,1,1)")).unwrap().value, BigInt::from(-1));
        assert_eq!(character_mn(&p(&[4, 3, 3]), &ct("(3,3,2,1,1)")).unwrap().value, BigInt::from(2));
        for a in all_cycle_types(7).unwrap() {
            assert_eq!(character_mn(&Partition::row(7), &a).unwrap().value, BigInt::one());
        }
    }

    #[test]
    fn identity_gives_dimension() {
        for n in 0..=10 {
            for lam in enumerate_partitions(n).unwrap() {
                let c = character_mn(&lam, &CycleType::identity(n)).unwrap();
                assert_eq!(c.value, BigInt::from(c.dimension.clone()));
            }
        }
    }

    #[test]
    fn sigma_star_examples() {
        assert_eq!(sigma_star(&ct("(4,2,1,1,1)")).unwrap(), ct("(4,2)"));
        assert_eq!(sigma_star(&ct("(2,1,1,1)")).unwrap(), ct("(2)"));
        assert_eq!(sigma_star(&ct("(5)")).unwrap(), ct("(5)"));
        assert_eq!(sigma_star(&ct("(1,1,1)")), Err(Error::IdentityCycleType));
    }

    #[test]
    fn branching_example_terms() {
        let lam = p(&[3, 2]);
        // μ ⊢ 3 inside [3,2]: [3] and [2,1]
        assert_eq!(lam.subpartitions_of_size(3), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(character_value(&p(&[3]), &ct("(3)")).unwrap(), BigInt::one());
        assert_eq!(character_value(&p(&[2, 1]), &ct("(3)")).unwrap(), BigInt::from(-1));
        let via = character_branching(&lam, &ct("(3,1,1)")).unwrap();
        assert_eq!(via.value, BigInt::from(-1));
        let naruse = character_branching_via(&lam, &ct("(3,1,1)"), SkewRoute::Naruse).unwrap();
        assert_eq!(naruse.value, BigInt::from(-1));
        assert_eq!(character_branching(&lam, &ct("(1,1,1,1,1)")), Err(Error::IdentityCycleType));
    }

    #[test]
    fn fixed_point_free_branching_is_single_term() {
        let lam = p(&[3, 3]);
        let a = ct("(4,2)");
        assert_eq!(lam.subpartitions_of_size(6), vec![lam.clone()]);
        assert_eq!(character_branching(&lam, &a).unwrap(), character_mn(&lam, &a).unwrap());
    }

    #[test]
    fn diag_bound_examples() {
        assert_eq!(diag_cycle_bound(&p(&[3, 2]), &ct("(3,1,1)")).unwrap(), BigUint::from(256u32));
        let b = diag_cycle_bound(&p(&[4, 3, 3]), &ct("(3,3,2,1,1)")).unwrap();
        assert_eq!(b, BigUint::from(1024u32 * 243));
    }

    #[test]
    fn conjugate_sign_twist() {
        for n in 1..=8 {
            for lam in enumerate_partitions(n).unwrap() {
                for a in all_cycle_types(n).unwrap() {
                    let sign = if (n - a.cycle_count()) % 2 == 0 { 1 } else { -1 };
                    let c = character_value(&lam, &a).unwrap();
                    let c_conj = character_value(&lam.conjugate(), &a).unwrap();
                    assert_eq!(c_conj, c * sign, "{lam} {a}");
                }
            }
        }
    }

    #[test]
    fn triangle_and_trivial_bounds() {
        for n in 1..=8 {
            for lam in enumerate_partitions(n).unwrap() {
                for a in all_cycle_types(n).unwrap() {
                    let c = character_mn(&lam, &a).unwrap();
                    assert!(within_trivial_bound(&c));
                    let asc = a.with_order(a.lengths().iter().rev().copied().collect()).unwrap();
                    for order in [&a, &asc] {
                        let rt = count_ribbon_tableaux(&lam, order).unwrap();
                        assert!(c.value.abs() <= BigInt::from(rt.clone()));
                        assert!(rt <= ribbon_tableaux_bound(&lam, order).unwrap());
                    }
                }
            }
        }
    }
}
