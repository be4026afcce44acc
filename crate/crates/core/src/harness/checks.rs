use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::factorial;
use crate::characters::{character_branching, character_mn, character_value, character_value_in_order};
use crate::cycle_type::{all_cycle_types, CycleType};
use crate::dimensions::{skew_dim_det, skew_dim_oracle, SkewShape};
use crate::error::Result;
use crate::excited::skew_dim_naruse;
use crate::partition::{enumerate_partitions, Partition};

use super::sweeps::partitions_up_to;

/// One failed equality, with both sides rendered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: usize,
    pub lambda: String,
    pub other: String,
    pub detail: String,
}

/// Outcome of an exhaustive equality check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CheckReport {
    fn new(check: &str, n: usize, found: Vec<(usize, Vec<Mismatch>)>) -> Self {
        let checked = found.iter().map(|(c, _)| c).sum();
        let mismatches = found.into_iter().flat_map(|(_, m)| m).collect();
        CheckReport { check: check.to_string(), n, checked, mismatches }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `Σ_α |C_α| ch^λ(α) ch^μ(α) = n! [λ = μ]` for all `λ, μ ⊢ n`.
pub fn verify_orthogonality(n: usize) -> Result<CheckReport> {
    let lams: Vec<Partition> = enumerate_partitions(n)?.collect();
    let types = all_cycle_types(n)?;
    let sizes: Vec<BigInt> = types.iter().map(|a| BigInt::from(a.class_size())).collect();
    let table = lams
        .par_iter()
        .map(|lam| types.iter().map(|a| character_value(lam, a)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let order = BigInt::from(factorial(n));
    let mut violations = Vec::new();
    for (i, row_i) in table.iter().enumerate() {
        for (j, row_j) in table.iter().enumerate() {
            let total: BigInt = sizes
                .iter()
                .zip(row_i.iter().zip(row_j))
                .map(|(c, (x, y))| c * x * y)
                .sum();
            let expected = if i == j { order.clone() } else { BigInt::zero() };
            if total != expected {
                violations.push(Mismatch {
                    n,
                    lambda: lams[i].to_string(),
                    other: lams[j].to_string(),
                    detail: format!("inner product {total}, expected {expected}"),
                });
            }
        }
    }
    Ok(CheckReport::new("orthogonality", n, vec![(lams.len() * lams.len(), violations)]))
}

/// Branching through `σ*` against the direct rule, for every non-identity
/// `α` and every `λ ⊢ m ≤ n`.
pub fn check_branching(n: usize) -> Result<CheckReport> {
    let lams = partitions_up_to(n)?;
    let found = lams
        .par_iter()
        .map(|lam| {
            let mut bad = Vec::new();
            let types: Vec<CycleType> =
                all_cycle_types(lam.size())?.into_iter().filter(|a| !a.is_identity()).collect();
            for alpha in &types {
                let direct = character_mn(lam, alpha)?;
                let branched = character_branching(lam, alpha)?;
                if direct != branched {
                    bad.push(Mismatch {
                        n: lam.size(),
                        lambda: lam.to_string(),
                        other: alpha.to_string(),
                        detail: format!("direct {}, branching {}", direct.value, branched.value),
                    });
                }
            }
            Ok((types.len(), bad))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::new("branching", n, found))
}

/// Peels each `α` in `orders` random orders; the signed sum must not move.
/// Deterministic for a fixed `seed`.
pub fn check_order_invariance(n: usize, orders: usize, seed: u64) -> Result<CheckReport> {
    let lams = partitions_up_to(n)?;
    let found = lams
        .par_iter()
        .enumerate()
        .map(|(idx, lam)| {
            let mut rng = StdRng::seed_from_u64(seed.wrapping_add(idx as u64));
            let mut bad = Vec::new();
            let types = all_cycle_types(lam.size())?;
            for alpha in &types {
                let reference = character_value(lam, alpha)?;
                for _ in 0..orders {
                    let mut lengths = alpha.lengths().to_vec();
                    lengths.shuffle(&mut rng);
                    let reordered: CycleType = alpha.with_order(lengths)?;
                    let value = character_value_in_order(lam, &reordered)?;
                    if value != reference {
                        bad.push(Mismatch {
                            n: lam.size(),
                            lambda: lam.to_string(),
                            other: reordered.to_string(),
                            detail: format!("{value} vs {reference}"),
                        });
                    }
                }
            }
            Ok((types.len() * orders, bad))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::new("order", n, found))
}

/// `naruse · d_λ = det = oracle` for every `μ ⊂ λ ⊢ m ≤ n`.
pub fn check_oracle_equivalence(n: usize) -> Result<CheckReport> {
    let lams = partitions_up_to(n)?;
    let found = lams
        .par_iter()
        .map(|lam| {
            let mut bad = Vec::new();
            let subs = lam.subpartitions();
            let count = subs.len();
            for mu in subs {
                let shape = SkewShape::new(lam.clone(), mu.clone())?;
                let oracle = skew_dim_oracle(&shape)?;
                let det = skew_dim_det(&shape);
                let naruse = skew_dim_naruse(lam, &mu)?;
                if oracle != det || oracle != naruse {
                    bad.push(Mismatch {
                        n: lam.size(),
                        lambda: lam.to_string(),
                        other: mu.to_string(),
                        detail: format!("oracle {oracle}, det {det}, naruse {naruse}"),
                    });
                }
            }
            Ok((count, bad))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::new("oracle", n, found))
}
