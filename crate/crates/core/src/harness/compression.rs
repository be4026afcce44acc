use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{e_upper, factorial, ratio, rational_pow, to_rational};
use crate::dimensions::{dim_hlf, skew_dim_det, SkewShape};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

use super::output::rational;
use super::sweeps::partitions_up_to;
use super::{BoundRecord, ImpliedConstant, SweepReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompressionRecord {
    pub lambda: String,
    pub mu: String,
    pub k: usize,
    /// `P_λ(μ) = d_μ d_{λ\μ} / d_λ`.
    #[serde(with = "rational")]
    pub p: BigRational,
    /// `Pl_k(μ) = d_μ² / k!`.
    #[serde(with = "rational")]
    pub pl: BigRational,
    /// `A_{λ,μ} = P / Pl`.
    #[serde(with = "rational")]
    pub a: BigRational,
    /// `(s(μ)² e / k)^k`, with `e` rounded up.
    #[serde(with = "rational")]
    pub prop_bound: BigRational,
}

impl CompressionRecord {
    pub fn prop_holds(&self) -> bool {
        self.a <= self.prop_bound
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CompressionReport {
    pub lambda: String,
    pub k: usize,
    pub records: Vec<CompressionRecord>,
    #[serde(with = "rational")]
    pub p_total: BigRational,
    #[serde(with = "rational")]
    pub pl_total: BigRational,
    /// `½ Σ |P − Pl|`, the Plancherel mass outside `λ` counted in full.
    #[serde(with = "rational")]
    pub total_variation: BigRational,
    #[serde(with = "rational")]
    pub max_abs_a_minus_one: BigRational,
    pub prop_holds: bool,
}

impl CompressionReport {
    pub fn normalized(&self) -> bool {
        self.p_total.is_one() && self.pl_total.is_one()
    }
}

pub fn compression_stats(lam: &Partition, k: usize) -> Result<CompressionReport> {
    let n = lam.size();
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("k = {k} not in [1, {n}]")));
    }
    let d_lam = to_rational(&dim_hlf(lam));
    let k_fact = to_rational(&factorial(k));
    let pl_of = |nu: &Partition| {
        let d = to_rational(&dim_hlf(nu));
        &d * &d / &k_fact
    };
    let mut records = Vec::new();
    for mu in lam.subpartitions_of_size(k) {
        let d_mu = to_rational(&dim_hlf(&mu));
        let d_skew = to_rational(&skew_dim_det(&SkewShape::new(lam.clone(), mu.clone())?));
        let p = &d_mu * &d_skew / &d_lam;
        let pl = pl_of(&mu);
        let a = &p / &pl;
        let s = mu.max_hook();
        let prop_bound = rational_pow(&(ratio(s * s, k) * e_upper()), k);
        records.push(CompressionRecord { lambda: lam.to_string(), mu: mu.to_string(), k, p, pl, a, prop_bound });
    }
    let p_total: BigRational = records.iter().map(|r| r.p.clone()).sum();
    let pl_total: BigRational = enumerate_partitions(k)?.map(|nu| pl_of(&nu)).sum();
    let pl_inside: BigRational = records.iter().map(|r| r.pl.clone()).sum();
    let inside: BigRational = records.iter().map(|r| (&r.p - &r.pl).abs()).sum();
    let total_variation = (inside + (BigRational::one() - pl_inside)) / ratio(2, 1);
    let max_abs_a_minus_one = records
        .iter()
        .map(|r| (&r.a - BigRational::one()).abs())
        .max()
        .unwrap_or_else(BigRational::zero);
    let prop_holds = records.iter().all(CompressionRecord::prop_holds);
    Ok(CompressionReport {
        lambda: lam.to_string(),
        k,
        records,
        p_total,
        pl_total,
        total_variation,
        max_abs_a_minus_one,
        prop_holds,
    })
}

/// The proposition `A ≤ (C² e)^k` with `C = s(μ)/√k`, for every
/// `μ ⊂ λ ⊢ m ≤ n`. Records of a non-normalized `(λ, k)` are failed.
pub fn sweep_compression(n: usize) -> Result<SweepReport> {
    let lams = partitions_up_to(n)?;
    let chunks = lams
        .par_iter()
        .map(|lam| {
            let mut out = Vec::new();
            for k in 1..=lam.size() {
                let report = compression_stats(lam, k)?;
                let normalized = report.normalized();
                let e_k = rational_pow(&e_upper(), k);
                for r in report.records {
                    let implied = ImpliedConstant::new(&r.a / &e_k, 2 * k);
                    let mut rec = BoundRecord::new(lam.size(), r.lambda, r.mu, r.a, r.prop_bound, implied);
                    if !normalized {
                        rec.satisfied = false;
                        rec.note = "P or Pl does not sum to 1".into();
                    }
                    out.push(rec);
                }
            }
            Ok(out)
        })
        .collect::<Vec<Result<Vec<BoundRecord>>>>();
    let mut records = Vec::new();
    for c in chunks {
        records.extend(c?);
    }
    Ok(SweepReport::new(
        "compression",
        n,
        "lhs = A, rhs = (s(mu)^2 e / k)^k, C^(2k) = A / e^k",
        records,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_one_is_trivial() {
        let lam: Partition = "[4,2,1]".parse().unwrap();
        let r = compression_stats(&lam, 1).unwrap();
        assert_eq!(r.records.len(), 1);
        let one = BigRational::one();
        assert_eq!((&r.records[0].p, &r.records[0].pl, &r.records[0].a), (&one, &one, &one));
        assert!(r.total_variation.is_zero());
    }

    #[test]
    fn measures_are_normalized() {
        for n in 1..=7 {
            for lam in enumerate_partitions(n).unwrap() {
                for k in 1..=n {
                    let r = compression_stats(&lam, k).unwrap();
                    assert!(r.normalized(), "{lam} {k}");
                    assert!(r.prop_holds, "{lam} {k}");
                    assert!(r.total_variation <= BigRational::one());
                }
            }
        }
        assert!(compression_stats(&Partition::row(3), 4).is_err());
        assert!(compression_stats(&Partition::row(3), 0).is_err());
    }

    #[test]
    fn full_size_gives_point_mass() {
        let lam: Partition = "[3,1]".parse().unwrap();
        let r = compression_stats(&lam, 4).unwrap();
        assert_eq!(r.records.len(), 1);
        assert!(r.records[0].p.is_one());
        assert_eq!(r.records[0].pl, ratio(9, 24));
    }
}
