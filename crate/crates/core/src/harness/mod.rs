//! Exhaustive desk-scale sweeps over partitions and cycle types.
//!
//! Every quantity is an exact rational. Bounds that involve `√k` are
//! compared after squaring both sides, and implied constants are kept as
//! `C^e` together with the exponent `e`, so no irrational root is ever
//! taken except for display.

mod checks;
mod compression;
mod output;
mod sharpness;
mod sweeps;

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{approx_root, cmp_roots};
use crate::error::{Error, Result};

pub use checks::{
    check_branching, check_oracle_equivalence, check_order_invariance, verify_orthogonality,
    CheckReport, Mismatch,
};
pub use compression::{compression_stats, sweep_compression, CompressionRecord, CompressionReport};
pub use output::{write_csv, write_json, Format, CSV_HEADER};
pub use sharpness::{
    sharpness_rectangles, sharpness_triples, sweep_sharpness, RectangleCase, RectangleRegime,
    SharpnessReport,
};
pub use sweeps::{
    sweep_general_bound, sweep_line_bounds, sweep_skew_bound, sweep_thm_balanced, sweep_thm_diag,
    sweep_thm_main,
};

/// `C` such that `C^exponent = power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImpliedConstant {
    #[serde(with = "output::rational")]
    pub power: BigRational,
    pub exponent: usize,
}

impl ImpliedConstant {
    pub fn new(power: BigRational, exponent: usize) -> Self {
        ImpliedConstant { power, exponent }
    }

    pub fn approx(&self) -> f64 {
        approx_root(&self.power, self.exponent)
    }

    /// Compares the underlying constants, not the stored powers.
    pub fn cmp_constant(&self, other: &ImpliedConstant) -> Ordering {
        cmp_roots(&self.power, self.exponent, &other.power, other.exponent)
    }

    pub fn is_finite(&self) -> bool {
        self.exponent > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub n: usize,
    pub lambda: String,
    pub alpha_or_mu: String,
    #[serde(with = "output::rational")]
    pub lhs: BigRational,
    #[serde(with = "output::rational")]
    pub rhs: BigRational,
    pub implied_constant: ImpliedConstant,
    pub satisfied: bool,
    /// Free-form regime tag, e.g. the `⌊n/s⌋ < 2` edge case.
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
    /// Outside the proven regime: kept in the table, never asserted.
    pub reported_only: bool,
}

impl BoundRecord {
    pub fn new(
        n: usize,
        lambda: String,
        alpha_or_mu: String,
        lhs: BigRational,
        rhs: BigRational,
        implied: ImpliedConstant,
    ) -> Self {
        let satisfied = lhs <= rhs;
        BoundRecord {
            n,
            lambda,
            alpha_or_mu,
            lhs,
            rhs,
            implied_constant: implied,
            satisfied,
            note: String::new(),
            reported_only: false,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// Tags the record as outside the asserted regime.
    pub fn reported(mut self, note: impl Into<String>) -> Self {
        self.reported_only = true;
        self.with_note(note)
    }
}

/// Records of one sweep plus the summary the CLI prints.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub sweep: String,
    pub n: usize,
    /// What `lhs`, `rhs` and the implied constant hold for this sweep.
    pub convention: String,
    pub records: Vec<BoundRecord>,
    pub summary: Summary,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub count: usize,
    pub satisfied: usize,
    pub violated: usize,
    pub noted: usize,
    pub reported_only: usize,
    pub max_implied_constant: Option<ImpliedConstant>,
    pub max_implied_constant_approx: Option<f64>,
    pub argmax: Option<String>,
}

impl SweepReport {
    pub fn new(sweep: &str, n: usize, convention: &str, mut records: Vec<BoundRecord>) -> Self {
        records.sort_by(|a, b| {
            (a.n, &a.lambda, &a.alpha_or_mu).cmp(&(b.n, &b.lambda, &b.alpha_or_mu))
        });
        let summary = Summary::of(&records);
        SweepReport { sweep: sweep.to_string(), n, convention: convention.to_string(), records, summary }
    }

    pub fn all_satisfied(&self) -> bool {
        self.summary.violated == 0
    }

    /// Failed records that are asserted.
    pub fn violations(&self) -> impl Iterator<Item = &BoundRecord> {
        self.records.iter().filter(|r| !r.satisfied && !r.reported_only)
    }
}

impl Summary {
    fn of(records: &[BoundRecord]) -> Self {
        let satisfied = records.iter().filter(|r| r.satisfied).count();
        let best = records
            .iter()
            .filter(|r| !r.implied_constant.power.is_zero())
            .max_by(|a, b| a.implied_constant.cmp_constant(&b.implied_constant));
        Summary {
            count: records.len(),
            satisfied,
            violated: records.len() - satisfied,
            noted: records.iter().filter(|r| !r.note.is_empty()).count(),
            reported_only: records.iter().filter(|r| r.reported_only).count(),
            max_implied_constant: best.map(|r| r.implied_constant.clone()),
            max_implied_constant_approx: best.map(|r| r.implied_constant.approx()),
            argmax: best.map(|r| format!("{} {}", r.lambda, r.alpha_or_mu)),
        }
    }
}

/// Which sweep a budget applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepKind {
    Orthogonality,
    ThmMain,
    ThmBalanced,
    ThmDiag,
    SkewBound,
    LineBounds,
    GeneralBound,
    Compression,
    Sharpness,
    Oracle,
    Branching,
}

/// Largest `n` each sweep accepts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budgets {
    pub orthogonality: usize,
    pub thm_main: usize,
    pub thm_balanced: usize,
    pub thm_diag: usize,
    pub skew_bound: usize,
    pub line_bounds: usize,
    pub general_bound: usize,
    pub compression: usize,
    pub sharpness: usize,
    pub oracle: usize,
    pub branching: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            orthogonality: 8,
            thm_main: 10,
            thm_balanced: 10,
            thm_diag: 9,
            skew_bound: 9,
            line_bounds: 12,
            general_bound: 12,
            compression: 10,
            sharpness: 30,
            oracle: 9,
            branching: 8,
        }
    }
}

impl Budgets {
    pub fn cap(&self, kind: SweepKind) -> usize {
        match kind {
            SweepKind::Orthogonality => self.orthogonality,
            SweepKind::ThmMain => self.thm_main,
            SweepKind::ThmBalanced => self.thm_balanced,
            SweepKind::ThmDiag => self.thm_diag,
            SweepKind::SkewBound => self.skew_bound,
            SweepKind::LineBounds => self.line_bounds,
            SweepKind::GeneralBound => self.general_bound,
            SweepKind::Compression => self.compression,
            SweepKind::Sharpness => self.sharpness,
            SweepKind::Oracle => self.oracle,
            SweepKind::Branching => self.branching,
        }
    }

    pub fn cap_mut(&mut self, kind: SweepKind) -> &mut usize {
        match kind {
            SweepKind::Orthogonality => &mut self.orthogonality,
            SweepKind::ThmMain => &mut self.thm_main,
            SweepKind::ThmBalanced => &mut self.thm_balanced,
            SweepKind::ThmDiag => &mut self.thm_diag,
            SweepKind::SkewBound => &mut self.skew_bound,
            SweepKind::LineBounds => &mut self.line_bounds,
            SweepKind::GeneralBound => &mut self.general_bound,
            SweepKind::Compression => &mut self.compression,
            SweepKind::Sharpness => &mut self.sharpness,
            SweepKind::Oracle => &mut self.oracle,
            SweepKind::Branching => &mut self.branching,
        }
    }

    pub fn check(&self, kind: SweepKind, n: usize) -> Result<()> {
        let bound = self.cap(kind);
        if n > bound {
            Err(Error::AboveBound { size: n, bound })
        } else {
            Ok(())
        }
    }
}
