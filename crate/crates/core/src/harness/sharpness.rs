use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::arith::{isqrt, ratio, rational_pow, to_rational};
use crate::dimensions::{dim_hlf, skew_dim_det, skew_dim_oracle, SkewShape, DEFAULT_ORACLE_BOUND};
use crate::error::{Error, Result};
use crate::partition::Partition;

use super::output::rational;
use super::sweeps::two_e_inverse_pow;
use super::{BoundRecord, ImpliedConstant, SweepReport};

/// Which rectangle construction an instance uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RectangleRegime {
    /// `μ = [ℓ^h]`, `k = ℓh`, `√k ≥ h`.
    FullHeight,
    /// `μ = [ℓ^h]` with `k < h²`: the lower bound is checked but the
    /// construction is outside its stated regime.
    FullHeightOutsideRegime,
    /// `μ = [m^m]`, `k = m²`, `m ≤ h`.
    Square,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RectangleCase {
    pub lambda: String,
    pub mu: String,
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub regime: RectangleRegime,
    /// `d_{λ\μ} / d_λ`.
    #[serde(with = "rational")]
    pub ratio: BigRational,
    /// `(2e)^{-k} (s/n)^k` for the full-height constructions, `√k^{-k}`
    /// for the square one.
    #[serde(with = "rational")]
    pub reference: BigRational,
    /// `ratio · √k^k` for the square construction, `ratio / (s/n)^k`
    /// otherwise.
    #[serde(with = "rational")]
    pub scaled: BigRational,
    /// The lower bound holds; always true for the square construction,
    /// whose constant is only reported.
    pub lower_bound_holds: bool,
}

/// `λ = [s̃^h]` against the rectangle `μ` of size `k` that fits the
/// parameters, with the exact skew ratio.
pub fn sharpness_rectangles(s_tilde: usize, h: usize, k: usize) -> Result<RectangleCase> {
    if s_tilde == 0 || h == 0 {
        return Err(Error::OutOfRange("rectangle sides must be positive".into()));
    }
    let n = s_tilde * h;
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("k = {k} not in [1, {n}]")));
    }
    let lam = Partition::rectangle(s_tilde, h);
    let s = lam.max_hook();
    let m = isqrt(k);
    let (mu, regime) = if k.is_multiple_of(h) && k >= h * h {
        (Partition::rectangle(k / h, h), RectangleRegime::FullHeight)
    } else if m * m == k && m <= h && m <= s_tilde {
        (Partition::rectangle(m, m), RectangleRegime::Square)
    } else if k.is_multiple_of(h) {
        (Partition::rectangle(k / h, h), RectangleRegime::FullHeightOutsideRegime)
    } else {
        return Err(Error::Divisibility(format!(
            "k = {k} is neither a multiple of h = {h} nor a square of side at most {h}"
        )));
    };
    let shape = SkewShape::new(lam.clone(), mu.clone())?;
    let skew = skew_dim_det(&shape);
    if shape.size() <= DEFAULT_ORACLE_BOUND {
        debug_assert_eq!(skew, skew_dim_oracle(&shape)?);
    }
    let ratio_value = to_rational(&skew) / to_rational(&dim_hlf(&lam));
    let (reference, scaled, holds) = match regime {
        RectangleRegime::Square => {
            let root_pow = rational_pow(&BigRational::from_integer(BigInt::from(m)), k);
            (root_pow.recip(), &ratio_value * &root_pow, true)
        }
        _ => {
            let sn = rational_pow(&ratio(s, n), k);
            let bound = two_e_inverse_pow(k) * &sn;
            let holds = ratio_value >= bound;
            (bound, &ratio_value / &sn, holds)
        }
    };
    Ok(RectangleCase {
        lambda: lam.to_string(),
        mu: mu.to_string(),
        n,
        k,
        s,
        regime,
        ratio: ratio_value,
        reference,
        scaled,
        lower_bound_holds: holds,
    })
}

/// Every `(s̃, h, k)` with `s̃ h ≤ max_n` that lands in one of the two
/// stated regimes.
pub fn sharpness_triples(max_n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for h in 1..=max_n {
        for s_tilde in 1..=max_n / h {
            for k in 1..=s_tilde * h {
                let m = isqrt(k);
                let full = k % h == 0 && k >= h * h;
                let square = m * m == k && m <= h && m <= s_tilde;
                if full || square {
                    out.push((s_tilde, h, k));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SharpnessReport {
    pub max_n: usize,
    pub cases: Vec<RectangleCase>,
    pub full_height: usize,
    pub square: usize,
    pub failures: usize,
}

impl SharpnessReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Full-height cases as `lhs = (2e)^{-k}(s/n)^k ≤ rhs = ratio`, square
    /// cases as `lhs = ratio`, `rhs = √k^{-k}` with a note.
    pub fn to_sweep(&self) -> SweepReport {
        let records = self
            .cases
            .iter()
            .map(|c| {
                let (lhs, rhs) = match c.regime {
                    RectangleRegime::Square => (c.ratio.clone(), c.reference.clone()),
                    _ => (c.reference.clone(), c.ratio.clone()),
                };
                let implied = ImpliedConstant::new(c.scaled.clone(), c.k);
                let rec = BoundRecord::new(c.n, c.lambda.clone(), c.mu.clone(), lhs, rhs, implied);
                match c.regime {
                    RectangleRegime::Square => rec.reported("square inner shape"),
                    RectangleRegime::FullHeightOutsideRegime => rec.with_note("k < h^2"),
                    RectangleRegime::FullHeight => rec,
                }
            })
            .collect();
        SweepReport::new(
            "sharpness",
            self.max_n,
            "full height: lhs = (2e)^-k (s/n)^k, rhs = ratio; square: lhs = ratio, rhs = k^(-k/2); C^k = scaled ratio",
            records,
        )
    }
}

pub fn sweep_sharpness(max_n: usize) -> Result<SharpnessReport> {
    let cases = sharpness_triples(max_n)
        .into_iter()
        .map(|(s, h, k)| sharpness_rectangles(s, h, k))
        .collect::<Result<Vec<_>>>()?;
    let count = |r: RectangleRegime| cases.iter().filter(|c| c.regime == r).count();
    let (full_height, square) = (count(RectangleRegime::FullHeight), count(RectangleRegime::Square));
    let failures = cases.iter().filter(|c| !c.lower_bound_holds).count();
    Ok(SharpnessReport { max_n, cases, full_height, square, failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rectangle_example() {
        let c = sharpness_rectangles(4, 2, 4).unwrap();
        assert_eq!(c.regime, RectangleRegime::FullHeight);
        assert_eq!(c.mu, "[2,2]");
        assert_eq!(c.s, 5);
        // the skew shape is a 2x2 block: d = 2 against d_{[4,4]} = 14
        assert_eq!(c.ratio, ratio(2, 14));
        assert!(c.lower_bound_holds);
    }

    #[test]
    fn three_row_example_is_outside_regime_but_holds() {
        let c = sharpness_rectangles(9, 3, 6).unwrap();
        assert_eq!(c.regime, RectangleRegime::FullHeightOutsideRegime);
        assert_eq!(c.mu, "[2,2,2]");
        assert!(c.lower_bound_holds);
    }

    #[test]
    fn square_case_and_errors() {
        let c = sharpness_rectangles(3, 3, 9).unwrap();
        assert_eq!(c.regime, RectangleRegime::FullHeight);
        let sq = sharpness_rectangles(5, 3, 4).unwrap();
        assert_eq!(sq.regime, RectangleRegime::Square);
        assert_eq!(sq.scaled, &sq.ratio * ratio(16, 1));
        assert!(matches!(sharpness_rectangles(5, 3, 7), Err(Error::Divisibility(_))));
        assert!(sharpness_rectangles(2, 2, 5).is_err());
    }

    #[test]
    fn full_square_inner_is_inverse_dimension() {
        let c = sharpness_rectangles(3, 3, 9).unwrap();
        assert_eq!(c.ratio, to_rational(&dim_hlf(&Partition::rectangle(3, 3))).recip());
    }

    #[test]
    fn sweep_has_enough_full_height_triples() {
        let r = sweep_sharpness(30).unwrap();
        assert!(r.full_height >= 10);
        assert!(r.passed());
        assert_eq!(r.to_sweep().records.len(), r.cases.len());
    }
}
