//! Dimensions `d_λ` and skew dimensions `d_{λ\μ}`.
//!
//! Three independent routes to the skew dimension live here or nearby:
//! exhaustive tableau placement, the Jacobi–Trudi style determinant, and the
//! excited-diagram route in [`crate::excited`].

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::factorial;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default cap on the number of boxes the exhaustive oracle will accept.
pub const DEFAULT_ORACLE_BOUND: usize = 18;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer: outer.to_string(), inner: inner.to_string() });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\\{}", self.outer, self.inner)
    }
}

/// Product of all hook lengths, `H(λ, λ)`.
pub fn hook_product(p: &Partition) -> BigUint {
    p.cells().fold(BigUint::one(), |acc, c| acc * p.hook_unchecked(c))
}

/// `d_λ = |λ|! / H(λ, λ)`.
pub fn dim_hlf(p: &Partition) -> BigUint {
    let (q, r) = factorial(p.size()).div_rem(&hook_product(p));
    debug_assert!(r.is_zero());
    q
}

pub fn skew_dim_oracle(s: &SkewShape) -> Result<BigUint> {
    skew_dim_oracle_bounded(s, DEFAULT_ORACLE_BOUND)
}

/// Counts standard fillings of `λ\μ` by adding boxes one at a time, each at
/// an addable position of the current shape that lies inside `λ`.
pub fn skew_dim_oracle_bounded(s: &SkewShape, bound: usize) -> Result<BigUint> {
    if s.size() > bound {
        return Err(Error::AboveBound { size: s.size(), bound });
    }
    let outer = s.outer.parts();
    let mut current = s.inner.parts().to_vec();
    current.resize(outer.len(), 0);
    Ok(BigUint::from(place(outer, &mut current, s.size())))
}

fn place(outer: &[usize], current: &mut [usize], remaining: usize) -> u64 {
    if remaining == 0 {
        return 1;
    }
    let mut total = 0;
    for i in 0..outer.len() {
        let fits_row = current[i] < outer[i];
        let supported = i == 0 || current[i - 1] > current[i];
        if fits_row && supported {
            current[i] += 1;
            total += place(outer, current, remaining - 1);
            current[i] -= 1;
        }
    }
    total
}

/// `|λ\μ|! · det[1/(λ_i − μ_j − i + j)!]`, with `1/m! = 0` for `m < 0`.
///
/// Entries are scaled by `M!` (the largest argument) so the determinant is
/// taken over integers with Bareiss elimination.
pub fn skew_dim_det(s: &SkewShape) -> BigUint {
    let rows = s.outer.len();
    if rows == 0 {
        return BigUint::one();
    }
    let arg = |i: usize, j: usize| -> i64 {
        s.outer.row_len(i) as i64 - s.inner.row_len(j) as i64 - i as i64 + j as i64
    };
    let max_arg = (1..=rows)
        .flat_map(|i| (1..=rows).map(move |j| (i, j)))
        .map(|(i, j)| arg(i, j))
        .max()
        .unwrap_or(0)
        .max(0) as usize;
    let scale = BigInt::from(factorial(max_arg));
    let mut m: Vec<Vec<BigInt>> = (1..=rows)
        .map(|i| {
            (1..=rows)
                .map(|j| {
                    let a = arg(i, j);
                    if a < 0 {
                        BigInt::zero()
                    } else {
                        &scale / BigInt::from(factorial(a as usize))
                    }
                })
                .collect()
        })
        .collect();
    let det = bareiss_det(&mut m);
    let numer = BigInt::from(factorial(s.size())) * det;
    let denom = scale.pow(rows as u32);
    let (q, r) = numer.div_rem(&denom);
    debug_assert!(r.is_zero(), "determinant route produced a non-integer for {s}");
    debug_assert!(!q.is_negative());
    q.to_biguint().unwrap_or_default()
}

/// Fraction-free Gaussian elimination; consumes the matrix.
fn bareiss_det(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}
