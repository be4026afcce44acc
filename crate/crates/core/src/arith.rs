//! Exact integer and rational helpers shared by the dimension, bound and
//! harness code.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `n (n-1) ... (n-k+1)`.
pub fn falling_factorial(n: usize, k: usize) -> Result<BigUint> {
    if k > n {
        return Err(Error::FallingFactorial { n, k });
    }
    Ok((n - k + 1..=n).fold(BigUint::one(), |acc, i| acc * i))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn isqrt(n: usize) -> usize {
    if n < 2 {
        return n;
    }
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn to_rational(value: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(value.clone()))
}

pub fn rational_pow(base: &BigRational, exp: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Rational upper bound for e, rounded up at the third decimal.
pub fn e_upper() -> BigRational {
    ratio(2719, 1000)
}

/// Rational upper bound for e², `ceil(100 e²)/100`.
pub fn e_squared_upper() -> BigRational {
    ratio(739, 100)
}

/// Compare `a^(1/p)` against `b^(1/q)` for non-negative rationals by
/// cross-powering: `a^q` vs `b^p`.
pub fn cmp_roots(a: &BigRational, p: usize, b: &BigRational, q: usize) -> std::cmp::Ordering {
    rational_pow(a, q).cmp(&rational_pow(b, p))
}

/// Lossy decimal approximation, for display only.
pub fn approx(r: &BigRational) -> f64 {
    let (num, den) = (r.numer(), r.denom());
    let shift = num.bits().max(den.bits()).saturating_sub(1000) as usize;
    let n: f64 = (num >> shift).to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = (den >> shift).to_string().parse().unwrap_or(f64::NAN);
    n / d
}

/// `r^(1/p)` as a float, for summaries.
pub fn approx_root(r: &BigRational, p: usize) -> f64 {
    if p == 0 {
        return f64::NAN;
    }
    if r.is_zero() {
        return 0.0;
    }
    let ln = ln_approx(r.numer()) - ln_approx(r.denom());
    (ln / p as f64).exp()
}

fn ln_approx(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_string().parse::<f64>().unwrap_or(f64::NAN).abs().ln();
    }
    let shift = bits - 900;
    let top: f64 = (x >> shift).to_string().parse::<f64>().unwrap_or(f64::NAN).abs();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(5, 2).unwrap(), BigUint::from(20u32));
        assert_eq!(falling_factorial(7, 0).unwrap(), BigUint::one());
        assert_eq!(falling_factorial(6, 6).unwrap(), factorial(6));
        assert_eq!(falling_factorial(3, 4), Err(Error::FallingFactorial { n: 3, k: 4 }));
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(4, 0), BigUint::one());
        assert_eq!(binomial(2, 3), BigUint::zero());
    }

    #[test]
    fn constants_bound_from_above() {
        assert!(approx(&e_upper()) > std::f64::consts::E);
        assert!(approx(&e_squared_upper()) > std::f64::consts::E.powi(2));
    }

    #[test]
    fn isqrt_exact() {
        for n in 0..2000 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
        }
    }

    #[test]
    fn root_comparison() {
        // 8^(1/3) = 2 = 4^(1/2)
        assert_eq!(cmp_roots(&ratio(8, 1), 3, &ratio(4, 1), 2), std::cmp::Ordering::Equal);
        assert_eq!(cmp_roots(&ratio(9, 1), 3, &ratio(4, 1), 2), std::cmp::Ordering::Greater);
    }
}
