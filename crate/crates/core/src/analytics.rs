//! Residues at `s = 2`, asymptotic class proportions, and partial-sum
//! convergence checks.
//!
//! The proper-class zeta function has a simple pole at `s = 2` with residue
//! `sum_{b | B} (b/B)^2 H_b(2)`; dividing by `zeta(2)` gives the limiting
//! proportion `r` of proper classes among all sublattices, and `2r - 1`
//! lower-bounds the proportion of classes containing a single lattice.

use num::{BigRational, ToPrimitive, Zero};

use crate::arith::divisors;
use crate::dirichlet::{proper_class_coeffs, sieve_tables};
use crate::error::Result;
use crate::squareclass::{
    classify_primes_from, h_error_bound, h_eval_with, square_units, EulerEvalConfig, HbMode,
};

/// `zeta(2) = pi^2 / 6`, the only irrational constant needed.
pub fn zeta_two() -> f64 {
    std::f64::consts::PI * std::f64::consts::PI / 6.0
}

/// One row of the proportion table.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioReport {
    pub b_inv: u64,
    /// Residue of the zeta function at `s = 2`.
    pub residue: f64,
    /// Exact rational residue, available when every divisor factor is
    /// trivial (`H_b = 1` for all `b | B`).
    pub residue_exact: Option<BigRational>,
    /// `r = residue / zeta(2)`.
    pub r: f64,
    pub two_r_minus_one: f64,
    pub prime_limit: u64,
    /// Truncation error bound propagated from the Euler factors.
    pub error_bound: f64,
}

/// The exact rational `sum_{b | B} (b/B)^2` when all `H_b = 1`.
fn exact_residue(b_inv: u64) -> Option<BigRational> {
    if !crate::squareclass::all_divisor_factors_trivial(b_inv) {
        return None;
    }
    let total: BigRational = divisors(b_inv)
        .into_iter()
        .map(|b| {
            BigRational::new(
                (b as u128 * b as u128).into(),
                (b_inv as u128 * b_inv as u128).into(),
            )
        })
        .fold(BigRational::zero(), |acc, x| acc + x);
    Some(total)
}

/// Residue at `s = 2`: `sum_{b | B} (b/B)^2 H_b(2)`, closed-form factors
/// where available and the general grid otherwise.
pub fn residue_at_two(b_inv: u64, prime_limit: u64) -> f64 {
    residue_report(b_inv, prime_limit, &crate::dirichlet::primes_up_to(prime_limit)).0
}

fn residue_report(b_inv: u64, prime_limit: u64, primes: &[u64]) -> (f64, Option<BigRational>, f64) {
    assert!(b_inv >= 1);
    let cfg = EulerEvalConfig::new(2.0, prime_limit).expect("valid residue config");
    let scale = (b_inv as f64) * (b_inv as f64);
    let mut residue = 0.0f64;
    let mut error = 0.0f64;
    for b in divisors(b_inv) {
        let order = square_units(b).len();
        let pc = classify_primes_from(primes, b, prime_limit);
        let mode = if order <= 3 { HbMode::Closed } else { HbMode::General };
        let h = h_eval_with(&pc, &cfg, mode).expect("factor evaluation at s = 2");
        let weight = (b as f64) * (b as f64) / scale;
        residue += weight * h;
        error += weight * h_error_bound(order, 2.0, prime_limit);
    }
    let exact = exact_residue(b_inv);
    if let Some(rat) = &exact {
        // Trivial factors carry no prime truncation at all.
        return (rat.to_f64().expect("small rational"), exact.clone(), 0.0);
    }
    (residue, exact, error)
}

/// Proportion report for one invariant: `r = residue / zeta(2)` together
/// with `2r - 1` and the propagated truncation error bound.
pub fn ratio_r(b_inv: u64, prime_limit: u64) -> RatioReport {
    let primes = crate::dirichlet::primes_up_to(prime_limit);
    ratio_report_from(b_inv, prime_limit, &primes)
}

fn ratio_report_from(b_inv: u64, prime_limit: u64, primes: &[u64]) -> RatioReport {
    let (residue, residue_exact, error_bound) = residue_report(b_inv, prime_limit, primes);
    let r = residue / zeta_two();
    RatioReport {
        b_inv,
        residue,
        residue_exact,
        r,
        two_r_minus_one: 2.0 * r - 1.0,
        prime_limit,
        error_bound: error_bound / zeta_two(),
    }
}

/// The invariants of the reference proportion table, in row order.
pub const TABLE_INVARIANTS: [u64; 16] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24];

/// Proportion reports for all sixteen tabulated invariants, ordered by `B`.
pub fn proportion_table(prime_limit: u64) -> Vec<RatioReport> {
    let primes = crate::dirichlet::primes_up_to(prime_limit);
    TABLE_INVARIANTS
        .iter()
        .map(|&b| ratio_report_from(b, prime_limit, &primes))
        .collect()
}

/// Finite version of the limiting proportion: the coefficient sum up to
/// `x` (exclusive) over the count of all sublattices of index below `x`.
pub fn partial_ratio(b_inv: u64, x: u64) -> Result<f64> {
    assert!(x >= 2, "need at least one term");
    let coeffs = proper_class_coeffs(b_inv, x - 1)?;
    let numer = coeffs.partial_sum(x).to_f64().expect("sum fits f64");
    let tables = sieve_tables(x - 1)?;
    let denom: u64 = (1..x).map(|m| tables.sigma1(m)).sum();
    Ok(numer / denom as f64)
}

/// Pole surrogate: the coefficient sum up to `x` divided by the leading
/// asymptotic term `(residue / 2) x^2`. Approaches 1 as `x` grows.
pub fn slope_check(b_inv: u64, x: u64) -> Result<f64> {
    slope_check_at(b_inv, x, 1_000_000)
}

/// As [`slope_check`] with an explicit prime cutoff for the residue.
pub fn slope_check_at(b_inv: u64, x: u64, prime_limit: u64) -> Result<f64> {
    assert!(x >= 100, "too few terms for a slope estimate");
    let coeffs = proper_class_coeffs(b_inv, x - 1)?;
    let sum = coeffs.partial_sum(x).to_f64().expect("sum fits f64");
    let residue = residue_at_two(b_inv, prime_limit);
    Ok(sum / (residue / 2.0 * (x as f64) * (x as f64)))
}
