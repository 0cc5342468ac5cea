//! Consistency suites cross-checking the independent computation routes
//! against each other and against the reference proportion table. Each
//! suite returns a [`CheckReport`]; the CLI `verify` subcommand and the
//! acceptance tests both run these with their own parameter choices.

use std::collections::BTreeSet;

use num::ToPrimitive;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analytics::{partial_ratio, ratio_r, slope_check_at};
use crate::arith::{divisors, gcd_u64};
use crate::dirichlet::{
    count_squares, euler_factor_residual, proper_class_coeffs, x_func,
};
use crate::enumeration::{
    bruteforce_am, coset_class_flags, coset_intersection_card, coset_union_count, c_of,
    m_direct, m_valuation, union_scaling_check, DivisorTuple,
};
use crate::error::Result;
use crate::squareclass::{
    closed_form_coeffs, h_eval, square_units, x_from_weights, EulerEvalConfig, HbMode,
};

/// Outcome of one verification suite.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    /// Number of individual cases exercised.
    pub cases: u64,
    /// First few failures, formatted for display.
    pub failures: Vec<String>,
}

const FAILURE_CAP: usize = 8;

impl CheckReport {
    fn new(name: &'static str) -> Self {
        CheckReport {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, failed: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if failed && self.failures.len() < FAILURE_CAP {
            self.failures.push(msg());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One-line pass/fail summary.
    pub fn summary(&self) -> String {
        if self.passed() {
            format!("PASS {} ({} cases)", self.name, self.cases)
        } else {
            format!(
                "FAIL {} ({} cases): {}",
                self.name,
                self.cases,
                self.failures.join("; ")
            )
        }
    }
}

/// Reference proportion table: `(B, r, 2r - 1)` rounded to four decimals.
pub const REFERENCE_TABLE: [(u64, f64, f64); 16] = [
    (1, 0.6079, 0.2159),
    (2, 0.7599, 0.5198),
    (3, 0.6755, 0.3510),
    (4, 0.7979, 0.5959),
    (5, 0.8491, 0.6981),
    (6, 0.8443, 0.6887),
    (7, 0.9137, 0.8274),
    (8, 0.8074, 0.6148),
    (9, 0.9207, 0.8415),
    (10, 0.9310, 0.8619),
    (12, 0.8866, 0.7731),
    (14, 0.9616, 0.9231),
    (15, 0.8945, 0.7890),
    (18, 0.9647, 0.9293),
    (20, 0.9514, 0.9029),
    (24, 0.8971, 0.7942),
];

/// Invariants exercised by the oracle and closed-form suites by default.
pub const DEFAULT_INVARIANTS: [u64; 17] =
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 24];

/// Invariants with a closed form implemented.
pub const CLOSED_FORM_INVARIANTS: [u64; 16] =
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24];

/// Route equivalence for the coefficients: brute-force class counting,
/// coset-union counting, and the formula engine agree for every invariant
/// in `b_values`, every `A` coprime to `B`, and every index up to `m_max`.
/// Also checks the divisor-sum upper bound on each coefficient.
pub fn oracle_equivalence(b_values: &[u64], m_max: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new("coefficient route equivalence");
    for &b in b_values {
        let formula = proper_class_coeffs(b, m_max)?;
        for a in 1..=b {
            if gcd_u64(a, b) != 1 {
                continue;
            }
            for m in 1..=m_max {
                let brute = bruteforce_am(a, b, m)?;
                let union = coset_union_count(m, a, b)?;
                let coeff = formula.coeff(m).to_u64().unwrap_or(u64::MAX);
                let sigma: u64 = divisors(m).iter().sum();
                report.record(brute != union || union != coeff || brute > sigma, || {
                    format!(
                        "A={a} B={b} m={m}: brute {brute}, union {union}, formula {coeff}"
                    )
                });
            }
        }
    }
    Ok(report)
}

/// The two routes to `M(B; d)` — the rational-lcm definition and the
/// prime-valuation recipe — agree on seeded random tuples, and both ends
/// of the divisibility chain `lcm(d) | M | B lcm(d)`, `C | B` hold.
pub fn valuation_equivalence(
    seed: u64,
    tuples: u64,
    max_k: usize,
    max_d: u64,
    max_b: u64,
) -> CheckReport {
    use num::Zero;
    let mut report = CheckReport::new("ideal generator valuation equivalence");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..tuples {
        let k = rng.random_range(1..=max_k);
        let mut set = BTreeSet::new();
        while set.len() < k {
            set.insert(rng.random_range(1..=max_d));
        }
        let dt = DivisorTuple::new(set.into_iter().collect()).expect("sorted distinct");
        let b = rng.random_range(1..=max_b);

        let direct = m_direct(b, &dt);
        let by_valuation = m_valuation(b, &dt);
        let lcm = dt.lcm();
        let chain = (&direct % &lcm).is_zero()
            && ((num::BigUint::from(b) * &lcm) % &direct).is_zero()
            && (num::BigUint::from(b) % c_of(b, &dt)).is_zero();
        report.record(direct != by_valuation || !chain, || {
            format!("B={b} d={:?}: direct {direct}, valuation {by_valuation}", dt.elements())
        });
    }
    report
}

/// Coset intersections are nonempty exactly when `M(B; d)` divides the
/// index, and carry `gcd(d)` elements when nonempty. Exhaustive over
/// divisor tuples of every index up to `m_max` with at most `max_k` parts.
pub fn intersection_criterion(m_max: u64, max_k: usize, b_max: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new("coset intersection criterion");
    for m in 1..=m_max {
        let divs = divisors(m);
        let tuples = small_subsets(&divs, max_k);
        for tuple in &tuples {
            let dt = DivisorTuple::new(tuple.clone()).expect("sorted distinct");
            for b in 1..=b_max {
                let m_of = m_direct(b, &dt);
                let m_divides = (num::BigUint::from(m) % &m_of).to_u64() == Some(0);
                for a in 1..=b {
                    if gcd_u64(a, b) != 1 {
                        continue;
                    }
                    let card = coset_intersection_card(m, &dt, a, b)?;
                    let expected = if m_divides { dt.gcd() } else { 0 };
                    report.record(card != expected, || {
                        format!(
                            "m={m} d={ds:?} A={a} B={b}: card {card}, M={m_of}, expected {expected}",
                            ds = dt.elements()
                        )
                    });
                }
            }
        }
    }
    Ok(report)
}

/// The three conditions relating a divisor `b | B` to a divisor tuple —
/// divisibility of `C(B; d)`, a common square residue of the ratios, and a
/// common divisor class — are equivalent. Exhaustive.
pub fn class_flag_equivalence(b_max: u64, m_max: u64, max_k: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("class membership flag equivalence");
    for b_inv in 1..=b_max {
        let bs = divisors(b_inv);
        for m in 1..=m_max {
            let divs = divisors(m);
            for tuple in small_subsets(&divs, max_k) {
                let dt = DivisorTuple::new(tuple).expect("sorted distinct");
                for &b in &bs {
                    let (f1, f2, f3) = coset_class_flags(b_inv, b, m, &dt)?;
                    report.record(f1 != f2 || f2 != f3, || {
                        format!(
                            "B={b_inv} b={b} m={m} d={:?}: flags ({f1}, {f2}, {f3})",
                            dt.elements()
                        )
                    });
                }
            }
        }
    }
    Ok(report)
}

/// The union-size scaling identity for divisor classes holds on every
/// valid `(b, m, delta, t)` with `b <= b_max`, `m <= m_max`.
pub fn union_scaling_identity(b_max: u64, m_max: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new("divisor class union scaling");
    for b in 1..=b_max {
        let group = square_units(b);
        for m in 1..=m_max {
            for delta in divisors(crate::dirichlet::gcd_inf(m, b)) {
                for &t in group.elements() {
                    let ok = union_scaling_check(b, m, delta, t)?;
                    report.record(!ok, || format!("b={b} m={m} delta={delta} t={t}"));
                }
            }
        }
    }
    Ok(report)
}

/// The weight-vector route to divisor-square detection agrees with the
/// direct divisor search, for every square unit and every index up to
/// `m_max`.
pub fn weight_route_equivalence(b_values: &[u64], m_max: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new("weight route equivalence");
    for &b in b_values {
        let group = square_units(b);
        for m in 1..=m_max {
            for &t in group.elements() {
                let direct = x_func(b, t, m)?;
                let via_weights = x_from_weights(b, t, m)?;
                report.record(direct != via_weights, || {
                    format!("b={b} t={t} m={m}: direct {direct}, weights {via_weights}")
                });
            }
        }
    }
    Ok(report)
}

/// Summing the square-detection indicator over all square units recovers
/// the count of distinct square residues of divisors.
pub fn square_count_sum_rule(b_max: u64, m_max: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new("square residue count sum rule");
    for b in 1..=b_max {
        let group = square_units(b);
        for m in 1..=m_max {
            let total: u64 = group
                .elements()
                .iter()
                .map(|&t| x_func(b, t, m).map(u64::from))
                .collect::<Result<Vec<u64>>>()?
                .iter()
                .sum();
            let count = count_squares(b, m);
            report.record(total != count, || {
                format!("b={b} m={m}: sum {total}, count {count}")
            });
        }
    }
    Ok(report)
}

/// The general weight-grid evaluator and the closed forms agree on every
/// factor with `|U_b^2| <= 3` up to `b_max`.
pub fn hb_mode_agreement(b_max: u64, prime_limit: u64, tolerance: f64) -> Result<CheckReport> {
    let mut report = CheckReport::new("Euler factor mode agreement");
    let cfg = EulerEvalConfig::new(2.0, prime_limit)?;
    for b in 1..=b_max {
        if square_units(b).len() > 3 {
            continue;
        }
        let general = h_eval(b, &cfg, HbMode::General)?;
        let closed = h_eval(b, &cfg, HbMode::Closed)?;
        report.record((general - closed).abs() > tolerance, || {
            format!("b={b}: general {general}, closed {closed}")
        });
    }
    Ok(report)
}

/// The Moebius-factor identity for the `b`-supported part of the series
/// holds numerically to `tolerance` at truncation `trunc`.
pub fn euler_factor_identity(
    b_values: &[u64],
    s: f64,
    trunc: u64,
    tolerance: f64,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("Euler factor residual");
    for &b in b_values {
        let residual = euler_factor_residual(b, s, trunc)?;
        report.record(residual > tolerance, || format!("b={b}: residual {residual}"));
    }
    Ok(report)
}

/// The exact closed-form coefficient expansion equals the formula engine,
/// coefficient for coefficient, up to `limit`.
pub fn closed_form_exactness(b_values: &[u64], limit: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new("closed form exactness");
    for &b in b_values {
        let closed = closed_form_coeffs(b, limit)?;
        let formula = proper_class_coeffs(b, limit)?;
        let mismatch = (1..=limit).find(|&m| closed.coeff(m) != formula.coeff(m));
        report.record(mismatch.is_some(), || {
            let m = mismatch.unwrap();
            format!(
                "B={b} m={m}: closed {}, formula {}",
                closed.coeff(m),
                formula.coeff(m)
            )
        });
    }
    Ok(report)
}

/// The computed proportions match the reference table to `tolerance` in
/// both columns; rows with trivial factors also match as exact rationals.
pub fn table_reproduction(prime_limit: u64, tolerance: f64) -> CheckReport {
    use num::{BigRational, Zero};
    let mut report = CheckReport::new("proportion table reproduction");
    let rows = crate::analytics::proportion_table(prime_limit);
    for (row, &(b, r_ref, two_r_ref)) in rows.iter().zip(&REFERENCE_TABLE) {
        assert_eq!(row.b_inv, b);
        let mut bad = (row.r - r_ref).abs() > tolerance
            || (row.two_r_minus_one - two_r_ref).abs() > tolerance;
        // Independent exact check for the trivial-factor rows.
        if divisors(b).into_iter().all(|d| square_units(d).len() == 1) {
            let expected = divisors(b)
                .into_iter()
                .map(|d| {
                    BigRational::new((d as i64 * d as i64).into(), (b as i64 * b as i64).into())
                })
                .fold(BigRational::zero(), |acc, x| acc + x);
            bad |= row.residue_exact.as_ref() != Some(&expected);
        }
        report.record(bad, || {
            format!(
                "B={b}: r {} vs {r_ref}, 2r-1 {} vs {two_r_ref}",
                row.r, row.two_r_minus_one
            )
        });
    }
    report
}

/// Pole surrogate: partial-sum slopes sit in `slope_band` around 1 and the
/// finite proportions sit within `ratio_tol` of the limit.
pub fn pole_surrogate(
    b_values: &[u64],
    x: u64,
    slope_band: f64,
    ratio_tol: f64,
    prime_limit: u64,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("pole asymptotics surrogate");
    for &b in b_values {
        let slope = slope_check_at(b, x, prime_limit)?;
        let finite = partial_ratio(b, x)?;
        let limit = ratio_r(b, prime_limit).r;
        report.record(
            (slope - 1.0).abs() > slope_band || (finite - limit).abs() > ratio_tol,
            || format!("B={b}: slope {slope}, partial {finite}, limit {limit}"),
        );
    }
    Ok(report)
}

/// All nonempty subsets of `items` (kept sorted) with at most `max_k`
/// elements.
fn small_subsets(items: &[u64], max_k: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(items: &[u64], start: usize, max_k: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        if current.len() == max_k {
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            go(items, i + 1, max_k, current, out);
            current.pop();
        }
    }
    go(items, 0, max_k, &mut current, &mut out);
    out
}
