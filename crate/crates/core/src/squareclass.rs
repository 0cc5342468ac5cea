//! Square-unit combinatorics behind the closed forms: the groups `U_b^2`,
//! prime classification by square residue, weight vectors and the counts
//! `c_b(w)`, complete homogeneous symmetric values, and numeric/exact
//! evaluation of the Euler factors `H_b(s)`.
//!
//! The factor attached to a divisor `b` is
//! `H_b(s) = |U_b^2| - sum_w c_b(w) prod_u Y_{u, w_u}(s)`,
//! where the sum runs over weight vectors and `Y_{u,w}` is a normalized
//! symmetric-polynomial value over the primes whose squares land in the
//! class `u`. Saturation of the reachable-product sets caps the infinite
//! weight sum at degree `|U_b^2|`, with the remaining mass of each
//! coordinate aggregated into a tail term; that reduction is what makes the
//! general evaluator finite.

use std::collections::HashSet;

use num::BigInt;

use crate::arith::{divisors, factorize, gcd_u64};
use crate::dirichlet::{primes_up_to, DirichletCoeffs};
use crate::error::{Error, Result};

/// The group `U_b^2` of squares of units modulo `b`, with elements stored
/// as canonical residues in increasing order. For `b = 1` the single
/// element is the residue 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareUnitGroup {
    b: u64,
    elements: Vec<u64>,
}

/// Compute `U_b^2 = { a^2 mod b : gcd(a, b) = 1 }`.
pub fn square_units(b: u64) -> SquareUnitGroup {
    assert!(b >= 1);
    let b_mod = b as u128;
    let mut elements: Vec<u64> = (1..=b)
        .filter(|&a| gcd_u64(a, b) == 1)
        .map(|a| ((a as u128 * a as u128) % b_mod) as u64)
        .collect();
    elements.sort_unstable();
    elements.dedup();
    let group = SquareUnitGroup { b, elements };
    debug_assert!(group.is_closed());
    group
}

impl SquareUnitGroup {
    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn identity(&self) -> u64 {
        1 % self.b
    }

    /// Membership test; `t` is reduced modulo `b` first.
    pub fn contains(&self, t: u64) -> bool {
        self.position(t % self.b).is_some()
    }

    /// Index of a canonical residue in the sorted element list.
    pub fn position(&self, residue: u64) -> Option<usize> {
        self.elements.binary_search(&residue).ok()
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        ((x as u128 * y as u128) % self.b as u128) as u64
    }

    fn is_closed(&self) -> bool {
        self.contains(self.identity())
            && self
                .elements
                .iter()
                .all(|&x| self.elements.iter().all(|&y| self.contains(self.mul(x, y))))
    }

    /// The set of residues reachable as products `prod_u u^{x_u}` with
    /// `0 <= x_u <= min(w_u, |U_b^2|)`.
    fn reachable(&self, w: &WeightVector) -> HashSet<u64> {
        let cap_all = self.len() as u64;
        let mut reach = HashSet::from([self.identity()]);
        for (i, &u) in self.elements.iter().enumerate() {
            let cap = w.entries[i].min(cap_all);
            if cap == 0 || u == self.identity() {
                continue;
            }
            let mut frontier: Vec<u64> = reach.iter().copied().collect();
            for _ in 0..cap {
                frontier = frontier.iter().map(|&x| self.mul(x, u)).collect();
                reach.extend(frontier.iter().copied());
            }
        }
        reach
    }
}

/// Per-class exponent budget, indexed parallel to the sorted elements of a
/// [`SquareUnitGroup`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    entries: Vec<u64>,
}

impl WeightVector {
    pub fn new(entries: Vec<u64>) -> Self {
        WeightVector { entries }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }
}

fn check_indexing(group: &SquareUnitGroup, w: &WeightVector) -> Result<()> {
    if w.entries.len() != group.len() {
        return Err(Error::usage(format!(
            "weight vector has {} entries but |U_b^2| = {}",
            w.entries.len(),
            group.len()
        )));
    }
    Ok(())
}

/// `c_b(w)`: the number of square units not reachable as a product
/// `prod_u u^{x_u}` with exponents bounded by `w` (saturated at `|U_b^2|`).
pub fn c_weight(group: &SquareUnitGroup, w: &WeightVector) -> Result<u64> {
    check_indexing(group, w)?;
    Ok((group.len() - group.reachable(w).len()) as u64)
}

/// Whether `t` is reachable under the exponent budget `w`; the complement
/// count of this predicate over `t` is [`c_weight`].
pub fn weight_reaches(group: &SquareUnitGroup, t: u64, w: &WeightVector) -> Result<bool> {
    check_indexing(group, w)?;
    if !group.contains(t) {
        return Err(Error::domain(format!(
            "t = {t} is not a square unit mod {}",
            group.b
        )));
    }
    Ok(group.reachable(w).contains(&(t % group.b)))
}

/// The weight vector of `m`: for each class `u`, the total multiplicity of
/// primes `p | m` with `p^2 = u mod b`. Primes dividing `b` contribute to
/// no coordinate.
pub fn omega(b: u64, m: u64) -> WeightVector {
    assert!(m >= 1);
    let group = square_units(b);
    let mut entries = vec![0u64; group.len()];
    for (p, e) in factorize(m) {
        if b % p == 0 {
            continue;
        }
        let residue = ((p as u128 * p as u128) % b as u128) as u64;
        let idx = group
            .position(residue)
            .expect("square of a coprime prime is a square unit");
        entries[idx] += e as u64;
    }
    WeightVector { entries }
}

/// Divisor-based square detection routed through weight vectors: `t` is a
/// square of a divisor of `m` mod `b` iff `omega(b, m)` reaches `t`.
/// Agrees with [`crate::dirichlet::x_func`] everywhere.
pub fn x_from_weights(b: u64, t: u64, m: u64) -> Result<bool> {
    weight_reaches(&square_units(b), t, &omega(b, m))
}

/// Partition of the primes up to a cutoff by the square residue of the
/// prime mod `b`: primes dividing `b` form their own class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeClasses {
    b: u64,
    prime_limit: u64,
    group: SquareUnitGroup,
    dividing: Vec<u64>,
    classes: Vec<Vec<u64>>,
}

/// Classify all primes `p <= prime_limit` by `p^2 mod b`.
pub fn classify_primes(b: u64, prime_limit: u64) -> PrimeClasses {
    classify_primes_from(&primes_up_to(prime_limit), b, prime_limit)
}

/// As [`classify_primes`], reusing an existing (increasing) prime list.
pub fn classify_primes_from(primes: &[u64], b: u64, prime_limit: u64) -> PrimeClasses {
    assert!(b >= 1);
    let group = square_units(b);
    let mut dividing = Vec::new();
    let mut classes = vec![Vec::new(); group.len()];
    let b_mod = b as u128;
    for &p in primes {
        if p > prime_limit {
            break;
        }
        if b % p == 0 {
            dividing.push(p);
            continue;
        }
        let residue = ((p as u128 * p as u128) % b_mod) as u64;
        let idx = group
            .position(residue)
            .expect("square of a coprime prime is a square unit");
        classes[idx].push(p);
    }
    PrimeClasses {
        b,
        prime_limit,
        group,
        dividing,
        classes,
    }
}

impl PrimeClasses {
    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn prime_limit(&self) -> u64 {
        self.prime_limit
    }

    pub fn group(&self) -> &SquareUnitGroup {
        &self.group
    }

    /// Primes dividing `b` (the class outside the square-unit indexing).
    pub fn dividing(&self) -> &[u64] {
        &self.dividing
    }

    /// The primes whose squares land in the class of `u`.
    pub fn class_of(&self, u: u64) -> Result<&[u64]> {
        let idx = self
            .group
            .position(u % self.b)
            .ok_or_else(|| Error::domain(format!("u = {u} is not a square unit mod {}", self.b)))?;
        Ok(&self.classes[idx])
    }

    fn class_by_index(&self, idx: usize) -> &[u64] {
        &self.classes[idx]
    }

    /// All classified primes coprime to `b` whose squares are not 1 mod `b`,
    /// merged in increasing order. These carry the closed-form products.
    pub fn nonidentity_primes(&self) -> Vec<u64> {
        let identity = self.group.identity();
        let mut merged: Vec<u64> = self
            .group
            .elements()
            .iter()
            .zip(&self.classes)
            .filter(|(&u, _)| u != identity)
            .flat_map(|(_, class)| class.iter().copied())
            .collect();
        merged.sort_unstable();
        merged
    }
}

/// Evaluation policy for the numeric Euler factors: the real point `s > 1`,
/// the prime cutoff, and the weight-degree cap (defaults to `|U_b^2|`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerEvalConfig {
    pub s: f64,
    pub prime_limit: u64,
    pub cap: Option<usize>,
}

impl EulerEvalConfig {
    pub fn new(s: f64, prime_limit: u64) -> Result<Self> {
        let cfg = EulerEvalConfig {
            s,
            prime_limit,
            cap: None,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        if !(self.s > 1.0) {
            return Err(Error::domain("s must exceed 1"));
        }
        if self.prime_limit < 2 {
            return Err(Error::domain("prime cutoff must be at least 2"));
        }
        Ok(())
    }
}

/// Complete homogeneous symmetric values `h_0 ..= h_cap` of a list of
/// reals, computed by the one-element-at-a-time recurrence
/// `h[k] += x * h[k-1]` (ascending `k` makes repetition allowed).
pub fn complete_homogeneous(values: &[f64], cap: usize) -> Vec<f64> {
    debug_assert!(values.iter().all(|&x| (0.0..1.0).contains(&x)));
    let mut h = vec![0.0; cap + 1];
    h[0] = 1.0;
    for &x in values {
        for k in 1..=cap {
            h[k] += x * h[k - 1];
        }
    }
    h
}

/// The normalized symmetric values of one prime class: `values[k]` is
/// `Sym_k({p^{-s}}) * prod (1 - p^{-s})` for `k < cap`, and `tail` is the
/// aggregated mass of all degrees `>= cap`, so the total is exactly 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassWeights {
    values: Vec<f64>,
    tail: f64,
}

impl ClassWeights {
    /// Mass of degree `k`, where `k = values.len()` addresses the tail.
    pub fn weight(&self, k: usize) -> f64 {
        if k < self.values.len() {
            self.values[k]
        } else {
            self.tail
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tail(&self) -> f64 {
        self.tail
    }
}

/// Normalized symmetric values `Y_{u,k}` of the class of `u`, for
/// `k < cap`, plus the tail mass. Requires `cfg.s > 1`.
pub fn class_weights(pc: &PrimeClasses, u: u64, cfg: &EulerEvalConfig) -> Result<ClassWeights> {
    cfg.validate()?;
    let cap = cfg.cap.unwrap_or(pc.group.len());
    let class = pc.class_of(u)?;
    Ok(class_weights_of(class, cfg.s, cap))
}

fn class_weights_of(class: &[u64], s: f64, cap: usize) -> ClassWeights {
    let xs: Vec<f64> = class.iter().map(|&p| (p as f64).powf(-s)).collect();
    let product: f64 = xs.iter().map(|x| 1.0 - x).product();
    let sym = complete_homogeneous(&xs, cap.saturating_sub(1));
    let values: Vec<f64> = sym.iter().map(|h| h * product).collect();
    let tail = 1.0 - values.iter().sum::<f64>();
    ClassWeights { values, tail }
}

/// How to evaluate an Euler factor `H_b(s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HbMode {
    /// The finite weight-grid sum; works for every `b` but is exponential
    /// in `|U_b^2|`.
    General,
    /// The specialization for `|U_b^2| <= 3`.
    Closed,
}

/// Grid-size guard for the general evaluator.
const MAX_GRID_CELLS: u128 = 20_000_000;

/// Evaluate `H_b(s)` at the configured point and cutoff.
pub fn h_eval(b: u64, cfg: &EulerEvalConfig, mode: HbMode) -> Result<f64> {
    cfg.validate()?;
    h_eval_with(&classify_primes(b, cfg.prime_limit), cfg, mode)
}

/// As [`h_eval`], reusing a prime classification (its cutoff governs the
/// truncation).
pub fn h_eval_with(pc: &PrimeClasses, cfg: &EulerEvalConfig, mode: HbMode) -> Result<f64> {
    cfg.validate()?;
    let n = pc.group.len();
    match mode {
        HbMode::Closed => {
            if n > 3 {
                return Err(Error::unsupported(format!(
                    "closed form needs |U_b^2| <= 3, but |U_{}^2| = {n}",
                    pc.b
                )));
            }
            if n == 1 {
                return Ok(1.0);
            }
            let primes = pc.nonidentity_primes();
            let mut product = 1.0f64;
            let mut sum = 0.0f64;
            for &p in &primes {
                let x = (p as f64).powf(-cfg.s);
                product *= 1.0 - x;
                sum += x;
            }
            Ok(match n {
                2 => 2.0 - product,
                _ => 3.0 - 2.0 * product - sum * product,
            })
        }
        HbMode::General => {
            let cap = cfg.cap.unwrap_or(n);
            if cap < n {
                return Err(Error::domain(format!(
                    "degree cap {cap} below |U_b^2| = {n} would break saturation"
                )));
            }
            // The identity coordinate is summed out: its weights total 1
            // and c_b does not depend on it.
            let identity = pc.group.identity();
            let free: Vec<usize> = (0..n)
                .filter(|&i| pc.group.elements()[i] != identity)
                .collect();
            let cells = ((cap + 1) as u128).pow(free.len() as u32);
            if cells > MAX_GRID_CELLS {
                return Err(Error::unsupported(format!(
                    "weight grid has {cells} cells; |U_b^2| = {n} is beyond this evaluator"
                )));
            }
            let weights: Vec<ClassWeights> = free
                .iter()
                .map(|&i| {
                    class_weights_of(pc.class_by_index(i), cfg.s, cap)
                })
                .collect();

            let mut digits = vec![0usize; free.len()];
            let mut total = 0.0f64;
            loop {
                let mut w = WeightVector::new(vec![0u64; n]);
                for (slot, &i) in free.iter().enumerate() {
                    w.entries[i] = digits[slot] as u64;
                }
                let c = c_weight(&pc.group, &w)?;
                if c > 0 {
                    let mass: f64 = digits
                        .iter()
                        .zip(&weights)
                        .map(|(&k, cw)| cw.weight(k))
                        .product();
                    total += c as f64 * mass;
                }
                // Odometer over {0..cap}^free.
                let mut pos = 0;
                loop {
                    if pos == digits.len() {
                        return Ok(n as f64 - total);
                    }
                    if digits[pos] == cap {
                        digits[pos] = 0;
                        pos += 1;
                    } else {
                        digits[pos] += 1;
                        break;
                    }
                }
            }
        }
    }
}

/// Upper bound on the truncation tail `sum_{p > P} p^{-s}` of the Euler
/// products: `1 / ((s - 1) P^{s-1} ln P)`.
pub fn truncation_tail_bound(s: f64, prime_limit: u64) -> f64 {
    let p = prime_limit as f64;
    1.0 / ((s - 1.0) * p.powf(s - 1.0) * p.ln())
}

/// Coarse error bound for an `H_b` evaluation truncated at the cutoff,
/// scaled by the group order.
pub(crate) fn h_error_bound(group_order: usize, s: f64, prime_limit: u64) -> f64 {
    let tail = truncation_tail_bound(s, prime_limit);
    match group_order {
        1 => 0.0,
        2 => tail,
        3 => 5.0 * tail,
        n => (n * n + 2 * n) as f64 * tail,
    }
}

/// Invariants with every divisor factor trivial (`H_b = 1` for all
/// `b | B`), i.e. `U_b^2` trivial for every divisor.
pub(crate) fn all_divisor_factors_trivial(b_inv: u64) -> bool {
    divisors(b_inv).into_iter().all(|b| square_units(b).len() == 1)
}

/// Exact Dirichlet coefficients of the closed-form expression of the
/// proper-class zeta function, for the invariants with `|U_b^2| <= 3`
/// throughout. Each Euler product over class primes is expanded exactly up
/// to the truncation limit (coefficient `m` only involves primes `<= m`),
/// then convolved with the `zeta(s-1)` series. Equals
/// [`crate::dirichlet::proper_class_coeffs`] coefficient for coefficient.
pub fn closed_form_coeffs(b_inv: u64, limit: u64) -> Result<DirichletCoeffs> {
    let terms = |ts: &[(u64, i64)]| DirichletCoeffs::from_terms(limit, ts);
    let inner = match b_inv {
        1 | 2 | 3 | 4 | 6 | 8 | 12 | 24 => {
            let ts: Vec<(u64, i64)> = divisors(b_inv).into_iter().map(|b| (b, 1)).collect();
            terms(&ts)?
        }
        5 => terms(&[(1, 2), (5, 1)])?.dsub(&euler_product_series(5, limit)?)?,
        10 => terms(&[(1, 1), (2, 1)])?
            .dmul(&terms(&[(1, 2), (5, 1)])?)?
            .dsub(
                &terms(&[(1, 1), (2, 1), (4, -1)])?.dmul(&euler_product_series(10, limit)?)?,
            )?,
        15 => terms(&[(1, 1), (3, 1)])?
            .dmul(&terms(&[(1, 2), (5, 1)])?)?
            .dsub(
                &terms(&[(1, 1), (3, 1), (9, -1)])?.dmul(&euler_product_series(15, limit)?)?,
            )?,
        20 => terms(&[(1, 1), (2, 1), (4, 1)])?
            .dmul(&terms(&[(1, 2), (5, 1)])?)?
            .dsub(
                &terms(&[(1, 1), (2, 1), (4, 1), (8, -1)])?
                    .dmul(&euler_product_series(10, limit)?)?,
            )?,
        7 => terms(&[(1, 3), (7, 1)])?.dsub(
            &terms(&[(1, 2)])?
                .dadd(&prime_sum_series(7, limit)?)?
                .dmul(&euler_product_series(7, limit)?)?,
        )?,
        9 => terms(&[(1, 3), (3, 1), (9, 1)])?.dsub(
            &terms(&[(1, 2)])?
                .dadd(&prime_sum_series(9, limit)?)?
                .dmul(&euler_product_series(9, limit)?)?,
        )?,
        14 => terms(&[(1, 1), (2, 1)])?
            .dmul(&terms(&[(1, 3), (7, 1)])?)?
            .dsub(&euler_product_series(14, limit)?.dmul(
                &terms(&[(1, 2), (2, 2), (4, -1), (8, -1)])?.dadd(
                    &terms(&[(1, 1), (2, 1), (4, -1)])?
                        .dmul(&prime_sum_series(14, limit)?)?,
                )?,
            )?)?,
        18 => terms(&[(1, 1), (2, 1)])?
            .dmul(&terms(&[(1, 3), (3, 1), (9, 1)])?)?
            .dsub(&euler_product_series(18, limit)?.dmul(
                &terms(&[(1, 2), (2, 2), (4, -1), (8, -1)])?.dadd(
                    &terms(&[(1, 1), (2, 1), (4, -1)])?
                        .dmul(&prime_sum_series(18, limit)?)?,
                )?,
            )?)?,
        _ => {
            return Err(Error::unsupported(format!(
                "no closed form is implemented for B = {b_inv}"
            )))
        }
    };
    DirichletCoeffs::zeta_shift(limit)?.dmul(&inner)
}

/// Primes `p <= limit`, coprime to `q`, with `p^2 != 1 mod q` — the primes
/// carrying the nontrivial part of `H_q`.
fn nonidentity_class_primes(q: u64, limit: u64) -> Vec<u64> {
    let q_mod = q as u128;
    primes_up_to(limit)
        .into_iter()
        .filter(|&p| q % p != 0 && (p as u128 * p as u128) % q_mod != 1 % q_mod)
        .collect()
}

/// Exact expansion of `prod (1 - p^{-s})` over the nonidentity class
/// primes of `q`: signed indicators of squarefree products, enumerated by
/// depth-first search with pruning at the truncation limit.
fn euler_product_series(q: u64, limit: u64) -> Result<DirichletCoeffs> {
    let primes = nonidentity_class_primes(q, limit);
    let mut series = DirichletCoeffs::zeros(limit)?;
    // (start index, current product, sign)
    let mut stack: Vec<(usize, u64, i64)> = vec![(0, 1, 1)];
    while let Some((start, prod, sign)) = stack.pop() {
        let v = series.coeff(prod) + BigInt::from(sign);
        series.set_coeff(prod, v);
        for (i, &p) in primes.iter().enumerate().skip(start) {
            if p > limit / prod {
                break;
            }
            stack.push((i + 1, prod * p, -sign));
        }
    }
    Ok(series)
}

/// Exact expansion of `sum p^{-s}` over the nonidentity class primes of `q`.
fn prime_sum_series(q: u64, limit: u64) -> Result<DirichletCoeffs> {
    let ts: Vec<(u64, i64)> = nonidentity_class_primes(q, limit)
        .into_iter()
        .map(|p| (p, 1))
        .collect();
    DirichletCoeffs::from_terms(limit, &ts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::proper_class_coeffs;
    use num::{One, ToPrimitive};

    #[test]
    fn square_unit_examples() {
        assert_eq!(square_units(24).elements(), &[1]);
        assert_eq!(square_units(5).elements(), &[1, 4]);
        assert_eq!(square_units(7).elements(), &[1, 2, 4]);
        assert_eq!(square_units(1).elements(), &[0]);
        assert_eq!(square_units(16).elements(), &[1, 9]);
    }

    #[test]
    fn square_unit_group_structure_lists() {
        // |U_b^2| = 1, 2, 3 exactly on these sets (b up to 170).
        let trivial = [1u64, 2, 3, 4, 6, 8, 12, 24];
        let order2 = [5u64, 10, 15, 16, 20, 30, 40, 48, 60, 120];
        let order3 = [7u64, 9, 14, 18, 21, 28, 36, 42, 56, 72, 84, 168];
        for b in 1..=170 {
            let n = square_units(b).len();
            assert_eq!(n == 1, trivial.contains(&b), "b = {b}");
            assert_eq!(n == 2, order2.contains(&b), "b = {b}");
            assert_eq!(n == 3, order3.contains(&b), "b = {b}");
        }
    }

    #[test]
    fn classify_examples() {
        let pc = classify_primes(5, 10);
        assert_eq!(pc.dividing(), &[5]);
        assert_eq!(pc.class_of(4).unwrap(), &[2, 3, 7]);
        assert_eq!(pc.class_of(1).unwrap(), &[] as &[u64]);

        let pc = classify_primes(1, 10);
        assert_eq!(pc.dividing(), &[] as &[u64]);
        assert_eq!(pc.class_of(1).unwrap(), &[2, 3, 5, 7]);

        let pc = classify_primes(7, 20);
        assert_eq!(pc.dividing(), &[7]);
        assert_eq!(pc.class_of(1).unwrap(), &[13]);
        assert_eq!(pc.class_of(2).unwrap(), &[3, 11, 17]);
        assert_eq!(pc.class_of(4).unwrap(), &[2, 5, 19]);
    }

    #[test]
    fn classify_partitions_all_primes() {
        for b in [1u64, 5, 7, 12, 16, 23, 24] {
            let pc = classify_primes(b, 500);
            let mut seen: Vec<u64> = pc.dividing().to_vec();
            for &u in pc.group().elements() {
                seen.extend(pc.class_of(u).unwrap());
            }
            seen.sort_unstable();
            assert_eq!(seen, primes_up_to(500), "b = {b}");
            assert_eq!(
                pc.dividing().len(),
                crate::arith::prime_divisors(b).len(),
                "b = {b}"
            );
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(5, 12).entries(), &[0, 3]);
        assert_eq!(omega(5, 1).entries(), &[0, 0]);
        assert_eq!(omega(5, 11).entries(), &[1, 0]);
        assert_eq!(omega(5, 50).entries(), &[0, 1]); // 50 = 2 * 5^2
    }

    #[test]
    fn c_weight_examples() {
        let g5 = square_units(5);
        for w1 in 0..4 {
            assert_eq!(c_weight(&g5, &WeightVector::new(vec![w1, 0])).unwrap(), 1);
        }
        let g7 = square_units(7);
        assert_eq!(c_weight(&g7, &WeightVector::new(vec![5, 0, 0])).unwrap(), 2);
        assert_eq!(c_weight(&g7, &WeightVector::new(vec![5, 1, 0])).unwrap(), 1);
        assert_eq!(c_weight(&g7, &WeightVector::new(vec![5, 0, 1])).unwrap(), 1);
        let g24 = square_units(24);
        assert_eq!(c_weight(&g24, &WeightVector::new(vec![3])).unwrap(), 0);
        assert!(c_weight(&g24, &WeightVector::new(vec![1, 2])).is_err());
    }

    #[test]
    fn reachability_examples() {
        let g5 = square_units(5);
        assert!(weight_reaches(&g5, 4, &WeightVector::new(vec![0, 1])).unwrap());
        assert!(!weight_reaches(&g5, 4, &WeightVector::new(vec![3, 0])).unwrap());
        assert!(weight_reaches(&g5, 1, &WeightVector::new(vec![0, 0])).unwrap());
        assert!(weight_reaches(&g5, 6, &WeightVector::new(vec![0, 0])).unwrap());
        assert!(weight_reaches(&g5, 3, &WeightVector::new(vec![0, 0])).is_err());
    }

    #[test]
    fn x_from_weights_examples() {
        assert!(x_from_weights(5, 4, 6).unwrap());
        assert!(!x_from_weights(5, 4, 11).unwrap());
        assert!(x_from_weights(5, 1, 1).unwrap());
    }

    #[test]
    fn complete_homogeneous_examples() {
        let x = 0.3f64;
        let h = complete_homogeneous(&[x], 3);
        assert_eq!(h, vec![1.0, x, x * x, x * x * x]);

        let h = complete_homogeneous(&[0.25, 1.0 / 9.0], 2);
        let expected = 1.0 / 16.0 + 1.0 / 36.0 + 1.0 / 81.0;
        assert!((h[2] - expected).abs() < 1e-15);

        assert_eq!(complete_homogeneous(&[], 2), vec![1.0, 0.0, 0.0]);
    }

    #[test]
    fn class_weight_examples() {
        let cfg = EulerEvalConfig::new(2.0, 10).unwrap();
        let pc = classify_primes(5, 10);
        // Empty class: all mass at degree 0.
        let w = class_weights(&pc, 1, &cfg).unwrap();
        assert_eq!(w.weight(0), 1.0);
        assert_eq!(w.weight(1), 0.0);
        assert!(w.tail().abs() < 1e-15);

        let w = class_weights(&pc, 4, &cfg).unwrap();
        let expected = (1.0 - 0.25) * (1.0 - 1.0 / 9.0) * (1.0 - 1.0 / 49.0);
        assert!((w.weight(0) - expected).abs() < 1e-15);
        let total: f64 = w.values().iter().sum::<f64>() + w.tail();
        assert!((total - 1.0).abs() < 1e-15);

        assert!(EulerEvalConfig::new(1.0, 10).is_err());
    }

    #[test]
    fn h_eval_trivial_and_agreement() {
        let cfg = EulerEvalConfig::new(2.0, 1000).unwrap();
        assert_eq!(h_eval(24, &cfg, HbMode::Closed).unwrap(), 1.0);
        assert_eq!(h_eval(24, &cfg, HbMode::General).unwrap(), 1.0);

        for b in [5u64, 7, 9, 16] {
            let general = h_eval(b, &cfg, HbMode::General).unwrap();
            let closed = h_eval(b, &cfg, HbMode::Closed).unwrap();
            assert!(
                (general - closed).abs() < 1e-12,
                "b = {b}: {general} vs {closed}"
            );
        }

        assert!(matches!(
            h_eval(13, &cfg, HbMode::Closed),
            Err(Error::Unsupported(_))
        ));
        assert!(h_eval(13, &cfg, HbMode::General).is_ok());
    }

    #[test]
    fn h5_matches_reference_value() {
        let cfg = EulerEvalConfig::new(2.0, 100_000).unwrap();
        let h5 = h_eval(5, &cfg, HbMode::Closed).unwrap();
        assert!((h5 - 1.3566).abs() < 5e-4, "H_5(2) = {h5}");
    }

    #[test]
    fn closed_form_examples() {
        let c = closed_form_coeffs(1, 10).unwrap();
        for m in 1..=10 {
            assert_eq!(c.coeff(m), &BigInt::from(m));
        }
        assert!(closed_form_coeffs(5, 10).unwrap().coeff(1).is_one());
        assert_eq!(closed_form_coeffs(10, 10).unwrap().coeff(2), &BigInt::from(3));
        assert!(closed_form_coeffs(11, 10).is_err());
    }

    #[test]
    fn closed_form_matches_formula_small() {
        for b in [1u64, 2, 5, 7, 9, 10, 14, 15, 18, 20, 24] {
            let closed = closed_form_coeffs(b, 60).unwrap();
            let formula = proper_class_coeffs(b, 60).unwrap();
            assert_eq!(closed, formula, "B = {b}");
        }
    }
}
