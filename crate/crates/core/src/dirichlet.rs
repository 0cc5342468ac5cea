//! Exact truncated Dirichlet-series arithmetic, multiplicative sieve
//! tables, and the coefficient engine for the proper-class zeta function.
//!
//! A [`DirichletCoeffs`] holds the exact integer coefficients `c_1 ..= c_N`
//! of a truncated series `sum c_m m^{-s}`. All operations are exact on
//! every coefficient up to the truncation limit; there is no implicit tail.

use num::{BigInt, One, Signed, Zero};

use crate::arith::{divisors, factorize, gcd_u64, valuation_u64};
use crate::error::{Error, Result};
use crate::squareclass::square_units;

/// Exact integer coefficients `c_1 ..= c_N` of a truncated Dirichlet series.
/// `c_m` is the coefficient of `m^{-s}`; indexing is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletCoeffs {
    // coeffs[0] is an unused zero pad so that coeffs[m] is c_m.
    coeffs: Vec<BigInt>,
}

impl DirichletCoeffs {
    /// The all-zero series truncated at `limit >= 1`.
    pub fn zeros(limit: u64) -> Result<Self> {
        if limit == 0 {
            return Err(Error::domain("truncation limit must be positive"));
        }
        Ok(DirichletCoeffs {
            coeffs: vec![BigInt::zero(); limit as usize + 1],
        })
    }

    /// The multiplicative identity: `c_1 = 1`, all other coefficients zero.
    pub fn one(limit: u64) -> Result<Self> {
        let mut s = Self::zeros(limit)?;
        s.coeffs[1] = BigInt::one();
        Ok(s)
    }

    /// The series of the Riemann zeta function: every coefficient 1.
    pub fn zeta(limit: u64) -> Result<Self> {
        Ok(DirichletCoeffs {
            coeffs: std::iter::once(BigInt::zero())
                .chain((1..=limit).map(|_| BigInt::one()))
                .collect(),
        })
    }

    /// The series of `zeta(s - 1)`: `c_m = m`.
    pub fn zeta_shift(limit: u64) -> Result<Self> {
        if limit == 0 {
            return Err(Error::domain("truncation limit must be positive"));
        }
        Ok(DirichletCoeffs {
            coeffs: (0..=limit).map(BigInt::from).collect(),
        })
    }

    /// Build from explicit `(m, c_m)` terms; unspecified coefficients are 0.
    pub fn from_terms(limit: u64, terms: &[(u64, i64)]) -> Result<Self> {
        let mut s = Self::zeros(limit)?;
        for &(m, c) in terms {
            if m >= 1 && m <= limit {
                s.coeffs[m as usize] += BigInt::from(c);
            }
        }
        Ok(s)
    }

    pub fn from_fn(limit: u64, mut f: impl FnMut(u64) -> BigInt) -> Result<Self> {
        if limit == 0 {
            return Err(Error::domain("truncation limit must be positive"));
        }
        Ok(DirichletCoeffs {
            coeffs: std::iter::once(BigInt::zero())
                .chain((1..=limit).map(|m| f(m)))
                .collect(),
        })
    }

    pub fn limit(&self) -> u64 {
        self.coeffs.len() as u64 - 1
    }

    /// Coefficient of `m^{-s}`, `1 <= m <= limit`.
    pub fn coeff(&self, m: u64) -> &BigInt {
        &self.coeffs[m as usize]
    }

    pub fn set_coeff(&mut self, m: u64, value: BigInt) {
        assert!(m >= 1 && m <= self.limit());
        self.coeffs[m as usize] = value;
    }

    fn check_limits(&self, other: &Self) -> Result<()> {
        if self.limit() != other.limit() {
            return Err(Error::usage(format!(
                "series limits differ: {} vs {}",
                self.limit(),
                other.limit()
            )));
        }
        Ok(())
    }

    /// Dirichlet convolution: `c_m = sum_{d | m} x_d y_{m/d}`.
    pub fn dmul(&self, other: &Self) -> Result<Self> {
        self.check_limits(other)?;
        let n = self.limit();
        let mut out = Self::zeros(n)?;
        for d in 1..=n {
            let xd = &self.coeffs[d as usize];
            if xd.is_zero() {
                continue;
            }
            for q in 1..=n / d {
                let yq = &other.coeffs[q as usize];
                if !yq.is_zero() {
                    out.coeffs[(d * q) as usize] += xd * yq;
                }
            }
        }
        Ok(out)
    }

    /// Convolution inverse application: returns `q` with `q * other = self`
    /// up to the truncation limit. Requires `other` to have unit leading
    /// coefficient `c_1 = +-1`.
    pub fn ddiv(&self, other: &Self) -> Result<Self> {
        self.check_limits(other)?;
        let lead = &other.coeffs[1];
        if !lead.is_one() && !(-lead).is_one() {
            return Err(Error::domain(format!(
                "divisor must have unit leading coefficient, got c_1 = {lead}"
            )));
        }
        let negate = lead.is_negative();
        let n = self.limit();
        let mut q = self.clone();
        for m in 1..=n {
            if negate {
                let v = -&q.coeffs[m as usize];
                q.coeffs[m as usize] = v;
            }
            if q.coeffs[m as usize].is_zero() {
                continue;
            }
            for k in 2..=n / m {
                let sub = &q.coeffs[m as usize] * &other.coeffs[k as usize];
                q.coeffs[(m * k) as usize] -= sub;
            }
        }
        Ok(q)
    }

    /// Coefficientwise sum.
    pub fn dadd(&self, other: &Self) -> Result<Self> {
        self.check_limits(other)?;
        Ok(DirichletCoeffs {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Coefficientwise difference.
    pub fn dsub(&self, other: &Self) -> Result<Self> {
        self.check_limits(other)?;
        Ok(DirichletCoeffs {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Multiplication by `k^{-s}`: moves `c_j` to position `k * j`,
    /// dropping anything past the truncation limit.
    pub fn shift_scale(&self, k: u64) -> Self {
        assert!(k >= 1, "shift factor must be positive");
        let n = self.limit();
        let mut out = Self::zeros(n).expect("limit >= 1");
        for j in 1..=n / k {
            out.coeffs[(k * j) as usize] = self.coeffs[j as usize].clone();
        }
        out
    }

    /// Sum of coefficients `c_m` for `m < x`.
    pub fn partial_sum(&self, x: u64) -> BigInt {
        let top = x.saturating_sub(1).min(self.limit());
        let mut acc = BigInt::zero();
        for m in 1..=top {
            acc += &self.coeffs[m as usize];
        }
        acc
    }
}

/// Per-integer multiplicative tables up to a limit: smallest prime factor,
/// Moebius, totient, divisor sum, and the prime list.
#[derive(Debug, Clone)]
pub struct SieveTables {
    limit: u64,
    spf: Vec<u32>,
    mobius: Vec<i8>,
    totient: Vec<u64>,
    sigma1: Vec<u64>,
    primes: Vec<u64>,
}

/// Sieve limit guard: tables take ~21 bytes per integer.
const MAX_SIEVE_LIMIT: u64 = 200_000_000;

/// Build all tables up to `limit` with a linear sieve.
pub fn sieve_tables(limit: u64) -> Result<SieveTables> {
    if limit == 0 {
        return Err(Error::domain("sieve limit must be positive"));
    }
    if limit > MAX_SIEVE_LIMIT {
        return Err(Error::domain(format!(
            "sieve limit {limit} exceeds the supported maximum {MAX_SIEVE_LIMIT}"
        )));
    }
    let n = limit as usize;
    let mut spf = vec![0u32; n + 1];
    let mut mobius = vec![0i8; n + 1];
    let mut totient = vec![0u64; n + 1];
    let mut sigma1 = vec![0u64; n + 1];
    // sigma_1(p^e) for the spf power dividing each m, tracked to make
    // sigma_1 multiplicative updates O(1).
    let mut sig_pp = vec![0u64; n + 1];
    let mut primes: Vec<u64> = Vec::new();

    if n >= 1 {
        mobius[1] = 1;
        totient[1] = 1;
        sigma1[1] = 1;
        sig_pp[1] = 1;
    }
    for i in 2..=n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            mobius[i] = -1;
            totient[i] = i as u64 - 1;
            sigma1[i] = i as u64 + 1;
            sig_pp[i] = i as u64 + 1;
            primes.push(i as u64);
        }
        for &p in &primes {
            let p = p as usize;
            if p > spf[i] as usize || i * p > n {
                break;
            }
            let ip = i * p;
            spf[ip] = p as u32;
            if i % p == 0 {
                mobius[ip] = 0;
                totient[ip] = totient[i] * p as u64;
                sig_pp[ip] = sig_pp[i] * p as u64 + 1;
                sigma1[ip] = sigma1[i] / sig_pp[i] * sig_pp[ip];
            } else {
                mobius[ip] = -mobius[i];
                totient[ip] = totient[i] * (p as u64 - 1);
                sig_pp[ip] = p as u64 + 1;
                sigma1[ip] = sigma1[i] * (p as u64 + 1);
            }
        }
    }

    Ok(SieveTables {
        limit,
        spf,
        mobius,
        totient,
        sigma1,
        primes,
    })
}

impl SieveTables {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn mobius(&self, m: u64) -> i8 {
        self.mobius[m as usize]
    }

    pub fn totient(&self, m: u64) -> u64 {
        self.totient[m as usize]
    }

    pub fn sigma1(&self, m: u64) -> u64 {
        self.sigma1[m as usize]
    }

    pub fn smallest_prime_factor(&self, m: u64) -> u64 {
        self.spf[m as usize] as u64
    }

    pub fn is_prime(&self, m: u64) -> bool {
        m >= 2 && self.spf[m as usize] as u64 == m
    }

    /// Primes up to the sieve limit, increasing.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// p-adic valuation of `1 <= m <= limit` using the factor table.
    pub fn valuation(&self, m: u64, p: u64) -> u32 {
        assert!(m >= 1 && m <= self.limit);
        valuation_u64(m, p)
    }

    /// The totient series `zeta(s-1)/zeta(s)`: `c_m = phi(m)`.
    pub fn totient_series(&self, limit: u64) -> Result<DirichletCoeffs> {
        if limit > self.limit {
            return Err(Error::usage(format!(
                "requested limit {limit} exceeds sieve limit {}",
                self.limit
            )));
        }
        DirichletCoeffs::from_fn(limit, |m| BigInt::from(self.totient[m as usize]))
    }
}

/// Primes up to `limit`, increasing. Convenience wrapper around the sieve.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    sieve_tables(limit).expect("limit >= 2").primes
}

/// `gcd(x, y^inf)`: the largest divisor of `x` supported on the primes of
/// `y`. The pair `(gcd_inf(m, b), m / gcd_inf(m, b))` splits `m` into its
/// `b`-part and its `b`-coprime part.
pub fn gcd_inf(x: u64, y: u64) -> u64 {
    assert!(x >= 1 && y >= 1);
    let mut rest = x;
    let mut out = 1u64;
    loop {
        let g = gcd_u64(rest, y);
        if g == 1 {
            return out;
        }
        out *= g;
        rest /= g;
    }
}

/// `#{ d^2 mod b : d | m, gcd(d, b) = 1 }` — the coefficient of the inner
/// series in the main coefficient formula.
pub fn count_squares(b: u64, m: u64) -> u64 {
    assert!(b >= 1 && m >= 1);
    let b_mod = b as u128;
    let mut residues: Vec<u128> = divisors(m)
        .into_iter()
        .filter(|&d| gcd_u64(d, b) == 1)
        .map(|d| (d as u128 * d as u128) % b_mod)
        .collect();
    residues.sort_unstable();
    residues.dedup();
    residues.len() as u64
}

/// `1` iff some divisor `d` of `m` satisfies `d^2 = t mod b`. Requires `t`
/// to be a square unit mod `b`.
pub fn x_func(b: u64, t: u64, m: u64) -> Result<bool> {
    assert!(m >= 1);
    if !square_units(b).contains(t) {
        return Err(Error::domain(format!("t = {t} is not a square unit mod {b}")));
    }
    let b_mod = b as u128;
    let t_res = t as u128 % b_mod;
    Ok(divisors(m)
        .into_iter()
        .any(|d| (d as u128 * d as u128) % b_mod == t_res))
}

/// The series `sum_m count_squares(b, m) m^{-s}` up to `limit`, built with
/// a divisor sieve: for each coprime `d`, mark the residue bit of `d^2` on
/// every multiple of `d`, then popcount.
fn count_squares_series(b: u64, limit: u64) -> Result<DirichletCoeffs> {
    if limit == 0 {
        return Err(Error::domain("truncation limit must be positive"));
    }
    let group = square_units(b);
    let words = group.len().div_ceil(64);
    let n = limit as usize;
    let mut bits = vec![0u64; (n + 1) * words];
    let b_mod = b as u128;
    for d in 1..=limit {
        if gcd_u64(d, b) != 1 {
            continue;
        }
        let residue = ((d as u128 * d as u128) % b_mod) as u64;
        let idx = group
            .position(residue)
            .expect("square of a unit is a square unit");
        let (word, bit) = (idx / 64, idx % 64);
        let mut at = d as usize;
        while at <= n {
            bits[at * words + word] |= 1u64 << bit;
            at += d as usize;
        }
    }
    DirichletCoeffs::from_fn(limit, |m| {
        let base = m as usize * words;
        let count: u32 = bits[base..base + words].iter().map(|w| w.count_ones()).sum();
        BigInt::from(count)
    })
}

/// Exact coefficients of the proper-class zeta function of a sublattice
/// with invariant `B`: the convolution of the totient series with
/// `sum_{b | B} (B/b)^{-s} (sum_m count_squares(b, m) m^{-s})`.
///
/// `c_1 = 1` and every coefficient is nonnegative.
pub fn proper_class_coeffs(b_inv: u64, limit: u64) -> Result<DirichletCoeffs> {
    assert!(b_inv >= 1, "invariant B must be positive");
    let tables = sieve_tables(limit)?;
    proper_class_coeffs_with(&tables, b_inv, limit)
}

/// As [`proper_class_coeffs`], reusing precomputed sieve tables.
pub fn proper_class_coeffs_with(
    tables: &SieveTables,
    b_inv: u64,
    limit: u64,
) -> Result<DirichletCoeffs> {
    assert!(b_inv >= 1, "invariant B must be positive");
    let mut inner = DirichletCoeffs::zeros(limit)?;
    for b in divisors(b_inv) {
        let shift = b_inv / b;
        if shift > limit {
            continue;
        }
        let cs = count_squares_series(b, limit / shift)?;
        for j in 1..=limit / shift {
            let v = inner.coeff(shift * j) + cs.coeff(j);
            inner.set_coeff(shift * j, v);
        }
    }
    let result = tables.totient_series(limit)?.dmul(&inner)?;
    debug_assert!(result.coeff(1).is_one());
    debug_assert!((1..=limit).all(|m| !result.coeff(m).is_negative()));
    Ok(result)
}

/// Local zeta factor `1/(1 - p^{-s})`.
fn local_zeta(p: u64, s: f64) -> f64 {
    1.0 / (1.0 - (p as f64).powf(-s))
}

/// Numeric residual of the Euler-factor identity
/// `F(b, s) * sum_{n | b^inf} sigma_1(n) n^{-s} = b^s * prod_{p | b} 1/(1 - p^{1-s})`,
/// with the sum truncated at `n <= trunc`. Here `F(b, s) = sum_{d | b} d^s mu(b/d)`.
///
/// Requires `s > 2` for convergence. The truncation tail is bounded by
/// `2 * sum_{n > trunc, n | b^inf} n^{1-s}`, which for the sparse set of
/// `b`-supported integers decays geometrically past `trunc`.
pub fn euler_factor_residual(b: u64, s: f64, trunc: u64) -> Result<f64> {
    assert!(b >= 1);
    if s <= 2.0 {
        return Err(Error::domain("s must exceed 2 for the sigma series to converge"));
    }
    if trunc < b {
        return Err(Error::domain("truncation bound must be at least b"));
    }

    // F(b, s) via the Moebius function of b/d.
    let mut f = 0.0f64;
    for d in divisors(b) {
        let mu = mobius_u64(b / d);
        if mu != 0 {
            f += mu as f64 * (d as f64).powf(s);
        }
    }

    // Enumerate n | b^inf with n <= trunc by DFS over the primes of b,
    // carrying sigma_1 multiplicatively.
    let ps: Vec<u64> = crate::arith::prime_divisors(b);
    let mut sum = 0.0f64;
    let mut stack: Vec<(usize, u64, f64)> = vec![(0, 1, 1.0)];
    while let Some((i, n, sig)) = stack.pop() {
        if i == ps.len() {
            sum += sig * (n as f64).powf(-s);
            continue;
        }
        let p = ps[i];
        let mut power = 1u64;
        let mut sig_pp = 1.0f64;
        loop {
            stack.push((i + 1, n * power, sig * sig_pp));
            match power.checked_mul(p) {
                Some(next) if n <= trunc / next => {
                    power = next;
                    sig_pp = sig_pp * p as f64 + 1.0;
                }
                _ => break,
            }
        }
    }

    let rhs: f64 = (b as f64).powf(s)
        * ps.iter()
            .map(|&p| local_zeta(p, s - 1.0))
            .product::<f64>();
    Ok((f * sum - rhs).abs())
}

fn mobius_u64(m: u64) -> i8 {
    let mut mu = 1i8;
    for (_, e) in factorize(m) {
        if e > 1 {
            return 0;
        }
        mu = -mu;
    }
    mu
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::ToPrimitive;

    #[test]
    fn sieve_examples() {
        let t = sieve_tables(10).unwrap();
        assert_eq!(t.sigma1(6), 12);
        assert_eq!(t.totient(6), 2);
        assert_eq!(t.mobius(6), 1);
        assert_eq!(t.mobius(4), 0);
        assert_eq!((t.totient(1), t.sigma1(1), t.mobius(1)), (1, 1, 1));
        assert_eq!(t.primes(), &[2, 3, 5, 7]);
        assert!(sieve_tables(0).is_err());
    }

    #[test]
    fn sieve_matches_direct_factorization() {
        let t = sieve_tables(2000).unwrap();
        for m in 1..=2000u64 {
            let fs = factorize(m);
            let sigma: u64 = divisors(m).iter().sum();
            let phi: u64 = fs
                .iter()
                .fold(m, |acc, &(p, _)| acc / p * (p - 1));
            let mu: i8 = if fs.iter().any(|&(_, e)| e > 1) {
                0
            } else {
                if fs.len() % 2 == 0 {
                    1
                } else {
                    -1
                }
            };
            assert_eq!(t.sigma1(m), sigma, "sigma1({m})");
            assert_eq!(t.totient(m), phi, "phi({m})");
            assert_eq!(t.mobius(m), mu, "mu({m})");
        }
    }

    #[test]
    fn dmul_examples() {
        let zeta = DirichletCoeffs::zeta(4).unwrap();
        let tau = zeta.dmul(&zeta).unwrap();
        let vals: Vec<i64> = (1..=4).map(|m| tau.coeff(m).to_i64().unwrap()).collect();
        assert_eq!(vals, vec![1, 2, 2, 3]);

        let sigma = DirichletCoeffs::zeta(6)
            .unwrap()
            .dmul(&DirichletCoeffs::zeta_shift(6).unwrap())
            .unwrap();
        assert_eq!(sigma.coeff(6), &BigInt::from(12));

        let one = DirichletCoeffs::one(6).unwrap();
        assert_eq!(sigma.dmul(&one).unwrap(), sigma);
        assert!(sigma.dmul(&DirichletCoeffs::one(5).unwrap()).is_err());
    }

    #[test]
    fn ddiv_examples() {
        let one = DirichletCoeffs::one(6).unwrap();
        let zeta = DirichletCoeffs::zeta(6).unwrap();
        let mu = one.ddiv(&zeta).unwrap();
        let vals: Vec<i64> = (1..=6).map(|m| mu.coeff(m).to_i64().unwrap()).collect();
        assert_eq!(vals, vec![1, -1, -1, 0, -1, 1]);

        let phi = DirichletCoeffs::zeta_shift(6).unwrap().ddiv(&zeta).unwrap();
        let vals: Vec<i64> = (1..=6).map(|m| phi.coeff(m).to_i64().unwrap()).collect();
        assert_eq!(vals, vec![1, 1, 2, 2, 4, 2]);

        let x = DirichletCoeffs::from_terms(6, &[(1, 1), (2, 5), (3, -7), (6, 2)]).unwrap();
        assert_eq!(x.ddiv(&x).unwrap(), one);
        assert!(one.ddiv(&DirichletCoeffs::zeta_shift(6).unwrap().shift_scale(2)).is_err());
    }

    #[test]
    fn ddiv_handles_negative_unit() {
        let x = DirichletCoeffs::from_terms(8, &[(1, 3), (4, -2), (7, 1)]).unwrap();
        let y = DirichletCoeffs::from_terms(8, &[(1, -1), (2, 4), (5, -3)]).unwrap();
        let q = x.ddiv(&y).unwrap();
        assert_eq!(q.dmul(&y).unwrap(), x);
    }

    #[test]
    fn shift_scale_examples() {
        let zeta = DirichletCoeffs::zeta(6).unwrap();
        assert_eq!(zeta.shift_scale(1), zeta);
        let shifted = zeta.shift_scale(2);
        let vals: Vec<i64> = (1..=6).map(|m| shifted.coeff(m).to_i64().unwrap()).collect();
        assert_eq!(vals, vec![0, 1, 0, 1, 0, 1]);

        let x = DirichletCoeffs::from_terms(6, &[(1, 1), (2, 5)]).unwrap();
        let shifted = x.shift_scale(3);
        assert_eq!(shifted.coeff(3), &BigInt::one());
        assert_eq!(shifted.coeff(6), &BigInt::from(5));
    }

    #[test]
    fn count_squares_examples() {
        assert_eq!(count_squares(5, 6), 2);
        assert_eq!(count_squares(1, 360), 1);
        assert_eq!(count_squares(5, 5), 1);
    }

    #[test]
    fn count_squares_series_matches_pointwise() {
        for b in [1u64, 2, 5, 7, 12, 16, 24] {
            let series = count_squares_series(b, 200).unwrap();
            for m in 1..=200 {
                assert_eq!(
                    series.coeff(m).to_u64().unwrap(),
                    count_squares(b, m),
                    "b = {b}, m = {m}"
                );
            }
        }
    }

    #[test]
    fn x_func_examples() {
        assert!(x_func(5, 4, 6).unwrap());
        assert!(x_func(5, 4, 3).unwrap());
        assert!(!x_func(5, 4, 1).unwrap());
        assert!(x_func(5, 2, 6).is_err());
    }

    #[test]
    fn gcd_inf_examples() {
        assert_eq!(gcd_inf(60, 10), 20);
        assert_eq!(gcd_inf(7, 10), 1);
        assert_eq!(gcd_inf(8, 2), 8);
        assert_eq!(gcd_inf(1, 1), 1);
        assert_eq!(gcd_inf(360, 6), 72);
    }

    #[test]
    fn proper_class_coeffs_examples() {
        let c = proper_class_coeffs(1, 20).unwrap();
        for m in 1..=20 {
            assert_eq!(c.coeff(m), &BigInt::from(m));
        }
        let c = proper_class_coeffs(2, 10).unwrap();
        assert_eq!(c.coeff(2), &BigInt::from(3));
        for b in [3u64, 7, 12, 24] {
            assert!(proper_class_coeffs(b, 8).unwrap().coeff(1).is_one());
        }
    }

    #[test]
    fn euler_factor_residual_examples() {
        assert_eq!(euler_factor_residual(1, 3.0, 10).unwrap(), 0.0);
        assert!(euler_factor_residual(6, 3.0, 10_000).unwrap() < 1e-6);
        assert!(euler_factor_residual(2, 2.0, 100).is_err());
        // The two-sided identity at b = 2, s = 3: F = 7, the sum tends to
        // 8/7 * zeta_2(2) = 32/21, and the right side is 8 * 4/3 = 32/3.
        assert!(euler_factor_residual(2, 3.0, 1 << 20).unwrap() < 1e-9);
    }

    #[test]
    fn partial_sums() {
        let zeta = DirichletCoeffs::zeta_shift(10).unwrap();
        assert_eq!(zeta.partial_sum(5), BigInt::from(1 + 2 + 3 + 4));
        assert_eq!(zeta.partial_sum(1), BigInt::zero());
    }
}
