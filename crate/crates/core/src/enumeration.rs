//! Brute-force oracle machinery: sublattice enumeration in Hermite normal
//! form, the rational coset sets attached to divisors, and the ideals
//! `M(B; d)` and `C(B; d)` that control when those cosets intersect.
//!
//! Everything here is optimized for clarity, not speed; these are the
//! trusted reference computations the formula paths are checked against.

use std::collections::HashSet;

use num::{BigInt, BigUint, Integer, One, Signed, Zero};

use crate::arith::{divisors, gcd_u64, prime_divisors, valuation_big, valuation_u64};
use crate::dirichlet::gcd_inf;
use crate::error::{Error, Result};
use crate::lattice::{class_invariant, Fraction, SublatticeHNF};
use crate::squareclass::square_units;

/// A strictly increasing tuple `d_1 < d_2 < ... < d_k` of positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTuple {
    divisors: Vec<u64>,
}

impl DivisorTuple {
    /// Requires a nonempty, strictly increasing sequence of positive
    /// integers. Duplicates are rejected, not deduplicated.
    pub fn new(divisors: Vec<u64>) -> Result<Self> {
        if divisors.is_empty() {
            return Err(Error::domain("divisor tuple must be nonempty"));
        }
        if divisors[0] == 0 {
            return Err(Error::domain("divisors must be positive"));
        }
        if !divisors.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::domain("divisor tuple must be strictly increasing"));
        }
        Ok(DivisorTuple { divisors })
    }

    pub fn elements(&self) -> &[u64] {
        &self.divisors
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn gcd(&self) -> u64 {
        self.divisors.iter().copied().fold(0, gcd_u64)
    }

    pub fn lcm(&self) -> BigUint {
        self.divisors
            .iter()
            .fold(BigUint::one(), |acc, &d| acc.lcm(&BigUint::from(d)))
    }
}

/// A finite set of cosets of Q/Z, stored as canonical [`Fraction`]s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSet {
    elements: HashSet<Fraction>,
}

impl CosetSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, f: &Fraction) -> bool {
        self.elements.contains(f)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Fraction> {
        self.elements.iter()
    }

    /// Elements in increasing numeric order, for deterministic output.
    pub fn sorted(&self) -> Vec<Fraction> {
        let mut v: Vec<Fraction> = self.elements.iter().copied().collect();
        v.sort();
        v
    }
}

/// All sublattices of index `m` in Hermite normal form, ordered by `(a, b)`.
/// There are `sigma_1(m)` of them.
pub fn enumerate_sublattices(m: u64) -> Result<Vec<SublatticeHNF>> {
    if m == 0 {
        return Err(Error::domain("index must be positive"));
    }
    let mut subs = Vec::new();
    for a in divisors(m) {
        let d = m / a;
        for b in 0..d {
            subs.push(SublatticeHNF { a, b, d });
        }
    }
    Ok(subs)
}

/// Number of proper isometry classes of index-`m` sublattices of the
/// `(A, B)` lattice, by enumerating all HNF sublattices and counting
/// distinct class invariants.
pub fn bruteforce_am(a: u64, b: u64, m: u64) -> Result<u64> {
    let mut invariants = HashSet::new();
    for sub in enumerate_sublattices(m)? {
        invariants.insert(class_invariant(a, b, &sub)?);
    }
    Ok(invariants.len() as u64)
}

/// The coset `S_{m,d,A/B} = ((A/B)(m/d)/d + (1/d)Z)/Z`; exactly `d` cosets.
pub fn coset_s(m: u64, d: u64, a: u64, b: u64) -> Result<CosetSet> {
    if d == 0 || m % d != 0 {
        return Err(Error::domain(format!("{d} does not divide {m}")));
    }
    if b == 0 || gcd_u64(a, b) != 1 {
        return Err(Error::domain(format!("gcd(A, B) must be 1, got ({a}, {b})")));
    }
    let den = b as u128 * d as u128;
    let mut elements = HashSet::with_capacity(d as usize);
    for j in 0..d {
        // (A (m/d) + j B) / (B d)
        elements.insert(Fraction::from_bilinear(a, m / d, j, b, den)?);
    }
    debug_assert_eq!(elements.len(), d as usize);
    Ok(CosetSet { elements })
}

/// Cardinality of the union of `S_{m,d,A/B}` over all divisors `d` of `m`.
/// An independent route to `bruteforce_am`.
pub fn coset_union_count(m: u64, a: u64, b: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::domain("index must be positive"));
    }
    let mut union = HashSet::new();
    for d in divisors(m) {
        union.extend(coset_s(m, d, a, b)?.elements);
    }
    Ok(union.len() as u64)
}

/// Cardinality of the intersection of the cosets `S_{m,d_i,A/B}`. Either 0
/// or, when nonempty, `gcd(d_1, ..., d_k)`.
pub fn coset_intersection_card(m: u64, dt: &DivisorTuple, a: u64, b: u64) -> Result<u64> {
    for &d in dt.elements() {
        if d == 0 || m % d != 0 {
            return Err(Error::domain(format!("{d} does not divide {m}")));
        }
    }
    let mut iter = dt.elements().iter();
    let first = *iter.next().expect("tuple is nonempty");
    let mut acc = coset_s(m, first, a, b)?.elements;
    for &d in iter {
        let next = coset_s(m, d, a, b)?;
        acc.retain(|f| next.contains(f));
    }
    Ok(acc.len() as u64)
}

/// A positive rational in lowest terms, used only as an ideal generator.
struct RationalGen {
    num: BigUint,
    den: BigUint,
}

impl RationalGen {
    fn reduced(num: BigUint, den: BigUint) -> Self {
        let g = num.gcd(&den);
        RationalGen {
            num: num / &g,
            den: den / g,
        }
    }
}

/// The generator `M(B; d)` of the intersection of the ideals `d_i Z` and
/// `B gcd(d) (d_i/d_j - d_j/d_i)^{-1} Z` over all pairs `i < j`, computed
/// as an lcm of rational generators (lcm of numerators over gcd of
/// denominators, each generator in lowest terms).
///
/// Always satisfies `lcm(d) | M | B * lcm(d)`.
pub fn m_direct(b_inv: u64, dt: &DivisorTuple) -> BigUint {
    assert!(b_inv >= 1, "B must be positive");
    let lcm = dt.lcm();
    let d = dt.gcd();
    let mut num = lcm.clone();
    let mut den = BigUint::one();
    let ds = dt.elements();
    for i in 0..ds.len() {
        for j in (i + 1)..ds.len() {
            // B d (d_i/d_j - d_j/d_i)^{-1} = +- B d d_i d_j / (d_i^2 - d_j^2)
            let di = BigUint::from(ds[i]);
            let dj = BigUint::from(ds[j]);
            let gen_num = BigUint::from(b_inv) * BigUint::from(d) * &di * &dj;
            let diff = (BigInt::from(ds[i] as u128 * ds[i] as u128)
                - BigInt::from(ds[j] as u128 * ds[j] as u128))
            .abs()
            .to_biguint()
            .expect("absolute value is nonnegative");
            let g = RationalGen::reduced(gen_num, diff);
            num = num.lcm(&g.num);
            den = den.gcd(&g.den);
        }
    }
    debug_assert!(den.is_one(), "intersection generator must be an integer");
    let m = num / den;
    debug_assert!((&m % &lcm).is_zero());
    debug_assert!((BigUint::from(b_inv) * &lcm % &m).is_zero());
    m
}

/// `M(B; d)` assembled prime by prime from valuations: for each prime
/// `p | B * lcm(d)`, the exponent is `max nu_p(d_i) + nu_p(B)`, lowered by
/// `min(nu_p(B), min_{i<j} nu_p(d_i^2/d^2 - d_j^2/d^2))` when all the
/// `nu_p(d_i)` coincide.
pub fn m_valuation(b_inv: u64, dt: &DivisorTuple) -> BigUint {
    assert!(b_inv >= 1, "B must be positive");
    let d = dt.gcd();
    let ds = dt.elements();
    let ratios: Vec<u64> = ds.iter().map(|&di| di / d).collect();

    let mut primes: Vec<u64> = prime_divisors(b_inv);
    for &di in ds {
        primes.extend(prime_divisors(di));
    }
    primes.sort_unstable();
    primes.dedup();

    let mut m = BigUint::one();
    for p in primes {
        let vals: Vec<u32> = ds.iter().map(|&di| valuation_u64(di, p)).collect();
        let max = *vals.iter().max().expect("tuple is nonempty");
        let vb = if b_inv % p == 0 { valuation_u64(b_inv, p) } else { 0 };
        let all_equal = vals.iter().all(|&v| v == vals[0]);
        let exp = if !all_equal {
            max + vb
        } else {
            // min over pairs of nu_p((d_i/d)^2 - (d_j/d)^2); empty for k = 1,
            // in which case no lowering applies.
            let mut pair_min: Option<u32> = None;
            for i in 0..ratios.len() {
                for j in (i + 1)..ratios.len() {
                    let diff = (BigInt::from(ratios[i] as u128 * ratios[i] as u128)
                        - BigInt::from(ratios[j] as u128 * ratios[j] as u128))
                    .abs()
                    .to_biguint()
                    .expect("absolute value is nonnegative");
                    let v = valuation_big(&diff, p);
                    pair_min = Some(pair_min.map_or(v, |cur| cur.min(v)));
                }
            }
            match pair_min {
                Some(v) => max + vb - vb.min(v),
                None => max,
            }
        };
        m *= BigUint::from(p).pow(exp);
    }
    m
}

/// `C(B; d) = B * lcm(d) / M(B; d)`, a positive integer dividing `B`.
pub fn c_of(b_inv: u64, dt: &DivisorTuple) -> BigUint {
    let m = m_direct(b_inv, dt);
    let (q, r) = (BigUint::from(b_inv) * dt.lcm()).div_rem(&m);
    debug_assert!(r.is_zero());
    debug_assert!((BigUint::from(b_inv) % &q).is_zero());
    q
}

fn check_delta_t(b: u64, m: u64, delta: u64, t: u64) -> Result<()> {
    if delta == 0 || gcd_inf(m, b) % delta != 0 {
        return Err(Error::domain(format!(
            "delta = {delta} must divide gcd({m}, {b}^inf) = {}",
            gcd_inf(m, b)
        )));
    }
    if !square_units(b).contains(t) {
        return Err(Error::domain(format!("t = {t} is not a square unit mod {b}")));
    }
    Ok(())
}

/// The divisor class `D_b(m, delta, t) = { d | m : delta | d, (d/delta)^2 = t mod b }`.
pub fn d_set(b: u64, m: u64, delta: u64, t: u64) -> Result<Vec<u64>> {
    check_delta_t(b, m, delta, t)?;
    let b_mod = b as u128;
    let t_res = t as u128 % b_mod;
    Ok(divisors(m)
        .into_iter()
        .filter(|&d| {
            d % delta == 0 && {
                let q = (d / delta) as u128;
                (q * q) % b_mod == t_res
            }
        })
        .collect())
}

/// The three equivalent conditions on a divisor tuple: `b | C(B; d)`; the
/// ratios `(d_i/d)^2` share a single square-unit residue mod `b`; and all
/// `d_i` lie in one class `D_b(m, delta, t)`. Each flag is computed
/// independently.
pub fn coset_class_flags(b_inv: u64, b: u64, m: u64, dt: &DivisorTuple) -> Result<(bool, bool, bool)> {
    if b == 0 || b_inv % b != 0 {
        return Err(Error::domain(format!("b = {b} must divide B = {b_inv}")));
    }
    for &d in dt.elements() {
        if m % d != 0 {
            return Err(Error::domain(format!("{d} does not divide {m}")));
        }
    }

    let flag_c = (c_of(b_inv, dt) % BigUint::from(b)).is_zero();

    let d = dt.gcd();
    let ratios: Vec<u64> = dt.elements().iter().map(|&di| di / d).collect();
    let flag_residue = if ratios.iter().any(|&r| gcd_u64(r, b) != 1) {
        false
    } else {
        let residue = |r: u64| (r as u128 * r as u128) % b as u128;
        let first = residue(ratios[0]);
        ratios.iter().all(|&r| residue(r) == first)
    };

    let group = square_units(b);
    let mb = gcd_inf(m, b);
    let mut flag_class = false;
    'outer: for delta in divisors(mb) {
        for &t in group.elements() {
            let class = d_set(b, m, delta, t)?;
            if dt.elements().iter().all(|di| class.contains(di)) {
                flag_class = true;
                break 'outer;
            }
        }
    }

    Ok((flag_c, flag_residue, flag_class))
}

/// Checks the counting identity for a divisor class: the union of the
/// subgroups `(1/d)Z/Z` over `d` in `D_b(m, delta, t)` has exactly `delta`
/// times as many elements as the corresponding union over divisors of the
/// `b`-coprime part of `m`. Both sides are computed by explicit set union.
pub fn union_scaling_check(b: u64, m: u64, delta: u64, t: u64) -> Result<bool> {
    check_delta_t(b, m, delta, t)?;
    let lhs = fraction_union(&d_set(b, m, delta, t)?);

    let m_co = m / gcd_inf(m, b);
    let b_mod = b as u128;
    let t_res = t as u128 % b_mod;
    let rhs_divs: Vec<u64> = divisors(m_co)
        .into_iter()
        .filter(|&d| (d as u128 * d as u128) % b_mod == t_res)
        .collect();
    let rhs = fraction_union(&rhs_divs);

    Ok(lhs == delta as usize * rhs)
}

/// Size of the union of the subgroups `(1/d)Z/Z` for `d` in `ds`.
fn fraction_union(ds: &[u64]) -> usize {
    let mut set = HashSet::new();
    for &d in ds {
        for j in 0..d {
            set.insert(Fraction::new(j as u128, d as u128).expect("d > 0"));
        }
    }
    set.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dt(ds: &[u64]) -> DivisorTuple {
        DivisorTuple::new(ds.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_sublattices(1).unwrap(),
            vec![SublatticeHNF { a: 1, b: 0, d: 1 }]
        );
        let m2 = enumerate_sublattices(2).unwrap();
        assert_eq!(
            m2,
            vec![
                SublatticeHNF { a: 1, b: 0, d: 2 },
                SublatticeHNF { a: 1, b: 1, d: 2 },
                SublatticeHNF { a: 2, b: 0, d: 1 },
            ]
        );
        assert_eq!(enumerate_sublattices(4).unwrap().len(), 7); // sigma_1(4)
        assert!(enumerate_sublattices(0).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(bruteforce_am(1, 1, 2).unwrap(), 2);
        assert_eq!(bruteforce_am(1, 2, 2).unwrap(), 3);
        assert_eq!(bruteforce_am(3, 7, 1).unwrap(), 1);
        assert!(bruteforce_am(2, 4, 2).is_err());
    }

    #[test]
    fn coset_examples() {
        let s = coset_s(2, 1, 1, 1).unwrap();
        assert_eq!(s.sorted(), vec![Fraction::zero()]);
        let s = coset_s(2, 2, 1, 1).unwrap();
        assert_eq!(
            s.sorted(),
            vec![Fraction::zero(), Fraction::new(1, 2).unwrap()]
        );
        let s = coset_s(2, 2, 1, 2).unwrap();
        assert_eq!(
            s.sorted(),
            vec![Fraction::new(1, 4).unwrap(), Fraction::new(3, 4).unwrap()]
        );
        assert!(coset_s(2, 3, 1, 1).is_err());
    }

    #[test]
    fn union_count_examples() {
        assert_eq!(coset_union_count(2, 1, 1).unwrap(), 2);
        assert_eq!(coset_union_count(1, 5, 7).unwrap(), 1);
        assert_eq!(coset_union_count(2, 1, 2).unwrap(), 3);
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(coset_intersection_card(6, &dt(&[2, 3]), 1, 5).unwrap(), 1);
        assert_eq!(coset_intersection_card(6, &dt(&[1, 2]), 1, 5).unwrap(), 0);
        assert_eq!(coset_intersection_card(4, &dt(&[2]), 1, 1).unwrap(), 2);
        assert!(coset_intersection_card(4, &dt(&[3]), 1, 1).is_err());
    }

    #[test]
    fn m_direct_examples() {
        assert_eq!(m_direct(5, &dt(&[1, 2])), BigUint::from(10u32));
        assert_eq!(m_direct(5, &dt(&[2, 3])), BigUint::from(6u32));
        assert_eq!(m_direct(7, &dt(&[4])), BigUint::from(4u32));
    }

    #[test]
    fn m_valuation_examples() {
        assert_eq!(m_valuation(5, &dt(&[1, 2])), BigUint::from(10u32));
        assert_eq!(m_valuation(5, &dt(&[2, 3])), BigUint::from(6u32));
        assert_eq!(m_valuation(1, &dt(&[9])), BigUint::from(9u32));
    }

    #[test]
    fn c_examples() {
        assert_eq!(c_of(5, &dt(&[2, 3])), BigUint::from(5u32));
        assert_eq!(c_of(5, &dt(&[1, 2])), BigUint::one());
        assert_eq!(c_of(1, &dt(&[3, 7])), BigUint::one());
    }

    #[test]
    fn divisor_tuple_validation() {
        assert!(DivisorTuple::new(vec![]).is_err());
        assert!(DivisorTuple::new(vec![2, 2]).is_err());
        assert!(DivisorTuple::new(vec![3, 2]).is_err());
        assert!(DivisorTuple::new(vec![0, 1]).is_err());
        assert_eq!(dt(&[4, 6]).gcd(), 2);
        assert_eq!(dt(&[4, 6]).lcm(), BigUint::from(12u32));
    }

    #[test]
    fn d_set_examples() {
        assert_eq!(d_set(5, 6, 1, 4).unwrap(), vec![2, 3]);
        assert_eq!(d_set(5, 6, 1, 1).unwrap(), vec![1, 6]);
        assert_eq!(d_set(1, 6, 1, 1).unwrap(), vec![1, 2, 3, 6]);
        assert!(d_set(5, 6, 5, 1).is_err()); // 5 does not divide gcd(6, 5^inf) = 1
        assert!(d_set(5, 6, 1, 2).is_err()); // 2 is not a square mod 5
    }

    #[test]
    fn prop_flags_examples() {
        assert_eq!(coset_class_flags(5, 5, 6, &dt(&[2, 3])).unwrap(), (true, true, true));
        assert_eq!(
            coset_class_flags(5, 5, 6, &dt(&[1, 2])).unwrap(),
            (false, false, false)
        );
        assert_eq!(coset_class_flags(1, 1, 12, &dt(&[2, 6])).unwrap(), (true, true, true));
        assert!(coset_class_flags(5, 3, 6, &dt(&[1, 2])).is_err());
    }

    #[test]
    fn union_scaling_examples() {
        assert!(union_scaling_check(5, 6, 1, 4).unwrap());
        assert!(union_scaling_check(2, 4, 2, 1).unwrap());
        assert!(union_scaling_check(1, 1, 1, 1).unwrap());
    }
}
