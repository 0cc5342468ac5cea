//! Canonical forms for full-rank sublattices of the hyperbolic plane and
//! the proper-isometry decision procedure.
//!
//! The ambient lattice is `H = Z e1 + Z e2` with `Q(e1) = Q(e2) = 0` and
//! `B(e1, e2) = 1/2`. A full-rank sublattice always has a basis of the form
//! `(alpha e1 + beta e2, gamma e2)`; row reduction turns that triple into a
//! canonical `(n, A, B)` whose Gram matrix is `[[nA, nB/2], [nB/2, 0]]`.
//! Two index-m sublattices of the `(A, B)` lattice are properly isometric
//! exactly when their class invariants — elements of Q/Z — coincide.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, BigUint, Integer, Zero};

use crate::arith::{add_mod_u128, gcd_u128, gcd_u64};
use crate::error::{Error, Result};

/// A canonical representative of an element of Q/Z: a reduced fraction
/// `num/den` with `0 <= num < den`.
///
/// Constructors take parts that fit in u128 after one multiplication of
/// u64-sized inputs, so reduction mod 1 never overflows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u128,
    den: u128,
}

impl Fraction {
    /// Reduce `num/den` modulo 1 into canonical form. `den` must be nonzero.
    pub fn new(num: u128, den: u128) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain("fraction with zero denominator"));
        }
        let num = num % den;
        let g = gcd_u128(num, den); // gcd(0, den) = den, so 0 reduces to 0/1
        Ok(Fraction {
            num: num / g,
            den: den / g,
        })
    }

    pub fn zero() -> Self {
        Fraction { num: 0, den: 1 }
    }

    pub fn num(&self) -> u128 {
        self.num
    }

    pub fn den(&self) -> u128 {
        self.den
    }

    /// `(a*x + b*y) / den` reduced mod 1, computed without overflow for any
    /// u64-sized inputs.
    pub(crate) fn from_bilinear(a: u64, x: u64, b: u64, y: u64, den: u128) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain("fraction with zero denominator"));
        }
        let t1 = (a as u128 * x as u128) % den;
        let t2 = (b as u128 * y as u128) % den;
        Fraction::new(add_mod_u128(t1, t2, den), den)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross-multiplication needs 256 bits in the worst case.
        let lhs = BigUint::from(self.num) * BigUint::from(other.den);
        let rhs = BigUint::from(other.num) * BigUint::from(self.den);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// A sublattice of H presented as `Z(alpha e1 + beta e2) + Z(gamma e2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisTriple {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
}

impl BasisTriple {
    /// Full rank requires `alpha != 0` and `gamma != 0`.
    pub fn new(alpha: i64, beta: i64, gamma: i64) -> Result<Self> {
        if alpha == 0 || gamma == 0 {
            return Err(Error::domain("rank deficient"));
        }
        Ok(BasisTriple { alpha, beta, gamma })
    }
}

/// The canonical name `(n, A, B)` of a sublattice of H: Gram matrix
/// `[[nA, nB/2], [nB/2, 0]]` with `1 <= A <= B` and `gcd(A, B) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalLattice {
    n: u128,
    a: u64,
    b: u64,
}

/// Gram matrix entries of a canonical lattice, as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    pub g11: BigRational,
    pub g12: BigRational,
    pub g21: BigRational,
    pub g22: BigRational,
}

impl GramMatrix {
    pub fn det(&self) -> BigRational {
        &self.g11 * &self.g22 - &self.g12 * &self.g21
    }
}

impl CanonicalLattice {
    /// Build directly from already-canonical data.
    pub fn new(n: u128, a: u64, b: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("scale n must be positive"));
        }
        if a == 0 || b == 0 || a > b || gcd_u64(a, b) != 1 {
            return Err(Error::domain(format!(
                "(A, B) = ({a}, {b}) is not canonical: need 1 <= A <= B and gcd(A, B) = 1"
            )));
        }
        Ok(CanonicalLattice { n, a, b })
    }

    /// Canonicalize a basis triple.
    ///
    /// Signs are absorbed by negating basis vectors, then with
    /// `g = gcd(beta, gamma)` the triple maps to `n = alpha * g`,
    /// `B = gamma / g`, and `A` the representative of `beta / g` mod `B`
    /// lying in `[1, B]`. The result names the same subgroup of H.
    pub fn from_basis(t: BasisTriple) -> Result<Self> {
        if t.alpha == 0 || t.gamma == 0 {
            return Err(Error::domain("rank deficient"));
        }
        // Negating (alpha e1 + beta e2) flips alpha and beta together;
        // negating (gamma e2) flips gamma alone. Work in i128 so that
        // |i64::MIN| and the product alpha * gcd stay exact.
        let (alpha, beta) = if t.alpha < 0 {
            (-(t.alpha as i128), -(t.beta as i128))
        } else {
            (t.alpha as i128, t.beta as i128)
        };
        let gamma = (t.gamma as i128).unsigned_abs();

        let g = gcd_u128(beta.unsigned_abs(), gamma); // >= 1 since gamma > 0
        let n = alpha as u128 * g;
        let b = (gamma / g) as u64;
        let a_res = beta.rem_euclid(b as i128 * g as i128) as u128 / g; // (beta/g) mod b, in [0, b)
        let a = if a_res == 0 { b } else { a_res as u64 };
        CanonicalLattice::new(n, a, b)
    }

    /// Re-express the canonical form as a basis triple (with coprime
    /// `beta = A`, `gamma = B`), provided `n` fits in i64.
    pub fn to_basis(&self) -> Result<BasisTriple> {
        let alpha = i64::try_from(self.n)
            .map_err(|_| Error::domain("scale n does not fit a basis triple"))?;
        BasisTriple::new(alpha, self.a as i64, self.b as i64)
    }

    pub fn n(&self) -> u128 {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// Gram matrix `[[nA, nB/2], [nB/2, 0]]`; its determinant is `-(nB)^2/4`.
    pub fn gram(&self) -> GramMatrix {
        let n = BigInt::from(self.n);
        let half_nb = BigRational::new(&n * BigInt::from(self.b), BigInt::from(2));
        GramMatrix {
            g11: BigRational::from(&n * BigInt::from(self.a)),
            g12: half_nb.clone(),
            g21: half_nb,
            g22: BigRational::zero(),
        }
    }

    /// The invariant `B`: the generator of `[H : L] (nL)^{-1}`.
    ///
    /// Recomputes the index `nB` (from the discriminant ratio) and the norm
    /// ideal generator `n * gcd(A, B)`, and checks their quotient against
    /// the stored `B`.
    pub fn invariant(&self) -> Result<u64> {
        let index = BigUint::from(self.n) * BigUint::from(self.b);
        let norm = BigUint::from(self.n) * BigUint::from(gcd_u64(self.a, self.b));
        let (q, r) = index.div_rem(&norm);
        if !r.is_zero() || q != BigUint::from(self.b) {
            return Err(Error::invariant(format!(
                "index/norm = {index}/{norm} disagrees with stored B = {}",
                self.b
            )));
        }
        Ok(self.b)
    }
}

impl fmt::Display for CanonicalLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, A={}, B={})", self.n, self.a, self.b)
    }
}

/// An index-`a*d` sublattice `Z(a e1 + b e2) + Z(d e2)` in Hermite normal
/// form: `0 <= b < d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SublatticeHNF {
    pub a: u64,
    pub b: u64,
    pub d: u64,
}

impl SublatticeHNF {
    pub fn new(a: u64, b: u64, d: u64) -> Result<Self> {
        if a == 0 || d == 0 {
            return Err(Error::domain("rank deficient"));
        }
        if b >= d {
            return Err(Error::domain(format!(
                "HNF offset must satisfy 0 <= b < d, got b = {b}, d = {d}"
            )));
        }
        Ok(SublatticeHNF { a, b, d })
    }

    pub fn index(&self) -> u128 {
        self.a as u128 * self.d as u128
    }
}

impl fmt::Display for SublatticeHNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.d)
    }
}

fn check_class_pair(a: u64, b: u64) -> Result<()> {
    if b == 0 {
        return Err(Error::domain("B must be positive"));
    }
    if gcd_u64(a, b) != 1 {
        return Err(Error::domain(format!("gcd(A, B) must be 1, got ({a}, {b})")));
    }
    Ok(())
}

/// The proper-isometry class invariant of the sublattice `sub` of the
/// `(A, B)` lattice: the class of `(A/B)(a/d) + b/d` in Q/Z.
pub fn class_invariant(a: u64, b: u64, sub: &SublatticeHNF) -> Result<Fraction> {
    check_class_pair(a, b)?;
    let den = b as u128 * sub.d as u128;
    // (A a)/(B d) + b/d = (A a + b B)/(B d)
    Fraction::from_bilinear(a, sub.a, sub.b, b, den)
}

/// Two sublattices of the `(A, B)` lattice are properly isometric iff they
/// have the same index and the same class invariant.
pub fn properly_isometric(
    a: u64,
    b: u64,
    first: &SublatticeHNF,
    second: &SublatticeHNF,
) -> Result<bool> {
    check_class_pair(a, b)?;
    if first.index() != second.index() {
        return Ok(false);
    }
    Ok(class_invariant(a, b, first)? == class_invariant(a, b, second)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(alpha: i64, beta: i64, gamma: i64) -> CanonicalLattice {
        CanonicalLattice::from_basis(BasisTriple::new(alpha, beta, gamma).unwrap()).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        let l = canon(2, 3, 4);
        assert_eq!((l.n(), l.a(), l.b()), (2, 3, 4));
        let l = canon(1, 0, 1);
        assert_eq!((l.n(), l.a(), l.b()), (1, 1, 1));
        let l = canon(1, 5, 3);
        assert_eq!((l.n(), l.a(), l.b()), (1, 2, 3));
    }

    #[test]
    fn canonicalize_signs_and_negatives() {
        assert_eq!(canon(-2, 3, 4), canon(2, -3, 4));
        let l = canon(1, -5, 3);
        assert_eq!((l.n(), l.a(), l.b()), (1, 1, 3));
        let l = canon(-1, 0, -7);
        assert_eq!((l.n(), l.a(), l.b()), (7, 1, 1));
    }

    #[test]
    fn canonicalize_rejects_rank_deficient() {
        assert!(matches!(
            BasisTriple::new(0, 1, 1),
            Err(Error::Domain(msg)) if msg == "rank deficient"
        ));
        assert!(BasisTriple::new(1, 1, 0).is_err());
    }

    #[test]
    fn canonicalize_is_idempotent() {
        for (alpha, beta, gamma) in [(2i64, 3i64, 4i64), (1, 5, 3), (6, -14, 10), (-3, 7, -9)] {
            let l = canon(alpha, beta, gamma);
            let again = CanonicalLattice::from_basis(l.to_basis().unwrap()).unwrap();
            assert_eq!(l, again);
        }
    }

    #[test]
    fn gram_examples() {
        let rat = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        let g = CanonicalLattice::new(1, 1, 1).unwrap().gram();
        assert_eq!(
            (g.g11, g.g12, g.g21, g.g22),
            (rat(1, 1), rat(1, 2), rat(1, 2), rat(0, 1))
        );
        let g = CanonicalLattice::new(2, 3, 4).unwrap().gram();
        assert_eq!(
            (g.g11.clone(), g.g12, g.g21, g.g22),
            (rat(6, 1), rat(4, 1), rat(4, 1), rat(0, 1))
        );
        let g = CanonicalLattice::new(3, 1, 2).unwrap().gram();
        assert_eq!(
            (g.g11, g.g12, g.g21, g.g22),
            (rat(3, 1), rat(3, 1), rat(3, 1), rat(0, 1))
        );
    }

    #[test]
    fn gram_determinant() {
        for (n, a, b) in [(1u128, 1u64, 1u64), (2, 3, 4), (5, 1, 2), (7, 4, 9)] {
            let l = CanonicalLattice::new(n, a, b).unwrap();
            let nb = BigInt::from(n) * BigInt::from(b);
            let expected = BigRational::new(-(&nb * &nb), BigInt::from(4));
            assert_eq!(l.gram().det(), expected);
        }
    }

    #[test]
    fn invariant_examples() {
        assert_eq!(CanonicalLattice::new(1, 1, 1).unwrap().invariant().unwrap(), 1);
        assert_eq!(CanonicalLattice::new(2, 3, 4).unwrap().invariant().unwrap(), 4);
        assert_eq!(CanonicalLattice::new(5, 1, 2).unwrap().invariant().unwrap(), 2);
    }

    #[test]
    fn class_invariant_examples() {
        let sub = |a, b, d| SublatticeHNF::new(a, b, d).unwrap();
        assert_eq!(
            class_invariant(1, 1, &sub(1, 0, 2)).unwrap(),
            Fraction::new(1, 2).unwrap()
        );
        assert_eq!(class_invariant(1, 1, &sub(1, 1, 2)).unwrap(), Fraction::zero());
        assert_eq!(
            class_invariant(1, 2, &sub(1, 1, 2)).unwrap(),
            Fraction::new(3, 4).unwrap()
        );
        assert!(class_invariant(2, 4, &sub(1, 0, 2)).is_err());
    }

    #[test]
    fn proper_isometry_examples() {
        let sub = |a, b, d| SublatticeHNF::new(a, b, d).unwrap();
        assert!(properly_isometric(1, 1, &sub(1, 1, 2), &sub(2, 0, 1)).unwrap());
        assert!(!properly_isometric(1, 1, &sub(1, 0, 2), &sub(2, 0, 1)).unwrap());
        let k = sub(3, 2, 5);
        assert!(properly_isometric(4, 7, &k, &k).unwrap());
    }

    #[test]
    fn fraction_canonical_form() {
        let f = Fraction::new(10, 4).unwrap();
        assert_eq!((f.num(), f.den()), (1, 2));
        assert_eq!(Fraction::new(8, 4).unwrap(), Fraction::zero());
        assert!(Fraction::new(1, 0).is_err());
        assert!(Fraction::new(1, 3).unwrap() < Fraction::new(1, 2).unwrap());
        assert_eq!(Fraction::new(2, 6).unwrap(), Fraction::new(1, 3).unwrap());
    }

    #[test]
    fn hnf_rejects_bad_offsets() {
        assert!(SublatticeHNF::new(1, 2, 2).is_err());
        assert!(SublatticeHNF::new(0, 0, 1).is_err());
        assert!(SublatticeHNF::new(1, 0, 0).is_err());
    }
}
