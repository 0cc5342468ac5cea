//! Exact arithmetic for the Dirichlet series counting proper isometry
//! classes of full-rank sublattices of the integral hyperbolic plane.
//!
//! The hyperbolic plane here is the rank-2 lattice with Gram matrix
//! `[[0, 1/2], [1/2, 0]]`. Every full-rank sublattice is described, up to
//! basis change, by a triple `(n, A, B)` with `1 <= A <= B`, `gcd(A, B) = 1`,
//! and its proper-isometry class zeta function depends on `B` alone. The
//! crate provides three independent routes to the coefficients of that
//! series, together with the combinatorial machinery needed to evaluate it
//! in closed form:
//!
//! - [`lattice`]: canonical forms for sublattices and the proper-isometry
//!   decision procedure;
//! - [`enumeration`]: brute-force oracles — sublattice enumeration in
//!   Hermite normal form, rational coset sets, and the ideals `M(B; d)`,
//!   `C(B; d)` controlling their intersections;
//! - [`dirichlet`]: exact truncated Dirichlet-series arithmetic, sieve
//!   tables, and the main coefficient engine;
//! - [`squareclass`]: square-unit groups mod `b`, weight-vector
//!   combinatorics, and numeric/exact evaluation of the factors `H_b(s)`;
//! - [`analytics`]: residues at `s = 2`, asymptotic proportions, and
//!   partial-sum convergence checks;
//! - [`verify`]: self-contained consistency suites cross-checking all of
//!   the above against each other.

pub mod analytics;
mod arith;
pub mod dirichlet;
pub mod enumeration;
mod error;
pub mod lattice;
pub mod squareclass;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{BasisTriple, CanonicalLattice, Fraction, SublatticeHNF};
