//! Exact invariants of intersection algebras `B(a, b)` of two principal
//! monomial ideals `(x^a)` and `(x^b)` in `k[x_1, ..., x_n]`.
//!
//! The algebra is the semigroup ring of
//! `Q(a, b) = {(r, s, t) : t_i >= max(a_i r, b_i s)}`, so every invariant here
//! reduces to lattice combinatorics in the plane or to exact volumes of
//! rational polyhedra in dimension `n + 2`:
//!
//! * [`fan_hilbert`]: fan ordering, degenerate reduction, Hilbert bases of the
//!   fan segments, the Hilbert set and the generator set `G`.
//! * [`cones`]: primitive vectors of `σ`, generators of the dual cone `C` and
//!   semigroup membership.
//! * [`polyvol`]: exact volumes of H-polytopes (Lasserre recursion) and of
//!   cone-minus-translates regions (inclusion–exclusion), lattice counting,
//!   convex cell decompositions and boundary meshes.
//! * [`invariants`]: Hilbert-Samuel multiplicity, class group, F-signature,
//!   Hilbert-Kunz multiplicity and the assembled [`invariants::InvariantReport`].
//! * [`formulas`]: the closed-form expressions, evaluated in exact rationals.
//! * [`presentation`]: binomial presentations of the structured families.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cones;
pub mod error;
pub mod fan_hilbert;
pub mod formulas;
pub mod invariants;
pub mod linalg;
pub mod polyvol;
pub mod presentation;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
