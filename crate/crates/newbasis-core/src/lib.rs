//! Combinatorial and finite-group machinery for a distinguished basis
//! change: interval-set families over F2-symplectic space on one side,
//! and the non-abelian Fourier calculus of small finite groups on the
//! other.
//!
//! The crate has two halves.
//!
//! The first half is combinatorial: a distinguished family of interval sets
//! `S_D` on `[1,D]` ([`intervals`], [`odd`]), its realization inside a
//! `D`-dimensional symplectic vector space over F2 ([`f2`]), and the pair of
//! unitriangularly related bases of the function space on that vector space
//! ([`basis`]).
//!
//! The second half is the non-abelian Fourier calculus on the set `M(Γ)` of
//! pairs (conjugacy class, centralizer irreducible) of a small finite group:
//! exact cyclotomic arithmetic ([`exact`]), concrete permutation groups with
//! exact character tables ([`perm`], [`chartab`]), and the `M(Γ)` vector
//! calculus with the exceptional-case basis builders ([`mspace`]).

pub mod basis;
pub mod chartab;
pub mod exact;
pub mod exc;
pub mod f2;
pub mod intervals;
pub mod mspace;
pub mod odd;
pub mod perm;
pub mod tables;

pub use exact::{CycloNumber, Rational};
pub use f2::{F2Subspace, F2Vector};
pub use intervals::{Interval, IntervalSet};
pub use mspace::MVector;
pub use perm::PermGroup;
