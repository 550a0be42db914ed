//! Toric rings of simplicial complexes, computed exactly.
//!
//! For a simplicial complex on `{1, .., n}` this crate builds the affine
//! semigroup in `Z^(n+1)` generated by one lattice point per face and
//! computes the combinatorial-algebraic invariants of the associated
//! standard graded toric ring:
//!
//! - the facets of the cone over the generators, i.e. the height-one
//!   monomial primes, classified as coordinate, vertex-cover, or extra
//!   ([`cone`]);
//! - normality of the semigroup, with an explicit witness on failure;
//! - the divisor class group as a finitely presented abelian group, the
//!   class of the canonical module, the a-invariant, and the Gorenstein
//!   decision ([`divisor`]);
//! - for quasi-forests, a quadratic Groebner basis of the defining toric
//!   ideal, verified by Buchberger's criterion ([`grobner`]).
//!
//! Everything is exact integer arithmetic; no floating point is used
//! anywhere. Brute-force reference oracles live in [`oracle`] and stay
//! independent of the main implementations they check.

pub mod complex;
pub mod cone;
pub mod divisor;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod grobner;
pub mod oracle;
pub mod report;

pub use complex::{Face, FaceFamily, LeafOrder, SimplicialComplex, SkeletonGraph};
