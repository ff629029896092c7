//! Exact computations with powers of monomial ideals.
//!
//! A monomial ideal is stored as the antichain of exponent vectors of its
//! minimal monomial generators. On top of that representation this crate
//! computes powers by iterated Minkowski sums, maximal generating degrees,
//! Newton polyhedron vertices (by exact rational linear programming),
//! integer Carathéodory certificates for cone membership, Kodiyalam
//! reductions and reduction numbers, and degree excess profiles
//! `epsilon(n) = d(I^n) - p(I)*n`. The `families` module constructs the
//! parameterized ideal families used by the verification suites, together
//! with their predicted excess behaviour.
//!
//! All arithmetic is exact: `u64` exponents, `BigInt` determinants, and
//! `BigRational` linear programming. Nothing is ever rounded.

pub mod excess;
pub mod families;
pub mod ideal;
pub mod newton;
pub mod numerics;
pub mod simplex;

pub use excess::{DegreeExcessProfile, PredictedExcess, ProfileRow};
pub use ideal::{ExponentVector, FactoredIdeal, IdealError, MonomialIdeal};
pub use newton::{CaratheodoryCertificate, ConeError, VertexSet};
