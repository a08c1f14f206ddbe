//! Exact computation of characteristic polynomials of subspace
//! arrangements embedded in the signed reflection arrangement, with two
//! independent lattice-point-counting oracles (a centered cube and a
//! finite field), factorial-basis expansions, and Ehrhart
//! quasi-polynomials of affine Weyl alcoves for all finite Weyl types.
//!
//! Everything is integer or rational arithmetic; no float appears anywhere
//! in a computation.

pub mod arith;
pub mod arrangement;
pub mod counting;
pub mod error;
pub mod expansions;
pub mod lattice;
pub mod linalg;
pub mod weyl;

pub use arith::{FactorialBasis, IntPolynomial, QuasiPolynomial, RatPolynomial, RationalGF};
pub use arrangement::{Arrangement, ArrangementSpec};
pub use counting::{CubeDecomposition, CubeSpec, EmbedFamily};
pub use error::{Error, Result};
pub use lattice::{build_poset, char_poly, IntersectionPoset};
pub use linalg::{ConstraintMatrix, Subspace};
pub use weyl::{root_system, AlcoveCount, ProductSystem, RootSystem, WeylType};
