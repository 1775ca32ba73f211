//! Construction and exact verification of MDS (extended) generalized
//! Reed-Solomon codes whose Galois hull has a prescribed dimension.
//!
//! Everything runs over an explicit finite field GF(p^h) built by
//! [`field::FieldSpec`]. The crate splits into:
//!
//! * [`field`] — exact GF(p^h) arithmetic (Frobenius powers, roots,
//!   subfield tests, discrete log tables),
//! * [`poly`] — dense polynomials over GF(q) and Lagrange interpolation,
//! * [`linalg`] — reduced row echelon form, kernels and row-space
//!   intersections, the machinery behind duals and hulls,
//! * [`code`] — generic `[n, k]` linear codes: Galois duals, hulls, MDS
//!   verification,
//! * [`grs`] — GRS / extended GRS codes, dual-membership witnesses and
//!   self-orthogonality certificates,
//! * [`construct`] — the three hull-dimension constructions plus the
//!   supporting number theory (gcd identity, Bezout twists, dimension
//!   bounds),
//! * [`json`] — the wire formats used by the CLI.
//!
//! Every construction is checked against the independent linear-algebra
//! oracle: the hull dimension is recomputed from generator matrices via
//! row reduction, never trusted from the construction itself.

pub mod code;
pub mod construct;
pub mod field;
pub mod grs;
pub mod json;
pub mod linalg;
pub mod poly;

mod error;

pub use code::{HullReport, LinearCode, MdsStrategy, MdsVerdict};
pub use construct::{ConstructionOutput, CosetPointSet, TwistPlan};
pub use error::Error;
pub use field::{FieldSpec, Fq};
pub use grs::{GrsSpec, Witness};
pub use linalg::Matrix;
pub use poly::Poly;

pub type Result<T> = std::result::Result<T, Error>;
