//! Exact rank-metric and Hamming-metric weight enumerators of linear codes
//! over GF(q^m), their MacWilliams transforms, and brute-force oracles that
//! check every identity by enumeration.

pub mod codes;
pub mod error;
pub mod gfq;
pub mod hadamard;
pub mod linalg;
pub mod macwilliams;
pub mod qcombin;
pub mod qpoly;

pub use codes::{CodeParams, CodeSpec, LinearCode, Metric, WeightEnumerator};
pub use error::{Error, Result};
pub use gfq::{FieldElement, FieldSpec, FieldTower, Gf, Layer};
pub use linalg::Matrix;
pub use qcombin::QContext;
pub use qpoly::{a_poly, b_poly, HomPoly, ParamPoly};
