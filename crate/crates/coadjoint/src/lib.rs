//! Matrix quantization of coadjoint orbits of compact semisimple Lie groups,
//! and of equivariant vector bundles over them.
//!
//! The crate builds the finite-dimensional data directly: integrable highest
//! weight representations from a Dynkin diagram, coherent-state towers over an
//! orbit `G/H`, the associated quantization / dequantization maps between
//! matrix algebras and functions on the orbit, ladder maps connecting
//! neighbouring matrix sizes, and the analogous module structures for
//! equivariant bundles. Everything is dense complex linear algebra at desk
//! scale; no external BLAS/LAPACK is required.

pub mod berezin;
pub mod bundles;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod numerics;
pub mod repn;

pub use berezin::{OrbitPoint, Tower};
pub use bundles::BundleFamily;
pub use error::{Error, Result};
pub use lie::{Algebra, DynkinDiagram, MarkedDiagram, Series, Weight};
pub use linalg::{CMat, CVec, C64};
pub use repn::{GenRep, Irrep};
