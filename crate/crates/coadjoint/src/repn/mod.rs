//! Finite-dimensional unitary representations: highest-weight construction,
//! tensor and Hom modules, intertwiner extraction, diagnostics, and
//! serialization.

pub mod analyze;
pub mod embed;
pub mod export;
pub mod irrep;
pub mod tensor;

pub use analyze::{adjoint_rep, check_relations, decompose, structure_constants, RelationReport};
pub use embed::{component_embedding, embedding_residual};
pub use export::{export_rep, import_rep, RepExport, SCHEMA_VERSION};
pub use irrep::{Irrep, MAX_DIM};
pub use tensor::{kron_apply, outer, pair_apply, GenRep};
