//! Quantized equivariant vector bundles over one orbit: level-indexed module
//! families, their invariant projections and ladder transports, admissible
//! weight arithmetic, and the classical-fiber identification.

pub mod family;
pub mod report;
pub mod weights;

pub use family::{BundleFamily, QInvariants, QuantModule, RecursionCheck, RoundTripSpectrum};
pub use report::{bundle_report, verify_section_limit, BundleReport, SectionReport};
pub use weights::{classical_fiber, module_dims, transition_level};
