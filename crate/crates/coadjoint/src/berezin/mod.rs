//! Quantization of the orbit itself: towers of matrix algebras, coherent
//! symbols, the quantize/dequantize pair, ladder maps between neighbouring
//! levels, and coherent kernels.

pub mod kernel;
pub mod ladder;
pub mod orbit;
pub mod sphere;
pub mod symbols;
pub mod tower;

pub use kernel::{local_expansion_defect, three_point, three_point_factorized, two_point};
pub use ladder::{hs_pairing, inject, project, project_trace, ptrace_first, sandwich_second};
pub use orbit::OrbitPoint;
pub use symbols::{
    covariant_symbol, poisson_bracket, quantize, star_defects, symbol_at, OrbitSet, Polynomial,
    StarDefect,
};
pub use tower::Tower;
