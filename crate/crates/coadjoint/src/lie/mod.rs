//! Cartan-level structure: Dynkin diagrams, root systems, weights, and the
//! combinatorial classification of coadjoint orbit types.

pub mod algebra;
pub mod classify;
pub mod diagram;
pub mod roots;
pub mod weight;

pub use algebra::Algebra;
pub use classify::{classify, OrbitType};
pub use diagram::{
    parse_diagram, recognize, Bond, DynkinDiagram, MarkedDiagram, ParsedDiagram, RawEdge, Series,
    MAX_RANK,
};
pub use roots::RootSystem;
pub use weight::Weight;
