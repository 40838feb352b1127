//! Numerical infrastructure that is independent of any particular orbit:
//! quadrature rules and distribution-exact random sampling.

pub mod quadrature;
pub mod sampling;

pub use quadrature::{gauss_legendre, RuleSpec, S2Rule};
pub use sampling::{det, ginibre, haar_special, haar_unitary, seeded_rng};
