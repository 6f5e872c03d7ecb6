//! Derivation engine for the orthogonal and symplectic expansion terms:
//! series parameters, the symbolic first-order relation and its 13x4
//! monomial system, and the displayed second- and third-order
//! transformations, all validated against the hardcoded displays.

mod params;
mod relation;
mod transform;

pub use params::{series_params, SeriesParams};
pub use relation::{
    assemble_and_solve, assemble_system, assemble_system_symbolic, build_relation_j1,
    displayed_system, verify_e21_identity, AlgebraError, RelationJ1, MONOMIALS_J1,
};
pub use transform::{derive_beta14, transform_m2, transform_m3, DeriveError};
