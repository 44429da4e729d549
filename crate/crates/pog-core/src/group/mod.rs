//! Exact groups on two backends: finite Cayley tables and finitely
//! generated abelian groups in invariant-factor form.

mod fgab;
mod finite;
mod hom;
pub mod lattice;
mod matrix;
mod object;
pub mod snf;
mod subgroup;

use thiserror::Error;

pub use fgab::FgAbGroup;
pub use finite::FiniteGroup;
pub use hom::{coequalizer, equalizer, joint_preimage, product, pullback, quotient, GroupHom, GroupProduct, GroupPullback};
pub use matrix::IntMatrix;
pub use object::{abelian_presentation, Backend, GroupElement, GroupObject};
pub use snf::{smith_normal_form, Snf};
pub use subgroup::Subgroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("bad invariant factors: {0}")]
    BadInvariantFactors(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("backend mismatch: {0}")]
    BackendMismatch(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("foreign element: {0}")]
    ForeignElement(String),
}
