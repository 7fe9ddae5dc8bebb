//! Intersection theory on rational surfaces with explicit Picard lattices.

mod blowup;
mod family;
mod lattice;

use thiserror::Error;

pub use blowup::{blowup, contract_and_push, contraction, Blowup, Contraction, PushedClass};
pub use family::{
    canonical_singularity_flag, ci_canonical, hirzebruch_family, weighted_plane_cover,
    CompleteIntersection, FamilyInvariants, SingularityFlag, WeightedPlaneCover,
};
pub use lattice::{
    adjunction_genus, canonical_class, double_cover_canonical, hirzebruch, intersect, is_ample,
    projective_plane, quotient_pullback, section_at_infinity, weighted_plane_112, AmpleRule,
    DivisorClass, SurfaceLattice,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfError {
    #[error("classes live on different lattices: {0} and {1}")]
    LatticeMismatch(String, String),
    #[error("dimension does not match the lattice rank")]
    Shape,
    #[error("intersection matrix is not symmetric")]
    NotSymmetric,
    #[error("not contractible: {0}")]
    NotContractible(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
