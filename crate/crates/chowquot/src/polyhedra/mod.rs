//! Exact rational polyhedral engine: cones, fans, face lattices, polytopes and
//! cone membership.

pub mod bitset;
mod cone;
mod dd;
mod fan;
mod lattice;
mod lp;
mod polytope;

use thiserror::Error;

pub use cone::{cone_from_generators, dual_cone, intersect_cones, is_face, Cone};
pub use fan::Fan;
pub use lattice::{face_lattice_fvector, faces_by_dimension};
pub use lp::cone_membership;
pub use polytope::{convex_hull, polytope_from_inequalities, Polytope};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyhedraError {
    #[error("vector of length {found} in ambient dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("nonzero generators in ambient dimension 0")]
    ZeroAmbient,
    #[error("cone is not contained in the candidate cone")]
    NotContained,
    #[error("cone has a nontrivial lineality space")]
    NotPointed,
    #[error("fan axiom violated: {0}")]
    FanAxiom(String),
    #[error("ray index {0} out of range")]
    RayIndex(usize),
    #[error("line {line}: cannot parse {text:?}")]
    Parse { line: usize, text: String },
    #[error("polytope is empty")]
    Empty,
    #[error("polyhedron is unbounded")]
    Unbounded,
}
