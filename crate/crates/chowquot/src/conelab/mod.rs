//! Cone-level birational geometry of X: the cone of curves, the nef cone and
//! its contractions, partial-flag subcones and the effective cone.

mod effective;
mod flags;
mod mori;
mod nef;
mod rays;

use thiserror::Error;

use crate::divcalc::DivcalcError;
use crate::polyhedra::PolyhedraError;

pub use effective::{
    comparison_generators, effective_cone_analysis, effective_generators, pairing_checks, EffectiveReport,
    PairingCheck, COMPARISON_CURVES,
};
pub use flags::{flag_cone, partial_flag_cones, FlagCone, FlagReport, M1_GENERATORS, N1_EXTRA_RAY, X13_CLASS};
pub use mori::{curve_families, mori_cone, mori_fvector, mori_report, MoriCone, MoriReport, EXPECTED_FVECTOR};
pub use nef::{
    classify, classify_contractions, nef_cone, nef_report, ContractionKind, ContractionRecord, NefCone, NefReport,
    EXPECTED_HISTOGRAM, SURFACE_REPRESENTATIVES,
};
pub use rays::{
    act_curve, act_divisor, orbit, orbit_ids, preserved, primitive, same_ray, to_bigint, RayRecord, RayTable, Vector,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConelabError {
    #[error("expected {expected} {what}, found {found}")]
    Count { what: &'static str, expected: usize, found: usize },
    #[error("{0} does not span an extremal ray")]
    NotExtremal(String),
    #[error("the group action does not permute the ray set")]
    NotPermuted,
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Polyhedra(#[from] PolyhedraError),
    #[error(transparent)]
    Divcalc(#[from] DivcalcError),
}
