//! Intersection theory of the Chow quotient X: its rank-12 Picard lattice,
//! the trilinear intersection form, the anticanonical class and the quartic
//! linear system behind it.

mod anticanonical;
mod form;
mod petersen;
mod picard;
mod quartic;
mod rules;

use thiserror::Error;

use crate::exactlat::LatticeError;
use crate::tilegroup::BoundaryLabel;

pub use anticanonical::{
    anticanonical, anticanonical_class, gamma1, gamma2, AnticanonicalReport, ANTICANONICAL, ANTICANONICAL_EXPRESSIONS,
    GAMMA1, GAMMA2, H_01_23_ALT, H_CLASSES, L1, L2, L2_PRIME, S_CLASS, S_CLASS_CUBIC,
};
pub use form::{
    basis_label_vectors, curve_class, curve_expression, expression_triple, form, intersection_data, triple,
    verify_form, CurveClass, FormReport, LabelTable, TrilinearForm, KNOWN_ENTRIES,
};
pub use petersen::{
    a_nodes, edge_list, forced_values, is_petersen, solve_petersen, violated_constraint, LabelPair, PetersenData,
    FORCED_EDGES,
};
pub use picard::{
    basis_symbol, class, class_of, expr, label_relations, lattice, picard_lattice, plane_expression, relation_vectors,
    DivisorClass, DivisorExpression, PicardLattice, Symbol, BASIS_LABELS, PLANE_ROWS, QUADRIC_ROW, RANK,
    SUBSTITUTION_ROW, SYMBOLS,
};
pub use quartic::{
    line_basis, line_conditions, quartic_monomials, quartic_system_dimension, segre_square, QuarticReport, BASE_LINES,
    REFERENCE_DIMENSION,
};
pub use rules::{
    base_surface, on_surface, rules_are_stabilizer_invariant, stabilizer, Adjacency, A_NODES, CUBES, C_RULE_PAIRS,
    C_RULE_SQUARES, D_RULE_PAIRS,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivcalcError {
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("expected {expected} coordinates, found {found}")]
    Length { expected: usize, found: usize },
    #[error("coordinate does not fit in 64 bits")]
    Overflow,
    #[error("quotient has rank {0}, expected 12")]
    PicardRank(usize),
    #[error("quotient by the relations has torsion")]
    Torsion,
    #[error("relations cannot be solved for the non-basis symbols")]
    Elimination,
    #[error("rules disagree on {0}·{1}·{2}")]
    Inconsistent(BoundaryLabel, BoundaryLabel, BoundaryLabel),
    #[error("adjacency search failed: {0}")]
    Petersen(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
