//! Torus-action side: root and weight data, the combinatorial quotient fan of
//! the nilpotent chart, relevance of ordered partitions, GIT subfans and their
//! flip, the toric class group, divisor polytopes and the permutohedron.

mod classgroup;
mod data;
mod git;
mod partition;
mod quotient;
mod weights;

use thiserror::Error;

use crate::exactlat::LatticeError;
use crate::polyhedra::PolyhedraError;

pub use classgroup::{divisor_polytope, named_divisor, toric_class_group, ClassGroup, CLASS_RELATIONS, QUOTIENT_RAYS};
pub use data::{
    orthant_fan, permutations4, source_data, ProjectionData, RootData, CHART_COORDINATES, CHART_ROOTS, ORTHANT_LABELS,
};
pub use git::{git_subfans, FlipReport, GitReport, Subfan, EXCLUDED_MINUS, EXCLUDED_PLUS, EXCLUDED_ZERO};
pub use partition::{dictionary_types, partition_cone, partition_face, OrderedPartition, PartitionType};
pub use quotient::{
    non_projected_rays, projected_cones, quotient_fan, relevant_pairs, verify_quotient_fan, QuotientFanReport,
    RelevantPair,
};
pub use weights::{fixed_point_weight, fixed_point_weights};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error("invalid ordered partition: {0}")]
    InvalidPartition(String),
    #[error("partition {0} is outside the face dictionary")]
    OutsideDictionary(String),
    #[error("projection has {cols} columns but the fan lives in dimension {fan_dim}")]
    ProjectionShape { cols: usize, fan_dim: usize },
    #[error("quotient cone with lineality {0} is not pointed")]
    NotPointed(String),
    #[error("unknown boundary divisor {0}")]
    UnknownDivisor(String),
    #[error("{found} divisor coefficients for {expected} rays")]
    CoefficientCount { expected: usize, found: usize },
    #[error(transparent)]
    Polyhedra(#[from] PolyhedraError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::exactlat::ivec;

    #[test]
    fn nilpotent_chart_quotient() {
        let (_, proj, orthant) = source_data();
        let q = quotient_fan(&orthant, &proj.cokernel_matrix).unwrap();
        let rays: BTreeSet<_> = q.rays().iter().cloned().collect();
        let expected: BTreeSet<_> = QUOTIENT_RAYS.iter().map(|(_, r)| ivec(r)).collect();
        assert_eq!(rays, expected);
        assert_eq!(q.maximal_cones().len(), 10);
        let rep = verify_quotient_fan(&q);
        assert!(rep.complete && rep.smooth && rep.failures.is_empty());
        assert_eq!(rep.picard_number, 4);
        assert_eq!(non_projected_rays(&orthant, &proj.cokernel_matrix, &q), vec![ivec(&[0, 0, -1])]);

        let cl = toric_class_group(&q).unwrap();
        assert_eq!(cl.free_rank, 4);
        assert!(cl.torsion.is_empty());
        let chars = [[0, 1, 0], [1, 0, 0], [0, 0, 1]];
        for ((pos, negs), m) in CLASS_RELATIONS.iter().zip(chars) {
            let mut terms = vec![(*pos, 1)];
            terms.extend(negs.iter().map(|n| (*n, -1)));
            let d = named_divisor(&q, &terms).unwrap();
            assert_eq!(cl.character_of(&d).unwrap(), Some(ivec(&m)), "{pos}");
        }

        let d = named_divisor(&q, &[("C02", 5), ("A1", 3), ("B2", 3), ("D12", 2)]).unwrap();
        let p = divisor_polytope(&q, &d).unwrap();
        assert_eq!(p.f_vector, vec![10, 15, 7]);
        assert_eq!(p.facets.len(), 7);
    }

    #[test]
    fn relevance_examples() {
        let (_, proj, orthant) = source_data();
        let pairs = relevant_pairs(&orthant, &proj.cokernel_matrix).unwrap();
        let has = |a: &[usize], b: &[usize]| pairs.iter().any(|p| p.cone == a && p.companion == b);
        assert!(has(&[1, 4], &[0]));
        assert!(has(&[1, 3], &[2]));
        let c = pairs.iter().find(|p| p.cone == [2, 4] && p.companion == [0, 3]).unwrap();
        assert_eq!(c.intersection.rays(), &[ivec(&[0, 0, -1])]);
    }

    #[test]
    fn git_flip() {
        let g = git_subfans().unwrap();
        for s in [&g.plus, &g.minus, &g.zero] {
            assert!(s.injective, "{}", s.name);
        }
        assert!(g.plus.image.is_complete() && g.minus.image.is_complete());
        assert!(!g.zero.image.is_complete());
        let f = &g.flip;
        assert!(f.zero_is_common_part && f.same_support && f.refinement_equals_quotient);
        assert_eq!(f.new_rays, vec![ivec(&[0, 0, -1])]);
        assert_eq!(f.region_rays.len(), 4);
        assert!(!f.circuit.0[0].is_empty());
    }
}
