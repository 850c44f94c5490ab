//! Quotient fan of the nilpotent chart against the projected orthant faces.

use std::collections::BTreeSet;

use chowquot::exactlat::{ivec, primitive};
use chowquot::polyhedra::Cone;
use chowquot::quotientfan::{git_subfans, projected_cones, quotient_fan, source_data, OrderedPartition};
use proptest::prelude::*;

#[test]
fn quotient_cones_refine_and_are_cut_out_by_projected_faces() {
    let (_, proj, orthant) = source_data();
    let q = quotient_fan(&orthant, &proj.cokernel_matrix).unwrap();
    let projected: BTreeSet<Cone> = projected_cones(&orthant, &proj.cokernel_matrix).unwrap().into_values().collect();
    let cones: Vec<Cone> = q.all_cones().iter().map(|c| q.cone_of(c)).collect();
    for sigma in &cones {
        // every projected face meets each quotient cone in the whole cone or a face of it
        for p in &projected {
            let i = sigma.intersect(p).unwrap();
            assert!(i == *sigma || sigma.has_face(&i).unwrap());
        }
        // the quotient cone is the intersection of the projected faces through its interior
        let x = sigma.relint_point();
        let mut meet: Option<Cone> = None;
        for p in projected.iter().filter(|p| p.contains(&x)) {
            meet = Some(match meet {
                None => p.clone(),
                Some(m) => m.intersect(p).unwrap(),
            });
        }
        assert_eq!(meet.as_ref(), Some(sigma));
    }
}

#[test]
fn rays_are_the_projected_columns_and_one_more() {
    let (_, proj, orthant) = source_data();
    let q = quotient_fan(&orthant, &proj.cokernel_matrix).unwrap();
    let columns: BTreeSet<_> = (0..6).map(|j| primitive(&proj.cokernel_matrix.column(j))).collect();
    let rays: BTreeSet<_> = q.rays().iter().cloned().collect();
    assert_eq!(columns.len(), 6);
    assert!(columns.is_subset(&rays));
    let extra: Vec<_> = rays.difference(&columns).cloned().collect();
    assert_eq!(extra, vec![ivec(&[0, 0, -1])]);
}

#[test]
fn git_refinement_is_the_quotient_fan() {
    let g = git_subfans().unwrap();
    assert!(g.flip.refinement_equals_quotient && g.plus.injective && g.minus.injective && g.zero.injective);
}

proptest! {
    #[test]
    fn partitions_must_cover_without_repeats(blocks in proptest::collection::vec(proptest::collection::vec(0u8..5, 1..4), 1..5)) {
        let flat: Vec<u8> = blocks.iter().flatten().copied().collect();
        let set: BTreeSet<u8> = flat.iter().copied().collect();
        let valid = flat.len() == 4 && set == (0..4).collect();
        prop_assert_eq!(OrderedPartition::new(blocks).is_ok(), valid);
    }
}
