//! One report section per acceptance criterion.

use std::collections::BTreeSet;

use anyhow::{anyhow, Result};
use chowquot::conelab::{
    classify_contractions, effective_cone_analysis, mori_cone, mori_report, nef_cone, nef_report, pairing_checks,
    partial_flag_cones, RayTable, EXPECTED_FVECTOR, EXPECTED_HISTOGRAM,
};
use chowquot::divcalc::{
    anticanonical, class, form, intersection_data, is_petersen, lattice, quartic_system_dimension, verify_form,
    FORCED_EDGES, KNOWN_ENTRIES, PLANE_ROWS, QUADRIC_ROW, RANK,
};
use chowquot::polyhedra::Fan;
use chowquot::quotientfan::{
    dictionary_types, divisor_polytope, fixed_point_weights, git_subfans, named_divisor, non_projected_rays,
    partition_face, quotient_fan, relevant_pairs, source_data, verify_quotient_fan, OrderedPartition, PartitionType,
    QUOTIENT_RAYS,
};
use chowquot::tilegroup::{
    all_labels, distinct_images_of_generic_point, group_elements, label_permutation, verify_boundary_table,
    verify_derivations, verify_relations, GroupElement,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::report::{Discrepancy, Section};

pub const CRITERIA: std::ops::RangeInclusive<u32> = 1..=17;

/// Parameters shared by the seeded sections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub seed: u64,
    pub samples: usize,
}

fn ints(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().expect("small coordinate")).collect()
}

fn sorted_rays(rays: &[Vec<BigInt>]) -> Vec<Vec<i64>> {
    let set: BTreeSet<Vec<i64>> = rays.iter().map(|r| ints(r)).collect();
    set.into_iter().collect()
}

pub fn quotient_fan_of_chart() -> Result<Fan> {
    let (_, proj, orthant) = source_data();
    Ok(quotient_fan(&orthant, &proj.cokernel_matrix)?)
}

pub fn quotient_fan_section() -> Result<Section> {
    let mut s = Section::new(1, "quotient fan");
    let q = quotient_fan_of_chart()?;
    let expected: BTreeSet<Vec<i64>> = QUOTIENT_RAYS.iter().map(|(_, r)| r.to_vec()).collect();
    let rep = verify_quotient_fan(&q);
    s.check("rays", expected.into_iter().collect::<Vec<_>>(), sorted_rays(q.rays()))
        .holds("complete", rep.complete)
        .holds("smooth", rep.smooth)
        .check("picard number", 4, rep.picard_number)
        .check("maximal cones", 2 * rep.ray_count - 4, rep.maximal_cone_count);
    s.data = json!({
        "rays": q.rays().iter().map(|r| ints(r)).collect::<Vec<_>>(),
        "maximal_cones": q.maximal_cones(),
    });
    Ok(s)
}

fn face(t: PartitionType) -> Result<Vec<usize>> {
    Ok(partition_face(&OrderedPartition::of_type(t))?)
}

pub fn relevance_section() -> Result<Section> {
    use PartitionType::{A, B, C, D};
    let mut s = Section::new(2, "relevance");
    let (_, proj, orthant) = source_data();
    let q = quotient_fan(&orthant, &proj.cokernel_matrix)?;
    let pairs = relevant_pairs(&orthant, &proj.cokernel_matrix)?;
    let rho6 = vec![0i64, 0, -1];
    for (a, b) in [(A(1), B(1)), (B(2), A(2)), (C(0, 2), C(1, 3)), (D(1, 2), C(1, 2)), (D(1, 2), C(0, 3))] {
        let (fa, fb) = (face(a)?, face(b)?);
        let found = pairs.iter().any(|p| p.cone == fa && p.companion == fb);
        s.holds(&format!("{a} relevant with companion {b}"), found);
    }
    let (c12, c03) = (face(C(1, 2))?, face(C(0, 3))?);
    let meet = pairs.iter().find(|p| p.cone == c12 && p.companion == c03).map(|p| sorted_rays(p.intersection.rays()));
    s.check("C12 and C03 images meet along", Some(vec![rho6.clone()]), meet);
    let np = non_projected_rays(&orthant, &proj.cokernel_matrix, &q);
    s.check("non-projected quotient rays", vec![rho6], sorted_rays(&np));
    let named: Vec<(String, Vec<usize>)> =
        dictionary_types().into_iter().map(|t| Ok((t.to_string(), face(t)?))).collect::<Result<_>>()?;
    let name_of = |f: &[usize]| named.iter().find(|(_, g)| g == f).map(|(n, _)| n.clone());
    let among_named: Vec<Value> = pairs
        .iter()
        .filter_map(|p| {
            Some(json!({
                "cone": name_of(&p.cone)?,
                "companion": name_of(&p.companion)?,
                "intersection": sorted_rays(p.intersection.rays()),
            }))
        })
        .collect();
    s.data = json!({ "pair_count": pairs.len(), "pairs_among_named_faces": among_named });
    Ok(s)
}

pub fn git_section() -> Result<Section> {
    let mut s = Section::new(3, "git subfans");
    let g = git_subfans()?;
    for sub in [&g.plus, &g.minus, &g.zero] {
        s.holds(&format!("{} projects bijectively", sub.name), sub.injective);
    }
    s.holds("plus subfan complete", g.plus.image.is_complete())
        .holds("minus subfan complete", g.minus.image.is_complete())
        .holds("zero subfan is the common part", g.flip.zero_is_common_part)
        .holds("exchanged cones share support", g.flip.same_support)
        .holds("common refinement is the quotient fan", g.flip.refinement_equals_quotient)
        .check("new rays of the refinement", vec![vec![0i64, 0, -1]], sorted_rays(&g.flip.new_rays))
        .check("rays of the flipped region", 4, g.flip.region_rays.len());
    s.data = json!({
        "plus_only": g.flip.plus_only,
        "minus_only": g.flip.minus_only,
        "region_rays": sorted_rays(&g.flip.region_rays),
        "zero_complete": g.zero.image.is_complete(),
    });
    Ok(s)
}

pub fn polytope_section() -> Result<Section> {
    let mut s = Section::new(4, "polytopes");
    let q = quotient_fan_of_chart()?;
    let d = named_divisor(&q, &[("C02", 5), ("A1", 3), ("B2", 3), ("D12", 2)])?;
    let p = divisor_polytope(&q, &d)?;
    s.check("ample polytope f-vector", vec![10, 15, 7], &p.f_vector);
    let (weights, perm) = fixed_point_weights()?;
    let vertices: BTreeSet<Vec<i64>> =
        perm.vertices.iter().map(|v| v.iter().map(|x| x.to_integer().to_i64().unwrap_or(i64::MAX)).collect()).collect();
    let weight_set: BTreeSet<Vec<i64>> = weights.iter().map(|w| w.to_vec()).collect();
    s.check("distinct weight points", 24, weight_set.len())
        .holds("weight points are the permutohedron vertices", weight_set == vertices && perm.vertices.len() == 24)
        .check("permutohedron f-vector", vec![24, 36, 14], &perm.f_vector);
    s.data = json!({ "ample_polytope_vertices": p.vertices.iter().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>() });
    Ok(s)
}

pub fn group_section(p: Params) -> Result<Section> {
    let mut s = Section::new(5, "tile group");
    let elements = group_elements();
    let identity = label_permutation(&GroupElement::IDENTITY);
    let fixing = elements.iter().filter(|g| label_permutation(g) == identity).count();
    s.check("group order", 48, elements.len()).check("elements acting trivially on labels", 1, fixing);
    for r in verify_relations(p.samples, p.seed)? {
        s.holds(&format!("{} at {} points", r.name, r.samples), r.holds && r.samples >= p.samples);
    }
    s.check("distinct images of a generic point", 48, distinct_images_of_generic_point(p.seed)?);
    Ok(s)
}

pub fn derivation_section(p: Params) -> Result<Section> {
    let mut s = Section::new(6, "derived generators");
    let reports = verify_derivations(p.samples, p.seed)?;
    for r in &reports {
        s.check(&format!("{} agreements", r.generator), p.samples, r.agreed);
        s.check(&format!("{} disagreements", r.generator), 0, r.disagreed);
    }
    s.data = json!({
        "resampled": reports.iter().map(|r| (r.generator.to_string(), r.resampled)).collect::<std::collections::BTreeMap<_, _>>(),
    });
    Ok(s)
}

pub fn boundary_table_section(p: Params) -> Result<Section> {
    let mut s = Section::new(7, "boundary table");
    let t = verify_boundary_table(p.samples, p.seed)?;
    for c in &t.checks {
        s.holds(&format!("{} maps {} to {}", c.generator, c.source, c.target), c.passed);
    }
    s.check("rows established", 20, t.covered.len()).holds("images pairwise distinct", t.pairwise_distinct);
    Ok(s)
}

pub fn picard_section() -> Result<Section> {
    let mut s = Section::new(8, "picard lattice");
    let l = lattice();
    s.check("rank", 12, l.rank()).holds("torsion free", l.is_torsion_free()).check("relation rank", 9, l.relation_rank);
    let qh = class("qH");
    for (plane, row) in PLANE_ROWS {
        s.check(&format!("row of {plane}"), qh.to_string(), class(row).to_string());
    }
    s.check("quadric row", class("2qH").to_string(), class(QUADRIC_ROW).to_string());
    Ok(s)
}

pub fn petersen_section() -> Result<Section> {
    let mut s = Section::new(9, "petersen adjacency");
    let pet = &intersection_data().0;
    let rejected: usize = pet.rejections.values().sum();
    s.check("surviving candidates", 1, pet.candidates - rejected)
        .holds("isomorphic to the Petersen graph", is_petersen(&pet.adjacency));
    for (a, b) in FORCED_EDGES {
        let (a, b) = (a.parse().map_err(|e| anyhow!("{e}"))?, b.parse().map_err(|e| anyhow!("{e}"))?);
        s.holds(&format!("edge {a}-{b}"), pet.has_edge(a, b));
    }
    s.data = json!({
        "edges": pet.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>(),
        "free_pairs": pet.free_pairs,
        "candidates": pet.candidates,
        "rejections": pet.rejections,
    });
    Ok(s)
}

pub fn form_section() -> Result<Section> {
    let mut s = Section::new(10, "intersection form");
    let r = verify_form();
    s.holds("symmetric", r.symmetric)
        .check("equivariance failures", 0, r.equivariance_failures)
        .check("descent failures", 0, r.descent_failures)
        .holds("independent of the q*H row", r.row_independent);
    for (name, e, c) in &r.entries {
        s.check(name, e, c);
    }
    s.data = json!({ "known_entries": KNOWN_ENTRIES.len(), "tensor": tensor_json() });
    Ok(s)
}

/// The 12³ tensor as nested arrays in the canonical basis.
pub fn tensor_json() -> Value {
    let f = form();
    json!((0..RANK)
        .map(|i| (0..RANK).map(|j| (0..RANK).map(|k| f.entry(i, j, k)).collect::<Vec<_>>()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

/// Label-level table as CSV rows E,F,G,value.
pub fn label_table_csv() -> Result<String> {
    let t = &form().labels;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["E", "F", "G", "value"])?;
    for a in all_labels() {
        for b in all_labels() {
            for c in all_labels() {
                w.write_record([a.to_string(), b.to_string(), c.to_string(), t.value(a, b, c).to_string()])?;
            }
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn anticanonical_section() -> Result<Section> {
    let mut s = Section::new(11, "anticanonical class");
    let r = anticanonical();
    s.check("(-K)^3", 12, r.cube).holds("group invariant", r.group_invariant);
    for (e, ok) in &r.expressions {
        s.holds(&format!("{e} reduces to -K"), *ok);
    }
    s.data = json!({ "class": r.class.to_string() });
    Ok(s)
}

pub fn quartic_section() -> Result<Section> {
    let mut s = Section::new(12, "quartic system");
    let r = quartic_system_dimension();
    s.holds("contains the Segre square", r.contains_segre_square)
        .check("vector-space dimension", r.reference_dimension, r.vector_space_dimension)
        .check("projective dimension", r.vector_space_dimension - 1, r.projective_dimension)
        .check("discrepancy flagged", r.projective_dimension != r.reference_dimension, r.discrepancy);
    if r.discrepancy {
        s.discrepancies.push(Discrepancy {
            name: "projective dimension".into(),
            reference: json!(r.reference_dimension),
            computed: json!(r.projective_dimension),
            note: "the reference value equals the dimension of the vector space of quartics".into(),
        });
    }
    s.data = json!({
        "lines": r.lines,
        "conditions_rank": r.conditions_rank,
        "single_line_projective_dimension": r.single_line_projective_dimension,
    });
    Ok(s)
}

fn ray_rows(t: &RayTable) -> Vec<Value> {
    t.records
        .iter()
        .map(|r| json!({ "generator": r.generator, "tag": r.tag, "invariant": r.invariant, "orbit": r.orbit }))
        .collect()
}

/// Ray table as CSV: index, orbit, invariant, coordinates, tag.
pub fn ray_table_csv(t: &RayTable) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["index".to_string(), "orbit".into(), "invariant".into()];
    header.extend((0..RANK).map(|k| format!("x{k}")));
    header.push("tag".into());
    w.write_record(&header)?;
    for (i, r) in t.records.iter().enumerate() {
        let mut row = vec![i.to_string(), r.orbit.to_string(), r.invariant.to_string()];
        row.extend(r.generator.iter().map(|x| x.to_string()));
        row.push(r.tag.clone());
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn mori_section() -> Result<Section> {
    let mut s = Section::new(13, "cone of curves");
    let r = mori_report(true)?;
    s.check("extremal rays", 31, r.rays)
        .check("K-negative rays", 12, r.k_negative)
        .check("K-trivial rays", 19, r.k_trivial)
        .check("K-negative orbit sizes", vec![12], &r.k_negative_orbits)
        .check("K-trivial orbit sizes", vec![3, 4, 12], &r.k_trivial_orbits)
        .holds("K-negative rays form the orbit of A0*D01", r.k_negative_is_one_orbit_of_a0_d01)
        .check("f-vector", EXPECTED_FVECTOR.to_vec(), r.fvector.clone().unwrap_or_default())
        .holds("anticanonical expressions nonnegative on rays", r.anticanonical_expressions_nonnegative)
        .holds("K-trivial rays meet a boundary divisor negatively", r.k_trivial_meet_negative_boundary);
    s.data = json!({
        "rays": ray_rows(&mori_cone()?.table),
        "pair_functionals_outside": r.pair_functionals_outside,
    });
    Ok(s)
}

pub fn nef_section() -> Result<Section> {
    let mut s = Section::new(14, "nef cone");
    let r = nef_report()?;
    let histogram: Vec<(i64, usize)> = r.histogram.iter().map(|(&k, &v)| (k, v)).collect();
    s.check("extremal rays", 189, r.rays)
        .check("cube histogram", EXPECTED_HISTOGRAM.to_vec(), histogram)
        .check("to-curve contractions", 9, r.to_curve)
        .check("to-surface contractions", 11, r.to_surface)
        .check("birational contractions", 169, r.birational)
        .check("to-curve orbit sizes", vec![1, 8], &r.to_curve_orbits)
        .check("to-surface orbit sizes", vec![1, 2, 8], &r.to_surface_orbits)
        .holds("Grassmannian pullback contracts to a curve", r.grassmannian_class_is_to_curve)
        .holds("-K nef", r.anticanonical_nef)
        .check("-K ample", false, r.anticanonical_ample)
        .holds("rays are supporting", r.supporting)
        .holds("dual of the nef cone is the cone of curves", r.duality_closure)
        .holds("orbit sizes divide 48", r.orbit_sizes_divide_group_order);
    for (e, ok) in &r.surface_representatives {
        s.holds(&format!("{e} contracts to a surface"), *ok);
    }
    let nef = nef_cone()?;
    let kinds = classify_contractions(&nef.table);
    let rows: Vec<Value> = ray_rows(&nef.table)
        .into_iter()
        .zip(&kinds)
        .map(|(mut v, k)| {
            v["kind"] = json!(k.kind.to_string());
            v
        })
        .collect();
    s.data = json!({ "rays": rows });
    Ok(s)
}

pub fn flags_section() -> Result<Section> {
    let mut s = Section::new(15, "partial flag cones");
    let r = partial_flag_cones()?;
    s.check("N1 rays", 10, r.n1_rays)
        .check("N1 facets", 10, r.n1_facets)
        .check("N1' rays", 10, r.n1_prime_rays)
        .check("N1' facets", 10, r.n1_prime_facets)
        .holds("tau swaps N1 and N1'", r.tau_swaps)
        .holds("N1 barycenter proportional to L2", r.barycenter_proportional_to_l2)
        .holds("N1' barycenter proportional to L2'", r.barycenter_prime_proportional_to_l2_prime)
        .check("L2^3", 0, r.l2_cube)
        .check("L2'^3", 0, r.l2_prime_cube)
        .holds("extra ray of N1 present", r.n1_extra_ray_present)
        .holds("pullback from the (1,3) flag quotient invariant", r.x13_invariant)
        .holds("L2 positive on (-1)-curves of the B surfaces", r.l2_positive_on_b_surfaces);
    s.data = json!({ "n1_rays": r.n1.rays(), "n1_prime_rays": r.n1_prime.rays() });
    Ok(s)
}

pub fn effective_section() -> Result<Section> {
    let mut s = Section::new(16, "effective cone");
    let r = effective_cone_analysis()?;
    s.check("generators", 24, r.generators)
        .check("extremal rays", 24, r.extremal_rays)
        .check("non-extremal generators", Vec::<String>::new(), &r.non_extremal)
        .check("dual rays outside the comparison cone", 0, r.dual_rays_outside)
        .check("K-trivial face rank", r.ab_span_rank, r.k_trivial_face_rank)
        .holds("group preserves generators", r.group_preserves_generators);
    for p in pairing_checks() {
        s.check(&format!("{}.{}", p.divisor, p.curve), p.expected, p.computed);
    }
    s.data = json!({ "dual_rays": r.dual_rays, "comparison_generators": r.comparison_generators });
    Ok(s)
}

/// Builds the section for one criterion; 17 needs the others and is assembled by the caller.
pub fn section(criterion: u32, p: Params) -> Result<Section> {
    match criterion {
        1 => quotient_fan_section(),
        2 => relevance_section(),
        3 => git_section(),
        4 => polytope_section(),
        5 => group_section(p),
        6 => derivation_section(p),
        7 => boundary_table_section(p),
        8 => picard_section(),
        9 => petersen_section(),
        10 => form_section(),
        11 => anticanonical_section(),
        12 => quartic_section(),
        13 => mori_section(),
        14 => nef_section(),
        15 => flags_section(),
        16 => effective_section(),
        _ => Err(anyhow!("no standalone section for criterion {criterion}")),
    }
}

/// Recomputes the seeded sections and compares their serialization with `first`.
pub fn determinism_section(first: &[Section], p: Params) -> Result<Section> {
    let mut s = Section::new(17, "determinism");
    for prev in first.iter().filter(|x| (5..=7).contains(&x.criterion)) {
        let again = section(prev.criterion, p)?;
        let same = serde_json::to_string(prev)? == serde_json::to_string(&again)?;
        s.holds(&format!("criterion {} reproduced", prev.criterion), same);
    }
    Ok(s)
}
