//! Double description, Farkas consistency, Euler relation and hull stability on random cones.

use chowquot::exactlat::{ivec, Rat};
use chowquot::polyhedra::{cone_membership, convex_hull, face_lattice_fvector, Cone};
use num_bigint::BigInt;
use proptest::prelude::*;

fn generators(dim: usize) -> impl Strategy<Value = Vec<Vec<BigInt>>> {
    proptest::collection::vec(proptest::collection::vec(-4i64..=4, dim), 1..8)
        .prop_map(|g| g.iter().map(|v| ivec(v)).collect())
}

/// Generators with positive first coordinate, so the cone is pointed.
fn pointed_generators(dim: usize) -> impl Strategy<Value = Vec<Vec<BigInt>>> {
    proptest::collection::vec((1i64..=3, proptest::collection::vec(-3i64..=3, dim - 1)), dim..dim + 5).prop_map(|g| {
        g.into_iter()
            .map(|(h, rest)| {
                let mut v = vec![h];
                v.extend(rest);
                ivec(&v)
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_of_dual_round_trips(g in generators(3)) {
        let c = Cone::from_generators(3, &g).unwrap();
        prop_assert_eq!(c.dual().dual(), c);
    }

    #[test]
    fn facets_agree_with_generator_span(g in generators(3), p in proptest::collection::vec(-5i64..=5, 3)) {
        let c = Cone::from_generators(3, &g).unwrap();
        let p = ivec(&p);
        prop_assert_eq!(c.contains(&p), cone_membership(&g, &p).is_some());
    }

    #[test]
    fn face_numbers_satisfy_euler(g in pointed_generators(4)) {
        let c = Cone::from_generators(4, &g).unwrap();
        prop_assume!(c.is_full_dimensional() && c.is_pointed());
        let f = face_lattice_fvector(&c).unwrap();
        prop_assert_eq!(f.len(), 3);
        // the boundary of a 3-polytope: V − E + F = 2
        prop_assert_eq!(f[0] as i64 - f[1] as i64 + f[2] as i64, 2);
        prop_assert_eq!(f[0], c.rays().len());
        prop_assert_eq!(f[2], c.facets().len());
    }

    #[test]
    fn interior_points_do_not_change_the_hull(pts in proptest::collection::vec(proptest::collection::vec(-6i64..=6, 3), 4..10)) {
        let pts: Vec<Vec<Rat>> = pts.iter().map(|p| p.iter().map(|&x| Rat::from_integer(x.into())).collect()).collect();
        let hull = convex_hull(&pts).unwrap();
        let n = Rat::from_integer(hull.vertices.len().into());
        let centroid: Vec<Rat> =
            (0..3).map(|k| hull.vertices.iter().map(|v| v[k].clone()).sum::<Rat>() / n.clone()).collect();
        let mut more = pts.clone();
        more.push(centroid);
        let again = convex_hull(&more).unwrap();
        let sorted = |mut v: Vec<Vec<Rat>>| { v.sort(); v };
        prop_assert_eq!(sorted(again.vertices), sorted(hull.vertices));
    }
}
