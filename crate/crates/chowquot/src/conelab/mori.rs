//! The cone of curves, generated by products of pairs of boundary divisors.

use std::sync::OnceLock;

use super::rays::{act_curve, from_bigint, orbit_ids, primitive, RayRecord, RayTable, Vector};
use super::ConelabError;
use crate::divcalc::{anticanonical_class, class, curve_class, CurveClass, ANTICANONICAL_EXPRESSIONS, RANK};
use crate::polyhedra::{face_lattice_fvector, Cone};
use crate::tilegroup::{all_labels, BoundaryLabel};

/// Boundary pairs whose intersection curves span the cone, with their family name.
pub fn curve_families() -> Vec<(&'static str, BoundaryLabel, BoundaryLabel)> {
    let mut out = Vec::new();
    for i in 0..4u8 {
        for j in (0..4u8).filter(|&j| j != i) {
            out.push(("A_i*D_ij", BoundaryLabel::A(i), BoundaryLabel::d(i, j)));
        }
    }
    for i in 0..4u8 {
        for j in (0..4u8).filter(|&j| j != i) {
            out.push(("B_i*D_ij", BoundaryLabel::B(i), BoundaryLabel::d(i, j)));
        }
    }
    for i in 0..4u8 {
        for j in (0..4u8).filter(|&j| j != i) {
            out.push(("A_i*B_j", BoundaryLabel::A(i), BoundaryLabel::B(j)));
        }
    }
    for i in 0..4u8 {
        out.push(("A_i*B_i", BoundaryLabel::A(i), BoundaryLabel::B(i)));
    }
    for (a, b) in [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))] {
        out.push(("C*C", BoundaryLabel::C(a.0, a.1), BoundaryLabel::C(b.0, b.1)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoriCone {
    pub cone: Cone,
    pub table: RayTable,
}

impl MoriCone {
    pub fn k_negative(&self) -> Vec<&RayRecord> {
        self.table.records.iter().filter(|r| r.invariant > 0).collect()
    }

    pub fn k_trivial(&self) -> Vec<&RayRecord> {
        self.table.records.iter().filter(|r| r.invariant == 0).collect()
    }
}

fn build() -> Result<MoriCone, ConelabError> {
    let families = curve_families();
    let classes: Vec<(String, Vector)> =
        families.iter().map(|&(_, e, f)| (format!("{e}*{f}"), curve_class(e, f).0)).collect();
    let gens: Vec<_> = classes.iter().map(|(_, c)| super::rays::to_bigint(c)).collect();
    let cone = Cone::from_generators(RANK, &gens)?;
    if !cone.is_pointed() || cone.dim() != RANK {
        return Err(ConelabError::Shape("cone of curves is not pointed and full".into()));
    }
    let rays: Vec<Vector> = cone.rays().iter().map(|r| from_bigint(r)).collect::<Result<_, _>>()?;
    // every listed class must span an extremal ray
    for (tag, c) in &classes {
        if !rays.contains(&primitive(c)) {
            return Err(ConelabError::NotExtremal(tag.clone()));
        }
    }
    if rays.len() != 31 {
        return Err(ConelabError::Count {
            what: "extremal rays of the cone of curves",
            expected: 31,
            found: rays.len(),
        });
    }
    let k = anticanonical_class();
    let orbits = orbit_ids(&rays, act_curve)?;
    let records = rays
        .iter()
        .zip(orbits)
        .map(|(r, orbit)| {
            let tag = classes.iter().find(|(_, c)| primitive(c) == *r).map(|(t, _)| t.clone()).unwrap_or_default();
            RayRecord { generator: *r, tag, invariant: CurveClass(*r).pair(&k), orbit }
        })
        .collect();
    Ok(MoriCone { cone, table: RayTable { records } })
}

pub fn mori_cone() -> Result<&'static MoriCone, ConelabError> {
    static CELL: OnceLock<Result<MoriCone, ConelabError>> = OnceLock::new();
    CELL.get_or_init(build).as_ref().map_err(Clone::clone)
}

/// Numbers of faces of dimensions 1 through 11.
pub fn mori_fvector(m: &MoriCone) -> Result<Vec<usize>, ConelabError> {
    Ok(face_lattice_fvector(&m.cone)?)
}

pub const EXPECTED_FVECTOR: [usize; 11] = [31, 387, 2647, 10942, 28495, 47531, 50616, 33484, 12912, 2544, 189];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoriReport {
    pub rays: usize,
    pub k_negative: usize,
    pub k_trivial: usize,
    pub k_negative_orbits: Vec<usize>,
    pub k_trivial_orbits: Vec<usize>,
    /// Orbit of A₀∗D₀₁ covers the K-negative rays.
    pub k_negative_is_one_orbit_of_a0_d01: bool,
    pub fvector: Option<Vec<usize>>,
    /// Each boundary expression of −K is nonnegative on every ray.
    pub anticanonical_expressions_nonnegative: bool,
    /// Every K-trivial ray pairs negatively with some boundary divisor.
    pub k_trivial_meet_negative_boundary: bool,
    /// Nonzero products E∗F of distinct boundary divisors lying outside the cone.
    pub pair_functionals_outside: usize,
}

impl MoriReport {
    pub fn passed(&self) -> bool {
        self.rays == 31
            && self.k_negative == 12
            && self.k_trivial == 19
            && self.k_negative_orbits == vec![12]
            && self.k_trivial_orbits == vec![3, 4, 12]
            && self.k_negative_is_one_orbit_of_a0_d01
            && self.fvector.as_ref().is_none_or(|f| f[..] == EXPECTED_FVECTOR)
            && self.anticanonical_expressions_nonnegative
            && self.k_trivial_meet_negative_boundary
    }
}

fn sorted_orbit_sizes(records: &[&RayRecord]) -> Vec<usize> {
    let mut sizes = std::collections::BTreeMap::new();
    for r in records {
        *sizes.entry(r.orbit).or_insert(0usize) += 1;
    }
    let mut v: Vec<usize> = sizes.into_values().collect();
    v.sort();
    v
}

pub fn mori_report(with_fvector: bool) -> Result<MoriReport, ConelabError> {
    let m = mori_cone()?;
    let neg = m.k_negative();
    let triv = m.k_trivial();
    let a0d01 = primitive(&curve_class(BoundaryLabel::A(0), BoundaryLabel::d(0, 1)).0);
    let a0d01_orbit = m.table.records.iter().find(|r| r.generator == a0d01).map(|r| r.orbit);
    let k_negative_is_one_orbit_of_a0_d01 = neg.iter().all(|r| Some(r.orbit) == a0d01_orbit);
    let cans: Vec<_> = ANTICANONICAL_EXPRESSIONS.iter().map(|e| class(e)).collect();
    let anticanonical_expressions_nonnegative =
        m.table.records.iter().all(|r| cans.iter().all(|d| CurveClass(r.generator).pair(d) >= 0));
    let boundary: Vec<_> = all_labels().into_iter().map(|l| class(&l.to_string())).collect();
    let k_trivial_meet_negative_boundary =
        triv.iter().all(|r| boundary.iter().any(|d| CurveClass(r.generator).pair(d) < 0));
    let labels = all_labels();
    let mut outside = 0;
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            let c = curve_class(labels[i], labels[j]);
            if !c.is_zero() && !m.cone.contains(&c.to_bigint()) {
                outside += 1;
            }
        }
    }
    Ok(MoriReport {
        rays: m.table.len(),
        k_negative: neg.len(),
        k_trivial: triv.len(),
        k_negative_orbits: sorted_orbit_sizes(&neg),
        k_trivial_orbits: sorted_orbit_sizes(&triv),
        k_negative_is_one_orbit_of_a0_d01,
        fvector: if with_fvector { Some(mori_fvector(m)?) } else { None },
        anticanonical_expressions_nonnegative,
        k_trivial_meet_negative_boundary,
        pair_functionals_outside: outside,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divcalc::curve_expression;

    #[test]
    fn thirty_one_rays_split_by_degree() {
        let r = mori_report(false).unwrap();
        assert_eq!(r.rays, 31);
        assert_eq!((r.k_negative, r.k_trivial), (12, 19));
        assert_eq!(r.k_negative_orbits, vec![12]);
        assert_eq!(r.k_trivial_orbits, vec![3, 4, 12]);
        assert!(r.k_negative_is_one_orbit_of_a0_d01);
        assert!(r.anticanonical_expressions_nonnegative);
        assert!(r.k_trivial_meet_negative_boundary);
        assert!(r.passed());
    }

    #[test]
    fn face_numbers() {
        let m = mori_cone().unwrap();
        let f = mori_fvector(m).unwrap();
        assert_eq!(f, EXPECTED_FVECTOR);
        // Euler relation for the 11-dimensional polytope cut out by a transverse hyperplane
        let euler: i64 = f.iter().enumerate().map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) }).sum();
        assert_eq!(euler, 2);
    }

    #[test]
    fn k_trivial_orbit_representatives() {
        let m = mori_cone().unwrap();
        let orbit_of = |s: &str| {
            let v = primitive(&curve_expression(s).unwrap().0);
            m.table.records.iter().find(|r| r.generator == v).map(|r| r.orbit).unwrap()
        };
        let size = |o: usize| m.table.records.iter().filter(|r| r.orbit == o).count();
        assert_eq!(size(orbit_of("A0*B1")), 12);
        assert_eq!(size(orbit_of("A0*B0")), 4);
        assert_eq!(size(orbit_of("C01*C23")), 3);
    }

    #[test]
    fn rays_are_primitive_and_distinct() {
        let m = mori_cone().unwrap();
        let g = m.table.generators();
        for v in &g {
            assert_eq!(primitive(v), *v);
        }
        let set: std::collections::BTreeSet<_> = g.iter().collect();
        assert_eq!(set.len(), 31);
    }
}
