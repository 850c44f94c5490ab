//! The nef cone as the dual of the cone of curves, and the contractions its
//! extremal rays support.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use super::mori::mori_cone;
use super::rays::{act_divisor, from_bigint, orbit_ids, RayRecord, RayTable, Vector};
use super::ConelabError;
use crate::divcalc::{anticanonical_class, class, form, CurveClass, DivisorClass, L1};
use crate::polyhedra::Cone;

/// Representatives of the three orbits of contractions onto surfaces, by orbit size.
pub const SURFACE_REPRESENTATIVES: [(&str, usize); 3] =
    [("A0+B0+D01+D02+D03", 1), ("A2+A3+C01+D23", 2), ("B0+C01+C02+D01+D02", 8)];

pub const EXPECTED_HISTOGRAM: [(i64, usize); 9] =
    [(0, 20), (1, 6), (2, 24), (4, 6), (5, 48), (14, 6), (16, 15), (18, 16), (22, 48)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NefCone {
    pub cone: Cone,
    pub table: RayTable,
}

fn build() -> Result<NefCone, ConelabError> {
    let mori = mori_cone()?;
    let cone = mori.cone.dual();
    let rays: Vec<Vector> = cone.rays().iter().map(|r| from_bigint(r)).collect::<Result<_, _>>()?;
    if rays.len() != 189 {
        return Err(ConelabError::Count { what: "extremal rays of the nef cone", expected: 189, found: rays.len() });
    }
    let orbits = orbit_ids(&rays, act_divisor)?;
    let f = form();
    let records = rays
        .iter()
        .zip(orbits)
        .map(|(r, orbit)| {
            let d = DivisorClass(*r);
            RayRecord { generator: *r, tag: d.to_string(), invariant: f.cube(&d), orbit }
        })
        .collect();
    Ok(NefCone { cone, table: RayTable { records } })
}

pub fn nef_cone() -> Result<&'static NefCone, ConelabError> {
    static CELL: OnceLock<Result<NefCone, ConelabError>> = OnceLock::new();
    CELL.get_or_init(build).as_ref().map_err(Clone::clone)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContractionKind {
    ToCurve,
    ToSurface,
    Birational,
}

impl fmt::Display for ContractionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContractionKind::ToCurve => "to-curve",
            ContractionKind::ToSurface => "to-surface",
            ContractionKind::Birational => "birational",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionRecord {
    pub class: DivisorClass,
    pub kind: ContractionKind,
    pub cube: i64,
    pub square_numerically_trivial: bool,
    pub orbit: usize,
}

pub fn classify(d: &DivisorClass) -> (ContractionKind, i64, bool) {
    let f = form();
    let cube = f.cube(d);
    let trivial = !d.is_zero() && f.square_is_numerically_trivial(d);
    let kind = if trivial {
        ContractionKind::ToCurve
    } else if cube == 0 {
        ContractionKind::ToSurface
    } else {
        ContractionKind::Birational
    };
    (kind, cube, trivial)
}

pub fn classify_contractions(rays: &RayTable) -> Vec<ContractionRecord> {
    rays.records
        .iter()
        .map(|r| {
            let d = DivisorClass(r.generator);
            let (kind, cube, trivial) = classify(&d);
            ContractionRecord { class: d, kind, cube, square_numerically_trivial: trivial, orbit: r.orbit }
        })
        .collect()
}

fn orbit_sizes_of(records: &[&ContractionRecord]) -> Vec<usize> {
    let mut sizes = BTreeMap::new();
    for r in records {
        *sizes.entry(r.orbit).or_insert(0usize) += 1;
    }
    let mut v: Vec<usize> = sizes.into_values().collect();
    v.sort();
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NefReport {
    pub rays: usize,
    pub histogram: BTreeMap<i64, usize>,
    pub to_curve: usize,
    pub to_surface: usize,
    pub birational: usize,
    pub to_curve_orbits: Vec<usize>,
    pub to_surface_orbits: Vec<usize>,
    pub grassmannian_class_is_to_curve: bool,
    /// Each listed representative is a to-surface ray whose orbit has the listed size.
    pub surface_representatives: Vec<(String, bool)>,
    pub anticanonical_nef: bool,
    pub anticanonical_ample: bool,
    /// Every ray is nonnegative on all curve rays and vanishes on at least one.
    pub supporting: bool,
    /// The dual of the nef cone is the cone of curves.
    pub duality_closure: bool,
    pub orbit_sizes_divide_group_order: bool,
}

impl NefReport {
    pub fn histogram_matches(&self) -> bool {
        self.histogram.iter().map(|(&k, &v)| (k, v)).eq(EXPECTED_HISTOGRAM)
    }

    pub fn passed(&self) -> bool {
        self.rays == 189
            && self.histogram_matches()
            && (self.to_curve, self.to_surface, self.birational) == (9, 11, 169)
            && self.to_curve_orbits == vec![1, 8]
            && self.to_surface_orbits == vec![1, 2, 8]
            && self.grassmannian_class_is_to_curve
            && self.surface_representatives.iter().all(|(_, ok)| *ok)
            && self.anticanonical_nef
            && !self.anticanonical_ample
            && self.supporting
            && self.duality_closure
            && self.orbit_sizes_divide_group_order
    }
}

pub fn nef_report() -> Result<NefReport, ConelabError> {
    let nef = nef_cone()?;
    let mori = mori_cone()?;
    let records = classify_contractions(&nef.table);
    let of_kind = |k| records.iter().filter(|r| r.kind == k).collect::<Vec<_>>();
    let (curve, surface, bir) =
        (of_kind(ContractionKind::ToCurve), of_kind(ContractionKind::ToSurface), of_kind(ContractionKind::Birational));
    let ray_record = |v: &Vector| nef.table.position(v).map(|i| &records[i]);
    let l1 = class(L1);
    let grassmannian_class_is_to_curve = ray_record(&l1.0).is_some_and(|r| r.kind == ContractionKind::ToCurve);
    let surface_representatives = SURFACE_REPRESENTATIVES
        .iter()
        .map(|&(e, size)| {
            let ok = ray_record(&class(e).0).is_some_and(|r| {
                r.kind == ContractionKind::ToSurface && records.iter().filter(|x| x.orbit == r.orbit).count() == size
            });
            (e.to_string(), ok)
        })
        .collect();
    let k = anticanonical_class();
    let pairings =
        |d: &DivisorClass| mori.table.records.iter().map(|r| CurveClass(r.generator).pair(d)).collect::<Vec<_>>();
    let kp = pairings(&k);
    let supporting = nef.table.records.iter().all(|r| {
        let p = pairings(&DivisorClass(r.generator));
        p.iter().all(|&x| x >= 0) && p.contains(&0)
    });
    let back = Cone::from_generators(crate::divcalc::RANK, &nef.table.bigint_generators())?;
    Ok(NefReport {
        rays: nef.table.len(),
        histogram: nef.table.invariant_histogram(),
        to_curve: curve.len(),
        to_surface: surface.len(),
        birational: bir.len(),
        to_curve_orbits: orbit_sizes_of(&curve),
        to_surface_orbits: orbit_sizes_of(&surface),
        grassmannian_class_is_to_curve,
        surface_representatives,
        anticanonical_nef: kp.iter().all(|&x| x >= 0),
        anticanonical_ample: kp.iter().all(|&x| x > 0),
        supporting,
        duality_closure: back.dual() == mori.cone,
        orbit_sizes_divide_group_order: nef.table.orbit_sizes().iter().all(|s| 48 % s == 0),
    })
}
