//! The effective cone: extremality of the 24 candidate generators, the dual
//! inclusion into a cone of known curves, and the pairing checks behind it.

use super::mori::mori_cone;
use super::rays::{act_curve, act_divisor, from_bigint, orbit, preserved, primitive, to_bigint, Vector};
use super::ConelabError;
use crate::divcalc::{
    class, curve_expression, gamma1, gamma2, CurveClass, DivisorClass, GAMMA1, GAMMA2, H_CLASSES, RANK, S_CLASS,
};
use crate::exactlat::rank_int;
use crate::polyhedra::{cone_membership, Cone};
use crate::tilegroup::{all_labels, BoundaryLabel};

/// Curve classes whose orbits generate the comparison cone.
pub const COMPARISON_CURVES: [&str; 7] =
    ["A0*C23", "A0*D01", "A0*B1 + A0*D01", "A0*B1 + A0*C12", "A0*B0 + A0*D01", GAMMA1, GAMMA2];

/// The 20 boundary divisors, the three quadric-cone divisors and the special divisor.
pub fn effective_generators() -> Vec<(String, DivisorClass)> {
    let mut out: Vec<(String, DivisorClass)> =
        all_labels().into_iter().map(|l| (l.to_string(), class(&l.to_string()))).collect();
    out.extend(H_CLASSES.iter().map(|(n, e)| (n.to_string(), class(e))));
    out.push(("S".to_string(), class(S_CLASS)));
    out
}

pub fn comparison_generators() -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for s in COMPARISON_CURVES {
        let c = curve_expression(s).expect("curve literal").0;
        for v in orbit(&c, act_curve) {
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EffectiveReport {
    pub generators: usize,
    pub extremal_rays: usize,
    /// Generators not spanning an extremal ray.
    pub non_extremal: Vec<String>,
    pub dual_rays: usize,
    pub comparison_generators: usize,
    /// Rays of the dual cone lying outside the comparison cone.
    pub dual_rays_outside: usize,
    pub k_trivial_face_rank: usize,
    pub ab_span_rank: usize,
    pub group_preserves_generators: bool,
}

impl EffectiveReport {
    pub fn passed(&self) -> bool {
        self.extremal_rays == 24
            && self.non_extremal.is_empty()
            && self.dual_rays_outside == 0
            && self.k_trivial_face_rank == self.ab_span_rank
            && self.group_preserves_generators
    }
}

pub fn effective_cone_analysis() -> Result<EffectiveReport, ConelabError> {
    let gens = effective_generators();
    let cone = Cone::from_generators(RANK, &gens.iter().map(|(_, d)| d.to_bigint()).collect::<Vec<_>>())?;
    let rays: Vec<Vector> = cone.rays().iter().map(|r| from_bigint(r)).collect::<Result<_, _>>()?;
    let non_extremal = gens.iter().filter(|(_, d)| !rays.contains(&primitive(&d.0))).map(|(n, _)| n.clone()).collect();
    let comparison = comparison_generators();
    let comparison_big: Vec<_> = comparison.iter().map(to_bigint).collect();
    let dual = cone.dual();
    let dual_rays_outside = dual.rays().iter().filter(|r| cone_membership(&comparison_big, r).is_none()).count();
    let mori = mori_cone()?;
    let k_trivial: Vec<_> = mori.k_trivial().iter().map(|r| to_bigint(&r.generator)).collect();
    let mut ab = Vec::new();
    for i in 0..4u8 {
        for j in 0..4u8 {
            ab.push(crate::divcalc::curve_class(BoundaryLabel::A(i), BoundaryLabel::B(j)).to_bigint());
        }
    }
    let gen_vectors: Vec<Vector> = gens.iter().map(|(_, d)| d.0).collect();
    Ok(EffectiveReport {
        generators: gens.len(),
        extremal_rays: rays.len(),
        non_extremal,
        dual_rays: dual.rays().len(),
        comparison_generators: comparison.len(),
        dual_rays_outside,
        k_trivial_face_rank: rank_int(&k_trivial),
        ab_span_rank: rank_int(&ab),
        group_preserves_generators: preserved(&gen_vectors, act_divisor),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingCheck {
    pub divisor: String,
    pub curve: String,
    pub expected: i64,
    pub computed: i64,
}

/// Pairings of the two test curves with S, the H classes and every boundary divisor.
pub fn pairing_checks() -> Vec<PairingCheck> {
    let g1 = gamma1();
    let g2 = gamma2();
    let mut out = Vec::new();
    let mut push = |divisor: String, curve: &str, c: &CurveClass, d: &DivisorClass, expected: i64| {
        out.push(PairingCheck { divisor, curve: curve.to_string(), expected, computed: c.pair(d) });
    };
    push("S".into(), "Gamma1", &g1, &class(S_CLASS), -1);
    push(H_CLASSES[0].0.into(), "Gamma2", &g2, &class(H_CLASSES[0].1), -1);
    let g2_ones = ["D01", "D23", "C12", "C13", "C02", "C03"];
    for l in all_labels() {
        let name = l.to_string();
        let d = class(&name);
        push(name.clone(), "Gamma1", &g1, &d, matches!(l, BoundaryLabel::D(..)) as i64);
        push(name.clone(), "Gamma2", &g2, &d, g2_ones.contains(&name.as_str()) as i64);
    }
    out
}
