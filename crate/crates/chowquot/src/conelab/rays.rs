//! Ray tables and the group action on divisor and curve coordinates.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;

use super::ConelabError;
use crate::divcalc::{lattice, CurveClass, DivisorClass, RANK};
use crate::tilegroup::{group_elements, GroupElement};

pub type Vector = [i64; RANK];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayRecord {
    /// Primitive integer generator.
    pub generator: Vector,
    /// Where the ray came from, e.g. "A0*D01" or a divisor expression.
    pub tag: String,
    /// −K degree for curve rays, top self-intersection for divisor rays.
    pub invariant: i64,
    pub orbit: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RayTable {
    pub records: Vec<RayRecord>,
}

impl RayTable {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn generators(&self) -> Vec<Vector> {
        self.records.iter().map(|r| r.generator).collect()
    }

    pub fn bigint_generators(&self) -> Vec<Vec<BigInt>> {
        self.records.iter().map(|r| to_bigint(&r.generator)).collect()
    }

    /// Orbit sizes in order of orbit id.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for r in &self.records {
            *sizes.entry(r.orbit).or_insert(0) += 1;
        }
        sizes.into_values().collect()
    }

    /// Histogram of the invariant column.
    pub fn invariant_histogram(&self) -> BTreeMap<i64, usize> {
        let mut h = BTreeMap::new();
        for r in &self.records {
            *h.entry(r.invariant).or_insert(0) += 1;
        }
        h
    }

    pub fn position(&self, v: &Vector) -> Option<usize> {
        let p = primitive(v);
        self.records.iter().position(|r| r.generator == p)
    }
}

pub fn to_bigint(v: &Vector) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

pub fn from_bigint(v: &[BigInt]) -> Result<Vector, ConelabError> {
    DivisorClass::from_bigint(v).map(|d| d.0).map_err(ConelabError::from)
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
pub fn primitive(v: &Vector) -> Vector {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        *v
    } else {
        v.map(|x| x / g)
    }
}

/// Whether b is a positive rational multiple of a.
pub fn same_ray(a: &Vector, b: &Vector) -> bool {
    primitive(a) == primitive(b) && a.iter().any(|&x| x != 0)
}

pub fn act_divisor(g: &GroupElement, d: &Vector) -> Vector {
    lattice().act(g, &DivisorClass(*d)).0
}

/// Pushforward of a curve functional: (gγ)(D) = γ(g⁻¹D).
pub fn act_curve(g: &GroupElement, c: &Vector) -> Vector {
    let inv = g.inverse();
    let gamma = CurveClass(*c);
    std::array::from_fn(|k| gamma.pair(&lattice().act(&inv, &DivisorClass::basis(k))))
}

/// Orbit id of each vector under `act`; fails unless the group permutes the set.
pub fn orbit_ids(
    vectors: &[Vector],
    act: impl Fn(&GroupElement, &Vector) -> Vector,
) -> Result<Vec<usize>, ConelabError> {
    let prim: Vec<Vector> = vectors.iter().map(primitive).collect();
    let index: BTreeMap<Vector, usize> = prim.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut ids = vec![usize::MAX; prim.len()];
    let mut next = 0;
    let group = group_elements();
    for i in 0..prim.len() {
        if ids[i] != usize::MAX {
            continue;
        }
        for g in &group {
            let img = primitive(&act(g, &prim[i]));
            let j = *index.get(&img).ok_or(ConelabError::NotPermuted)?;
            ids[j] = next;
        }
        next += 1;
    }
    Ok(ids)
}

/// Whether every group element maps the set of rays onto itself.
pub fn preserved(vectors: &[Vector], act: impl Fn(&GroupElement, &Vector) -> Vector) -> bool {
    orbit_ids(vectors, act).is_ok()
}

/// The orbit of a vector, as distinct primitive vectors in first-seen order.
pub fn orbit(v: &Vector, act: impl Fn(&GroupElement, &Vector) -> Vector) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for g in group_elements() {
        let w = act(&g, v);
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divcalc::{class, curve_class, form};
    use crate::tilegroup::{act_on_label, all_labels};

    #[test]
    fn curve_action_matches_label_action() {
        for g in group_elements() {
            for e in all_labels() {
                for f in [all_labels()[0], all_labels()[9], all_labels()[15]] {
                    let lhs = act_curve(&g, &curve_class(e, f).0);
                    let rhs = curve_class(act_on_label(&g, e), act_on_label(&g, f)).0;
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn action_preserves_pairing() {
        let d = class("A0+2B1-C23").0;
        let c = curve_class(all_labels()[0], all_labels()[14]).0;
        for g in group_elements() {
            let lhs = CurveClass(act_curve(&g, &c)).pair(&DivisorClass(act_divisor(&g, &d)));
            assert_eq!(lhs, CurveClass(c).pair(&DivisorClass(d)));
        }
        let _ = form();
    }

    #[test]
    fn primitive_and_orbits() {
        let mut v = [0; RANK];
        v[0] = 4;
        v[3] = -6;
        assert_eq!(primitive(&v)[..4], [2, 0, 0, -3]);
        assert!(same_ray(&v, &primitive(&v)));
        let labels: Vec<Vector> = all_labels().iter().map(|&l| lattice().label_class(l).0).collect();
        let ids = orbit_ids(&labels, act_divisor).unwrap();
        let distinct: std::collections::BTreeSet<_> = ids.iter().collect();
        // kinds A∪B, C, D form three orbits
        assert_eq!(distinct.len(), 3);
        assert!(orbit_ids(&labels[..4], act_divisor).is_err());
    }
}
