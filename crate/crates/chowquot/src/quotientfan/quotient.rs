//! Combinatorial quotient of a fan under a lattice projection.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use super::QuotientError;
use crate::exactlat::{primitive, IntegerMatrix};
use crate::polyhedra::{Cone, Fan};

fn project(proj: &IntegerMatrix, v: &[BigInt]) -> Vec<BigInt> {
    proj.mul_vec(v)
}

/// Projected cones π(σ) for every cone σ of the fan, keyed by σ's ray indices.
pub fn projected_cones(fan: &Fan, proj: &IntegerMatrix) -> Result<BTreeMap<Vec<usize>, Cone>, QuotientError> {
    if proj.cols() != fan.ambient_dim() {
        return Err(QuotientError::ProjectionShape { cols: proj.cols(), fan_dim: fan.ambient_dim() });
    }
    let mut out = BTreeMap::new();
    for idx in fan.all_cones() {
        let gens: Vec<Vec<BigInt>> = idx.iter().map(|&i| project(proj, &fan.rays()[i])).collect();
        out.insert(idx, Cone::from_generators(proj.rows(), &gens)?);
    }
    Ok(out)
}

/// Fan of minimal cones ⋂_{x ∈ π(σ)} π(σ).
///
/// Candidates are the closure of the projected cones under intersection; the
/// minimal cone at a relative-interior point of each candidate is collected,
/// and the maximal ones are checked against the fan axioms.
pub fn quotient_fan(fan: &Fan, proj: &IntegerMatrix) -> Result<Fan, QuotientError> {
    let projected: BTreeSet<Cone> = projected_cones(fan, proj)?.into_values().collect();
    let images: Vec<Cone> = projected.iter().cloned().collect();

    let mut candidates: BTreeSet<Cone> = projected.clone();
    let mut frontier: Vec<Cone> = projected.into_iter().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &images {
                let c = a.intersect(b)?;
                if candidates.insert(c.clone()) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }

    let minimal_at = |x: &[BigInt]| -> Result<Cone, QuotientError> {
        let containing: Vec<&Cone> = images.iter().filter(|c| c.contains(x)).collect();
        let mut acc = containing[0].clone();
        for c in &containing[1..] {
            acc = acc.intersect(c)?;
        }
        Ok(acc)
    };
    let mut cones: BTreeSet<Cone> = BTreeSet::new();
    for c in &candidates {
        cones.insert(minimal_at(&c.relint_point())?);
    }

    let maximal: Vec<&Cone> = cones.iter().filter(|c| !cones.iter().any(|d| d != *c && d.contains_cone(c))).collect();
    if let Some(c) = maximal.iter().find(|c| !c.is_pointed()) {
        return Err(QuotientError::NotPointed(format!("{:?}", c.lineality())));
    }
    let mut rays: Vec<Vec<BigInt>> = maximal.iter().flat_map(|c| c.rays().iter().cloned()).collect();
    rays.sort();
    rays.dedup();
    let index: BTreeMap<&Vec<BigInt>, usize> = rays.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let mut max_idx: Vec<Vec<usize>> = maximal
        .iter()
        .map(|c| {
            let mut v: Vec<usize> = c.rays().iter().map(|r| index[r]).collect();
            v.sort_unstable();
            v
        })
        .collect();
    max_idx.sort();
    Ok(Fan::new(proj.rows(), rays, max_idx)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientFanReport {
    pub complete: bool,
    pub smooth: bool,
    pub simplicial: bool,
    pub ray_count: usize,
    pub maximal_cone_count: usize,
    pub picard_number: usize,
    /// Names of the checks that failed.
    pub failures: Vec<String>,
}

pub fn verify_quotient_fan(fan: &Fan) -> QuotientFanReport {
    let complete = fan.is_complete();
    let smooth = fan.is_smooth();
    let simplicial = fan.is_simplicial();
    let picard_number = fan.rays().len().saturating_sub(fan.ambient_dim());
    let mut failures = Vec::new();
    if !complete {
        failures.push("complete".to_string());
    }
    if !smooth {
        failures.push("smooth".to_string());
    }
    if !simplicial {
        failures.push("simplicial".to_string());
    }
    QuotientFanReport {
        complete,
        smooth,
        simplicial,
        ray_count: fan.rays().len(),
        maximal_cone_count: fan.maximal_cones().len(),
        picard_number,
        failures,
    }
}

/// A cone whose projection meets a companion projection in a non-face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelevantPair {
    pub cone: Vec<usize>,
    pub companion: Vec<usize>,
    pub image: Cone,
    pub intersection: Cone,
}

pub fn relevant_pairs(fan: &Fan, proj: &IntegerMatrix) -> Result<Vec<RelevantPair>, QuotientError> {
    let projected = projected_cones(fan, proj)?;
    let distinct: Vec<&Cone> = projected.values().collect::<BTreeSet<_>>().into_iter().collect();
    // non-face intersections between distinct images, computed once
    let mut bad: BTreeMap<(&Cone, &Cone), Cone> = BTreeMap::new();
    for &a in &distinct {
        for &b in &distinct {
            if a == b {
                continue;
            }
            let inter = a.intersect(b)?;
            if !a.has_face(&inter)? {
                bad.insert((a, b), inter);
            }
        }
    }
    let mut out = Vec::new();
    for (s, a) in &projected {
        for (t, b) in &projected {
            if let Some(inter) = bad.get(&(a, b)) {
                out.push(RelevantPair {
                    cone: s.clone(),
                    companion: t.clone(),
                    image: a.clone(),
                    intersection: inter.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Rays of `quotient` that are not images of rays of `fan`.
pub fn non_projected_rays(fan: &Fan, proj: &IntegerMatrix, quotient: &Fan) -> Vec<Vec<BigInt>> {
    let images: BTreeSet<Vec<BigInt>> = fan.rays().iter().map(|r| primitive(&project(proj, r))).collect();
    quotient.rays().iter().filter(|r| !images.contains(*r)).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlat::ivec;

    #[test]
    fn identity_projection_returns_input() {
        let f =
            Fan::new(2, vec![ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[-1, -1])], vec![vec![0, 1], vec![1, 2], vec![0, 2]])
                .unwrap();
        let q = quotient_fan(&f, &IntegerMatrix::identity(2)).unwrap();
        let mut a: Vec<Cone> = (0..3).map(|i| f.maximal_cone(i)).collect();
        let mut b: Vec<Cone> = (0..q.maximal_cones().len()).map(|i| q.maximal_cone(i)).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn square_cone_projected_to_line() {
        // orthant in Z² projected by (1, −1): quotient fan of P¹
        let f = super::super::data::orthant_fan(2);
        let q = quotient_fan(&f, &IntegerMatrix::from_i64(&[&[1, -1]])).unwrap();
        assert_eq!(q.rays(), &[ivec(&[-1]), ivec(&[1])]);
        assert!(q.is_complete());
    }
}
