//! Subfans of the orthant that project bijectively, and the flip between them.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::{data::ProjectionData, quotient_fan, QuotientError};
use crate::exactlat::{primitive, rank_int};
use crate::polyhedra::{Cone, Fan};

/// Faces of the orthant, as E-index sets, that a subfan must avoid containing.
pub const EXCLUDED_ZERO: [&[usize]; 5] = [&[0, 3], &[1, 3], &[1, 4], &[2, 4], &[0, 2, 5]];
pub const EXCLUDED_PLUS: [&[usize]; 5] = [&[0, 3], &[1, 3], &[1, 4], &[0, 2, 5], &[2, 4, 5]];
pub const EXCLUDED_MINUS: [&[usize]; 5] = [&[1, 3], &[1, 4], &[2, 4], &[0, 2, 5], &[0, 3, 5]];

#[derive(Clone, Debug)]
pub struct Subfan {
    pub name: &'static str,
    /// Maximal orthant faces (E-index sets) containing no excluded face.
    pub source_cones: Vec<Vec<usize>>,
    /// Image fan in N(T/H).
    pub image: Fan,
    /// π is injective on every source cone.
    pub injective: bool,
}

#[derive(Clone, Debug)]
pub struct FlipReport {
    /// Source cones present in Σ₊ but not Σ₋, and conversely.
    pub plus_only: Vec<Vec<usize>>,
    pub minus_only: Vec<Vec<usize>>,
    /// Rays of the region where the two subdivisions differ.
    pub region_rays: Vec<Vec<BigInt>>,
    /// Circuit a + b = c + d among the region rays.
    pub circuit: ([Vec<BigInt>; 2], [Vec<BigInt>; 2]),
    /// Σ₀ consists exactly of the cones common to Σ₊ and Σ₋.
    pub zero_is_common_part: bool,
    /// The exchanged cones of Σ₊ and of Σ₋ cover the same region.
    pub same_support: bool,
    /// Rays of the common refinement not present in Σ₊ or Σ₋.
    pub new_rays: Vec<Vec<BigInt>>,
    pub refinement_equals_quotient: bool,
}

#[derive(Clone, Debug)]
pub struct GitReport {
    pub plus: Subfan,
    pub minus: Subfan,
    pub zero: Subfan,
    pub flip: FlipReport,
}

fn maximal_avoiding(n: usize, excluded: &[&[usize]]) -> Vec<Vec<usize>> {
    let ok = |s: u32| excluded.iter().all(|e| !e.iter().all(|&k| s & (1 << k) != 0));
    let good: Vec<u32> = (0..1u32 << n).filter(|&s| ok(s)).collect();
    let mut out: Vec<Vec<usize>> = good
        .iter()
        .filter(|&&s| !good.iter().any(|&t| t != s && t & s == s))
        .map(|&s| (0..n).filter(|&k| s & (1 << k) != 0).collect())
        .collect();
    out.sort();
    out
}

fn build_subfan(name: &'static str, excluded: &[&[usize]], proj: &ProjectionData) -> Result<Subfan, QuotientError> {
    let m = &proj.cokernel_matrix;
    let source_cones = maximal_avoiding(m.cols(), excluded);
    let images: Vec<Vec<BigInt>> = (0..m.cols()).map(|k| primitive(&m.column(k))).collect();
    let injective = source_cones.iter().all(|c| {
        let rows: Vec<Vec<BigInt>> = c.iter().map(|&k| images[k].clone()).collect();
        rank_int(&rows) == rows.len()
    }) && images.iter().collect::<BTreeSet<_>>().len() == images.len();
    let image = Fan::new(m.rows(), images, source_cones.clone())?;
    Ok(Subfan { name, source_cones, image, injective })
}

fn cone_set(f: &Fan) -> BTreeSet<Cone> {
    (0..f.maximal_cones().len()).map(|i| f.maximal_cone(i)).collect()
}

/// Builds Σ₊, Σ₋, Σ₀, checks bijectivity, and compares the common refinement
/// of Σ₊ and Σ₋ with the quotient fan.
pub fn git_subfans() -> Result<GitReport, QuotientError> {
    let (_, proj, orthant) = super::source_data();
    let plus = build_subfan("plus", &EXCLUDED_PLUS, &proj)?;
    let minus = build_subfan("minus", &EXCLUDED_MINUS, &proj)?;
    let zero = build_subfan("zero", &EXCLUDED_ZERO, &proj)?;

    let plus_set: BTreeSet<&Vec<usize>> = plus.source_cones.iter().collect();
    let minus_set: BTreeSet<&Vec<usize>> = minus.source_cones.iter().collect();
    let zero_set: BTreeSet<&Vec<usize>> = zero.source_cones.iter().collect();
    let common: BTreeSet<&Vec<usize>> = plus_set.intersection(&minus_set).copied().collect();
    let plus_only: Vec<Vec<usize>> = plus_set.difference(&minus_set).map(|c| (*c).clone()).collect();
    let minus_only: Vec<Vec<usize>> = minus_set.difference(&plus_set).map(|c| (*c).clone()).collect();

    let ray = |k: usize| primitive(&proj.cokernel_matrix.column(k));
    let region_idx: BTreeSet<usize> = plus_only.iter().chain(&minus_only).flatten().copied().collect();
    let region_rays: Vec<Vec<BigInt>> = region_idx.iter().map(|&k| ray(k)).collect();
    let region = Cone::from_generators(3, &region_rays)?;
    let union_cone = |cs: &[Vec<usize>]| -> Result<Cone, QuotientError> {
        let g: Vec<Vec<BigInt>> = cs.iter().flatten().map(|&k| ray(k)).collect();
        Ok(Cone::from_generators(3, &g)?)
    };
    let same_support = union_cone(&plus_only)? == region
        && union_cone(&minus_only)? == region
        && volume(&plus_only, &ray) == volume(&minus_only, &ray);

    let circuit = find_circuit(&region_rays);

    // common refinement of the image fans
    let mut refined: BTreeSet<Cone> = BTreeSet::new();
    for a in cone_set(&plus.image) {
        for b in cone_set(&minus.image) {
            let c = a.intersect(&b)?;
            if c.dim() == 3 {
                refined.insert(c);
            }
        }
    }
    let quotient = quotient_fan(&orthant, &proj.cokernel_matrix)?;
    let refinement_equals_quotient = refined == cone_set(&quotient);
    let old_rays: BTreeSet<&Vec<BigInt>> = plus.image.rays().iter().chain(minus.image.rays()).collect();
    let mut new_rays: Vec<Vec<BigInt>> =
        refined.iter().flat_map(|c| c.rays().iter().cloned()).filter(|r| !old_rays.contains(r)).collect();
    new_rays.sort();
    new_rays.dedup();

    let flip = FlipReport {
        plus_only,
        minus_only,
        region_rays,
        circuit,
        zero_is_common_part: common == zero_set,
        same_support,
        new_rays,
        refinement_equals_quotient,
    };
    Ok(GitReport { plus, minus, zero, flip })
}

fn volume(cs: &[Vec<usize>], ray: &dyn Fn(usize) -> Vec<BigInt>) -> BigInt {
    cs.iter()
        .map(|c| {
            let rows: Vec<Vec<BigInt>> = c.iter().map(|&k| ray(k)).collect();
            let m = crate::exactlat::IntegerMatrix::from_rows(3, &rows).expect("3 rays");
            num_traits::Signed::abs(&m.determinant().expect("square"))
        })
        .sum()
}

/// Splits four rays into pairs with equal sums, if possible.
fn find_circuit(rays: &[Vec<BigInt>]) -> ([Vec<BigInt>; 2], [Vec<BigInt>; 2]) {
    let empty = || [Vec::new(), Vec::new()];
    if rays.len() != 4 {
        return (empty(), empty());
    }
    let sum = |a: &Vec<BigInt>, b: &Vec<BigInt>| -> Vec<BigInt> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    for (i, j, k, l) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
        if sum(&rays[i], &rays[j]) == sum(&rays[k], &rays[l]) {
            return ([rays[i].clone(), rays[j].clone()], [rays[k].clone(), rays[l].clone()]);
        }
    }
    (empty(), empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximal_faces_of_zero_subfan() {
        let cones = maximal_avoiding(6, &EXCLUDED_ZERO);
        let expected: Vec<Vec<usize>> =
            vec![vec![0, 1, 2], vec![0, 1, 5], vec![0, 4, 5], vec![1, 2, 5], vec![2, 3, 5], vec![3, 4, 5]];
        assert_eq!(cones, expected);
    }
}
