//! Face enumeration from ray–facet incidence.

use std::collections::HashSet;

use rayon::prelude::*;

use super::bitset::BitSet;
use super::{Cone, PolyhedraError};

/// Faces of a pointed cone grouped by dimension, each face given as the set of
/// rays it contains. Index k holds the faces of dimension k, for 1 ≤ k ≤ dim−1.
/// Each level is sorted, so the output is deterministic.
pub fn faces_by_dimension(c: &Cone) -> Result<Vec<Vec<BitSet>>, PolyhedraError> {
    if !c.is_pointed() {
        return Err(PolyhedraError::NotPointed);
    }
    let d = c.dim();
    let n = c.rays().len();
    let mut levels: Vec<Vec<BitSet>> = vec![Vec::new(); d.max(1)];
    if d < 2 {
        return Ok(levels);
    }
    let facets: Vec<BitSet> = c.incidence().into_iter().map(|idx| BitSet::from_indices(n, idx)).collect();
    let mut top = facets.clone();
    top.sort();
    top.dedup();
    levels[d - 1] = top;
    for k in (2..d).rev() {
        let next: HashSet<BitSet> = levels[k].par_iter().flat_map_iter(|face| facets_of_face(face, &facets)).collect();
        let mut next: Vec<BitSet> = next.into_iter().collect();
        next.sort();
        levels[k - 1] = next;
    }
    Ok(levels)
}

/// Maximal proper intersections of `face` with the cone's facets.
fn facets_of_face(face: &BitSet, facets: &[BitSet]) -> Vec<BitSet> {
    let full = face.len();
    let mut cand: Vec<BitSet> =
        facets.iter().map(|f| face.intersection(f)).filter(|s| s.len() < full && !s.is_empty()).collect();
    cand.sort_by_key(|s| std::cmp::Reverse(s.len()));
    cand.dedup();
    let mut maximal: Vec<BitSet> = Vec::new();
    for s in cand {
        if !maximal.iter().any(|m| s.is_subset(m)) {
            maximal.push(s);
        }
    }
    maximal
}

/// Number of faces of each dimension 1..dim−1 of a pointed cone.
pub fn face_lattice_fvector(c: &Cone) -> Result<Vec<usize>, PolyhedraError> {
    let levels = faces_by_dimension(c)?;
    Ok(levels.into_iter().skip(1).map(|l| l.len()).collect())
}
