//! Moment-map images of the torus-fixed flags.

use super::data::permutations4;
use super::QuotientError;
use crate::exactlat::rat;
use crate::polyhedra::{convex_hull, Polytope};

/// Doubled weight of the fixed flag σB: coordinate i is 2σ(i) − 3.
pub fn fixed_point_weight(sigma: &[usize; 4]) -> [i64; 4] {
    sigma.map(|s| 2 * s as i64 - 3)
}

/// The 24 doubled weights, in lexicographic order of σ, and their convex hull.
pub fn fixed_point_weights() -> Result<(Vec<[i64; 4]>, Polytope), QuotientError> {
    let weights: Vec<[i64; 4]> = permutations4().iter().map(fixed_point_weight).collect();
    let points: Vec<_> = weights.iter().map(|w| w.iter().map(|&x| rat(x)).collect()).collect();
    Ok((weights, convex_hull(&points)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_weight() {
        assert_eq!(fixed_point_weight(&[0, 1, 2, 3]), [-3, -1, 1, 3]);
    }

    #[test]
    fn permutohedron() {
        let (w, p) = fixed_point_weights().unwrap();
        assert_eq!(w.len(), 24);
        assert_eq!(p.vertices.len(), 24);
        assert_eq!(p.dim, 3);
        assert_eq!(p.f_vector, vec![24, 36, 14]);
        assert_eq!(p.equations.len(), 1);
    }
}
