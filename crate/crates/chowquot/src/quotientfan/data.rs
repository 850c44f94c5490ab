//! Root data of PGL(4) and the torus action on the nilpotent chart.

use num_bigint::BigInt;

use crate::exactlat::{ivec, IntegerMatrix};
use crate::polyhedra::Fan;

/// Roots live in the sum-zero sublattice of Z⁴.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootData {
    /// α_i = e_{i−1} − e_i for i = 1, 2, 3.
    pub simple_roots: [[i64; 4]; 3],
    /// Positive roots α_{i,j} = e_{i−1} − e_j for 1 ≤ i ≤ j ≤ 3, keyed by (i, j).
    pub positive_roots: Vec<((usize, usize), [i64; 4])>,
    /// W = S₄ acting by coordinate permutation, in lexicographic order.
    pub weyl_group: Vec<[usize; 4]>,
    /// Longest element w₀, reversing (0,1,2,3).
    pub longest: [usize; 4],
    /// Minimal weight Σ(3/2 − i)eᵢ, doubled.
    pub lambda_min_doubled: [i64; 4],
}

impl RootData {
    pub fn new() -> Self {
        let e = |i: usize| {
            let mut v = [0i64; 4];
            v[i] = 1;
            v
        };
        let sub = |a: [i64; 4], b: [i64; 4]| [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]];
        let simple_roots = [sub(e(0), e(1)), sub(e(1), e(2)), sub(e(2), e(3))];
        let mut positive_roots = Vec::new();
        for i in 1..=3 {
            for j in i..=3 {
                positive_roots.push(((i, j), sub(e(i - 1), e(j))));
            }
        }
        RootData {
            simple_roots,
            positive_roots,
            weyl_group: permutations4(),
            longest: [3, 2, 1, 0],
            lambda_min_doubled: [3, 1, -1, -3],
        }
    }

    pub fn positive_root(&self, i: usize, j: usize) -> [i64; 4] {
        self.positive_roots.iter().find(|(k, _)| *k == (i, j)).expect("1 ≤ i ≤ j ≤ 3").1
    }

    /// Coordinates of a sum-zero vector in the basis of simple roots.
    pub fn simple_root_coordinates(&self, v: [i64; 4]) -> [i64; 3] {
        // α-coordinates are partial sums: c_k = v_0 + … + v_{k−1}
        [v[0], v[0] + v[1], v[0] + v[1] + v[2]]
    }
}

impl Default for RootData {
    fn default() -> Self {
        Self::new()
    }
}

/// All 24 permutations of {0,1,2,3} in lexicographic order; p[i] is the image of i.
pub fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    if p.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Chart coordinates of the nilpotent chart, ordered as the weight-matrix columns.
pub const CHART_COORDINATES: [&str; 6] = ["y11", "y22", "y33", "y12", "y23", "y13"];

/// Orthant ray labels: E_k is the k-th coordinate ray.
pub const ORTHANT_LABELS: [&str; 6] = ["E0", "E1", "E2", "E3", "E4", "E5"];

/// Positive root (i, j) attached to each chart coordinate y_ij.
pub const CHART_ROOTS: [(usize, usize); 6] = [(1, 1), (2, 2), (3, 3), (1, 2), (2, 3), (1, 3)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionData {
    pub weight_matrix: IntegerMatrix,
    pub cokernel_matrix: IntegerMatrix,
    pub ray_labels: [&'static str; 6],
}

impl ProjectionData {
    pub fn new() -> Self {
        ProjectionData {
            weight_matrix: IntegerMatrix::from_i64(&[&[1, 0, 0, 1, 0, 1], &[0, 1, 0, 1, 1, 1], &[0, 0, 1, 0, 1, 1]]),
            cokernel_matrix: IntegerMatrix::from_i64(&[
                &[-1, -1, 0, 1, 0, 0],
                &[0, -1, -1, 0, 1, 0],
                &[-1, -1, -1, 0, 0, 1],
            ]),
            ray_labels: ORTHANT_LABELS,
        }
    }
}

impl Default for ProjectionData {
    fn default() -> Self {
        Self::new()
    }
}

/// The positive orthant of N(T) ≅ Z⁶ as a one-cone fan.
pub fn orthant_fan(n: usize) -> Fan {
    let rays: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            ivec(&v)
        })
        .collect();
    Fan::new(n, rays, vec![(0..n).collect()]).expect("orthant is a fan")
}

pub fn source_data() -> (RootData, ProjectionData, Fan) {
    (RootData::new(), ProjectionData::new(), orthant_fan(6))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlat::{hnf_rows, integer_kernel, rank_int};

    #[test]
    fn weight_columns_are_positive_roots() {
        let (roots, proj, _) = source_data();
        for (col, &(i, j)) in CHART_ROOTS.iter().enumerate() {
            let coords = roots.simple_root_coordinates(roots.positive_root(i, j));
            let expected: Vec<BigInt> = coords.iter().map(|&x| BigInt::from(x)).collect();
            assert_eq!(proj.weight_matrix.column(col), expected, "column {}", CHART_COORDINATES[col]);
        }
        assert_eq!(proj.weight_matrix.column(5), ivec(&[1, 1, 1]));
    }

    #[test]
    fn positive_roots_are_sums_of_simple_roots() {
        let r = RootData::new();
        for &((i, j), root) in &r.positive_roots {
            let mut s = [0i64; 4];
            for k in i..=j {
                for (x, y) in s.iter_mut().zip(r.simple_roots[k - 1]) {
                    *x += y;
                }
            }
            assert_eq!(s, root);
        }
    }

    #[test]
    fn cokernel_is_kernel_of_weights() {
        let p = ProjectionData::new();
        let prod = &p.cokernel_matrix * &p.weight_matrix.transpose();
        assert!(prod.is_zero());
        assert_eq!(p.cokernel_matrix.column(0), ivec(&[-1, 0, -1]));
        assert_eq!(rank_int(&p.weight_matrix.to_rows()), 3);
        assert_eq!(rank_int(&p.cokernel_matrix.to_rows()), 3);
        let k = integer_kernel(&p.weight_matrix);
        assert_eq!(k.len(), 3);
        assert_eq!(hnf_rows(6, &k), hnf_rows(6, &p.cokernel_matrix.to_rows()));
    }

    #[test]
    fn weyl_group_and_longest_element() {
        let r = RootData::new();
        assert_eq!(r.weyl_group.len(), 24);
        assert_eq!(r.weyl_group[0], [0, 1, 2, 3]);
        assert!(r.weyl_group.contains(&r.longest));
        assert_eq!(r.lambda_min_doubled.iter().sum::<i64>(), 0);
    }
}
