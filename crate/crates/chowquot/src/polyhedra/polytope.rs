use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::dd::h_to_v;
use super::lattice::face_lattice_fvector;
use super::{Cone, PolyhedraError};
use crate::exactlat::{primitive_from_rat, Rat};

/// Bounded polytope; inequalities read ⟨a,x⟩ + b ≥ 0, equations ⟨a,x⟩ + b = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    pub ambient_dim: usize,
    pub dim: usize,
    pub vertices: Vec<Vec<Rat>>,
    pub facets: Vec<(Vec<BigInt>, BigInt)>,
    pub equations: Vec<(Vec<BigInt>, BigInt)>,
    /// Face counts for dimensions 0..dim−1.
    pub f_vector: Vec<usize>,
}

impl Polytope {
    /// Homogenized cone {(t, t·x) : t ≥ 0, x ∈ P}.
    fn from_cone(ambient_dim: usize, k: Cone) -> Result<Polytope, PolyhedraError> {
        let mut vertices: Vec<Vec<Rat>> = k
            .rays()
            .iter()
            .map(|r| {
                let t = Rat::from_integer(r[0].clone());
                r[1..].iter().map(|x| Rat::from_integer(x.clone()) / &t).collect()
            })
            .collect();
        vertices.sort();
        let dim = k.dim() - 1;
        let split = |v: &Vec<BigInt>| (v[1..].to_vec(), v[0].clone());
        let facets = if dim == 0 { Vec::new() } else { k.facets().iter().map(split).collect() };
        let equations = k.equations().iter().map(split).collect();
        let f_vector = face_lattice_fvector(&k)?;
        Ok(Polytope { ambient_dim, dim, vertices, facets, equations, f_vector })
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        let eval = |(a, b): &(Vec<BigInt>, BigInt)| -> Rat {
            a.iter().zip(x).fold(Rat::from_integer(b.clone()), |acc, (ai, xi)| acc + Rat::from_integer(ai.clone()) * xi)
        };
        self.facets.iter().all(|f| !eval(f).is_negative()) && self.equations.iter().all(|e| eval(e).is_zero())
    }

    /// Number of facets on which the vertex lies.
    pub fn vertex_degree(&self, v: &[Rat]) -> usize {
        self.facets
            .iter()
            .filter(|(a, b)| {
                a.iter()
                    .zip(v)
                    .fold(Rat::from_integer(b.clone()), |acc, (ai, xi)| acc + Rat::from_integer(ai.clone()) * xi)
                    .is_zero()
            })
            .count()
    }
}

fn homogenize(p: &[Rat]) -> Vec<BigInt> {
    let mut v = Vec::with_capacity(p.len() + 1);
    v.push(Rat::one());
    v.extend(p.iter().cloned());
    primitive_from_rat(&v)
}

/// Convex hull of finitely many rational points.
pub fn convex_hull(points: &[Vec<Rat>]) -> Result<Polytope, PolyhedraError> {
    let Some(d) = points.first().map(|p| p.len()) else { return Err(PolyhedraError::Empty) };
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(PolyhedraError::DimensionMismatch { expected: d, found: p.len() });
    }
    let gens: Vec<Vec<BigInt>> = points.iter().map(|p| homogenize(p)).collect();
    Polytope::from_cone(d, Cone::from_generators(d + 1, &gens)?)
}

/// Polytope {x : ⟨a_i,x⟩ + b_i ≥ 0}. Errors if empty or unbounded.
pub fn polytope_from_inequalities(d: usize, ineqs: &[(Vec<BigInt>, BigInt)]) -> Result<Polytope, PolyhedraError> {
    let mut rows: Vec<Vec<BigInt>> = ineqs
        .iter()
        .map(|(a, b)| {
            let mut r = vec![b.clone()];
            r.extend(a.iter().cloned());
            r
        })
        .collect();
    let mut t = vec![BigInt::zero(); d + 1];
    t[0] = BigInt::one();
    rows.push(t);
    if let Some(r) = rows.iter().find(|r| r.len() != d + 1) {
        return Err(PolyhedraError::DimensionMismatch { expected: d + 1, found: r.len() });
    }
    let (rays, lin) = h_to_v(d + 1, &rows, &[]);
    if !lin.is_empty() || rays.iter().any(|r| r[0].is_zero()) {
        return Err(PolyhedraError::Unbounded);
    }
    if rays.is_empty() {
        return Err(PolyhedraError::Empty);
    }
    debug_assert!(rays.iter().all(|r| r[0].is_positive()));
    Polytope::from_cone(d, Cone::from_generators(d + 1, &rays)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlat::{ivec, rat};

    fn pts(v: &[&[i64]]) -> Vec<Vec<Rat>> {
        v.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn single_point() {
        let p = convex_hull(&pts(&[&[1, 2, 3]])).unwrap();
        assert_eq!(p.dim, 0);
        assert!(p.f_vector.is_empty());
        assert_eq!(p.vertices.len(), 1);
    }

    #[test]
    fn square_with_interior_point() {
        let p = convex_hull(&pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1], &[1, 0]])).unwrap();
        assert_eq!(p.dim, 2);
        assert_eq!(p.f_vector, vec![4, 4]);
        assert_eq!(p.vertices.len(), 4);
    }

    #[test]
    fn segment_in_space() {
        let p = convex_hull(&pts(&[&[0, 0, 0], &[1, 1, 1], &[2, 2, 2]])).unwrap();
        assert_eq!(p.dim, 1);
        assert_eq!(p.f_vector, vec![2]);
        assert_eq!(p.equations.len(), 2);
    }

    #[test]
    fn from_inequalities_cube() {
        let mut ineqs = Vec::new();
        for i in 0..3 {
            let mut a = vec![0i64; 3];
            a[i] = 1;
            ineqs.push((ivec(&a), BigInt::from(1)));
            a[i] = -1;
            ineqs.push((ivec(&a), BigInt::from(1)));
        }
        let p = polytope_from_inequalities(3, &ineqs).unwrap();
        assert_eq!(p.f_vector, vec![8, 12, 6]);
        assert!(p.contains(&[rat(0), rat(1), rat(-1)]));
    }

    #[test]
    fn unbounded_and_empty() {
        let half = vec![(ivec(&[1]), BigInt::from(0))];
        assert_eq!(polytope_from_inequalities(1, &half), Err(PolyhedraError::Unbounded));
        let empty = vec![(ivec(&[1]), BigInt::from(-1)), (ivec(&[-1]), BigInt::from(0))];
        assert_eq!(polytope_from_inequalities(1, &empty), Err(PolyhedraError::Empty));
    }
}
