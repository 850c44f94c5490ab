//! Class group of a toric variety and polytopes of torus-invariant divisors.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::QuotientError;
use crate::exactlat::{ivec, smith_normal_form, solve_integer, IntegerMatrix};
use crate::polyhedra::{polytope_from_inequalities, Fan, Polytope};

/// Boundary divisors of the quotient toric threefold and their rays, as ρ₀..ρ₆.
pub const QUOTIENT_RAYS: [(&str, [i64; 3]); 7] = [
    ("A1", [-1, 0, -1]),
    ("C02", [-1, -1, -1]),
    ("B2", [0, -1, -1]),
    ("F", [1, 0, 0]),
    ("E", [0, 1, 0]),
    ("G", [0, 0, 1]),
    ("D12", [0, 0, -1]),
];

/// Linear equivalences among boundary divisors, as (positive part, negative part).
pub const CLASS_RELATIONS: [(&str, &[&str]); 3] =
    [("E", &["B2", "C02"]), ("F", &["A1", "C02"]), ("G", &["A1", "B2", "C02", "D12"])];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroup {
    /// Rank of the free part.
    pub free_rank: usize,
    /// Nontrivial invariant factors of the torsion part.
    pub torsion: Vec<BigInt>,
    /// Principal divisors div(χ^{e_k}) of a basis of characters, as coefficient rows.
    pub principal: Vec<Vec<BigInt>>,
    /// Ray matrix, one row per ray.
    ray_matrix: IntegerMatrix,
}

impl ClassGroup {
    /// A character m with div(χ^m) equal to the given divisor, if it is principal.
    pub fn character_of(&self, divisor: &[BigInt]) -> Result<Option<Vec<BigInt>>, QuotientError> {
        Ok(solve_integer(&self.ray_matrix, divisor)?)
    }
}

/// Cl = Z^{rays} / {(⟨m,ρ⟩)_ρ : m ∈ M}.
pub fn toric_class_group(fan: &Fan) -> Result<ClassGroup, QuotientError> {
    let n = fan.rays().len();
    let ray_matrix = IntegerMatrix::from_rows(fan.ambient_dim(), fan.rays())?;
    let (s, _, _) = smith_normal_form(&ray_matrix);
    let diag: Vec<BigInt> =
        (0..n.min(fan.ambient_dim())).map(|i| s.get(i, i).clone()).filter(|d| !d.is_zero()).collect();
    let torsion = diag.iter().filter(|d| !d.is_one()).cloned().collect();
    Ok(ClassGroup { free_rank: n - diag.len(), torsion, principal: ray_matrix.transpose().to_rows(), ray_matrix })
}

/// Divisor coefficients on `fan`'s rays from named boundary divisors of the quotient fan.
pub fn named_divisor(fan: &Fan, terms: &[(&str, i64)]) -> Result<Vec<BigInt>, QuotientError> {
    let mut out = vec![BigInt::zero(); fan.rays().len()];
    for &(name, c) in terms {
        let ray = QUOTIENT_RAYS
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, r)| ivec(r))
            .ok_or_else(|| QuotientError::UnknownDivisor(name.to_string()))?;
        let k =
            fan.rays().iter().position(|r| *r == ray).ok_or_else(|| QuotientError::UnknownDivisor(name.to_string()))?;
        out[k] += c;
    }
    Ok(out)
}

/// {m : ⟨m,ρ⟩ ≥ −a_ρ for every ray ρ}.
pub fn divisor_polytope(fan: &Fan, coefficients: &[BigInt]) -> Result<Polytope, QuotientError> {
    if coefficients.len() != fan.rays().len() {
        return Err(QuotientError::CoefficientCount { expected: fan.rays().len(), found: coefficients.len() });
    }
    let ineqs: Vec<(Vec<BigInt>, BigInt)> =
        fan.rays().iter().zip(coefficients).map(|(r, a)| (r.clone(), a.clone())).collect();
    Ok(polytope_from_inequalities(fan.ambient_dim(), &ineqs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Fan {
        Fan::new(
            3,
            vec![ivec(&[1, 0, 0]), ivec(&[0, 1, 0]), ivec(&[0, 0, 1]), ivec(&[-1, -1, -1])],
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn projective_space_class_group() {
        let cl = toric_class_group(&p3()).unwrap();
        assert_eq!(cl.free_rank, 1);
        assert!(cl.torsion.is_empty());
        // a hyperplane minus another hyperplane is principal
        let d = ivec(&[1, -1, 0, 0]);
        assert!(cl.character_of(&d).unwrap().is_some());
        assert!(cl.character_of(&ivec(&[1, 0, 0, 0])).unwrap().is_none());
    }

    #[test]
    fn zero_divisor_gives_point() {
        let p = divisor_polytope(&p3(), &ivec(&[0, 0, 0, 0])).unwrap();
        assert_eq!(p.vertices.len(), 1);
        assert_eq!(p.dim, 0);
    }

    #[test]
    fn weighted_projective_plane_has_torsion_free_class_group_of_rank_one() {
        // P(1,1,2): rays (1,0),(0,1),(−1,−2)
        let f =
            Fan::new(2, vec![ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[-1, -2])], vec![vec![0, 1], vec![1, 2], vec![0, 2]])
                .unwrap();
        let cl = toric_class_group(&f).unwrap();
        assert_eq!(cl.free_rank, 1);
        assert!(cl.torsion.is_empty());
    }
}
