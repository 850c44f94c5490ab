use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::dd::h_to_v;
use super::PolyhedraError;
use crate::exactlat::{
    dot, hnf_rows, integer_kernel, is_zero_vec, primitive, primitive_from_rat, project_out, rank_int, to_rat,
    IntegerMatrix,
};

/// Rational polyhedral cone with both descriptions kept in canonical form.
///
/// Rays are primitive representatives of the extremal rays modulo the
/// lineality space, projected onto its orthogonal complement. Facets are
/// primitive inner normals projected onto the linear span of the cone.
/// Lineality and equations are Hermite-normal bases. All lists are sorted, so
/// structural equality is equality of cones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    ambient_dim: usize,
    rays: Vec<Vec<BigInt>>,
    facets: Vec<Vec<BigInt>>,
    lineality: Vec<Vec<BigInt>>,
    equations: Vec<Vec<BigInt>>,
}

fn check_dims(d: usize, vs: &[Vec<BigInt>]) -> Result<(), PolyhedraError> {
    match vs.iter().find(|v| v.len() != d) {
        Some(v) => Err(PolyhedraError::DimensionMismatch { expected: d, found: v.len() }),
        None => Ok(()),
    }
}

fn canonical_in(x: &[BigInt], away_from: &[Vec<BigInt>]) -> Vec<BigInt> {
    if away_from.is_empty() {
        return primitive(x);
    }
    let basis: Vec<_> = away_from.iter().map(|b| to_rat(b)).collect();
    primitive_from_rat(&project_out(&to_rat(x), &basis))
}

impl Cone {
    /// Cone generated by the given vectors (double description on the polar).
    pub fn from_generators(ambient_dim: usize, generators: &[Vec<BigInt>]) -> Result<Cone, PolyhedraError> {
        check_dims(ambient_dim, generators)?;
        let gens: Vec<Vec<BigInt>> = generators.iter().filter(|g| !is_zero_vec(g)).cloned().collect();
        if ambient_dim == 0 && !gens.is_empty() {
            return Err(PolyhedraError::ZeroAmbient);
        }
        let (polar_rays, polar_lin) = h_to_v(ambient_dim, &gens, &[]);
        let equations = hnf_rows(ambient_dim, &polar_lin);

        let mut tight_all = polar_rays.clone();
        tight_all.extend(equations.iter().cloned());
        let lineality = if tight_all.is_empty() {
            IntegerMatrix::identity(ambient_dim).to_rows()
        } else {
            integer_kernel(&IntegerMatrix::from_rows(ambient_dim, &tight_all).expect("rows"))
        };

        let lin = lineality.len();
        let mut rays: Vec<Vec<BigInt>> = Vec::new();
        for g in &gens {
            let mut tight: Vec<Vec<BigInt>> = polar_rays.iter().filter(|f| dot(f, g).is_zero()).cloned().collect();
            if tight.len() == polar_rays.len() {
                continue; // inside the lineality space
            }
            tight.extend(equations.iter().cloned());
            if rank_int(&tight) + lin + 1 == ambient_dim {
                rays.push(canonical_in(g, &lineality));
            }
        }
        rays.sort();
        rays.dedup();

        let mut facets: Vec<Vec<BigInt>> = polar_rays.iter().map(|f| canonical_in(f, &equations)).collect();
        facets.sort();
        facets.dedup();

        Ok(Cone { ambient_dim, rays, facets, lineality, equations })
    }

    /// Cone {x : a·x ≥ 0 for a in `ineqs`, e·x = 0 for e in `eqs`}.
    pub fn from_inequalities(
        ambient_dim: usize,
        ineqs: &[Vec<BigInt>],
        eqs: &[Vec<BigInt>],
    ) -> Result<Cone, PolyhedraError> {
        check_dims(ambient_dim, ineqs)?;
        check_dims(ambient_dim, eqs)?;
        let (rays, lin) = h_to_v(ambient_dim, ineqs, eqs);
        let mut gens = rays;
        for l in lin {
            gens.push(l.iter().map(|x| -x).collect());
            gens.push(l);
        }
        Cone::from_generators(ambient_dim, &gens)
    }

    pub fn zero(ambient_dim: usize) -> Cone {
        Cone::from_generators(ambient_dim, &[]).expect("zero cone")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn facets(&self) -> &[Vec<BigInt>] {
        &self.facets
    }

    pub fn lineality(&self) -> &[Vec<BigInt>] {
        &self.lineality
    }

    pub fn equations(&self) -> &[Vec<BigInt>] {
        &self.equations
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.equations.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    /// All generators including both signs of the lineality basis.
    pub fn generators(&self) -> Vec<Vec<BigInt>> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(l.iter().map(|x| -x).collect());
        }
        g
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.facets.iter().all(|f| !dot(f, x).is_negative()) && self.equations.iter().all(|e| dot(e, x).is_zero())
    }

    /// Strictly inside the relative interior.
    pub fn contains_in_relint(&self, x: &[BigInt]) -> bool {
        self.facets.iter().all(|f| dot(f, x).is_positive()) && self.equations.iter().all(|e| dot(e, x).is_zero())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    /// Sum of the rays; a point of the relative interior.
    pub fn relint_point(&self) -> Vec<BigInt> {
        let mut p = vec![BigInt::zero(); self.ambient_dim];
        for r in &self.rays {
            for (pi, ri) in p.iter_mut().zip(r) {
                *pi += ri;
            }
        }
        p
    }

    /// Dual cone {y : ⟨y,x⟩ ≥ 0 ∀x ∈ self}; exact swap of the descriptions.
    pub fn dual(&self) -> Cone {
        Cone {
            ambient_dim: self.ambient_dim,
            rays: self.facets.clone(),
            facets: self.rays.clone(),
            lineality: self.equations.clone(),
            equations: self.lineality.clone(),
        }
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone, PolyhedraError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(PolyhedraError::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        let mut ineqs = self.facets.clone();
        ineqs.extend(other.facets.iter().cloned());
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        Cone::from_inequalities(self.ambient_dim, &ineqs, &eqs)
    }

    /// Indices of the facets vanishing on every generator of `sub`.
    pub fn tight_facets(&self, sub: &Cone) -> Vec<usize> {
        let gens = sub.generators();
        (0..self.facets.len()).filter(|&i| gens.iter().all(|g| dot(&self.facets[i], g).is_zero())).collect()
    }

    /// Whether `f` is a face of `self`. Errors when `f` is not contained in `self`.
    pub fn has_face(&self, f: &Cone) -> Result<bool, PolyhedraError> {
        if f.ambient_dim != self.ambient_dim {
            return Err(PolyhedraError::DimensionMismatch { expected: self.ambient_dim, found: f.ambient_dim });
        }
        if !self.contains_cone(f) {
            return Err(PolyhedraError::NotContained);
        }
        // smallest face of self containing f, compared against f
        let tight = self.tight_facets(f);
        let face_rays = self.rays.iter().filter(|r| tight.iter().all(|&i| dot(&self.facets[i], r).is_zero()));
        let mut face_gens: Vec<&Vec<BigInt>> = face_rays.collect();
        face_gens.extend(self.lineality.iter());
        Ok(face_gens.iter().all(|g| f.contains(g)))
    }

    /// Face cut out by the given facet indices.
    pub fn face(&self, facet_idx: &[usize]) -> Cone {
        let mut gens: Vec<Vec<BigInt>> = self
            .rays
            .iter()
            .filter(|r| facet_idx.iter().all(|&i| dot(&self.facets[i], r).is_zero()))
            .cloned()
            .collect();
        for l in &self.lineality {
            gens.push(l.clone());
            gens.push(l.iter().map(|x| -x).collect());
        }
        Cone::from_generators(self.ambient_dim, &gens).expect("face of a valid cone")
    }

    /// Ray–facet incidence: for each facet, the indices of rays on it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .map(|f| (0..self.rays.len()).filter(|&j| dot(f, &self.rays[j]).is_zero()).collect())
            .collect()
    }
}

pub fn cone_from_generators(ambient_dim: usize, generators: &[Vec<BigInt>]) -> Result<Cone, PolyhedraError> {
    Cone::from_generators(ambient_dim, generators)
}

pub fn dual_cone(c: &Cone) -> Cone {
    c.dual()
}

pub fn intersect_cones(a: &Cone, b: &Cone) -> Result<Cone, PolyhedraError> {
    a.intersect(b)
}

pub fn is_face(f: &Cone, c: &Cone) -> Result<bool, PolyhedraError> {
    c.has_face(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlat::ivec;

    fn orthant3() -> Cone {
        Cone::from_generators(3, &[ivec(&[1, 0, 0]), ivec(&[0, 1, 0]), ivec(&[0, 0, 1])]).unwrap()
    }

    #[test]
    fn orthant_descriptions() {
        let c = orthant3();
        assert_eq!(c.rays().len(), 3);
        assert_eq!(c.facets().len(), 3);
        assert_eq!(c.dual(), c);
    }

    #[test]
    fn redundant_generator_dropped() {
        let c = Cone::from_generators(3, &[ivec(&[1, 0, 0]), ivec(&[0, 1, 0]), ivec(&[0, 0, 1]), ivec(&[1, 1, 0])])
            .unwrap();
        assert_eq!(c, orthant3());
    }

    #[test]
    fn halfplane_dual_is_ray() {
        let h = Cone::from_inequalities(2, &[ivec(&[1, 0])], &[]).unwrap();
        assert_eq!(h.lineality_dim(), 1);
        let d = h.dual();
        assert_eq!(d.rays(), &[ivec(&[1, 0])]);
        assert_eq!(d.dim(), 1);
        assert_eq!(d, Cone::from_generators(2, &[ivec(&[1, 0])]).unwrap());
        assert_eq!(d.dual(), h);
    }

    #[test]
    fn zero_ambient_dimension() {
        assert!(Cone::from_generators(0, &[vec![]]).is_ok());
        assert_eq!(Cone::from_generators(0, &[]).unwrap().dim(), 0);
    }

    #[test]
    fn self_intersection_is_identity() {
        let c = orthant3();
        assert_eq!(c.intersect(&c).unwrap(), c);
    }

    #[test]
    fn face_tests() {
        let c = Cone::from_generators(3, &[ivec(&[-1, -1, -1]), ivec(&[0, 1, 0])]).unwrap();
        let zero = Cone::zero(3);
        assert!(c.has_face(&zero).unwrap());
        let r = Cone::from_generators(3, &[ivec(&[-1, -1, -1])]).unwrap();
        assert!(c.has_face(&r).unwrap());
        let inner = Cone::from_generators(3, &[ivec(&[-1, 0, -1])]).unwrap();
        assert!(!c.has_face(&inner).unwrap());
        let outside = Cone::from_generators(3, &[ivec(&[1, 0, 0])]).unwrap();
        assert_eq!(c.has_face(&outside), Err(PolyhedraError::NotContained));
    }

    #[test]
    fn lower_dimensional_cone_roundtrip() {
        let c = Cone::from_generators(3, &[ivec(&[1, 1, 0]), ivec(&[1, -1, 0])]).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.equations(), &[ivec(&[0, 0, 1])]);
        assert_eq!(c.dual().dual(), c);
        assert!(c.contains(&ivec(&[2, 0, 0])));
        assert!(!c.contains(&ivec(&[0, 1, 0])));
    }
}
