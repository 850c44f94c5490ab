//! Subcones of the nef cone pulled back from the Chow quotients of the two
//! partial flag varieties of type (1,3) and (2,*).

use num_bigint::BigInt;

use super::nef::nef_cone;
use super::rays::{act_divisor, from_bigint, primitive, same_ray, to_bigint, Vector};
use super::ConelabError;
use crate::divcalc::{class, form, intersection_data, DivisorClass, L2, L2_PRIME, RANK};
use crate::polyhedra::Cone;
use crate::tilegroup::{group_elements, BoundaryLabel, Generator};

/// Generators of the first partial-flag subcone; the second is its image under τ.
pub const M1_GENERATORS: [&str; 5] = ["C01+C23+D01+D23", "A0+C23+D01", "A1+C23+D01", "A2+C01+D23", "A3+C01+D23"];

/// Pullback of the ample generator from the (1,3) partial flag quotient.
pub const X13_CLASS: &str = "A0+B0+D01+D02+D03";

pub const N1_EXTRA_RAY: &str = "A2+A3+C01+D23";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagCone {
    pub generators: Vec<Vector>,
    pub cone: Cone,
    pub barycenter: Vector,
}

impl FlagCone {
    pub fn rays(&self) -> Vec<Vector> {
        self.cone.rays().iter().map(|r| from_bigint(r).expect("small coordinates")).collect()
    }

    /// Rays that are not among the defining generators.
    pub fn extra_rays(&self) -> Vec<Vector> {
        let gens: Vec<Vector> = self.generators.iter().map(primitive).collect();
        self.rays().into_iter().filter(|r| !gens.contains(r)).collect()
    }
}

/// span(generators) ∩ Nef(X).
pub fn flag_cone(generators: &[Vector]) -> Result<FlagCone, ConelabError> {
    let mut gens: Vec<Vec<BigInt>> = generators.iter().map(to_bigint).collect();
    gens.extend(generators.iter().map(|g| to_bigint(&g.map(|x| -x))));
    let span = Cone::from_generators(RANK, &gens)?;
    let cone = span.intersect(&nef_cone()?.cone)?;
    let mut barycenter = [0; RANK];
    for r in cone.rays() {
        let r = from_bigint(r)?;
        for (b, x) in barycenter.iter_mut().zip(r) {
            *b += x;
        }
    }
    Ok(FlagCone { generators: generators.to_vec(), cone, barycenter })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagReport {
    pub n1: FlagCone,
    pub n1_prime: FlagCone,
    pub n1_rays: usize,
    pub n1_facets: usize,
    pub n1_prime_rays: usize,
    pub n1_prime_facets: usize,
    pub tau_swaps: bool,
    pub barycenter_proportional_to_l2: bool,
    pub barycenter_prime_proportional_to_l2_prime: bool,
    pub l2_cube: i64,
    pub l2_prime_cube: i64,
    pub n1_extra_ray_present: bool,
    pub x13_invariant: bool,
    /// L₂·B_i·E > 0 for every (−1)-curve E on every B_i.
    pub l2_positive_on_b_surfaces: bool,
}

impl FlagReport {
    pub fn passed(&self) -> bool {
        (self.n1_rays, self.n1_facets, self.n1_prime_rays, self.n1_prime_facets) == (10, 10, 10, 10)
            && self.tau_swaps
            && self.barycenter_proportional_to_l2
            && self.barycenter_prime_proportional_to_l2_prime
            && self.l2_cube == 0
            && self.l2_prime_cube == 0
            && self.n1_extra_ray_present
            && self.x13_invariant
            && self.l2_positive_on_b_surfaces
    }
}

fn ray_set(v: &[Vector]) -> std::collections::BTreeSet<Vector> {
    v.iter().map(primitive).collect()
}

pub fn partial_flag_cones() -> Result<FlagReport, ConelabError> {
    let tau = Generator::Tau.element();
    let m1: Vec<Vector> = M1_GENERATORS.iter().map(|e| class(e).0).collect();
    let m1_prime: Vec<Vector> = m1.iter().map(|g| act_divisor(&tau, g)).collect();
    let n1 = flag_cone(&m1)?;
    let n1_prime = flag_cone(&m1_prime)?;
    let tau_image: Vec<Vector> = n1.rays().iter().map(|r| act_divisor(&tau, r)).collect();
    let l2 = class(L2);
    let l2p = class(L2_PRIME);
    let x13 = class(X13_CLASS);
    let f = form();
    let pet = &intersection_data().0;
    let l2_positive_on_b_surfaces = (0..4u8).all(|i| {
        let b = BoundaryLabel::B(i);
        let (nodes, _) = pet.transported(b).expect("B-surface");
        let bc = class(&b.to_string());
        nodes.iter().all(|e| f.triple(&l2, &bc, &class(&e.to_string())) > 0)
    });
    Ok(FlagReport {
        n1_rays: n1.cone.rays().len(),
        n1_facets: n1.cone.facets().len(),
        n1_prime_rays: n1_prime.cone.rays().len(),
        n1_prime_facets: n1_prime.cone.facets().len(),
        tau_swaps: ray_set(&tau_image) == ray_set(&n1_prime.rays()),
        barycenter_proportional_to_l2: same_ray(&n1.barycenter, &l2.0),
        barycenter_prime_proportional_to_l2_prime: same_ray(&n1_prime.barycenter, &l2p.0),
        l2_cube: f.cube(&l2),
        l2_prime_cube: f.cube(&l2p),
        n1_extra_ray_present: n1.extra_rays().contains(&primitive(&class(N1_EXTRA_RAY).0)),
        x13_invariant: group_elements().iter().all(|g| DivisorClass(act_divisor(g, &x13.0)) == x13),
        l2_positive_on_b_surfaces,
        n1,
        n1_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flag_cones_are_joined_pentachora() {
        let r = partial_flag_cones().unwrap();
        assert_eq!((r.n1_rays, r.n1_facets), (10, 10));
        assert_eq!((r.n1_prime_rays, r.n1_prime_facets), (10, 10));
        assert_eq!(r.n1.cone.dim(), 5);
        assert_eq!(r.n1.extra_rays().len(), 5);
        assert!(r.tau_swaps);
        assert!(r.barycenter_proportional_to_l2);
        assert!(r.barycenter_prime_proportional_to_l2_prime);
        assert_eq!((r.l2_cube, r.l2_prime_cube), (0, 0));
        assert!(r.n1_extra_ray_present && r.x13_invariant && r.l2_positive_on_b_surfaces);
    }
}
