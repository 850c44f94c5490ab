use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;

use super::lattice::faces_by_dimension;
use super::{Cone, PolyhedraError};
use crate::exactlat::{invariant_factors, primitive, IntegerMatrix};

/// Fan given by a global ray list and its maximal cones as ray-index sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    ambient_dim: usize,
    rays: Vec<Vec<BigInt>>,
    maximal_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Builds and validates a fan. Rays are made primitive; cone index lists are sorted.
    pub fn new(
        ambient_dim: usize,
        rays: Vec<Vec<BigInt>>,
        maximal_cones: Vec<Vec<usize>>,
    ) -> Result<Fan, PolyhedraError> {
        let fan = Fan::new_unchecked(ambient_dim, rays, maximal_cones)?;
        fan.validate()?;
        Ok(fan)
    }

    /// Builds a fan without checking the intersection axiom.
    pub fn new_unchecked(
        ambient_dim: usize,
        rays: Vec<Vec<BigInt>>,
        maximal_cones: Vec<Vec<usize>>,
    ) -> Result<Fan, PolyhedraError> {
        if let Some(r) = rays.iter().find(|r| r.len() != ambient_dim) {
            return Err(PolyhedraError::DimensionMismatch { expected: ambient_dim, found: r.len() });
        }
        let rays: Vec<Vec<BigInt>> = rays.iter().map(|r| primitive(r)).collect();
        let mut cones = Vec::with_capacity(maximal_cones.len());
        for mut c in maximal_cones {
            if let Some(&i) = c.iter().find(|&&i| i >= rays.len()) {
                return Err(PolyhedraError::RayIndex(i));
            }
            c.sort_unstable();
            c.dedup();
            cones.push(c);
        }
        Ok(Fan { ambient_dim, rays, maximal_cones: cones })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn maximal_cones(&self) -> &[Vec<usize>] {
        &self.maximal_cones
    }

    pub fn cone_of(&self, idx: &[usize]) -> Cone {
        let gens: Vec<Vec<BigInt>> = idx.iter().map(|&i| self.rays[i].clone()).collect();
        Cone::from_generators(self.ambient_dim, &gens).expect("fan rays have the ambient dimension")
    }

    pub fn maximal_cone(&self, i: usize) -> Cone {
        self.cone_of(&self.maximal_cones[i])
    }

    fn ray_index(&self) -> BTreeMap<&Vec<BigInt>, usize> {
        self.rays.iter().enumerate().map(|(i, r)| (r, i)).collect()
    }

    /// All cones of the fan (faces of maximal cones) as sorted ray-index sets,
    /// including the zero cone.
    pub fn all_cones(&self) -> BTreeSet<Vec<usize>> {
        let index = self.ray_index();
        let mut out = BTreeSet::new();
        out.insert(Vec::new());
        for idx in &self.maximal_cones {
            let c = self.cone_of(idx);
            let local: Vec<usize> = c.rays().iter().map(|r| index[r]).collect();
            out.insert(idx.clone());
            for level in faces_by_dimension(&c).expect("fan cones are pointed") {
                for face in level {
                    let mut f: Vec<usize> = face.iter().map(|k| local[k]).collect();
                    f.sort_unstable();
                    out.insert(f);
                }
            }
        }
        out
    }

    /// Checks that every maximal cone is pointed with exactly its listed rays
    /// as extremal rays, no maximal cone contains another, and any two meet in
    /// a common face.
    pub fn validate(&self) -> Result<(), PolyhedraError> {
        let cones: Vec<Cone> = (0..self.maximal_cones.len()).map(|i| self.maximal_cone(i)).collect();
        for (i, c) in cones.iter().enumerate() {
            let listed: BTreeSet<&Vec<BigInt>> = self.maximal_cones[i].iter().map(|&k| &self.rays[k]).collect();
            let actual: BTreeSet<&Vec<BigInt>> = c.rays().iter().collect();
            if !c.is_pointed() || listed != actual {
                return Err(PolyhedraError::FanAxiom(format!("cone {i} is not pointed on its listed rays")));
            }
        }
        for i in 0..cones.len() {
            for j in i + 1..cones.len() {
                let inter = cones[i].intersect(&cones[j])?;
                if inter == cones[i] || inter == cones[j] {
                    return Err(PolyhedraError::FanAxiom(format!("cones {i} and {j} are nested")));
                }
                if !cones[i].has_face(&inter)? || !cones[j].has_face(&inter)? {
                    return Err(PolyhedraError::FanAxiom(format!("cones {i} and {j} do not meet in a common face")));
                }
            }
        }
        Ok(())
    }

    pub fn is_simplicial(&self) -> bool {
        self.maximal_cones.iter().all(|c| {
            let rows: Vec<Vec<BigInt>> = c.iter().map(|&i| self.rays[i].clone()).collect();
            crate::exactlat::rank_int(&rows) == rows.len()
        })
    }

    /// Every maximal cone is generated by part of a lattice basis.
    pub fn is_smooth(&self) -> bool {
        self.maximal_cones.iter().all(|c| {
            let rows: Vec<Vec<BigInt>> = c.iter().map(|&i| self.rays[i].clone()).collect();
            if rows.is_empty() {
                return true;
            }
            let m = IntegerMatrix::from_rows(self.ambient_dim, &rows).expect("rows");
            let f = invariant_factors(&m);
            f.len() == rows.len() && f.iter().all(|d| d == &BigInt::from(1))
        })
    }

    /// Support equals the whole space: all maximal cones are full-dimensional
    /// and every codimension-one cone lies in exactly two maximal cones.
    pub fn is_complete(&self) -> bool {
        let d = self.ambient_dim;
        if self.maximal_cones.is_empty() {
            return d == 0;
        }
        let cones: Vec<Cone> = (0..self.maximal_cones.len()).map(|i| self.maximal_cone(i)).collect();
        if cones.iter().any(|c| c.dim() != d) {
            return false;
        }
        let index = self.ray_index();
        let mut walls: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for c in &cones {
            let local: Vec<usize> = c.rays().iter().map(|r| index[r]).collect();
            for facet in c.incidence() {
                let mut w: Vec<usize> = facet.iter().map(|&k| local[k]).collect();
                w.sort_unstable();
                *walls.entry(w).or_default() += 1;
            }
        }
        walls.values().all(|&n| n == 2)
    }

    /// Text format: a `RAYS` block then a `CONES` block of 0-based indices.
    pub fn to_text(&self) -> String {
        let mut s = String::from("RAYS\n");
        for r in &self.rays {
            let line: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(s, "{}", line.join(" ")).unwrap();
        }
        s.push_str("CONES\n");
        for c in &self.maximal_cones {
            let line: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            writeln!(s, "{}", line.join(" ")).unwrap();
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Fan, PolyhedraError> {
        enum Block {
            None,
            Rays,
            Cones,
        }
        let mut block = Block::None;
        let mut rays: Vec<Vec<BigInt>> = Vec::new();
        let mut cones: Vec<Vec<usize>> = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match line {
                "RAYS" => block = Block::Rays,
                "CONES" => block = Block::Cones,
                _ => {
                    let bad = || PolyhedraError::Parse { line: n + 1, text: line.to_string() };
                    match block {
                        Block::None => return Err(bad()),
                        Block::Rays => {
                            let r: Result<Vec<BigInt>, _> = line.split_whitespace().map(str::parse).collect();
                            rays.push(r.map_err(|_| bad())?);
                        }
                        Block::Cones => {
                            let c: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
                            cones.push(c.map_err(|_| bad())?);
                        }
                    }
                }
            }
        }
        let d = rays.first().map_or(0, |r| r.len());
        Fan::new(d, rays, cones)
    }
}
