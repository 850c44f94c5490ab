//! Homogeneous polynomials in x₀..x₃ and rational self-maps of P³.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::group::Generator;
use super::TileError;
use crate::exactlat::{primitive_from_rat, Rat};

/// Polynomial in four variables with rational coefficients, keyed by exponent vector.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<[u32; 4], Rat>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Polynomial::zero();
        p.add_term([0; 4], c);
        p
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        let mut p = Polynomial::zero();
        p.add_term(e, Rat::one());
        p
    }

    /// Σ a_i x_i.
    pub fn linear(a: &[i64; 4]) -> Self {
        (0..4).fold(Polynomial::zero(), |acc, i| acc + Polynomial::var(i) * Rat::from_integer(a[i].into()))
    }

    fn add_term(&mut self, e: [u32; 4], c: Rat) {
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    pub fn evaluate(&self, x: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(x).fold(c.clone(), |acc, (&k, xi)| acc * num_traits::pow(xi.clone(), k as usize))
            })
            .sum()
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Mul<Rat> for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Rat) -> Polynomial {
        self * Polynomial::constant(rhs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest exponent first reads naturally: x0 before x1
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{i}") } else { format!("x{i}^{p}") })
                .collect();
            let mag = c.abs();
            let sign = if c.is_negative() {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            f.write_str(sign)?;
            if mono.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
                if !mono.is_empty() {
                    f.write_str("*")?;
                }
            }
            f.write_str(&mono.join("*"))?;
        }
        Ok(())
    }
}

/// Primitive integer representative of a projective point, first nonzero entry positive.
pub fn normalize_point(p: &[Rat]) -> Result<Vec<BigInt>, TileError> {
    if p.iter().all(Zero::is_zero) {
        return Err(TileError::ZeroPoint);
    }
    let mut v = primitive_from_rat(p);
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        v.iter_mut().for_each(|x| *x = -x.clone());
    }
    Ok(v)
}

pub fn point_from_ints(p: &[BigInt]) -> Vec<Rat> {
    p.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Four homogeneous components of a common degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMap {
    components: [Polynomial; 4],
}

impl RationalMap {
    pub fn new(components: [Polynomial; 4]) -> Result<Self, TileError> {
        if components.iter().all(Polynomial::is_zero) {
            return Err(TileError::ZeroMap);
        }
        let degs: Vec<u32> = components.iter().filter_map(Polynomial::degree).collect();
        if components.iter().any(|c| !c.is_homogeneous()) || degs.iter().any(|&d| d != degs[0]) {
            return Err(TileError::NotHomogeneous);
        }
        Ok(RationalMap { components })
    }

    /// x'_i = Σ_j m[i][j] x_j.
    pub fn linear(m: [[i64; 4]; 4]) -> Self {
        RationalMap::new(m.map(|row| Polynomial::linear(&row))).expect("nonzero linear map")
    }

    pub fn identity() -> Self {
        Self::linear([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    }

    pub fn components(&self) -> &[Polynomial; 4] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.components.iter().filter_map(Polynomial::degree).next().unwrap_or(0)
    }

    /// Image of the projective point p; fails at base points.
    pub fn evaluate(&self, p: &[Rat]) -> Result<Vec<BigInt>, TileError> {
        if p.len() != 4 {
            return Err(TileError::PointLength(p.len()));
        }
        let img: Vec<Rat> = self.components.iter().map(|c| c.evaluate(p)).collect();
        if img.iter().all(Zero::is_zero) {
            return Err(TileError::BasePoint(normalize_point(p)?));
        }
        normalize_point(&img)
    }
}

pub fn evaluate(m: &RationalMap, p: &[Rat]) -> Result<Vec<BigInt>, TileError> {
    m.evaluate(p)
}

pub const R1_MATRIX: [[i64; 4]; 4] = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]];
pub const R3_MATRIX: [[i64; 4]; 4] = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]];
pub const T_MATRIX: [[i64; 4]; 4] = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]];

/// Closed-form generators in the x-coordinates.
pub fn generator_map(g: Generator) -> RationalMap {
    let x = Polynomial::var;
    match g {
        Generator::R1 => RationalMap::linear(R1_MATRIX),
        Generator::R3 => RationalMap::linear(R3_MATRIX),
        Generator::Tau => RationalMap::linear(T_MATRIX),
        Generator::R2 => RationalMap::new([
            (x(1) - x(0)) * (x(2) - x(0)),
            x(1) * (x(2) - x(0)),
            x(2) * (x(1) - x(0)),
            x(1) * x(2) - x(0) * x(3),
        ])
        .expect("quadratic Cremona map"),
    }
}

/// Evaluates g₁∘…∘g_k at p, applying g_k first.
pub fn evaluate_word(word: &[Generator], p: &[Rat]) -> Result<Vec<BigInt>, TileError> {
    let mut cur = normalize_point(p)?;
    for g in word.iter().rev() {
        cur = generator_map(*g).evaluate(&point_from_ints(&cur))?;
    }
    Ok(cur)
}
