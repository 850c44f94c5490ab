//! Generators of the tile group recovered pointwise from the group action on
//! the nilpotent chart: exponentiate, act, LU-factor, take the logarithm of
//! the unipotent factor and read off its class modulo the diagonal torus.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::group::{Generator, GENERATORS, W0};
use super::maps::{generator_map, normalize_point};
use super::TileError;
use crate::exactlat::{inverse_rat, rat, Rat};

type Mat = [[Rat; 4]; 4];

/// y ↦ x change of coordinates on P³.
pub const CHART_CHANGE: [[i64; 4]; 4] = [[6, 0, 0, 0], [3, -6, 0, 0], [3, 0, 6, 0], [2, -3, 3, -6]];

/// Sample coordinates are drawn from [−SAMPLE_BOUND, SAMPLE_BOUND].
pub const SAMPLE_BOUND: i64 = 20;
pub const MAX_RETRIES: usize = 100;

/// Nilpotent lower-triangular matrix with unit first subdiagonal and free
/// entries y₁ at (2,0), y₂ at (3,1), y₃ at (3,0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentChartPoint {
    pub y: [Rat; 3],
}

impl NilpotentChartPoint {
    pub fn new(y1: Rat, y2: Rat, y3: Rat) -> Self {
        NilpotentChartPoint { y: [y1, y2, y3] }
    }

    pub fn from_i64(y: [i64; 3]) -> Self {
        Self::new(rat(y[0]), rat(y[1]), rat(y[2]))
    }

    pub fn matrix(&self) -> Mat {
        let mut m = zero();
        m[1][0] = Rat::one();
        m[2][1] = Rat::one();
        m[3][2] = Rat::one();
        m[2][0] = self.y[0].clone();
        m[3][1] = self.y[1].clone();
        m[3][0] = self.y[2].clone();
        m
    }

    /// Homogeneous y-coordinates [1 : y₁ : y₂ : y₃].
    pub fn y_point(&self) -> [Rat; 4] {
        [Rat::one(), self.y[0].clone(), self.y[1].clone(), self.y[2].clone()]
    }

    /// The point in x-coordinates.
    pub fn x_point(&self) -> Vec<Rat> {
        change_coordinates(&self.y_point())
    }
}

pub fn change_coordinates(y: &[Rat; 4]) -> Vec<Rat> {
    CHART_CHANGE.iter().map(|row| row.iter().zip(y).map(|(&c, v)| rat(c) * v).sum()).collect()
}

fn zero() -> Mat {
    std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()))
}

fn identity() -> Mat {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { Rat::one() } else { Rat::zero() }))
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| &a[i][k] * &b[k][j]).sum()))
}

fn add_scaled(a: &Mat, b: &Mat, c: &Rat) -> Mat {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] + &b[i][j] * c))
}

fn transpose(a: &Mat) -> Mat {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].clone()))
}

/// Permutation matrix sending e_i to e_{p(i)}.
fn permutation_matrix(p: &[usize; 4]) -> Mat {
    let mut m = zero();
    for (i, &pi) in p.iter().enumerate() {
        m[pi][i] = Rat::one();
    }
    m
}

/// exp of a nilpotent 4×4 matrix (the series stops at the cube).
fn exp_nilpotent(n: &Mat) -> Mat {
    let mut out = identity();
    let mut power = identity();
    let mut fact = Rat::one();
    for k in 1..4 {
        power = mul(&power, n);
        fact *= rat(k);
        out = add_scaled(&out, &power, &(Rat::one() / &fact));
    }
    out
}

/// log of a unipotent 4×4 matrix.
fn log_unipotent(u: &Mat) -> Mat {
    let n = add_scaled(u, &identity(), &rat(-1));
    let mut out = zero();
    let mut power = identity();
    for k in 1..4i64 {
        power = mul(&power, &n);
        let c = Rat::new(BigInt::from(if k % 2 == 1 { 1 } else { -1 }), BigInt::from(k));
        out = add_scaled(&out, &power, &c);
    }
    out
}

/// Doolittle factorization a = l·u with l unit lower triangular; fails when a
/// leading principal minor vanishes.
pub fn lu_decompose(a: &[[Rat; 4]; 4]) -> Result<(Mat, Mat), TileError> {
    let mut l = identity();
    let mut u = a.clone();
    for k in 0..4 {
        if u[k][k].is_zero() {
            return Err(TileError::DegenerateSample);
        }
        for i in k + 1..4 {
            let f = &u[i][k] / &u[k][k];
            let pivot = u[k].clone();
            for (x, p) in u[i].iter_mut().zip(&pivot) {
                *x -= &f * p;
            }
            l[i][k] = f;
        }
    }
    Ok((l, u))
}

/// Transformed matrix g·e^Y, or w₀(e^Y)^{−T}w₀ for τ.
fn act_on_chart(g: Generator, e: &Mat) -> Result<Mat, TileError> {
    match g {
        Generator::Tau => {
            let rows: Vec<Vec<Rat>> = e.iter().map(|r| r.to_vec()).collect();
            let inv = inverse_rat(&rows).ok_or(TileError::DegenerateSample)?;
            let inv: Mat = std::array::from_fn(|i| std::array::from_fn(|j| inv[i][j].clone()));
            let w = permutation_matrix(&W0);
            Ok(mul(&mul(&w, &transpose(&inv)), &w))
        }
        _ => Ok(mul(&permutation_matrix(&g.element().perm), e)),
    }
}

/// Image of the chart point under the generator, in x-coordinates.
pub fn derive_generator_pointwise(g: Generator, y: &NilpotentChartPoint) -> Result<Vec<BigInt>, TileError> {
    let e = exp_nilpotent(&y.matrix());
    let (l, _) = lu_decompose(&act_on_chart(g, &e)?)?;
    let m = log_unipotent(&l);
    let (a, b, c) = (&m[1][0], &m[2][1], &m[3][2]);
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(TileError::DegenerateSample);
    }
    // diagonal conjugation scales m[i][j] by d_i/d_j; fix the first subdiagonal to 1
    let f1 = &m[2][0] / (a * b);
    let f2 = &m[3][1] / (b * c);
    let f3 = &m[3][0] / (a * b * c);
    normalize_point(&change_coordinates(&[Rat::one(), f1, f2, f3]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationReport {
    pub generator: Generator,
    pub agreed: usize,
    pub disagreed: usize,
    /// Samples rejected as degenerate or on the base locus and redrawn.
    pub resampled: usize,
}

/// Compares the derived and closed-form generators at `samples` generic points.
pub fn verify_derivations(samples: usize, seed: u64) -> Result<Vec<DerivationReport>, TileError> {
    let mut out = Vec::new();
    for (k, g) in GENERATORS.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        let closed = generator_map(g);
        let mut report = DerivationReport { generator: g, agreed: 0, disagreed: 0, resampled: 0 };
        for _ in 0..samples {
            let mut tries = 0;
            let (derived, expected) = loop {
                let y =
                    NilpotentChartPoint::from_i64(std::array::from_fn(|_| rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND)));
                match (derive_generator_pointwise(g, &y), closed.evaluate(&y.x_point())) {
                    (Ok(d), Ok(c)) => break (d, c),
                    _ => {
                        tries += 1;
                        report.resampled += 1;
                        if tries > MAX_RETRIES {
                            return Err(TileError::SamplingFailed(MAX_RETRIES));
                        }
                    }
                }
            };
            if derived == expected {
                report.agreed += 1;
            } else {
                report.disagreed += 1;
            }
        }
        out.push(report);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlat::ivec;

    #[test]
    fn exp_and_log_are_inverse() {
        let y = NilpotentChartPoint::from_i64([3, -2, 7]).matrix();
        let back = log_unipotent(&exp_nilpotent(&y));
        assert_eq!(back, y);
    }

    #[test]
    fn lu_reconstructs() {
        let a: Mat = std::array::from_fn(|i| {
            std::array::from_fn(|j| rat(((i * 7 + j * 3) % 5) as i64 + if i == j { 4 } else { 0 }))
        });
        let (l, u) = lu_decompose(&a).unwrap();
        assert_eq!(mul(&l, &u), a);
        for i in 0..4 {
            for j in i + 1..4 {
                assert!(l[i][j].is_zero() && u[j][i].is_zero());
            }
        }
    }

    #[test]
    fn vanishing_minor_is_degenerate() {
        let mut a = identity();
        a[0][0] = Rat::zero();
        assert_eq!(lu_decompose(&a), Err(TileError::DegenerateSample));
    }

    #[test]
    fn chart_origin_maps_to_expected_point() {
        let y = NilpotentChartPoint::from_i64([0, 0, 0]);
        assert_eq!(normalize_point(&y.x_point()).unwrap(), ivec(&[6, 3, 3, 2]));
    }

    #[test]
    fn derived_generators_agree_on_samples() {
        for r in verify_derivations(20, 7).unwrap() {
            assert_eq!(r.disagreed, 0, "{}", r.generator);
            assert_eq!(r.agreed, 20);
        }
    }
}
