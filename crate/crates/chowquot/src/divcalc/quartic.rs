//! Quartics in P³ vanishing on the six base lines of the anticanonical system.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactlat::{integer_kernel, rank_int, IntegerMatrix};
use crate::tilegroup::{boundary_image, BoundaryLabel, Subvariety};

/// Lines of P³ blown up in the anticanonical presentation.
pub const BASE_LINES: [&str; 6] = ["A0", "A1", "B2", "B3", "D01", "D23"];

/// The value quoted for comparison.
pub const REFERENCE_DIMENSION: usize = 14;

const DEGREE: u32 = 4;

/// Exponent vectors of the 35 quartic monomials, lexicographically descending.
pub fn quartic_monomials() -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in (0..=DEGREE).rev() {
        for b in (0..=DEGREE - a).rev() {
            for c in (0..=DEGREE - a - b).rev() {
                out.push([a, b, c, DEGREE - a - b - c]);
            }
        }
    }
    out
}

fn binomial_power(p: i64, q: i64, k: u32) -> Vec<BigInt> {
    // (p·s + q·t)^k, coefficient of s^(k−i)·t^i at index i
    let mut out = vec![BigInt::from(1)];
    for _ in 0..k {
        let mut next = vec![BigInt::zero(); out.len() + 1];
        for (i, c) in out.iter().enumerate() {
            next[i] += c * p;
            next[i + 1] += c * q;
        }
        out = next;
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Two integer points spanning a line of P³.
pub fn line_basis(label: BoundaryLabel) -> Option<[[i64; 4]; 2]> {
    let Subvariety::Linear(eqs) = boundary_image(label) else { return None };
    if eqs.len() != 2 {
        return None;
    }
    let kernel = integer_kernel(&IntegerMatrix::from_rows(4, &eqs).ok()?);
    let to_i64 = |v: &Vec<BigInt>| -> Option<[i64; 4]> {
        let mut out = [0; 4];
        for (o, x) in out.iter_mut().zip(v) {
            *o = i64::try_from(x).ok()?;
        }
        Some(out)
    };
    match kernel.as_slice() {
        [a, b] => Some([to_i64(a)?, to_i64(b)?]),
        _ => None,
    }
}

/// The 5 linear conditions on quartic coefficients for vanishing on the line
/// through p and q: the coefficients of the restricted binary quartic.
pub fn line_conditions(p: &[i64; 4], q: &[i64; 4]) -> Vec<Vec<BigInt>> {
    let monomials = quartic_monomials();
    let restricted: Vec<Vec<BigInt>> = monomials
        .iter()
        .map(|e| (0..4).fold(vec![BigInt::from(1)], |acc, i| poly_mul(&acc, &binomial_power(p[i], q[i], e[i]))))
        .collect();
    (0..=DEGREE as usize).map(|k| restricted.iter().map(|r| r[k].clone()).collect()).collect()
}

/// Coefficients of (x₀x₃ − x₁x₂)² in `quartic_monomials()` order.
pub fn segre_square() -> Vec<BigInt> {
    quartic_monomials()
        .iter()
        .map(|e| match e {
            [2, 0, 0, 2] | [0, 2, 2, 0] => BigInt::from(1),
            [1, 1, 1, 1] => BigInt::from(-2),
            _ => BigInt::zero(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticReport {
    pub lines: Vec<String>,
    pub conditions_rank: usize,
    pub vector_space_dimension: usize,
    pub projective_dimension: usize,
    pub single_line_projective_dimension: usize,
    pub contains_segre_square: bool,
    pub reference_dimension: usize,
    /// The reference value is not the projective dimension.
    pub discrepancy: bool,
}

pub fn quartic_system_dimension() -> QuarticReport {
    let n = quartic_monomials().len();
    let mut rows = Vec::new();
    let mut single = 0;
    for (k, name) in BASE_LINES.iter().enumerate() {
        let l: BoundaryLabel = name.parse().expect("label literal");
        let [p, q] = line_basis(l).expect("boundary image is a line");
        rows.extend(line_conditions(&p, &q));
        if k == 0 {
            single = n - rank_int(&rows) - 1;
        }
    }
    let rank = rank_int(&rows);
    let square = segre_square();
    let contains = rows.iter().all(|r| r.iter().zip(&square).map(|(a, b)| a * b).sum::<BigInt>().is_zero());
    let projective = n - rank - 1;
    QuarticReport {
        lines: BASE_LINES.iter().map(|s| s.to_string()).collect(),
        conditions_rank: rank,
        vector_space_dimension: n - rank,
        projective_dimension: projective,
        single_line_projective_dimension: single,
        contains_segre_square: contains,
        reference_dimension: REFERENCE_DIMENSION,
        discrepancy: projective != REFERENCE_DIMENSION,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlat::rank_int;

    fn evaluate(e: &[u32; 4], x: &[i64; 4]) -> BigInt {
        (0..4).map(|i| BigInt::from(x[i]).pow(e[i])).product()
    }

    #[test]
    fn rank_matches_point_evaluation() {
        // oracle: vanishing at 5 distinct points of each line is equivalent for quartics
        let monomials = quartic_monomials();
        assert_eq!(monomials.len(), 35);
        let mut rows = Vec::new();
        for name in BASE_LINES {
            let [p, q] = line_basis(name.parse().unwrap()).unwrap();
            for (s, t) in [(1, 0), (0, 1), (1, 1), (1, 2), (2, -1)] {
                let x: [i64; 4] = std::array::from_fn(|i| s * p[i] + t * q[i]);
                rows.push(monomials.iter().map(|e| evaluate(e, &x)).collect::<Vec<_>>());
            }
        }
        let r = quartic_system_dimension();
        assert_eq!(rank_int(&rows), r.conditions_rank);
        assert_eq!(r.projective_dimension, 13);
        assert_eq!(r.vector_space_dimension, 14);
        assert_eq!(r.single_line_projective_dimension, 29);
        assert!(r.contains_segre_square);
        assert!(r.discrepancy);
    }

    #[test]
    fn lines_are_the_expected_spans() {
        let [p, q] = line_basis("A0".parse().unwrap()).unwrap();
        // A₀ is x₁ = x₃ = 0
        for v in [p, q] {
            assert_eq!((v[1], v[3]), (0, 0));
        }
        assert!(line_basis("C23".parse().unwrap()).is_none());
        assert!(line_basis("B0".parse().unwrap()).is_none());
    }
}
