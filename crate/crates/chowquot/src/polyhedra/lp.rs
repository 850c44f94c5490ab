//! Exact cone membership by a phase-one rational simplex with Bland's rule.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactlat::Rat;

/// Nonnegative coefficients λ with Σ λ_i g_i = v, if they exist.
pub fn cone_membership(generators: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<Rat>> {
    let m = v.len();
    let n = generators.len();
    if v.iter().all(Zero::is_zero) {
        return Some(vec![Rat::zero(); n]);
    }
    // columns: n originals, then m artificials, then rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let flip = v[i].is_negative();
            let mut row = vec![Rat::zero(); width];
            for (j, g) in generators.iter().enumerate() {
                let x = Rat::from_integer(g[i].clone());
                row[j] = if flip { -x } else { x };
            }
            row[n + i] = Rat::one();
            row[width - 1] = Rat::from_integer(v[i].abs());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    // reduced costs for minimizing the sum of artificials
    let mut cost: Vec<Rat> = vec![Rat::zero(); width];
    for row in &t {
        for j in 0..width {
            if j < n || j == width - 1 {
                cost[j] -= &row[j];
            }
        }
    }

    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][width - 1] / &t[i][enter];
            let better = match &best {
                None => true,
                Some(b) => ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()]),
            };
            if better {
                best = Some(ratio);
                leave = Some(i);
            }
        }
        let Some(r) = leave else {
            // unbounded direction cannot occur for a sum of nonnegative artificials
            unreachable!("phase-one objective is bounded below");
        };
        let piv = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &piv;
        }
        let prow = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
        let f = cost[enter].clone();
        for (x, p) in cost.iter_mut().zip(&prow) {
            *x -= &f * p;
        }
        basis[r] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut lambda = vec![Rat::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            lambda[b] = t[i][width - 1].clone();
        }
    }
    Some(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlat::ivec;

    fn check(gens: &[Vec<BigInt>], v: &[BigInt], lambda: &[Rat]) {
        for i in 0..v.len() {
            let s: Rat = gens.iter().zip(lambda).map(|(g, l)| l * Rat::from_integer(g[i].clone())).sum();
            assert_eq!(s, Rat::from_integer(v[i].clone()));
        }
        assert!(lambda.iter().all(|l| !l.is_negative()));
    }

    #[test]
    fn membership_in_quadrant() {
        let gens = vec![ivec(&[1, 0]), ivec(&[1, 1])];
        let v = ivec(&[3, 1]);
        let l = cone_membership(&gens, &v).unwrap();
        check(&gens, &v, &l);
        assert!(cone_membership(&gens, &ivec(&[0, 1])).is_none());
        assert!(cone_membership(&gens, &ivec(&[-1, 0])).is_none());
    }

    #[test]
    fn degenerate_generators() {
        let gens = vec![ivec(&[1, 1, 0]), ivec(&[2, 2, 0]), ivec(&[0, 0, 1]), ivec(&[1, 1, 1])];
        let v = ivec(&[5, 5, 2]);
        let l = cone_membership(&gens, &v).unwrap();
        check(&gens, &v, &l);
        assert!(cone_membership(&gens, &ivec(&[1, 2, 0])).is_none());
    }
}
