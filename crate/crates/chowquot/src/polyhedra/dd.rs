//! Double description: inequality systems to generators.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::bitset::BitSet;
use crate::exactlat::{
    dot, integer_kernel, inverse_rat, orthogonal_complement, primitive, primitive_from_rat, rank_int, to_rat,
    IntegerMatrix,
};

struct DdRay {
    v: Vec<BigInt>,
    zeros: BitSet,
}

/// Extreme rays of {z ∈ Rʳ : a_i·z ≥ 0} for a constraint matrix of full column rank r.
///
/// Constraints are inserted in the given order, so the output is deterministic.
pub(crate) fn pointed_extreme_rays(a: &[Vec<BigInt>], r: usize) -> Vec<Vec<BigInt>> {
    let m = a.len();
    let mut basis: Vec<usize> = Vec::with_capacity(r);
    let mut chosen: Vec<Vec<BigInt>> = Vec::with_capacity(r);
    for (i, row) in a.iter().enumerate() {
        if basis.len() == r {
            break;
        }
        chosen.push(row.clone());
        if rank_int(&chosen) == chosen.len() {
            basis.push(i);
        } else {
            chosen.pop();
        }
    }
    assert_eq!(basis.len(), r, "constraint matrix must have full column rank");

    let b: Vec<_> = chosen.iter().map(|row| to_rat(row)).collect();
    let binv = inverse_rat(&b).expect("independent rows");
    let mut rays: Vec<DdRay> = (0..r)
        .map(|j| {
            let col: Vec<_> = (0..r).map(|i| binv[i][j].clone()).collect();
            let zeros = BitSet::from_indices(m, basis.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &i)| i));
            DdRay { v: primitive_from_rat(&col), zeros }
        })
        .collect();

    let mut in_basis = BitSet::new(m);
    for &i in &basis {
        in_basis.insert(i);
    }

    for (i, row) in a.iter().enumerate() {
        if in_basis.contains(i) {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|ray| dot(row, &ray.v)).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        if neg.is_empty() {
            for (k, ray) in rays.iter_mut().enumerate() {
                if vals[k].is_zero() {
                    ray.zeros.insert(i);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.intersection(&rays[n].zeros);
                if common.len() + 2 < r {
                    continue;
                }
                let adjacent =
                    rays.iter().enumerate().all(|(q, ray)| q == p || q == n || !common.is_subset(&ray.zeros));
                if !adjacent {
                    continue;
                }
                let v: Vec<BigInt> =
                    rays[n].v.iter().zip(&rays[p].v).map(|(xn, xp)| &vals[p] * xn - &vals[n] * xp).collect();
                let mut zeros = common;
                zeros.insert(i);
                fresh.push(DdRay { v: primitive(&v), zeros });
            }
        }
        let mut kept: Vec<DdRay> = Vec::with_capacity(rays.len() + fresh.len());
        for (k, mut ray) in rays.into_iter().enumerate() {
            if vals[k].is_negative() {
                continue;
            }
            if vals[k].is_zero() {
                ray.zeros.insert(i);
            }
            kept.push(ray);
        }
        kept.extend(fresh);
        rays = kept;
    }
    rays.into_iter().map(|r| r.v).collect()
}

/// Generators of {x ∈ Rᵈ : a·x ≥ 0 for a in `ineqs`, e·x = 0 for e in `eqs`}.
///
/// Returns (rays modulo lineality, lineality basis). Rays are primitive but not
/// yet projected to a canonical representative.
pub(crate) fn h_to_v(d: usize, ineqs: &[Vec<BigInt>], eqs: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let s_basis = orthogonal_complement(eqs, d);
    let s = s_basis.len();
    if s == 0 {
        return (Vec::new(), Vec::new());
    }
    let lift = |z: &[BigInt]| -> Vec<BigInt> {
        let mut x = vec![BigInt::zero(); d];
        for (zk, sk) in z.iter().zip(&s_basis) {
            if zk.is_zero() {
                continue;
            }
            for (xi, si) in x.iter_mut().zip(sk) {
                *xi += zk * si;
            }
        }
        x
    };
    let a1: Vec<Vec<BigInt>> = ineqs.iter().map(|a| s_basis.iter().map(|sk| dot(a, sk)).collect()).collect();

    let k = if a1.is_empty() {
        IntegerMatrix::identity(s).to_rows()
    } else {
        integer_kernel(&IntegerMatrix::from_rows(s, &a1).expect("rows"))
    };
    let lineality: Vec<Vec<BigInt>> = k.iter().map(|z| primitive(&lift(z))).collect();

    let mut row_basis: Vec<Vec<BigInt>> = Vec::new();
    for row in &a1 {
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        row_basis.push(row.clone());
        if rank_int(&row_basis) < row_basis.len() {
            row_basis.pop();
        }
    }
    let r = row_basis.len();
    if r == 0 {
        return (Vec::new(), lineality);
    }
    let a2: Vec<Vec<BigInt>> = a1.iter().map(|row| row_basis.iter().map(|rb| dot(row, rb)).collect()).collect();
    let rays = pointed_extreme_rays(&a2, r)
        .into_iter()
        .map(|w| {
            let mut z = vec![BigInt::zero(); s];
            for (wl, rl) in w.iter().zip(&row_basis) {
                for (zi, ri) in z.iter_mut().zip(rl) {
                    *zi += wl * ri;
                }
            }
            primitive(&lift(&z))
        })
        .collect();
    (rays, lineality)
}
