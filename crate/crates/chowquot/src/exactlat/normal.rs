use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntegerMatrix, LatticeError};

/// Extended gcd with nonnegative gcd: returns (g, x, y) with x·a + y·b = g.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let nr = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, nr);
        let ns = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, ns);
        let nt = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, nt);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Unimodular 2×2 step zeroing `b` against `a`: returns (p, q, r, s) with
/// p·a + q·b = gcd and r·a + s·b = 0, determinant 1.
fn gcd_step(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt, BigInt) {
    if !a.is_zero() && b.is_multiple_of(a) {
        // plain elimination keeps `a` in place, so the Smith loop terminates
        return (BigInt::one(), BigInt::zero(), -(b / a), BigInt::one());
    }
    let (g, x, y) = extended_gcd(a, b);
    let r = -(b / &g);
    let s = a / &g;
    (x, y, r, s)
}

/// Row-style Hermite normal form: returns (h, u) with u unimodular and u·m = h.
/// Pivots are positive; entries above each pivot lie in [0, pivot).
pub fn hermite_normal_form(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if h.get(i, c).is_zero() {
                continue;
            }
            let (p, q, rr, s) = gcd_step(h.get(r, c), h.get(i, c));
            h.combine_rows(r, i, &p, &q, &rr, &s);
            u.combine_rows(r, i, &p, &q, &rr, &s);
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let pivot = h.get(r, c).clone();
        for i in 0..r {
            let k = h.get(i, c).div_floor(&pivot);
            if !k.is_zero() {
                let nk = -k;
                h.add_row_multiple(i, r, &nk);
                u.add_row_multiple(i, r, &nk);
            }
        }
        r += 1;
    }
    (h, u)
}

/// Smith normal form: returns (s, u, v) with u, v unimodular, u·m·v = s diagonal,
/// nonnegative diagonal entries and d_i | d_{i+1}.
pub fn smith_normal_form(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix, IntegerMatrix) {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);
    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = s.get(i, j);
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < s.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            for i in t + 1..rows {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let (p, q, rr, ss) = gcd_step(s.get(t, t), s.get(i, t));
                s.combine_rows(t, i, &p, &q, &rr, &ss);
                u.combine_rows(t, i, &p, &q, &rr, &ss);
            }
            for j in t + 1..cols {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let (p, q, rr, ss) = gcd_step(s.get(t, t), s.get(t, j));
                s.combine_cols(t, j, &p, &q, &rr, &ss);
                v.combine_cols(t, j, &p, &q, &rr, &ss);
            }
            if (t + 1..rows).any(|i| !s.get(i, t).is_zero()) {
                continue;
            }
            // enforce divisibility of the trailing block by the pivot
            let pivot = s.get(t, t).clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    (s, u, v)
}

/// Diagonal entries of the Smith form that are nonzero.
pub fn invariant_factors(m: &IntegerMatrix) -> Vec<BigInt> {
    let (s, _, _) = smith_normal_form(m);
    (0..s.rows().min(s.cols())).map(|i| s.get(i, i).clone()).filter(|d| !d.is_zero()).collect()
}

/// Lattice basis of {v ∈ Zⁿ : m·v = 0}, returned in Hermite normal form.
pub fn integer_kernel(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let n = m.cols();
    if m.rows() == 0 {
        return IntegerMatrix::identity(n).to_rows();
    }
    let (h, u) = hermite_normal_form(&m.transpose());
    let basis: Vec<Vec<BigInt>> =
        (0..h.rows()).filter(|&i| h.row(i).iter().all(Zero::is_zero)).map(|i| u.row(i).to_vec()).collect();
    hnf_rows(n, &basis)
}

/// Nonzero rows of the Hermite normal form of the given row vectors.
pub fn hnf_rows(cols: usize, rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let m = IntegerMatrix::from_rows(cols, rows).expect("ragged rows");
    let (h, _) = hermite_normal_form(&m);
    h.to_rows().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

/// Integer solution of m·x = b, if one exists.
pub fn solve_integer(m: &IntegerMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>, LatticeError> {
    if b.len() != m.rows() {
        return Err(LatticeError::DimensionMismatch { left: (m.rows(), m.cols()), right: (b.len(), 1) });
    }
    let (s, u, v) = smith_normal_form(m);
    let c = u.mul_vec(b);
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, ci) in c.iter().enumerate() {
        let d = if i < m.cols() { s.get(i, i).clone() } else { BigInt::zero() };
        if d.is_zero() {
            if !ci.is_zero() {
                return Ok(None);
            }
        } else {
            let (q, r) = ci.div_rem(&d);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        }
    }
    Ok(Some(v.mul_vec(&y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_i64(rows)
    }

    #[test]
    fn hnf_of_identity_is_identity() {
        let id = IntegerMatrix::identity(3);
        let (h, u) = hermite_normal_form(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_small_example() {
        let a = m(&[&[2, 4], &[6, 8]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(h, m(&[&[2, 0], &[0, 4]]));
        assert!(u.is_unimodular());
        assert_eq!(&u * &a, h);
    }

    #[test]
    fn hnf_handles_zero_leading_column() {
        let a = m(&[&[0, 3, 1], &[0, 6, 5], &[0, 0, 0]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(&u * &a, h);
        assert_eq!(h, m(&[&[0, 3, 1], &[0, 0, 3], &[0, 0, 0]]));
    }

    #[test]
    fn snf_examples() {
        let (s, u, v) = smith_normal_form(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s, m(&[&[1, 0], &[0, 6]]));
        assert_eq!(&(&u * &m(&[&[2, 0], &[0, 3]])) * &v, s);
        let z = IntegerMatrix::zeros(2, 3);
        assert_eq!(smith_normal_form(&z).0, z);
    }

    #[test]
    fn kernel_examples() {
        assert!(integer_kernel(&IntegerMatrix::identity(3)).is_empty());
        let k = integer_kernel(&m(&[&[1, 1]]));
        assert_eq!(k.len(), 1);
        let v: Vec<i64> = k[0].iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert!(v == vec![1, -1] || v == vec![-1, 1]);
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x + 4y = 0 has kernel generated by (2,-1), not (4,-2)
        let k = integer_kernel(&m(&[&[2, 4]]));
        assert_eq!(k, vec![vec![BigInt::from(2), BigInt::from(-1)]]);
    }

    #[test]
    fn integer_solvability() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let b = [BigInt::from(4), BigInt::from(9)];
        assert_eq!(solve_integer(&a, &b).unwrap(), Some(vec![BigInt::from(2), BigInt::from(3)]));
        let b = [BigInt::from(1), BigInt::from(0)];
        assert_eq!(solve_integer(&a, &b).unwrap(), None);
    }

    #[test]
    fn determinant_bareiss() {
        assert_eq!(m(&[&[2, 1], &[7, 4]]).determinant(), Some(BigInt::from(1)));
        assert_eq!(m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]).determinant(), Some(BigInt::from(-5)));
    }
}
