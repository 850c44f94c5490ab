use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn to_rat(v: &[BigInt]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

/// Divides an integer vector by the gcd of its entries. Zero stays zero.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Positive rational multiple of `v` that is a primitive integer vector.
pub fn primitive_from_rat(v: &[Rat]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect();
    primitive(&ints)
}

/// Reduced row echelon form; returns the nonzero rows and the pivot columns.
pub fn rref(rows: &[Vec<Rat>], cols: usize) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    (a, pivots)
}

/// Rank of integer row vectors by fraction-free elimination.
pub fn rank_int(rows: &[Vec<BigInt>]) -> usize {
    let Some(cols) = rows.first().map(|r| r.len()) else { return 0 };
    let mut a: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        let (head, tail) = a.split_at_mut(rank + 1);
        let piv = &head[rank];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..cols {
                row[j] = &row[j] * &piv[c] - &f * &piv[j];
            }
            let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                for x in row.iter_mut() {
                    *x /= &g;
                }
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

pub fn rank_rat(rows: &[Vec<Rat>], cols: usize) -> usize {
    rref(rows, cols).1.len()
}

/// Basis of the rational nullspace {x : rows·x = 0}.
pub fn nullspace_rat(rows: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let (r, pivots) = rref(rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[i][f].clone();
            }
            v
        })
        .collect()
}

/// Some solution of A·x = b (A given by rows), if consistent.
pub fn solve_rat(a: &[Vec<Rat>], b: &[Rat], cols: usize) -> Option<Vec<Rat>> {
    let aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[i][cols].clone();
    }
    Some(x)
}

/// Inverse of a square rational matrix given by rows.
pub fn inverse_rat(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let aug: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Integer basis of the subspace orthogonal to the given integer vectors.
pub fn orthogonal_complement(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return super::IntegerMatrix::identity(cols).to_rows();
    }
    let m = super::IntegerMatrix::from_rows(cols, rows).expect("ragged rows");
    super::integer_kernel(&m)
}

/// Orthogonal projection of `x` onto the complement of span(`basis`).
pub fn project_out(x: &[Rat], basis: &[Vec<Rat>]) -> Vec<Rat> {
    if basis.is_empty() {
        return x.to_vec();
    }
    let k = basis.len();
    let gram: Vec<Vec<Rat>> = (0..k).map(|i| (0..k).map(|j| dot_rat(&basis[i], &basis[j])).collect()).collect();
    let rhs: Vec<Rat> = basis.iter().map(|b| dot_rat(b, x)).collect();
    let coeffs = solve_rat(&gram, &rhs, k).expect("basis must be independent");
    let mut out = x.to_vec();
    for (c, b) in coeffs.iter().zip(basis) {
        for (o, bi) in out.iter_mut().zip(b) {
            *o -= c * bi;
        }
    }
    out
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Sign of the first nonzero entry, or 0.
pub fn leading_sign(v: &[BigInt]) -> i32 {
    v.iter().find(|x| !x.is_zero()).map_or(0, |x| if x.is_positive() { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_agrees_between_integer_and_rational_paths() {
        let rows = vec![iv(&[1, 2, 3]), iv(&[2, 4, 6]), iv(&[0, 1, 1])];
        assert_eq!(rank_int(&rows), 2);
        let r: Vec<Vec<Rat>> = rows.iter().map(|x| to_rat(x)).collect();
        assert_eq!(rank_rat(&r, 3), 2);
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![Rat::new(BigInt::from(1), BigInt::from(2)), Rat::new(BigInt::from(3), BigInt::from(4))];
        assert_eq!(primitive_from_rat(&v), iv(&[2, 3]));
        assert_eq!(primitive(&iv(&[4, -6, 0])), iv(&[2, -3, 0]));
    }

    #[test]
    fn inverse_and_solve() {
        let a = vec![to_rat(&iv(&[2, 1])), to_rat(&iv(&[1, 1]))];
        let inv = inverse_rat(&a).unwrap();
        assert_eq!(inv, vec![to_rat(&iv(&[1, -1])), to_rat(&iv(&[-1, 2]))]);
        let singular = vec![to_rat(&iv(&[1, 2])), to_rat(&iv(&[2, 4]))];
        assert!(inverse_rat(&singular).is_none());
        assert!(solve_rat(&singular, &to_rat(&iv(&[1, 3])), 2).is_none());
    }

    #[test]
    fn projection_is_orthogonal() {
        let basis = vec![to_rat(&iv(&[1, 1, 0]))];
        let p = project_out(&to_rat(&iv(&[3, 1, 5])), &basis);
        assert_eq!(p, to_rat(&iv(&[1, -1, 5])));
    }
}
