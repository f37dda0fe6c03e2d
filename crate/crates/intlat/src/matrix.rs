//! Dense big-integer and big-rational matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<BigInt>>;
pub type QMatrix = Vec<Vec<BigRational>>;

pub fn int(k: i64) -> BigInt {
    BigInt::from(k)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(int(n), int(d))
}

pub fn mat(rows: &[Vec<i64>]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&k| int(k)).collect()).collect()
}

pub fn qmat(m: &Matrix) -> QMatrix {
    m.iter().map(|r| r.iter().map(|k| BigRational::from_integer(k.clone())).collect()).collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn mul<T>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>>
where
    T: Clone + Zero + for<'x> std::ops::AddAssign<&'x T>,
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T>,
{
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = T::zero();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() {
                            s += &(x * &b[k][j]);
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn transpose<T: Clone>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = a.first().map_or(0, |r| r.len());
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// `B G B^T` for row-vector coordinates `B`.
pub fn congruence(b: &QMatrix, g: &QMatrix) -> QMatrix {
    mul(&mul(b, g), &transpose(b))
}

/// Fraction-free determinant of a square integer matrix.
pub fn bareiss_det(m: &Matrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Determinant of a rational matrix, after clearing denominators row by row.
pub fn rational_det(m: &QMatrix) -> BigRational {
    let mut scale = BigInt::one();
    let rows: Matrix = m
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            scale *= &l;
            r.iter().map(|q| (q * BigRational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    BigRational::new(bareiss_det(&rows), scale)
}

/// Hermite-style row basis of the lattice spanned by integer rows.
pub fn row_basis(m: &Matrix) -> Matrix {
    let mut a: Matrix = m.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        loop {
            let nonzero: Vec<usize> = (r..a.len()).filter(|&i| !a[i][c].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&i| a[i][c].abs()).unwrap();
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].div_floor(&a[r][c]);
                let pivot = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < a.len() && !a[r][c].is_zero() {
            if a[r][c].is_negative() {
                for x in a[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            for i in 0..r {
                let f = a[i][c].div_floor(&a[r][c]);
                if !f.is_zero() {
                    let pivot = a[r].clone();
                    for (x, y) in a[i].iter_mut().zip(&pivot) {
                        *x -= &f * y;
                    }
                }
            }
            r += 1;
        }
    }
    a.truncate(r);
    a
}

/// Basis of the integral left kernel `{x : x·N = 0}`, from the Hermite form of `[N | I]`.
pub fn integer_left_kernel(n: &Matrix) -> Matrix {
    let rows = n.len();
    let cols = n.first().map_or(0, |r| r.len());
    let augmented: Matrix = n
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().cloned().chain((0..rows).map(|j| if i == j { BigInt::one() } else { BigInt::zero() })).collect())
        .collect();
    row_basis(&augmented).into_iter().filter(|r| r[..cols].iter().all(|x| x.is_zero())).map(|r| r[cols..].to_vec()).collect()
}

/// Row basis of the lattice spanned by rational rows.
pub fn rational_row_basis(m: &QMatrix) -> QMatrix {
    let l = m.iter().flatten().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let lq = BigRational::from_integer(l.clone());
    let ints: Matrix = m.iter().map(|r| r.iter().map(|q| (q * &lq).to_integer()).collect()).collect();
    row_basis(&ints).into_iter().map(|r| r.into_iter().map(|x| BigRational::new(x, l.clone())).collect()).collect()
}

/// Solves `x B = v` for a rational row `x`, with `B` of full row rank.
pub fn solve_rows(b: &QMatrix, v: &[BigRational]) -> Option<Vec<BigRational>> {
    coordinates(b, &[v.to_vec()]).map(|mut x| x.remove(0))
}

/// Pivot columns of `b` if its rows are in echelon form.
fn echelon_pivots(b: &QMatrix) -> Option<Vec<usize>> {
    let mut last = None;
    let mut piv = Vec::with_capacity(b.len());
    for row in b {
        let p = row.iter().position(|x| !x.is_zero())?;
        if last.is_some_and(|l| p <= l) {
            return None;
        }
        last = Some(p);
        piv.push(p);
    }
    Some(piv)
}

/// Substitution along the pivots of an echelon basis.
fn echelon_coordinates(b: &QMatrix, piv: &[usize], v: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut rest = v.to_vec();
    let mut x = Vec::with_capacity(b.len());
    for (row, &p) in b.iter().zip(piv) {
        let c = &rest[p] / &row[p];
        if !c.is_zero() {
            for (y, z) in rest.iter_mut().zip(row).skip(p) {
                if !z.is_zero() {
                    *y -= &c * z;
                }
            }
        }
        x.push(c);
    }
    rest.iter().all(|y| y.is_zero()).then_some(x)
}

/// Coordinates of every row of `vs` in the row basis `b`, by one elimination.
pub fn coordinates(b: &QMatrix, vs: &[Vec<BigRational>]) -> Option<QMatrix> {
    if let Some(piv) = echelon_pivots(b) {
        return vs.iter().map(|v| echelon_coordinates(b, &piv, v)).collect();
    }
    let r = b.len();
    let n = b.first().map_or_else(|| vs.first().map_or(0, |v| v.len()), |row| row.len());
    let k = vs.len();
    // Augmented system B^T X^T = V^T.
    let mut a: QMatrix = (0..n)
        .map(|j| (0..r).map(|i| b[i][j].clone()).chain(vs.iter().map(|v| v[j].clone())).collect())
        .collect();
    let mut piv = Vec::new();
    let mut row = 0;
    for c in 0..r {
        let Some(p) = (row..n).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(row, p);
        let inv = a[row][c].recip();
        for x in a[row].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pr = a[row].clone();
        for (i, ri) in a.iter_mut().enumerate() {
            if i != row && !ri[c].is_zero() {
                let f = ri[c].clone();
                for (x, y) in ri.iter_mut().zip(&pr) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        piv.push(c);
        row += 1;
    }
    if piv.len() < r || a[row..].iter().any(|ri| ri[r..].iter().any(|x| !x.is_zero())) {
        return None;
    }
    let mut x = vec![vec![BigRational::zero(); r]; k];
    for (i, &c) in piv.iter().enumerate() {
        for (t, xt) in x.iter_mut().enumerate() {
            xt[c] = a[i][r + t].clone();
        }
    }
    Some(x)
}

/// Clears denominators: returns `(l, l·M)` with `l` the lcm of all denominators.
pub fn clear_denominators(m: &QMatrix) -> (BigInt, Matrix) {
    let l = m.iter().flatten().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let lq = BigRational::from_integer(l.clone());
    (l, m.iter().map(|r| r.iter().map(|q| (q * &lq).to_integer()).collect()).collect())
}

/// Integral matrix from a rational one, if every entry is an integer.
pub fn to_integer(m: &QMatrix) -> Option<Matrix> {
    m.iter().map(|r| r.iter().map(|q| q.is_integer().then(|| q.to_integer())).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_small_cases() {
        assert_eq!(bareiss_det(&mat(&[vec![2, 1], vec![4, 3]])), int(2));
        assert_eq!(bareiss_det(&mat(&[vec![0, 1], vec![1, 0]])), int(-1));
        assert_eq!(bareiss_det(&mat(&[vec![1, 2], vec![2, 4]])), int(0));
    }

    #[test]
    fn row_basis_reduces_generators() {
        let b = row_basis(&mat(&[vec![2, 0], vec![0, 2], vec![1, 1]]));
        assert_eq!(b.len(), 2);
        assert_eq!(bareiss_det(&b).abs(), int(2));
    }

    #[test]
    fn left_kernel_of_a_column() {
        let k = integer_left_kernel(&mat(&[vec![2], vec![3], vec![0]]));
        assert_eq!(k.len(), 2);
        for r in &k {
            assert!((&r[0] * int(2) + &r[1] * int(3)).is_zero());
        }
        assert_eq!(bareiss_det(&mul(&k, &transpose(&k))).abs(), int(13));
    }

    #[test]
    fn solve_rows_finds_coordinates() {
        let b = qmat(&mat(&[vec![1, 1, 0], vec![0, 1, 1]]));
        let x = solve_rows(&b, &[rat(2, 1), rat(5, 1), rat(3, 1)]).unwrap();
        assert_eq!(x, vec![rat(2, 1), rat(3, 1)]);
        assert!(solve_rows(&b, &[rat(1, 1), rat(0, 1), rat(0, 1)]).is_none());
    }

    #[test]
    fn echelon_and_general_paths_agree() {
        let echelon = qmat(&mat(&[vec![2, 1, 0], vec![0, 3, 1]]));
        let shuffled = qmat(&mat(&[vec![0, 3, 1], vec![2, 1, 0]]));
        let v = vec![rat(4, 1), rat(8, 1), rat(2, 1)];
        let a = solve_rows(&echelon, &v).unwrap();
        let b = solve_rows(&shuffled, &v).unwrap();
        assert_eq!(a, vec![b[1].clone(), b[0].clone()]);
        assert!(solve_rows(&echelon, &[rat(0, 1), rat(0, 1), rat(1, 1)]).is_none());
    }
}
