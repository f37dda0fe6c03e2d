//! Smith normal form with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::{bareiss_det, identity, mul, Matrix};

/// `U·M·V = D` with `D` diagonal, `d_i | d_{i+1}`, and `v_inv = V^{-1}`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: Matrix,
    pub v: Matrix,
    pub v_inv: Matrix,
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl Snf {
    /// Invariant factors different from 1 (the nonzero ones).
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one() && !d.is_zero()).cloned().collect()
    }

    /// Checks `U·M·V = D` and that `U`, `V` are unimodular.
    pub fn verify(&self, m: &Matrix) -> bool {
        let d = mul(&mul(&self.u, m), &self.v);
        let diag_ok = d.iter().enumerate().all(|(i, r)| {
            r.iter().enumerate().all(|(j, x)| if i == j && i < self.diagonal.len() { *x == self.diagonal[i] } else { x.is_zero() })
        });
        let divides = self.diagonal.windows(2).all(|w| w[0].is_zero() && w[1].is_zero() || !w[0].is_zero() && (w[1].clone() % &w[0]).is_zero());
        diag_ok && divides && bareiss_det(&self.u).abs().is_one() && bareiss_det(&self.v).abs().is_one()
    }
}

struct Work {
    a: Matrix,
    u: Matrix,
    v: Matrix,
    v_inv: Matrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut().chain(self.v.iter_mut()) {
            r.swap(i, j);
        }
        self.v_inv.swap(i, j);
    }

    /// row_i -= f · row_j
    fn sub_row(&mut self, i: usize, j: usize, f: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[j].clone();
            for (x, y) in m[i].iter_mut().zip(&src) {
                if !y.is_zero() {
                    *x -= f * y;
                }
            }
        }
    }

    /// col_i -= f · col_j
    fn sub_col(&mut self, i: usize, j: usize, f: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for r in m.iter_mut() {
                if !r[j].is_zero() {
                    let t = f * &r[j];
                    r[i] -= t;
                }
            }
        }
        let src = self.v_inv[i].clone();
        for (x, y) in self.v_inv[j].iter_mut().zip(&src) {
            if !y.is_zero() {
                *x += f * y;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

pub fn snf(m: &Matrix) -> Snf {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut w = Work { a: m.to_vec(), u: identity(rows), v: identity(cols), v_inv: identity(cols) };
    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !w.a[i][j].is_zero() && best.map_or(true, |(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if w.a[i][t].is_zero() {
                    continue;
                }
                let f = w.a[i][t].div_floor(&w.a[t][t]);
                w.sub_row(i, t, &f);
                if !w.a[i][t].is_zero() {
                    clean = false;
                    if w.a[i][t].abs() < w.a[t][t].abs() {
                        w.swap_rows(t, i);
                    }
                }
            }
            for j in t + 1..cols {
                if w.a[t][j].is_zero() {
                    continue;
                }
                let f = w.a[t][j].div_floor(&w.a[t][t]);
                w.sub_col(j, t, &f);
                if !w.a[t][j].is_zero() {
                    clean = false;
                    if w.a[t][j].abs() < w.a[t][t].abs() {
                        w.swap_cols(t, j);
                    }
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(w.a[i][j].clone() % &w.a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    let f = -BigInt::one();
                    w.sub_row(t, i, &f);
                }
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    let diagonal: Vec<BigInt> = (0..rows.min(cols)).map(|i| w.a[i][i].clone()).collect();
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    let out = Snf { u: w.u, v: w.v, v_inv: w.v_inv, diagonal, rank };
    debug_assert!(out.verify(m), "Smith form postcondition");
    out
}

/// Trial division of `n`, or `None` if a cofactor above the search bound remains.
fn small_prime_factors(n: &BigInt) -> Option<Vec<(BigInt, u32)>> {
    const BOUND: u64 = 1 << 16;
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p < BOUND && n > BigInt::one() {
        let bp = BigInt::from(p);
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += 1;
    }
    if n.is_one() {
        Some(out)
    } else if n < BigInt::from(BOUND * BOUND) {
        out.push((n, 1));
        Some(out)
    } else {
        None
    }
}

fn valuation(x: &BigInt, p: &BigInt, cap: u32) -> u32 {
    if x.is_zero() {
        return cap;
    }
    let mut x = x.clone();
    let mut v = 0;
    while v < cap && (&x % p).is_zero() {
        x /= p;
        v += 1;
    }
    v
}

/// Valuations at `p` of the Smith diagonal of a nonsingular square matrix,
/// by elimination over `Z/p^cap` with a pivot of least valuation.
fn local_valuations(m: &Matrix, p: &BigInt, cap: u32) -> Vec<u32> {
    let modulus = p.pow(cap);
    let n = m.len();
    let mut a: Matrix = m.iter().map(|r| r.iter().map(|x| x.mod_floor(&modulus)).collect()).collect();
    let mut out = Vec::with_capacity(n);
    for t in 0..n {
        let mut best = (cap, t, t);
        'search: for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                let v = valuation(x, p, cap);
                if v < best.0 {
                    best = (v, i, j);
                    if v == 0 {
                        break 'search;
                    }
                }
            }
        }
        let (v, bi, bj) = best;
        out.push(v);
        if v == cap {
            out.extend(std::iter::repeat(cap).take(n - t - 1));
            break;
        }
        a.swap(t, bi);
        for r in a.iter_mut() {
            r.swap(t, bj);
        }
        let pv = p.pow(v);
        let unit = &a[t][t] / &pv;
        let inv = unit.extended_gcd(&modulus).x.mod_floor(&modulus);
        let pivot = a[t].clone();
        for row in a.iter_mut().skip(t + 1) {
            if row[t].is_zero() {
                continue;
            }
            let f = (&row[t] / &pv * &inv).mod_floor(&modulus);
            for (x, y) in row.iter_mut().zip(&pivot).skip(t) {
                if !y.is_zero() {
                    *x = (&*x - &f * y).mod_floor(&modulus);
                }
            }
        }
    }
    out
}

/// Smith diagonal of a nonsingular square matrix, computed one prime at a time
/// so that entries stay below a prime power of the determinant. Returns `None`
/// for singular or non-square input, or when the determinant does not factor
/// over small primes.
pub fn nonsingular_diagonal(m: &Matrix) -> Option<Vec<BigInt>> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return None;
    }
    let det = bareiss_det(m);
    if det.is_zero() {
        return None;
    }
    let mut diagonal = vec![BigInt::one(); n];
    for (p, e) in small_prime_factors(&det)? {
        let mut vals = local_valuations(m, &p, e + 1);
        vals.sort_unstable();
        for (d, v) in diagonal.iter_mut().zip(vals) {
            *d *= p.pow(v);
        }
    }
    Some(diagonal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{int, mat};

    #[test]
    fn diagonal_examples() {
        assert_eq!(snf(&mat(&[vec![2, 0], vec![0, 4]])).diagonal, vec![int(2), int(4)]);
        assert_eq!(snf(&identity(3)).diagonal, vec![int(1); 3]);
        assert_eq!(snf(&mat(&[vec![2, 0], vec![0, 3]])).diagonal, vec![int(1), int(6)]);
    }

    #[test]
    fn local_diagonal_matches_full_form() {
        let m = mat(&[vec![4, 6, 2], vec![6, 9, 4], vec![2, 7, 8]]);
        assert_eq!(nonsingular_diagonal(&m).unwrap(), snf(&m).diagonal);
        assert_eq!(nonsingular_diagonal(&mat(&[vec![2, 0], vec![0, 3]])).unwrap(), vec![int(1), int(6)]);
        assert!(nonsingular_diagonal(&mat(&[vec![1, 2], vec![2, 4]])).is_none());
    }

    #[test]
    fn transforms_verify() {
        let m = mat(&[vec![4, 6, 2], vec![6, 9, 3], vec![2, 7, 8], vec![1, 0, 5]]);
        let s = snf(&m);
        assert!(s.verify(&m));
        assert_eq!(mul(&s.v, &s.v_inv), identity(3));
    }
}
