//! Exact rank and determinant over big rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::state::{CreationWord, FockState};
use crate::Q;

pub fn to_big(q: Q) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

/// Coordinate rows of states over the union of their creation words.
pub fn coordinate_rows(states: &[FockState]) -> Vec<Vec<BigRational>> {
    let mut index: BTreeMap<CreationWord, usize> = BTreeMap::new();
    for s in states {
        for (w, _) in s.terms() {
            let n = index.len();
            index.entry(w.clone()).or_insert(n);
        }
    }
    states
        .iter()
        .map(|s| {
            let mut row = vec![BigRational::zero(); index.len()];
            for (w, c) in s.terms() {
                row[index[w]] = to_big(*c);
            }
            row
        })
        .collect()
}

pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..ncols {
                let t = &f * &m[r][j];
                m[i][j] -= t;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

pub fn state_rank(states: &[FockState]) -> usize {
    rank(&coordinate_rows(states))
}

pub fn det(rows: &[Vec<BigRational>]) -> BigRational {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut d = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return BigRational::zero() };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..n {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    d
}

pub fn det_q(rows: &[Vec<Q>]) -> BigRational {
    det(&rows.iter().map(|r| r.iter().map(|q| to_big(*q)).collect()).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_rank_of_small_matrices() {
        let m = vec![vec![Q::from_integer(2), Q::from_integer(1)], vec![Q::from_integer(4), Q::from_integer(3)]];
        assert_eq!(det_q(&m), BigRational::from_integer(BigInt::from(2)));
        let rows: Vec<Vec<BigRational>> = vec![vec![1, 2], vec![2, 4]]
            .into_iter()
            .map(|r| r.into_iter().map(|x: i64| BigRational::from_integer(x.into())).collect())
            .collect();
        assert_eq!(rank(&rows), 1);
    }
}
