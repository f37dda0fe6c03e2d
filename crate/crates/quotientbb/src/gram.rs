//! The Gram matrix of the quotient in the unknown scale t = √(2/c).

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{QuotientError, Result};

pub type Q = Rational64;

/// Labels of the basis: the six pulled-back isotropic classes, then (e′ ± Z′)/2.
pub const LABELS: [&str; 8] = ["u1", "u2", "v1", "v2", "w1", "w2", "(e+Z)/2", "(e-Z)/2"];

/// Pairings of the pulled-back H² classes in units of t.
pub const PULLBACK_SCALE: i64 = 6;
/// Self-pairing of the pulled-back e in units of t.
pub const E_SQUARE: i64 = -36;
/// Self-pairing of the exceptional class Z′ in units of t.
pub const Z_SQUARE: i64 = -4;
/// Largest numerator and denominator tried for t.
pub const SCALE_BOUND: i64 = 12;

/// A Gram matrix `t·base` with t a positive unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicGram {
    pub base: Vec<Vec<Q>>,
}

impl SymbolicGram {
    pub fn at(&self, t: Q) -> Vec<Vec<Q>> {
        self.base.iter().map(|r| r.iter().map(|x| x * t).collect()).collect()
    }
}

fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// Gram on the halved basis `(e ± Z)/2`, from `e² = E_SQUARE`, `Z² = Z_SQUARE`, `e·Z = 0`.
pub fn halved_block() -> [[Q; 2]; 2] {
    let half = Q::new(1, 2);
    let change = [[half, half], [half, -half]];
    let diag = [q(E_SQUARE), q(Z_SQUARE)];
    let mut out = [[Q::zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = (0..2).map(|k| change[i][k] * diag[k] * change[j][k]).sum();
        }
    }
    out
}

pub fn kprime_gram_symbolic() -> SymbolicGram {
    let mut base = vec![vec![Q::zero(); 8]; 8];
    for h in 0..3 {
        let bb = kummer4::h2::bb_form(2 * h, 2 * h + 1);
        base[2 * h][2 * h + 1] = q(PULLBACK_SCALE * bb);
        base[2 * h + 1][2 * h] = q(PULLBACK_SCALE * bb);
    }
    let block = halved_block();
    for i in 0..2 {
        for j in 0..2 {
            base[6 + i][6 + j] = block[i][j];
        }
    }
    SymbolicGram { base }
}

/// Whether every entry is an integer and the entries have gcd 1.
pub fn is_integral_primitive(g: &[Vec<Q>]) -> bool {
    let entries: Vec<&Q> = g.iter().flatten().collect();
    entries.iter().all(|x| x.is_integer()) && entries.iter().fold(0i64, |acc, x| acc.gcd(&x.to_integer())) == 1
}

/// Every reduced `p/q` with `1 <= p, q <= SCALE_BOUND`.
pub fn scale_candidates() -> Vec<Q> {
    let mut out: Vec<Q> = (1..=SCALE_BOUND)
        .flat_map(|p| (1..=SCALE_BOUND).map(move |d| Q::new(p, d)))
        .collect();
    out.sort();
    out.dedup();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FujikiSolution {
    pub t: Q,
    pub c: Q,
    pub gram: Vec<Vec<i64>>,
}

pub fn solve_fujiki(g: &SymbolicGram) -> Result<FujikiSolution> {
    let valid: Vec<Q> = scale_candidates().into_iter().filter(|t| is_integral_primitive(&g.at(*t))).collect();
    match valid.as_slice() {
        [] => Err(QuotientError::NoValidScale { bound: SCALE_BOUND }),
        [t] => {
            let gram = g.at(*t).iter().map(|r| r.iter().map(|x| x.to_integer()).collect()).collect();
            Ok(FujikiSolution { t: *t, c: q(2) / (t * t), gram })
        }
        many => Err(QuotientError::AmbiguousScale { candidates: many.iter().map(|t| t.to_string()).collect() }),
    }
}

/// `U(3)³ ⊕ [[−5, −4], [−4, −5]]`.
pub fn expected_gram() -> Vec<Vec<i64>> {
    let mut g = vec![vec![0; 8]; 8];
    for h in 0..3 {
        g[2 * h][2 * h + 1] = 3;
        g[2 * h + 1][2 * h] = 3;
    }
    g[6][6] = -5;
    g[7][7] = -5;
    g[6][7] = -4;
    g[7][6] = -4;
    g
}

pub fn is_odd(g: &[Vec<i64>]) -> bool {
    g.iter().enumerate().any(|(i, r)| r[i] % 2 != 0)
}

/// |det| of an integer Gram matrix.
pub fn discriminant(g: &[Vec<i64>]) -> i64 {
    let d = intlat::bareiss_det(&intlat::mat(g));
    i64::try_from(d).expect("small determinant").abs()
}

/// The two forms of the exceptional self-pairing, −4t and −8√(1/(2c)), agree:
/// squaring both sides gives `16·(2/c) = 64/(2c)`.
pub fn z2_forms_agree(c: Q) -> bool {
    !c.is_zero() && c.is_positive() && q(16) * (q(2) / c) == q(64) / (q(2) * c)
}
