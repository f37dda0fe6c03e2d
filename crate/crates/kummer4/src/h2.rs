//! H² of the Kummer fourfold with its Beauville–Bogomolov form, Fujiki
//! quadruple products and the monomial basis of Sym²H².

use std::collections::BTreeMap;

use intlat::QMatrix;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{KummerError, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Basis labels in the order used by every coordinate vector.
pub const H2_LABELS: [&str; 7] = ["u1", "u2", "v1", "v2", "w1", "w2", "e"];
pub const E: usize = 6;
/// Half the dimension parameter: `B(e,e) = -2n` with `n = 3`.
pub const KUMMER_N: i64 = 3;

pub fn h2_index(name: &str) -> Result<usize> {
    H2_LABELS.iter().position(|&l| l == name).ok_or_else(|| KummerError::UnknownClass(name.to_string()))
}

/// `U³ ⊕ ⟨-6⟩` on the basis `u1,u2,v1,v2,w1,w2,e`.
pub fn bb_form(i: usize, j: usize) -> i64 {
    match (i.min(j), i.max(j)) {
        (0, 1) | (2, 3) | (4, 5) => 1,
        (E, E) => -2 * KUMMER_N,
        _ => 0,
    }
}

pub fn bb_gram() -> Vec<Vec<i64>> {
    (0..7).map(|i| (0..7).map(|j| bb_form(i, j)).collect()).collect()
}

fn double_factorial(k: i64) -> i64 {
    if k <= 1 {
        1
    } else {
        k * double_factorial(k - 2)
    }
}

/// `c = n·(2n−3)!!` for the Kummer variety of dimension `2(n−1)`.
pub fn fujiki_constant(n: i64) -> i64 {
    n * double_factorial(2 * n - 3)
}

/// `α₁α₂α₃α₄ = c/24 · Σ_σ B·B = c/3 · (B₁₂B₃₄ + B₁₃B₂₄ + B₁₄B₂₃)` on basis classes.
pub fn fujiki_quadruple(a: usize, b: usize, c: usize, d: usize) -> Q {
    let s = bb_form(a, b) * bb_form(c, d) + bb_form(a, c) * bb_form(b, d) + bb_form(a, d) * bb_form(b, c);
    qr(fujiki_constant(KUMMER_N) * s, 3)
}

/// Fujiki product of four arbitrary H² vectors.
pub fn fujiki_vectors(vs: [&[Q]; 4]) -> Q {
    let mut total = Q::zero();
    for a in 0..7 {
        if vs[0][a].is_zero() {
            continue;
        }
        for b in 0..7 {
            if vs[1][b].is_zero() {
                continue;
            }
            for c in 0..7 {
                if vs[2][c].is_zero() {
                    continue;
                }
                for d in 0..7 {
                    if !vs[3][d].is_zero() {
                        total += &vs[0][a] * &vs[1][b] * &vs[2][c] * &vs[3][d] * fujiki_quadruple(a, b, c, d);
                    }
                }
            }
        }
    }
    total
}

/// Monomials `x_i x_j` with `i <= j`, lexicographic: u1², u1u2, …, e².
pub fn sym2_monomials() -> Vec<(usize, usize)> {
    (0..7).flat_map(|i| (i..7).map(move |j| (i, j))).collect()
}

pub const SYM_RANK: usize = 28;

pub fn monomial_index(i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    sym2_monomials().iter().position(|&m| m == (i, j)).expect("monomial")
}

pub fn monomial_label(k: usize) -> String {
    let (i, j) = sym2_monomials()[k];
    if i == j {
        format!("{}^2", H2_LABELS[i])
    } else {
        format!("{}{}", H2_LABELS[i], H2_LABELS[j])
    }
}

/// Intersection Gram of the monomial basis of Sym²H².
pub fn sym2_gram() -> QMatrix {
    let m = sym2_monomials();
    m.iter().map(|&(a, b)| m.iter().map(|&(c, d)| fujiki_quadruple(a, b, c, d)).collect()).collect()
}

/// `B(D₁,D₂)` extended to rational vectors.
pub fn bb_vectors(x: &[Q], y: &[Q]) -> Q {
    let mut s = Q::zero();
    for i in 0..7 {
        for j in 0..7 {
            let b = bb_form(i, j);
            if b != 0 {
                s += &x[i] * &y[j] * q(b);
            }
        }
    }
    s
}

/// A quadratic polynomial in the H² basis, stored by monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymPoly(pub BTreeMap<(usize, usize), Q>);

impl SymPoly {
    pub fn monomial(i: usize, j: usize, c: Q) -> Self {
        let mut p = Self::default();
        p.add_term(i, j, c);
        p
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: Q) {
        let key = (i.min(j), i.max(j));
        let e = self.0.entry(key).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&key);
        }
    }

    pub fn plus(mut self, other: &SymPoly) -> Self {
        for (&(i, j), c) in &other.0 {
            self.add_term(i, j, c.clone());
        }
        self
    }

    pub fn scaled(&self, c: &Q) -> Self {
        Self(self.0.iter().map(|(k, v)| (*k, v * c)).filter(|(_, v)| !v.is_zero()).collect())
    }

    /// Product of two degree-2 classes given as H² vectors.
    pub fn product(x: &[Q], y: &[Q]) -> Self {
        let mut p = Self::default();
        for i in 0..7 {
            for j in 0..7 {
                if !x[i].is_zero() && !y[j].is_zero() {
                    p.add_term(i, j, &x[i] * &y[j]);
                }
            }
        }
        p
    }

    /// Coordinates over the 28 monomials.
    pub fn coords(&self) -> Vec<Q> {
        let mut v = vec![Q::zero(); SYM_RANK];
        for (&(i, j), c) in &self.0 {
            v[monomial_index(i, j)] = c.clone();
        }
        v
    }

    /// Parses sums like `w2^2-w2u2+u2^2` or `4u1u2-1/3e^2`.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |rest: &str| KummerError::Parse { text: text.to_string(), rest: rest.to_string() };
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = s.as_str();
        let mut p = Self::default();
        while !rest.is_empty() {
            let mut sign = Q::one();
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r;
            }
            let digits = rest.find(|c: char| !c.is_ascii_digit() && c != '/').unwrap_or(rest.len());
            let coeff = if digits == 0 {
                Q::one()
            } else {
                let (num, den) = rest[..digits].split_once('/').unwrap_or((&rest[..digits], "1"));
                let n: i64 = num.parse().map_err(|_| err(rest))?;
                let d: i64 = den.parse().map_err(|_| err(rest))?;
                qr(n, d)
            };
            rest = &rest[digits..];
            let mut vars = Vec::new();
            while let Some(c) = rest.chars().next() {
                if c == 'e' {
                    vars.push(E);
                    rest = &rest[1..];
                } else if matches!(c, 'u' | 'v' | 'w') && rest.len() >= 2 {
                    vars.push(h2_index(&rest[..2])?);
                    rest = &rest[2..];
                } else if let Some(r) = rest.strip_prefix("^2") {
                    let last = *vars.last().ok_or_else(|| err(rest))?;
                    vars.push(last);
                    rest = r;
                } else {
                    break;
                }
            }
            if vars.len() != 2 {
                return Err(err(rest));
            }
            p.add_term(vars[0], vars[1], sign * coeff);
        }
        Ok(p)
    }
}

/// Unit vector of a basis class of H².
pub fn h2_unit(i: usize) -> Vec<Q> {
    (0..7).map(|k| if k == i { Q::one() } else { Q::zero() }).collect()
}
