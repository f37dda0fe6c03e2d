//! Coordinates on H⁴(K₂(A), Q): 28 Sym² monomials followed by the 80 classes
//! `Z_τ − Z₀`, τ ≠ 0, with A[3] identified with F₃⁴.

use intlat::QMatrix;
use num_traits::{One, Zero};
use sympfin::SympSpace;

use crate::h2::{self, fujiki_vectors, q, qr, SymPoly, Q, SYM_RANK};

pub const PI_COUNT: usize = 81;
pub const PI_PRIME_RANK: usize = 80;
pub const MODEL_RANK: usize = SYM_RANK + PI_PRIME_RANK;

/// A[3] with the product form, used for indexing and isotropy.
pub fn a3() -> SympSpace {
    SympSpace::product(3).expect("F_3 product form")
}

/// Index of τ ∈ F₃⁴ (first coordinate lowest digit).
pub fn tau_index(tau: &[u8]) -> usize {
    tau.iter().rev().fold(0, |acc, &d| acc * 3 + (d % 3) as usize)
}

pub fn tau_of(i: usize) -> Vec<u8> {
    (0..4).map(|k| ((i / 3usize.pow(k)) % 3) as u8).collect()
}

/// A class written as a Sym² part plus a combination of all 81 `Z_τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H4Vector {
    pub sym_coords: Vec<Q>,
    pub pi_coords: Vec<Q>,
}

impl H4Vector {
    pub fn zero() -> Self {
        Self { sym_coords: vec![Q::zero(); SYM_RANK], pi_coords: vec![Q::zero(); PI_COUNT] }
    }

    pub fn sym(p: &SymPoly) -> Self {
        Self { sym_coords: p.coords(), ..Self::zero() }
    }

    pub fn z(tau: &[u8]) -> Self {
        let mut v = Self::zero();
        v.pi_coords[tau_index(tau)] = Q::one();
        v
    }

    pub fn plus(&self, other: &Self) -> Self {
        Self {
            sym_coords: self.sym_coords.iter().zip(&other.sym_coords).map(|(a, b)| a + b).collect(),
            pi_coords: self.pi_coords.iter().zip(&other.pi_coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scaled(&self, c: &Q) -> Self {
        Self {
            sym_coords: self.sym_coords.iter().map(|a| a * c).collect(),
            pi_coords: self.pi_coords.iter().map(|a| a * c).collect(),
        }
    }

    /// Model coordinates, using `Σ c_τ Z_τ = (Σ c_τ) Z₀ + Σ_{τ≠0} c_τ (Z_τ − Z₀)`.
    pub fn to_model(&self) -> Vec<Q> {
        let total: Q = self.pi_coords.iter().sum();
        let mut v: Vec<Q> = self.sym_coords.iter().cloned().chain(self.pi_coords[1..].iter().cloned()).collect();
        if !total.is_zero() {
            for (x, z) in v.iter_mut().zip(z0_model()) {
                *x += &total * z;
            }
        }
        v
    }
}

/// `Z_τ·Z_τ' = 1` for τ ≠ τ', `Z_τ² = 4`.
pub fn pi_gram() -> QMatrix {
    (0..PI_COUNT).map(|i| (0..PI_COUNT).map(|j| q(if i == j { 4 } else { 1 })).collect()).collect()
}

/// Gram of the basis `Z_τ − Z₀`, τ ≠ 0.
pub fn pi_prime_gram() -> QMatrix {
    (0..PI_PRIME_RANK).map(|i| (0..PI_PRIME_RANK).map(|j| q(if i == j { 6 } else { 3 })).collect()).collect()
}

/// `Z_τ·D₁·D₂ = 2·B(D₁,D₂)`, independent of τ.
pub fn cross_pairing(d1: &[Q], d2: &[Q]) -> Q {
    q(2) * h2::bb_vectors(d1, d2)
}

/// Block Gram of the model: Sym² Gram ⊕ Π′ Gram.
pub fn model_gram() -> QMatrix {
    let sym = h2::sym2_gram();
    let pi = pi_prime_gram();
    (0..MODEL_RANK)
        .map(|i| {
            (0..MODEL_RANK)
                .map(|j| match (i < SYM_RANK, j < SYM_RANK) {
                    (true, true) => sym[i][j].clone(),
                    (false, false) => pi[i - SYM_RANK][j - SYM_RANK].clone(),
                    _ => Q::zero(),
                })
                .collect()
        })
        .collect()
}

pub fn pairing(x: &[Q], y: &[Q], gram: &QMatrix) -> Q {
    let mut s = Q::zero();
    for (i, xi) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            if !gram[i][j].is_zero() {
                s += xi * &gram[i][j] * yj;
            }
        }
    }
    s
}

/// `c₂ = 4u₁u₂ + 4v₁v₂ + 4w₁w₂ − ⅓e²`.
pub fn c2_poly() -> SymPoly {
    SymPoly::parse("4u1u2+4v1v2+4w1w2-1/3e^2").expect("c2")
}

/// `Y_p = ⅙(u₁u₂ + v₁v₂ + w₁w₂)`.
pub fn yp_poly() -> SymPoly {
    SymPoly::parse("1/6u1u2+1/6v1v2+1/6w1w2").expect("Y_p")
}

/// `Z₀ = (c₂ − ⅓Σ_τ(Z_τ − Z₀))/27` in model coordinates.
pub fn z0_model() -> Vec<Q> {
    let mut v: Vec<Q> = c2_poly().coords();
    v.extend(std::iter::repeat(qr(-1, 3)).take(PI_PRIME_RANK));
    v.into_iter().map(|x| x / q(27)).collect()
}

/// `Z_τ` in model coordinates.
pub fn z_model(tau: &[u8]) -> Vec<Q> {
    H4Vector::z(tau).to_model()
}

/// `W = Σ_τ W_τ = Σ_τ (Y_p − Z_τ)`.
pub fn w_vector() -> H4Vector {
    let mut v = H4Vector::sym(&yp_poly().scaled(&q(PI_COUNT as i64)));
    for c in v.pi_coords.iter_mut() {
        *c = q(-1);
    }
    v
}

/// `(D₁·D₂)·(D₃·D₄)` through the model Gram agrees with the Fujiki product.
pub fn sym_product_pairing(x: [&[Q]; 4]) -> (Q, Q) {
    let a = SymPoly::product(x[0], x[1]).coords();
    let b = SymPoly::product(x[2], x[3]).coords();
    (pairing(&a, &b, &h2::sym2_gram()), fujiki_vectors(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::h2::{h2_unit, E};
    use intlat::rational_det;
    use num_bigint::BigInt;

    fn e2() -> Vec<Q> {
        let mut v = SymPoly::monomial(E, E, Q::one()).coords();
        v.extend(vec![Q::zero(); PI_PRIME_RANK]);
        v
    }

    #[test]
    fn pi_discriminants() {
        assert_eq!(rational_det(&pi_gram()), Q::from_integer(BigInt::from(3).pow(80) * 84));
        assert_eq!(rational_det(&pi_prime_gram()), Q::from_integer(BigInt::from(3).pow(84)));
    }

    #[test]
    fn pi_prime_entries() {
        let g = model_gram();
        let a = z_model(&[1, 0, 0, 0]);
        let b = z_model(&[0, 2, 0, 0]);
        let z0 = z0_model();
        let da: Vec<Q> = a.iter().zip(&z0).map(|(x, y)| x - y).collect();
        let db: Vec<Q> = b.iter().zip(&z0).map(|(x, y)| x - y).collect();
        assert_eq!(pairing(&da, &da, &g), q(6));
        assert_eq!(pairing(&da, &db, &g), q(3));
    }

    #[test]
    fn z_classes_reproduce_pi_gram() {
        let g = model_gram();
        let z0 = z0_model();
        assert_eq!(pairing(&z0, &z0, &g), q(4));
        assert_eq!(pairing(&z0, &e2(), &g), q(-12));
        let a = z_model(&[1, 2, 0, 1]);
        let b = z_model(&[0, 0, 2, 2]);
        assert_eq!(pairing(&a, &a, &g), q(4));
        assert_eq!(pairing(&a, &b, &g), q(1));
        assert_eq!(pairing(&a, &z0, &g), q(1));
    }

    #[test]
    fn z_pairs_with_sym_through_bb_form() {
        let g = model_gram();
        let tau = z_model(&[2, 1, 1, 0]);
        for (i, j) in crate::h2::sym2_monomials() {
            let mut m = SymPoly::monomial(i, j, Q::one()).coords();
            m.extend(vec![Q::zero(); PI_PRIME_RANK]);
            assert_eq!(pairing(&tau, &m, &g), cross_pairing(&h2_unit(i), &h2_unit(j)));
        }
        assert_eq!(cross_pairing(&h2_unit(0), &h2_unit(1)), q(2));
    }

    #[test]
    fn sym_pairing_matches_fujiki() {
        let (u, e) = (h2_unit(0), h2_unit(E));
        let u2 = h2_unit(1);
        assert_eq!(sym_product_pairing([&u, &u2, &e, &e]), (q(-18), q(-18)));
    }
}
