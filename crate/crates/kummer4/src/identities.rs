//! Identities between the Chern class, the W and Y_p classes and Sym².

use intlat::{clear_denominators, coordinates, row_basis, QMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::build::{sym_basis, H4Model};
use crate::error::{KummerError, Result};
use crate::h2::{q, qr, SymPoly, Q, E};
use crate::model::{c2_poly, pairing, tau_of, w_vector, yp_poly, z0_model, z_model, H4Vector, PI_COUNT};

#[derive(Clone, Debug)]
pub struct ClassIdentities {
    /// `W = 9Y_p + e²`.
    pub w_formula: bool,
    /// `⅓Σ_τ Z_τ = c₂`.
    pub c2_is_third_of_sum: bool,
    /// `⅓(72Y_p − e²) = c₂`.
    pub c2_from_yp: bool,
    pub yp_dot_e2: Q,
    pub w_dot_e2: Q,
    pub z0_dot_e2: Q,
    pub e4: Q,
    /// Dimension of `Sym ⊗ Q ∩ Π ⊗ Q`.
    pub sym_pi_dimension: usize,
    /// Least k with k·c₂ integral in both Sym and Π.
    pub sym_pi_generator_multiple: BigInt,
    /// gcd of the coordinates of c₂ in F.
    pub c2_content: BigInt,
}

impl ClassIdentities {
    pub fn passes(&self) -> bool {
        self.w_formula
            && self.c2_is_third_of_sum
            && self.c2_from_yp
            && self.yp_dot_e2 == q(-9)
            && self.w_dot_e2 == q(243)
            && self.z0_dot_e2 == q(-12)
            && self.e4 == q(324)
            && self.sym_pi_dimension == 1
            && self.sym_pi_generator_multiple == BigInt::from(3)
            && self.c2_content.is_one()
    }
}

fn sym_model(p: &SymPoly) -> Vec<Q> {
    H4Vector::sym(p).to_model()
}

fn denominator(c: &[Q]) -> BigInt {
    c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

fn pi_basis() -> QMatrix {
    (0..PI_COUNT).map(|i| z_model(&tau_of(i))).collect()
}

pub fn class_identities(model: &H4Model) -> Result<ClassIdentities> {
    let g = &model.gram;
    let e2 = SymPoly::monomial(E, E, Q::one());
    let c2 = sym_model(&c2_poly());
    let w = w_vector().to_model();

    let mut sum_z = H4Vector::zero();
    for c in sum_z.pi_coords.iter_mut() {
        *c = qr(1, 3);
    }
    let yp72 = yp_poly().scaled(&q(72)).plus(&e2.scaled(&q(-1))).scaled(&qr(1, 3));

    let mut both: QMatrix = sym_basis();
    let pi = pi_basis();
    both.extend(pi.iter().cloned());
    let (_, ints) = clear_denominators(&both);
    let rank = row_basis(&ints).len();
    let sym_pi_dimension = sym_basis().len() + pi.len() - rank;

    let in_sym = coordinates(&sym_basis(), &[c2.clone()]).ok_or_else(|| not_found("c2 in Sym"))?;
    let in_pi = coordinates(&pi, &[c2.clone()]).ok_or_else(|| not_found("c2 in Pi"))?;
    let in_f = coordinates(model.full_basis(), &[c2.clone()]).ok_or_else(|| not_found("c2 in F"))?;
    let c2_content = if in_f[0].iter().all(|x| x.is_integer()) {
        in_f[0].iter().fold(BigInt::zero(), |acc, x| acc.gcd(&x.to_integer()))
    } else {
        BigInt::zero()
    };

    let e2v = sym_model(&e2);
    Ok(ClassIdentities {
        w_formula: w == sym_model(&yp_poly().scaled(&q(9)).plus(&e2)),
        c2_is_third_of_sum: sum_z.to_model() == c2,
        c2_from_yp: sym_model(&yp72) == c2,
        yp_dot_e2: pairing(&sym_model(&yp_poly()), &e2v, g),
        w_dot_e2: pairing(&w, &e2v, g),
        z0_dot_e2: pairing(&z0_model(), &e2v, g),
        e4: pairing(&e2v, &e2v, g),
        sym_pi_dimension,
        sym_pi_generator_multiple: denominator(&in_sym[0]).lcm(&denominator(&in_pi[0])),
        c2_content,
    })
}

fn not_found(what: &str) -> KummerError {
    KummerError::Identity { name: what.to_string(), detail: "outside the rational span".to_string() }
}
