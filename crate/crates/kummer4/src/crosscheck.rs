//! Agreement between the lattice model and the operator calculus on A^[3].

use fock::hilb::{st, unit};
use fock::kummer::{apply_kummer, h2_times, kummer_pairing};
use fock::ops::{create, pairing, virasoro};
use fock::FockState;
use num_traits::ToPrimitive;
use torusring::{TorusClass, TOP};

use crate::error::{KummerError, Result};
use crate::h2::{fujiki_quadruple, sym2_monomials, SymPoly, H2_LABELS, Q};
use crate::model::{c2_poly, yp_poly};

type FockQ = fock::Q;

fn to_fock(c: &Q) -> Result<FockQ> {
    match (c.numer().to_i64(), c.denom().to_i64()) {
        (Some(n), Some(d)) => Ok(FockQ::new(n, d)),
        _ => Err(KummerError::Identity { name: "coefficient".into(), detail: c.to_string() }),
    }
}

fn to_lattice(c: FockQ) -> Q {
    Q::new((*c.numer()).into(), (*c.denom()).into())
}

/// `α·β` for the named degree-2 classes, as a class on A^[3].
pub fn product_state(i: usize, j: usize) -> FockState {
    h2_times(H2_LABELS[i], &h2_times(H2_LABELS[j], &unit(3)))
}

/// A Sym² polynomial realised as a class on A^[3].
pub fn poly_state(p: &SymPoly) -> Result<FockState> {
    let mut out = FockState::zero();
    for (&(i, j), c) in &p.0 {
        out += &product_state(i, j).scale(to_fock(c)?);
    }
    Ok(out)
}

/// `3 q₁(1) L₂(1)|0⟩ − ⅓ q₃(1)|0⟩`.
pub fn c2_state() -> FockState {
    let one = TorusClass::one();
    let l2 = virasoro(2, &one, &FockState::vacuum());
    create(1, &one, &l2).scale(FockQ::from_integer(3)) - st(&[(3, one)]).scale(FockQ::new(1, 3))
}

/// `½ q₁(x) q₁(1)² |0⟩`.
pub fn yp_state() -> FockState {
    let one = TorusClass::one;
    st(&[(1, TorusClass::from(TOP)), (1, one()), (1, one())]).scale(FockQ::new(1, 2))
}

/// `q₃(1)|0⟩`.
pub fn w_state() -> FockState {
    st(&[(3, TorusClass::one())])
}

#[derive(Clone, Debug)]
pub struct Crosscheck {
    pub quadruples_checked: usize,
    /// `(i, j, k, l, lattice value, operator value)` for every disagreement.
    pub mismatches: Vec<(usize, usize, usize, usize, Q, Q)>,
    pub e4: Q,
    pub u1u2_e2: Q,
    pub w_e2: Q,
    /// `[K]·c₂` agrees for the operator word and the Sym² expression.
    pub c2_agrees: bool,
    pub yp_agrees: bool,
}

impl Crosscheck {
    pub fn passes(&self) -> bool {
        self.quadruples_checked == 210
            && self.mismatches.is_empty()
            && self.e4 == Q::from_integer(324.into())
            && self.u1u2_e2 == Q::from_integer((-18).into())
            && self.w_e2 == Q::from_integer(243.into())
            && self.c2_agrees
            && self.yp_agrees
    }
}

pub fn fock_crosscheck() -> Result<Crosscheck> {
    let monomials = sym2_monomials();
    let states: Vec<FockState> = monomials.iter().map(|&(i, j)| product_state(i, j)).collect();
    let kummer: Vec<FockState> = states.iter().map(apply_kummer).collect();
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for (a, &(i, j)) in monomials.iter().enumerate() {
        for (b, &(k, l)) in monomials.iter().enumerate().skip(a) {
            if k < j {
                continue;
            }
            checked += 1;
            let lattice = fujiki_quadruple(i, j, k, l);
            let operator = to_lattice(pairing(&states[a], &kummer[b]));
            if lattice != operator {
                mismatches.push((i, j, k, l, lattice, operator));
            }
        }
    }
    let e = crate::h2::E;
    let ee = monomials.iter().position(|&m| m == (e, e)).expect("e^2");
    let uu = monomials.iter().position(|&m| m == (0, 1)).expect("u1u2");
    Ok(Crosscheck {
        quadruples_checked: checked,
        mismatches,
        e4: to_lattice(kummer_pairing(&states[ee], &states[ee])?),
        u1u2_e2: to_lattice(kummer_pairing(&states[uu], &states[ee])?),
        w_e2: to_lattice(kummer_pairing(&w_state(), &states[ee])?),
        c2_agrees: apply_kummer(&c2_state()) == apply_kummer(&poly_state(&c2_poly())?),
        yp_agrees: apply_kummer(&yp_state()) == apply_kummer(&poly_state(&yp_poly())?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients_round_trip() {
        let c = Q::new((-7).into(), 6.into());
        assert_eq!(to_lattice(to_fock(&c).unwrap()), c);
    }

    #[test]
    fn w_pairs_with_e_squared() {
        let e2 = product_state(crate::h2::E, crate::h2::E);
        assert_eq!(kummer_pairing(&w_state(), &e2).unwrap(), FockQ::from_integer(243));
    }
}
