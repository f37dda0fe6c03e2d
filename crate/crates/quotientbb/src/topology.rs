//! Betti numbers of the quotient, the parity selection of D_e and the H⁴ balance.

use intlat::EquivariantInvariants;
use kummer4::DegreeInvariants;
use serde::Serialize;

use crate::error::{QuotientError, Result};

/// `e⁴` on K₂(A).
pub const E_FOURTH: i64 = 324;
/// Possible numbers of exceptional components in D_e.
pub const DDELTA_CANDIDATES: [i64; 3] = [1, 35, 36];

/// Fixed locus of the involution: a K3 surface and isolated points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FixedLocus {
    pub isolated_points: usize,
    pub surface_betti: [usize; 5],
}

impl Default for FixedLocus {
    fn default() -> Self {
        Self { isolated_points: 36, surface_betti: [1, 0, 22, 0, 1] }
    }
}

/// `((e + D_e)/2)⁴ = (324 − d)/2` for each candidate, and the unique integral one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DdeltaSelection {
    pub candidates: Vec<(i64, String)>,
    pub selected: i64,
    pub value: i64,
}

pub fn ddelta_select() -> Result<DdeltaSelection> {
    let candidates: Vec<(i64, String)> = DDELTA_CANDIDATES
        .iter()
        .map(|&d| {
            let n = E_FOURTH - d;
            (d, if n % 2 == 0 { (n / 2).to_string() } else { format!("{n}/2") })
        })
        .collect();
    let feasible: Vec<i64> = DDELTA_CANDIDATES.iter().copied().filter(|d| (E_FOURTH - d) % 2 == 0).collect();
    match feasible.as_slice() {
        [d] => Ok(DdeltaSelection { candidates, selected: *d, value: (E_FOURTH - d) / 2 }),
        _ => Err(QuotientError::AmbiguousDdelta { candidates: feasible }),
    }
}

/// Invariants in degrees 0 to 4; H¹ vanishes and H⁰ is the trivial rank-one module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AllDegrees {
    pub by_degree: [EquivariantInvariants; 5],
}

impl AllDegrees {
    pub fn from_kummer(inv: &DegreeInvariants) -> Self {
        let trivial = EquivariantInvariants { l2: 0, l1_minus: 0, l1_plus: 1 };
        let zero = EquivariantInvariants { l2: 0, l1_minus: 0, l1_plus: 0 };
        Self { by_degree: [trivial, zero, inv.h2, inv.h3, inv.h4] }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Balance {
    pub lhs: usize,
    pub rhs: usize,
}

impl Balance {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `l₁₊⁴ + 2(l₁₋¹ + l₁₋³ + l₁₊⁰ + l₁₊²)` against the even cohomology of the fixed locus.
pub fn h4_normality_balance(inv: &AllDegrees, fixed: &FixedLocus) -> Balance {
    let d = &inv.by_degree;
    let lhs = d[4].l1_plus + 2 * (d[1].l1_minus + d[3].l1_minus + d[0].l1_plus + d[2].l1_plus);
    let k3 = fixed.surface_betti;
    let rhs = fixed.isolated_points + k3[0] + k3[2] + k3[4];
    Balance { lhs, rhs }
}

pub fn checked_balance(inv: &AllDegrees, fixed: &FixedLocus) -> Result<Balance> {
    let b = h4_normality_balance(inv, fixed);
    if b.holds() {
        Ok(b)
    } else {
        Err(QuotientError::Balance { lhs: b.lhs, rhs: b.rhs })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Betti {
    pub b2: usize,
    pub b3: usize,
    pub b4: usize,
    pub euler: i64,
}

/// Invariant ranks plus one exceptional divisor in degree 2 and H² of the K3 in degree 4.
pub fn kprime_betti(inv: &AllDegrees, fixed: &FixedLocus) -> Betti {
    let invariant = |e: &EquivariantInvariants| e.l2 + e.l1_plus;
    let d = &inv.by_degree;
    let b2 = invariant(&d[2]) + 1;
    let b3 = invariant(&d[3]);
    let b4 = invariant(&d[4]) + fixed.surface_betti[2];
    let (b0, b1) = (1i64, invariant(&d[1]) as i64);
    let euler = 2 * (b0 - b1 + b2 as i64 - b3 as i64) + b4 as i64;
    Betti { b2, b3, b4, euler }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invariants() -> AllDegrees {
        let e = |l2, l1_minus, l1_plus| EquivariantInvariants { l2, l1_minus, l1_plus };
        AllDegrees::from_kummer(&DegreeInvariants { h2: e(0, 0, 7), h3: e(0, 8, 0), h4: e(40, 0, 28) })
    }

    #[test]
    fn ddelta_parity() {
        let s = ddelta_select().unwrap();
        assert_eq!((s.selected, s.value), (36, 144));
        assert_eq!(s.candidates[0], (1, "323/2".to_string()));
        assert_eq!(s.candidates[1], (35, "289/2".to_string()));
    }

    #[test]
    fn balance_sides() {
        assert_eq!(h4_normality_balance(&invariants(), &FixedLocus::default()), Balance { lhs: 60, rhs: 60 });
    }

    #[test]
    fn one_point_fewer_breaks_balance() {
        let fixed = FixedLocus { isolated_points: 35, ..FixedLocus::default() };
        assert!(checked_balance(&invariants(), &fixed).is_err());
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(kprime_betti(&invariants(), &FixedLocus::default()), Betti { b2: 8, b3: 0, b4: 90, euler: 108 });
    }
}
