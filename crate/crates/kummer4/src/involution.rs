//! The involution induced by −1 on A: identity on Sym², Z_τ ↦ Z_{−τ} on Π.

use intlat::{coordinates, equivariant_decompose, identity, EquivariantInvariants, IntLattice, InvolutionModule, Matrix};
use num_traits::Zero;

use crate::build::H4Model;
use crate::error::{KummerError, Result};
use crate::h2::{bb_gram, Q, H2_LABELS, SYM_RANK};
use crate::model::{tau_index, tau_of, MODEL_RANK, PI_COUNT};

/// Rank of H³(K₂(A)).
pub const H3_RANK: usize = 8;

/// Permutation of model coordinates: `Z_τ − Z₀ ↦ Z_{−τ} − Z₀`.
pub fn model_action(v: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); MODEL_RANK];
    out[..SYM_RANK].clone_from_slice(&v[..SYM_RANK]);
    for i in 1..PI_COUNT {
        let neg: Vec<u8> = tau_of(i).iter().map(|&d| (3 - d) % 3).collect();
        out[SYM_RANK + tau_index(&neg) - 1] = v[SYM_RANK + i - 1].clone();
    }
    out
}

/// The action on the basis of F, as an integer matrix on row coordinates.
pub fn full_action(model: &H4Model) -> Result<Matrix> {
    let f = model.full_basis();
    let images: Vec<Vec<Q>> = f.iter().map(|b| model_action(b)).collect();
    let c = coordinates(f, &images).ok_or_else(|| failure("image outside the span of F"))?;
    c.iter()
        .map(|r| r.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect::<Option<Vec<_>>>())
        .collect::<Option<Matrix>>()
        .ok_or_else(|| failure("image not integral in F"))
}

fn failure(detail: &str) -> KummerError {
    KummerError::Identity { name: "involution".to_string(), detail: detail.to_string() }
}

/// `(l₂, l₁₋, l₁₊)` in degrees 2, 3 and 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeInvariants {
    pub h2: EquivariantInvariants,
    pub h3: EquivariantInvariants,
    pub h4: EquivariantInvariants,
}

pub fn involution_invariants(model: &H4Model) -> Result<DegreeInvariants> {
    let h2_labels: Vec<String> = H2_LABELS.iter().map(|s| s.to_string()).collect();
    let h2_lattice = IntLattice::from_integers(h2_labels, &intlat::mat(&bb_gram()))?;
    let h2 = equivariant_decompose(&InvolutionModule::new(h2_lattice, identity(H2_LABELS.len()))?);
    let minus: Matrix = identity(H3_RANK).into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect();
    let h3 = equivariant_decompose(&InvolutionModule::without_form(minus)?);
    let h4 = equivariant_decompose(&InvolutionModule::new(model.full.lattice.clone(), full_action(model)?)?);
    Ok(DegreeInvariants { h2, h3, h4 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{model_gram, pairing};
    use crate::h2::q;

    fn unit(i: usize) -> Vec<Q> {
        (0..MODEL_RANK).map(|j| if i == j { q(1) } else { Q::zero() }).collect()
    }

    #[test]
    fn model_action_is_an_involutive_isometry() {
        let g = model_gram();
        for i in [0, 5, SYM_RANK, SYM_RANK + 7, MODEL_RANK - 1] {
            let v = unit(i);
            assert_eq!(model_action(&model_action(&v)), v);
            for j in [SYM_RANK + 3, 2] {
                assert_eq!(pairing(&model_action(&v), &model_action(&unit(j)), &g), pairing(&v, &unit(j), &g));
            }
        }
    }

    #[test]
    fn sym_is_fixed_and_pi_is_permuted() {
        assert_eq!(model_action(&unit(3)), unit(3));
        let tau = [1, 0, 2, 0];
        let image = model_action(&unit(SYM_RANK + tau_index(&tau) - 1));
        assert_eq!(image, unit(SYM_RANK + tau_index(&[2, 0, 1, 0]) - 1));
    }
}
