//! Divisibility, independence and isotropy checks for the explicit classes.

use intlat::{coordinates, quotient_invariants, rational_row_basis, QMatrix};
use num_bigint::BigInt;
use sympfin::{Ideals, Span, SympSpace};

use crate::appendix::{add, is_isotropic, subgroup, xix_classes, xxxi_families, Tau};
use crate::build::{xix_glue, xxxi_glue, H4Model};
use crate::error::Result;
use crate::h2::{qr, Q};
use crate::model::{a3, tau_index, H4Vector, PI_COUNT};

/// Outcome of the checks on the 31 + 19 classes.
#[derive(Clone, Debug)]
pub struct AppendixReport {
    pub xxxi_count: usize,
    /// Rank of the 31 coefficient vectors over F₃.
    pub xxxi_rank_mod3: usize,
    /// Whether their span is the space D of the finite symplectic computation.
    pub xxxi_span_is_d: bool,
    pub xix_count: usize,
    /// Invariant factors added by the 19 thirds over Sym^sat ⊕ Π′^sat.
    pub xix_quotient: Vec<BigInt>,
    /// Labels of thirds without integral coordinates in F.
    pub not_divisible: Vec<String>,
    /// Labels of planes that are isotropic under the form used for A[3].
    pub isotropic: Vec<String>,
    /// Same, under the standard form e₁∧e₃ + e₂∧e₄.
    pub isotropic_standard_form: Vec<String>,
    /// A line in place of a plane must not give a class divisible by 3.
    pub line_control_divisible: bool,
    /// An isotropic plane in place of a plane, for the record.
    pub isotropic_control_divisible: bool,
}

impl AppendixReport {
    pub fn passes(&self) -> bool {
        self.xxxi_count == 31
            && self.xxxi_rank_mod3 == 31
            && self.xxxi_span_is_d
            && self.xix_count == 19
            && self.xix_quotient == vec![BigInt::from(3); 19]
            && self.not_divisible.is_empty()
            && self.isotropic.is_empty()
            && !self.line_control_divisible
    }
}

fn is_integral_in(basis: &QMatrix, v: &[Q]) -> bool {
    coordinates(basis, &[v.to_vec()]).is_some_and(|c| c[0].iter().all(|x| x.is_integer()))
}

/// `⅓Σ_{τ∈S}(Z_τ − Z_{τ+τ′})` for an arbitrary subgroup `S`.
pub fn translate_third(members: &[Tau], shift: &Tau) -> Vec<Q> {
    let mut v = H4Vector::zero();
    for t in members {
        v.pi_coords[tau_index(t)] += qr(1, 3);
        v.pi_coords[tau_index(&add(t, shift))] -= qr(1, 3);
    }
    v.to_model()
}

fn isotropic_labels(space: &SympSpace) -> Vec<String> {
    let mut out = Vec::new();
    for f in xxxi_families() {
        if is_isotropic(space, &f.lambda) {
            out.push(format!("XXXI({})", f.label));
        }
    }
    for c in xix_classes() {
        if is_isotropic(space, &c.lambda) {
            out.push(c.label.clone());
        }
    }
    out
}

pub fn appendix_verify(model: &H4Model) -> Result<AppendixReport> {
    let space = a3();
    let f = model.full_basis();
    let xxxi: Vec<Vec<u8>> = crate::appendix::xxxi_classes()
        .iter()
        .map(|c| c.coeffs.iter().map(|&k| k.rem_euclid(3) as u8).collect())
        .collect();
    let span = Span::from_vectors(space.field, PI_COUNT, &xxxi);
    let ideals = Ideals::compute(&space);

    let xxxi_thirds = xxxi_glue();
    let xix_thirds = xix_glue()?;
    let mut not_divisible = Vec::new();
    for (label, v) in xxxi_thirds.iter().chain(&xix_thirds) {
        if !is_integral_in(f, v) {
            not_divisible.push(label.clone());
        }
    }
    let mut extended = model.direct_sum.clone();
    extended.extend(xix_thirds.iter().map(|(_, v)| v.clone()));
    let xix_quotient = intlat::elementary_divisors(&quotient_invariants(&model.direct_sum, &rational_row_basis(&extended))?);

    let line = subgroup(&[[1, 0, 0, 0]]);
    let iso_plane = subgroup(&[[1, 0, 0, 0], [0, 0, 1, 0]]);
    debug_assert!(is_isotropic(&space, &[[1, 0, 0, 0], [0, 0, 1, 0]]));
    Ok(AppendixReport {
        xxxi_count: xxxi.len(),
        xxxi_rank_mod3: span.dim(),
        xxxi_span_is_d: span.same_as(&ideals.d),
        xix_count: xix_thirds.len(),
        xix_quotient,
        not_divisible,
        isotropic: isotropic_labels(&space),
        isotropic_standard_form: isotropic_labels(&SympSpace::standard(3, 4)?),
        line_control_divisible: is_integral_in(f, &translate_third(&line, &[0, 1, 0, 0])),
        isotropic_control_divisible: is_integral_in(f, &translate_third(&iso_plane, &[0, 1, 0, 0])),
    })
}
