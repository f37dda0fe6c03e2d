//! Assembly of the rank-108 lattice F from Sym², Π′ and the glue classes.

use intlat::{add_glue, index, quotient_invariants, saturate, IndexReport, IntLattice, Overlattice, QMatrix};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::appendix::{xix_classes, xxxi_classes};
use crate::error::Result;
use crate::h2::{monomial_label, qr, SymPoly, E, H2_LABELS, Q, SYM_RANK};
use crate::model::{model_gram, z0_model, MODEL_RANK, PI_PRIME_RANK};

pub type Glue = (String, Vec<Q>);

fn unit_rows(offset: usize, count: usize) -> QMatrix {
    (0..count).map(|i| (0..MODEL_RANK).map(|j| if j == offset + i { Q::one() } else { Q::zero() }).collect()).collect()
}

/// Basis of Sym² in model coordinates.
pub fn sym_basis() -> QMatrix {
    unit_rows(0, SYM_RANK)
}

/// Basis `Z_τ − Z₀` of Π′ in model coordinates.
pub fn pi_prime_basis() -> QMatrix {
    unit_rows(SYM_RANK, PI_PRIME_RANK)
}

fn sym_glue_vector(p: &SymPoly) -> Vec<Q> {
    let mut v = p.coords();
    v.extend(vec![Q::zero(); PI_PRIME_RANK]);
    v
}

/// `e·y/3`, `(y² − ⅓e·y)/2` for the six isotropic generators, `e²/3` and `(u₁u₂+v₁v₂+w₁w₂)/6`.
pub fn sym_glue() -> Vec<Glue> {
    let mut out = Vec::new();
    for (y, name) in H2_LABELS.iter().enumerate().take(6) {
        let ey = SymPoly::monomial(E, y, Q::one());
        out.push((format!("e{name}/3"), sym_glue_vector(&ey.scaled(&qr(1, 3)))));
        let p = SymPoly::monomial(y, y, Q::one()).plus(&ey.scaled(&qr(-1, 3)));
        out.push((format!("({name}^2-e{name}/3)/2"), sym_glue_vector(&p.scaled(&qr(1, 2)))));
    }
    out.push(("e^2/3".into(), sym_glue_vector(&SymPoly::monomial(E, E, qr(1, 3)))));
    let uvw = SymPoly::parse("u1u2+v1v2+w1w2").expect("uvw");
    out.push(("(u1u2+v1v2+w1w2)/6".into(), sym_glue_vector(&uvw.scaled(&qr(1, 6)))));
    out
}

/// Thirds of the 31 translated plane differences.
pub fn xxxi_glue() -> Vec<Glue> {
    xxxi_classes().into_iter().map(|c| (c.label.clone(), c.to_vector().scaled(&qr(1, 3)).to_model())).collect()
}

/// Thirds of the 19 mixed classes.
pub fn xix_glue() -> Result<Vec<Glue>> {
    xix_classes().iter().map(|c| Ok((c.label.clone(), c.third()?.to_model()))).collect()
}

fn stack(a: &QMatrix, b: &QMatrix) -> QMatrix {
    a.iter().chain(b).cloned().collect()
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    IntLattice::numbered(prefix, n)
}

/// Everything computed while assembling F.
#[derive(Clone, Debug)]
pub struct H4Model {
    pub gram: QMatrix,
    pub sym: QMatrix,
    pub pi_prime: QMatrix,
    pub sym_over: Overlattice,
    pub pi_over: Overlattice,
    /// Sym^over ⊕ Π′^over.
    pub direct_sum: QMatrix,
    /// The overlattice F obtained by adding Z₀ and the 19 thirds.
    pub full: Overlattice,
}

impl H4Model {
    pub fn build() -> Result<Self> {
        let gram = model_gram();
        let sym = sym_basis();
        let pi_prime = pi_prime_basis();
        let sym_labels: Vec<String> = (0..SYM_RANK).map(monomial_label).collect();
        let sym_over = add_glue(&sym_labels, &sym, &sym_glue(), &gram)?;
        let pi_over = add_glue(&labels("Z-Z0#", PI_PRIME_RANK), &pi_prime, &xxxi_glue(), &gram)?;
        let direct_sum = stack(&sym_over.basis, &pi_over.basis);
        let mut glue = vec![("Z0".to_string(), z0_model())];
        glue.extend(xix_glue()?);
        let full = add_glue(&labels("b", MODEL_RANK), &direct_sum, &glue, &gram)?;
        Ok(Self { gram, sym, pi_prime, sym_over, pi_over, direct_sum, full })
    }

    pub fn full_basis(&self) -> &QMatrix {
        &self.full.basis
    }
}

/// Discriminants, indices and quotient groups certifying the model.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub discr_sym: BigInt,
    pub discr_pi_prime: BigInt,
    pub discr_sym_sat: BigInt,
    pub discr_pi_sat: BigInt,
    pub det_full: BigInt,
    pub full_is_integral: bool,
    pub sym_quotient: Vec<BigInt>,
    pub pi_quotient: Vec<BigInt>,
    pub full_quotient: Vec<BigInt>,
    pub index_sym_pi: IndexReport,
    pub index_sat: IndexReport,
    pub sym_over_is_sat: bool,
    pub pi_over_is_sat: bool,
    pub sat_idempotent: bool,
    pub complement_discr_matches: bool,
}

fn discr(basis: &QMatrix, gram: &QMatrix) -> Result<BigInt> {
    let l = IntLattice::from_basis(labels("x", basis.len()), basis, gram)?;
    Ok(l.discr()?.to_integer())
}

fn same_lattice(a: &QMatrix, b: &QMatrix) -> Result<bool> {
    Ok(quotient_invariants(a, b)?.is_empty())
}

pub fn certify(m: &H4Model) -> Result<Certificate> {
    let g = &m.gram;
    let f = m.full_basis();
    let sym_sat = saturate(&m.sym, f)?;
    let pi_sat = saturate(&m.pi_prime, f)?;
    let sat_sum = stack(&sym_sat, &pi_sat);
    let det_full = intlat::rational_det(&m.full.lattice.gram);
    let perp = intlat::orthogonal_complement(&sym_sat, f, g)?;
    Ok(Certificate {
        discr_sym: discr(&m.sym, g)?,
        discr_pi_prime: discr(&m.pi_prime, g)?,
        discr_sym_sat: discr(&sym_sat, g)?,
        discr_pi_sat: discr(&pi_sat, g)?,
        det_full: det_full.abs().to_integer(),
        full_is_integral: m.full.lattice.is_integral() && det_full.is_integer(),
        sym_quotient: intlat::elementary_divisors(&m.sym_over.index.factors),
        pi_quotient: intlat::elementary_divisors(&m.pi_over.index.factors),
        full_quotient: intlat::elementary_divisors(&quotient_invariants(&sat_sum, f)?),
        index_sym_pi: index(&stack(&m.sym, &m.pi_prime), f, g)?,
        index_sat: index(&sat_sum, f, g)?,
        sym_over_is_sat: same_lattice(&m.sym_over.basis, &sym_sat)?,
        pi_over_is_sat: same_lattice(&m.pi_over.basis, &pi_sat)?,
        sat_idempotent: same_lattice(&saturate(&sym_sat, f)?, &sym_sat)?,
        complement_discr_matches: discr(&perp, g)? == discr(&sym_sat, g)? && same_lattice(&perp, &pi_sat)?,
    })
}
