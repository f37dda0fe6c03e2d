//! Lattices given by a Gram matrix, sublattices given by basis rows in ambient
//! coordinates, and the index, glue and saturation operations between them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::matrix::{
    clear_denominators, congruence, coordinates, identity, integer_left_kernel, mul, qmat, rational_det, rational_row_basis,
    to_integer, transpose, Matrix, QMatrix,
};
use crate::snf::{nonsingular_diagonal, snf};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("Gram matrix is not square and symmetric")]
    NotSymmetric,
    #[error("{labels} labels for a lattice of rank {rank}")]
    LabelMismatch { labels: usize, rank: usize },
    #[error("lattice is degenerate")]
    Degenerate,
    #[error("pairing of glue {left} with {right} is {value}, not an integer")]
    NonIntegralGlue { left: String, right: String, value: String },
    #[error("sublattice has rank {found}, expected full rank {expected}")]
    NotFullRank { expected: usize, found: usize },
    #[error("vector {row} lies outside the rational span of the ambient basis")]
    NotInSpan { row: usize },
    #[error("vector {row} is not an integral combination of the ambient basis")]
    NotContained { row: usize },
    #[error("index via discriminants is {via_discr} but via Smith form is {via_snf}")]
    IndexMismatch { via_discr: String, via_snf: String },
    #[error("action is not an involutive isometry")]
    NotInvolution,
}

pub type Result<T> = std::result::Result<T, LatticeError>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    pub labels: Vec<String>,
    pub gram: QMatrix,
}

impl IntLattice {
    pub fn new(labels: Vec<String>, gram: QMatrix) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) || (0..n).any(|i| (0..i).any(|j| gram[i][j] != gram[j][i])) {
            return Err(LatticeError::NotSymmetric);
        }
        if labels.len() != n {
            return Err(LatticeError::LabelMismatch { labels: labels.len(), rank: n });
        }
        Ok(Self { labels, gram })
    }

    pub fn from_integers(labels: Vec<String>, gram: &Matrix) -> Result<Self> {
        Self::new(labels, qmat(gram))
    }

    /// Lattice spanned by `basis` rows inside a space with Gram `ambient_gram`.
    pub fn from_basis(labels: Vec<String>, basis: &QMatrix, ambient_gram: &QMatrix) -> Result<Self> {
        Self::new(labels, congruence(basis, ambient_gram))
    }

    /// Labels `prefix0, prefix1, ...`.
    pub fn numbered(prefix: &str, n: usize) -> Vec<String> {
        (0..n).map(|i| format!("{prefix}{i}")).collect()
    }

    pub fn hyperbolic(scale: i64) -> Self {
        let g = vec![vec![0, scale], vec![scale, 0]];
        Self::from_integers(Self::numbered("h", 2), &crate::matrix::mat(&g)).expect("symmetric")
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn determinant(&self) -> BigRational {
        rational_det(&self.gram)
    }

    /// |det Gram|.
    pub fn discr(&self) -> Result<BigRational> {
        let d = self.determinant();
        if d.is_zero() {
            Err(LatticeError::Degenerate)
        } else {
            Ok(d.abs())
        }
    }

    pub fn is_integral(&self) -> bool {
        self.gram.iter().flatten().all(|q| q.is_integer())
    }

    pub fn is_even(&self) -> bool {
        self.is_integral() && self.gram.iter().enumerate().all(|(i, r)| (r[i].to_integer() % BigInt::from(2)).is_zero())
    }

    pub fn integer_gram(&self) -> Option<Matrix> {
        to_integer(&self.gram)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    /// Product of the invariant factors of the inclusion matrix.
    pub via_snf: BigInt,
    /// `sqrt(discr sub / discr sup)`, when both lattices are nondegenerate.
    pub via_discr: Option<BigInt>,
    /// Invariant factors of the quotient different from 1.
    pub factors: Vec<BigInt>,
}

/// Integral coordinates of `sub` rows in the basis `sup`.
fn inclusion_matrix(sub: &QMatrix, sup: &QMatrix) -> Result<Matrix> {
    let c = coordinates(sup, sub).ok_or_else(|| {
        let row = (0..sub.len()).find(|&i| coordinates(sup, &sub[i..=i]).is_none()).unwrap_or(0);
        LatticeError::NotInSpan { row }
    })?;
    c.iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter().map(|q| q.is_integer().then(|| q.to_integer())).collect::<Option<Vec<_>>>().ok_or(LatticeError::NotContained { row: i })
        })
        .collect()
}

/// Invariant factors of `sup / sub` (both given as basis rows in common coordinates).
pub fn quotient_invariants(sub: &QMatrix, sup: &QMatrix) -> Result<Vec<BigInt>> {
    let c = inclusion_matrix(sub, sup)?;
    if let Some(d) = nonsingular_diagonal(&c) {
        return Ok(d.into_iter().filter(|x| !x.is_one()).collect());
    }
    let s = snf(&c);
    if s.rank != sup.len() || sub.len() != sup.len() {
        return Err(LatticeError::NotFullRank { expected: sup.len(), found: s.rank });
    }
    Ok(s.nontrivial_factors())
}

/// Prime-power decomposition of a list of invariant factors, sorted.
pub fn elementary_divisors(factors: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::new();
    for f in factors {
        let mut n = f.abs();
        let mut p = BigInt::from(2);
        while n > BigInt::one() {
            if &p * &p > n {
                out.push(n.clone());
                break;
            }
            let mut pk = BigInt::one();
            while (&n % &p).is_zero() {
                n /= &p;
                pk *= &p;
            }
            if !pk.is_one() {
                out.push(pk);
            }
            p += 1;
        }
    }
    out.sort();
    out
}

/// Index of `sub` in `sup`, computed by Smith form and by discriminants.
pub fn index(sub: &QMatrix, sup: &QMatrix, gram: &QMatrix) -> Result<IndexReport> {
    let factors = quotient_invariants(sub, sup)?;
    let via_snf = factors.iter().fold(BigInt::one(), |a, b| a * b);
    let d_sub = rational_det(&congruence(sub, gram)).abs();
    let d_sup = rational_det(&congruence(sup, gram)).abs();
    let via_discr = if d_sup.is_zero() {
        None
    } else {
        let ratio = d_sub / d_sup;
        let root = ratio.is_integer().then(|| ratio.to_integer().sqrt()).filter(|r| BigRational::from_integer(r * r) == ratio);
        match root {
            Some(r) if r == via_snf => Some(r),
            _ => return Err(LatticeError::IndexMismatch { via_discr: ratio.to_string(), via_snf: via_snf.to_string() }),
        }
    };
    Ok(IndexReport { via_snf, via_discr, factors })
}

#[derive(Clone, Debug)]
pub struct Overlattice {
    /// Basis rows in ambient coordinates.
    pub basis: QMatrix,
    pub lattice: IntLattice,
    pub index: IndexReport,
}

fn pairing(u: &[BigRational], v: &[BigRational], gram: &QMatrix) -> BigRational {
    let mut s = BigRational::zero();
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            if !vj.is_zero() && !gram[i][j].is_zero() {
                s += ui * &gram[i][j] * vj;
            }
        }
    }
    s
}

/// Adds rational glue vectors to the lattice spanned by `basis`, after checking
/// that every new pairing is integral.
pub fn add_glue(
    labels: &[String],
    basis: &QMatrix,
    glue: &[(String, Vec<BigRational>)],
    gram: &QMatrix,
) -> Result<Overlattice> {
    let gb = mul(basis, gram);
    for (gi, (name, g)) in glue.iter().enumerate() {
        for (bi, row) in gb.iter().enumerate() {
            let v: BigRational = row.iter().zip(g).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum();
            if !v.is_integer() {
                let left = name.clone();
                let right = labels.get(bi).cloned().unwrap_or_else(|| format!("basis {bi}"));
                return Err(LatticeError::NonIntegralGlue { left, right, value: v.to_string() });
            }
        }
        for (other, h) in glue.iter().take(gi + 1) {
            let v = pairing(g, h, gram);
            if !v.is_integer() {
                return Err(LatticeError::NonIntegralGlue { left: name.clone(), right: other.clone(), value: v.to_string() });
            }
        }
    }
    let mut all = basis.clone();
    all.extend(glue.iter().map(|(_, g)| g.clone()));
    let new_basis = rational_row_basis(&all);
    let index = index(basis, &new_basis, gram)?;
    let lattice = IntLattice::from_basis(IntLattice::numbered("g", new_basis.len()), &new_basis, gram)?;
    Ok(Overlattice { basis: new_basis, lattice, index })
}

fn left_kernel(n: &Matrix) -> Matrix {
    integer_left_kernel(n)
}

/// Primitive closure `(sub ⊗ Q) ∩ ambient`, as basis rows in ambient coordinates.
pub fn saturate(sub: &QMatrix, ambient: &QMatrix) -> Result<QMatrix> {
    let c = coordinates(ambient, sub).ok_or(LatticeError::NotInSpan { row: 0 })?;
    let (_, ints) = clear_denominators(&c);
    // Integral annihilator of the span, then everything it annihilates.
    let annihilator = left_kernel(&transpose(&ints));
    let n = ambient.len();
    let closure = if annihilator.is_empty() { identity(n) } else { left_kernel(&transpose(&annihilator)) };
    Ok(mul(&qmat(&closure), ambient))
}

/// Orthogonal complement of `sub` inside the lattice spanned by `ambient`.
pub fn orthogonal_complement(sub: &QMatrix, ambient: &QMatrix, gram: &QMatrix) -> Result<QMatrix> {
    let c = coordinates(ambient, sub).ok_or(LatticeError::NotInSpan { row: 0 })?;
    let ga = congruence(ambient, gram);
    let (_, n) = clear_denominators(&mul(&ga, &transpose(&c)));
    Ok(mul(&qmat(&left_kernel(&n)), ambient))
}

/// A lattice with an integral involutive isometry acting on row coordinates.
#[derive(Clone, Debug)]
pub struct InvolutionModule {
    pub lattice: IntLattice,
    pub action: Matrix,
}

impl InvolutionModule {
    pub fn new(lattice: IntLattice, action: Matrix) -> Result<Self> {
        let n = lattice.rank();
        if action.len() != n || mul(&action, &action) != identity(n) {
            return Err(LatticeError::NotInvolution);
        }
        if congruence(&qmat(&action), &lattice.gram) != lattice.gram {
            return Err(LatticeError::NotInvolution);
        }
        Ok(Self { lattice, action })
    }

    /// Module with a zero form, for counting invariants only.
    pub fn without_form(action: Matrix) -> Result<Self> {
        let n = action.len();
        let gram = vec![vec![BigRational::zero(); n]; n];
        Self::new(IntLattice::new(IntLattice::numbered("x", n), gram)?, action)
    }
}

/// Ranks of the ℤ[ℤ/2]-summands: regular, sign and trivial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivariantInvariants {
    pub l2: usize,
    pub l1_minus: usize,
    pub l1_plus: usize,
}

pub fn equivariant_decompose(m: &InvolutionModule) -> EquivariantInvariants {
    let n = m.action.len();
    let shifted = |sign: i64| -> Matrix {
        (0..n).map(|i| (0..n).map(|j| &m.action[i][j] - if i == j { BigInt::from(sign) } else { BigInt::zero() }).collect()).collect()
    };
    let invariants = left_kernel(&shifted(1));
    let anti = left_kernel(&shifted(-1));
    let mut both = invariants.clone();
    both.extend(anti.iter().cloned());
    let two = BigInt::from(2);
    let diagonal = nonsingular_diagonal(&both).unwrap_or_else(|| snf(&both).diagonal);
    let r = diagonal.iter().filter(|d| **d == two).count();
    EquivariantInvariants { l2: r, l1_minus: anti.len() - r, l1_plus: invariants.len() - r }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{int, mat, rat};

    fn q(rows: &[Vec<i64>]) -> QMatrix {
        qmat(&mat(rows))
    }

    #[test]
    fn hyperbolic_plane_is_unimodular() {
        assert_eq!(IntLattice::hyperbolic(1).discr().unwrap(), rat(1, 1));
        assert_eq!(IntLattice::hyperbolic(3).discr().unwrap(), rat(9, 1));
        assert!(IntLattice::hyperbolic(1).is_even());
    }

    #[test]
    fn pi_lattice_discriminant() {
        let n = 81;
        let g: Matrix = (0..n).map(|i| (0..n).map(|j| int(if i == j { 4 } else { 1 })).collect()).collect();
        let l = IntLattice::from_integers(IntLattice::numbered("Z", n), &g).unwrap();
        assert_eq!(l.discr().unwrap().to_integer(), BigInt::from(3).pow(80) * 84);
        let basis: QMatrix = (1..n)
            .map(|t| (0..n).map(|j| rat(if j == t { 1 } else if j == 0 { -1 } else { 0 }, 1)).collect())
            .collect();
        let sub = IntLattice::from_basis(IntLattice::numbered("P", n - 1), &basis, &l.gram).unwrap();
        assert_eq!(sub.discr().unwrap().to_integer(), BigInt::from(3).pow(84));
    }

    #[test]
    fn degenerate_lattice_is_an_error() {
        let l = IntLattice::from_integers(IntLattice::numbered("x", 2), &mat(&[vec![1, 1], vec![1, 1]])).unwrap();
        assert_eq!(l.discr(), Err(LatticeError::Degenerate));
    }

    #[test]
    fn index_of_2z() {
        let r = index(&q(&[vec![2]]), &q(&[vec![1]]), &q(&[vec![1]])).unwrap();
        assert_eq!(r.via_snf, int(2));
        assert_eq!(r.via_discr, Some(int(2)));
    }

    #[test]
    fn index_requires_containment() {
        let err = index(&q(&[vec![1]]), &q(&[vec![2]]), &q(&[vec![1]])).unwrap_err();
        assert_eq!(err, LatticeError::NotContained { row: 0 });
    }

    #[test]
    fn glue_already_present_changes_nothing() {
        let basis = q(&[vec![1, 0], vec![0, 1]]);
        let g = q(&[vec![2, 1], vec![1, 2]]);
        let o = add_glue(&IntLattice::numbered("b", 2), &basis, &[("e".into(), vec![rat(1, 1), rat(1, 1)])], &g).unwrap();
        assert_eq!(o.index.via_snf, int(1));
        assert_eq!(o.lattice.discr().unwrap(), rat(3, 1));
    }

    #[test]
    fn glue_half_vector() {
        // D4-style: 2Z^2 plus (1,1) gives the checkerboard lattice
        let basis = q(&[vec![2, 0], vec![0, 2]]);
        let g = q(&[vec![1, 0], vec![0, 1]]);
        let o = add_glue(&IntLattice::numbered("b", 2), &basis, &[("h".into(), vec![rat(1, 1), rat(1, 1)])], &g).unwrap();
        assert_eq!(o.index.factors, vec![int(2)]);
        let bad = add_glue(&IntLattice::numbered("b", 2), &basis, &[("bad".into(), vec![rat(1, 2), rat(0, 1)])], &g);
        assert!(matches!(bad, Err(LatticeError::NonIntegralGlue { left, .. }) if left == "bad"));
    }

    #[test]
    fn saturation_examples() {
        let amb = q(&[vec![1]]);
        assert_eq!(saturate(&q(&[vec![2]]), &amb).unwrap(), amb);
        let sub = q(&[vec![2, 4, 0]]);
        let s = saturate(&sub, &q(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0] == vec![rat(1, 1), rat(2, 1), rat(0, 1)] || s[0] == vec![rat(-1, 1), rat(-2, 1), rat(0, 1)]);
    }

    #[test]
    fn elementary_divisors_split_factors() {
        assert_eq!(elementary_divisors(&[int(6), int(3), int(27)]), vec![int(2), int(3), int(3), int(27)]);
    }

    #[test]
    fn quotient_of_self_is_trivial() {
        let l = q(&[vec![3, 1], vec![0, 5]]);
        assert!(quotient_invariants(&l, &l).unwrap().is_empty());
    }

    #[test]
    fn complement_in_unimodular_lattice() {
        let amb = q(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let g = q(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let sub = q(&[vec![1, 1, 1]]);
        let perp = orthogonal_complement(&sub, &amb, &g).unwrap();
        assert_eq!(perp.len(), 2);
        let d = rational_det(&congruence(&perp, &g)).abs();
        assert_eq!(d, rational_det(&congruence(&sub, &g)).abs());
    }

    #[test]
    fn equivariant_examples() {
        let swap = InvolutionModule::without_form(mat(&[vec![0, 1], vec![1, 0]])).unwrap();
        assert_eq!(equivariant_decompose(&swap), EquivariantInvariants { l2: 1, l1_minus: 0, l1_plus: 0 });
        let id = InvolutionModule::without_form(identity(4)).unwrap();
        assert_eq!(equivariant_decompose(&id), EquivariantInvariants { l2: 0, l1_minus: 0, l1_plus: 4 });
        let neg: Matrix = identity(3).into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect();
        let neg = InvolutionModule::without_form(neg).unwrap();
        assert_eq!(equivariant_decompose(&neg), EquivariantInvariants { l2: 0, l1_minus: 3, l1_plus: 0 });
    }

    #[test]
    fn involution_must_be_isometry() {
        let l = IntLattice::from_integers(IntLattice::numbered("x", 2), &mat(&[vec![1, 0], vec![0, 2]])).unwrap();
        assert_eq!(InvolutionModule::new(l, mat(&[vec![0, 1], vec![1, 0]])).unwrap_err(), LatticeError::NotInvolution);
    }
}
