//! Representations of Sp(V) on Sym²(Λ²V), on k[V], and on their direct sum,
//! and the span closure under a generating set.

use std::collections::VecDeque;

use crate::error::{Result, SympError};
use crate::field::Fq;
use crate::space::{FMatrix, SympSpace, SymplecticMap};
use crate::span::Span;

/// Element of the group algebra k[V], indexed by point indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement(pub Vec<u8>);

impl GroupAlgebraElement {
    pub fn zero(space: &SympSpace) -> Self {
        Self(vec![0; space.point_count()])
    }

    pub fn basis(space: &SympSpace, i: usize) -> Self {
        let mut e = Self::zero(space);
        e.0[i] = 1;
        e
    }

    /// `Σ_{i ∈ points} X_i`.
    pub fn sum_over(space: &SympSpace, points: &[usize]) -> Self {
        let mut e = Self::zero(space);
        for &p in points {
            e.0[p] = space.field.add(e.0[p], 1);
        }
        e
    }

    /// `X = Σ_{i ∈ V} X_i`.
    pub fn total(space: &SympSpace) -> Self {
        Self(vec![1; space.point_count()])
    }

    /// Multiplication by the unit `X_v`, i.e. translation of indices by `v`.
    pub fn translate(&self, space: &SympSpace, v: &[u8]) -> Self {
        let mut out = Self::zero(space);
        for (i, &c) in self.0.iter().enumerate() {
            if c != 0 {
                out.0[space.index(&space.add(&space.point(i), v))] = c;
            }
        }
        out
    }

    /// Convolution product `X_i X_j = X_{i+j}`.
    pub fn mul(&self, other: &Self, space: &SympSpace) -> Self {
        let f = space.field;
        let mut out = Self::zero(space);
        for (i, &a) in self.0.iter().enumerate().filter(|(_, a)| **a != 0) {
            let pi = space.point(i);
            for (j, &b) in other.0.iter().enumerate().filter(|(_, b)| **b != 0) {
                let k = space.index(&space.add(&pi, &space.point(j)));
                out.0[k] = f.add(out.0[k], f.mul(a, b));
            }
        }
        out
    }

    pub fn sub(&self, other: &Self, f: Fq) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(&a, &b)| f.sub(a, b)).collect())
    }
}

/// Element of Sym²(Λ²V) ⊕ k[V].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinedVector {
    pub sym_part: Vec<u8>,
    pub alg_part: GroupAlgebraElement,
}

impl CombinedVector {
    pub fn flatten(&self) -> Vec<u8> {
        self.sym_part.iter().chain(&self.alg_part.0).copied().collect()
    }
}

/// Index pairs `a < b` labelling the basis `e_a ∧ e_b` of Λ²V.
pub fn wedge_basis(dim: usize) -> Vec<(usize, usize)> {
    (0..dim).flat_map(|a| (a + 1..dim).map(move |b| (a, b))).collect()
}

/// Index pairs `i <= j` labelling the monomials of Sym²(Λ²V), in lex order.
pub fn sym2_basis(dim: usize) -> Vec<(usize, usize)> {
    let n = wedge_basis(dim).len();
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

fn wedge_matrix(space: &SympSpace, m: &FMatrix) -> FMatrix {
    let f = space.field;
    let wb = wedge_basis(space.dim);
    let mut out = vec![vec![0u8; wb.len()]; wb.len()];
    for (col, &(a, b)) in wb.iter().enumerate() {
        for (row, &(c, d)) in wb.iter().enumerate() {
            out[row][col] = f.sub(f.mul(m[c][a], m[d][b]), f.mul(m[d][a], m[c][b]));
        }
    }
    out
}

fn sym2_matrix(space: &SympSpace, w: &FMatrix) -> FMatrix {
    let f = space.field;
    let sb = sym2_basis(space.dim);
    let pos = |k: usize, l: usize| sb.iter().position(|&p| p == (k.min(l), k.max(l))).expect("monomial");
    let n = w.len();
    let mut out = vec![vec![0u8; sb.len()]; sb.len()];
    for (col, &(i, j)) in sb.iter().enumerate() {
        for k in 0..n {
            for l in 0..n {
                let c = f.mul(w[k][i], w[l][j]);
                if c != 0 {
                    let row = pos(k, l);
                    out[row][col] = f.add(out[row][col], c);
                }
            }
        }
    }
    out
}

/// Which module a closure runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Module {
    Sym2,
    GroupAlgebra,
    Combined,
}

impl Module {
    pub fn len(self, space: &SympSpace) -> usize {
        let s = sym2_basis(space.dim).len();
        match self {
            Module::Sym2 => s,
            Module::GroupAlgebra => space.point_count(),
            Module::Combined => s + space.point_count(),
        }
    }
}

/// A linear action on `[sym part | group algebra part]`: a matrix on the first
/// block and a permutation of coordinates on the second.
#[derive(Clone, Debug)]
pub struct LinearAction {
    field: Fq,
    sym: FMatrix,
    perm: Vec<usize>,
}

impl LinearAction {
    pub fn of_map(space: &SympSpace, g: &SymplecticMap, module: Module) -> Self {
        let sym = if module == Module::GroupAlgebra { Vec::new() } else { sym2_matrix(space, &wedge_matrix(space, &g.matrix)) };
        let perm = if module == Module::Sym2 {
            Vec::new()
        } else {
            (0..space.point_count()).map(|i| g.apply_index(space, i)).collect()
        };
        Self { field: space.field, sym, perm }
    }

    pub fn translation(space: &SympSpace, v: &[u8], module: Module) -> Self {
        let s = if module == Module::GroupAlgebra { 0 } else { sym2_basis(space.dim).len() };
        let sym = (0..s).map(|i| (0..s).map(|j| u8::from(i == j)).collect()).collect();
        let perm = (0..space.point_count()).map(|i| space.index(&space.add(&space.point(i), v))).collect();
        Self { field: space.field, sym, perm }
    }

    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        let f = self.field;
        let s = self.sym.len();
        let mut out = vec![0u8; v.len()];
        for (i, row) in self.sym.iter().enumerate() {
            out[i] = row.iter().zip(&v[..s]).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
        }
        for (i, &c) in v[s..].iter().enumerate() {
            out[s + self.perm[i]] = c;
        }
        out
    }
}

/// Span of the orbit of `seeds` under the group generated by `actions`.
pub fn span_closure(field: Fq, len: usize, seeds: &[Vec<u8>], actions: &[LinearAction]) -> Result<Span> {
    let mut span = Span::new(field, len);
    let mut queue = VecDeque::new();
    for s in seeds {
        if s.len() != len {
            return Err(SympError::LengthMismatch { expected: len, found: s.len() });
        }
        if let Some(row) = span.insert(s.clone()) {
            queue.push_back(row.to_vec());
        }
    }
    while let Some(v) = queue.pop_front() {
        for a in actions {
            if let Some(row) = span.insert(a.apply(&v)) {
                queue.push_back(row.to_vec());
            }
        }
    }
    Ok(span)
}

/// Span of the Sp-orbit of `seeds` in `module`, using `generators`.
pub fn sp_span_closure(space: &SympSpace, seeds: &[Vec<u8>], generators: &[SymplecticMap], module: Module) -> Result<Span> {
    let actions: Vec<LinearAction> = generators.iter().map(|g| LinearAction::of_map(space, g, module)).collect();
    span_closure(space.field, module.len(space), seeds, &actions)
}

/// `(v ∧ w)²` in the monomial basis of Sym²(Λ²V).
pub fn wedge_square(space: &SympSpace, v: &[u8], w: &[u8]) -> Vec<u8> {
    let f = space.field;
    let wedge: Vec<u8> = wedge_basis(space.dim).iter().map(|&(a, b)| f.sub(f.mul(v[a], w[b]), f.mul(v[b], w[a]))).collect();
    sym2_basis(space.dim)
        .iter()
        .map(|&(i, j)| {
            let c = f.mul(wedge[i], wedge[j]);
            if i == j {
                c
            } else {
                f.add(c, c)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_seed_gives_empty_span() {
        let s = SympSpace::standard(3, 4).unwrap();
        let span = sp_span_closure(&s, &[vec![0; 21]], &s.transvections(), Module::Sym2).unwrap();
        assert!(span.is_empty());
    }

    #[test]
    fn wedge_square_is_equivariant() {
        let s = SympSpace::standard(3, 4).unwrap();
        let (v, w) = (s.point(7), s.point(40));
        for g in s.transvections().iter().take(20) {
            let a = LinearAction::of_map(&s, g, Module::Sym2);
            let lhs = a.apply(&wedge_square(&s, &v, &w));
            let rhs = wedge_square(&s, &s.apply(&g.matrix, &v), &s.apply(&g.matrix, &w));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn translation_is_multiplication_by_unit() {
        let s = SympSpace::standard(3, 4).unwrap();
        let v = s.point(5);
        let x = GroupAlgebraElement::sum_over(&s, &s.span_points(&[s.point(1), s.point(9)]));
        let unit = GroupAlgebraElement::basis(&s, 5);
        assert_eq!(x.translate(&s, &v), x.mul(&unit, &s));
        let a = LinearAction::translation(&s, &v, Module::GroupAlgebra);
        assert_eq!(a.apply(&x.0), x.translate(&s, &v).0);
    }
}
