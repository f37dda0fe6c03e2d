//! The symplectic space F_q^n with the standard block form, its points,
//! symplectic maps and planes.

use std::collections::BTreeSet;

use crate::error::{Result, SympError};
use crate::field::Fq;

/// Row-major square matrix over F_q acting on column vectors.
pub type FMatrix = Vec<Vec<u8>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SympSpace {
    pub field: Fq,
    pub dim: usize,
    pub form: FMatrix,
}

impl SympSpace {
    /// Form with blocks `0, I / -I, 0`.
    pub fn standard(q: u8, dim: usize) -> Result<Self> {
        let field = Fq::new(q)?;
        if dim == 0 || dim % 2 == 1 || dim > 4 {
            return Err(SympError::UnsupportedDimension(dim));
        }
        let h = dim / 2;
        let mut form = vec![vec![0u8; dim]; dim];
        for i in 0..h {
            form[i][i + h] = 1;
            form[i + h][i] = field.neg(1);
        }
        Ok(Self { field, dim, form })
    }

    /// Space with an explicit alternating nondegenerate form.
    pub fn with_form(q: u8, form: FMatrix) -> Result<Self> {
        let field = Fq::new(q)?;
        let dim = form.len();
        if dim == 0 || dim % 2 == 1 || dim > 4 || form.iter().any(|r| r.len() != dim) {
            return Err(SympError::UnsupportedDimension(dim));
        }
        let alternating = (0..dim).all(|i| form[i][i] == 0 && (0..dim).all(|j| form[i][j] == field.neg(form[j][i])));
        let space = Self { field, dim, form };
        let nondegenerate = (1..space.point_count()).all(|i| {
            let u = space.point(i);
            (0..dim).any(|k| space.omega(&u, &space.basis_vector(k)) != 0)
        });
        if !alternating || !nondegenerate {
            return Err(SympError::DegenerateForm);
        }
        Ok(space)
    }

    /// `x₁y₂ − x₂y₁ + x₃y₄ − x₄y₃`, the form of a product of two elliptic curves.
    pub fn product(q: u8) -> Result<Self> {
        let m = q - 1;
        Self::with_form(q, vec![vec![0, 1, 0, 0], vec![m, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, m, 0]])
    }

    pub fn q(&self) -> u8 {
        self.field.q()
    }

    pub fn point_count(&self) -> usize {
        self.field.size().pow(self.dim as u32)
    }

    /// Coordinates of the point with index `i` (base-q digits, first coordinate lowest).
    pub fn point(&self, mut i: usize) -> Vec<u8> {
        let q = self.field.size();
        (0..self.dim)
            .map(|_| {
                let d = (i % q) as u8;
                i /= q;
                d
            })
            .collect()
    }

    pub fn index(&self, v: &[u8]) -> usize {
        v.iter().rev().fold(0, |acc, &d| acc * self.field.size() + d as usize)
    }

    pub fn basis_vector(&self, k: usize) -> Vec<u8> {
        (0..self.dim).map(|i| u8::from(i == k)).collect()
    }

    pub fn omega(&self, u: &[u8], w: &[u8]) -> u8 {
        let f = self.field;
        let mut s = 0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                s = f.add(s, f.mul(u[i], f.mul(self.form[i][j], w[j])));
            }
        }
        s
    }

    pub fn add(&self, u: &[u8], w: &[u8]) -> Vec<u8> {
        u.iter().zip(w).map(|(&a, &b)| self.field.add(a, b)).collect()
    }

    pub fn scale(&self, c: u8, u: &[u8]) -> Vec<u8> {
        self.field.scale(c, u)
    }

    pub fn apply(&self, m: &FMatrix, u: &[u8]) -> Vec<u8> {
        let f = self.field;
        m.iter().map(|row| row.iter().zip(u).fold(0, |s, (&a, &b)| f.add(s, f.mul(a, b)))).collect()
    }

    /// Points of the span of `gens`, as sorted indices.
    pub fn span_points(&self, gens: &[Vec<u8>]) -> Vec<usize> {
        let mut pts: BTreeSet<usize> = BTreeSet::from([0]);
        for g in gens {
            let current: Vec<usize> = pts.iter().copied().collect();
            for p in current {
                let mut v = self.point(p);
                for _ in 1..self.q() {
                    v = self.add(&v, g);
                    pts.insert(self.index(&v));
                }
            }
        }
        pts.into_iter().collect()
    }

    /// All symplectic transvections `u ↦ u + ω(u,v)·v`, one per nonzero `v`.
    pub fn transvections(&self) -> Vec<SymplecticMap> {
        (1..self.point_count()).map(|i| SymplecticMap::transvection(self, &self.point(i))).collect()
    }

    /// All planes, by brute force over pairs of independent vectors.
    pub fn planes(&self) -> Vec<Plane> {
        let mut seen = BTreeSet::new();
        for i in 1..self.point_count() {
            let u = self.point(i);
            let line = self.span_points(&[u.clone()]);
            for j in 1..self.point_count() {
                if line.binary_search(&j).is_ok() {
                    continue;
                }
                let w = self.point(j);
                seen.insert(Plane { points: self.span_points(&[u.clone(), w.clone()]), isotropic: self.omega(&u, &w) == 0 });
            }
        }
        seen.into_iter().collect()
    }

    /// Number of ordered pairs of linearly independent vectors.
    pub fn independent_pairs(&self) -> u64 {
        let mut n = 0;
        for i in 1..self.point_count() {
            let line = self.span_points(&[self.point(i)]);
            n += (self.point_count() - line.len()) as u64;
        }
        n
    }

    pub fn lines(&self) -> BTreeSet<Vec<usize>> {
        (1..self.point_count()).map(|i| self.span_points(&[self.point(i)])).collect()
    }
}

/// A plane, stored as the sorted indices of its q² points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Plane {
    pub points: Vec<usize>,
    pub isotropic: bool,
}

impl Plane {
    pub fn through(space: &SympSpace, u: &[u8], w: &[u8]) -> Self {
        Plane { points: space.span_points(&[u.to_vec(), w.to_vec()]), isotropic: space.omega(u, w) == 0 }
    }

    pub fn image(&self, space: &SympSpace, m: &SymplecticMap) -> Self {
        let mut points: Vec<usize> = self.points.iter().map(|&p| m.apply_index(space, p)).collect();
        points.sort_unstable();
        Plane { points, isotropic: self.isotropic }
    }
}

/// A linear map checked to preserve ω.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticMap {
    pub matrix: FMatrix,
}

impl SymplecticMap {
    pub fn new(space: &SympSpace, matrix: FMatrix) -> Result<Self> {
        let cols: Vec<Vec<u8>> = (0..space.dim).map(|j| (0..space.dim).map(|i| matrix[i][j]).collect()).collect();
        for a in 0..space.dim {
            for b in 0..space.dim {
                if space.omega(&cols[a], &cols[b]) != space.form[a][b] {
                    return Err(SympError::NotSymplectic);
                }
            }
        }
        Ok(Self { matrix })
    }

    pub fn transvection(space: &SympSpace, v: &[u8]) -> Self {
        let f = space.field;
        let jv: Vec<u8> = (0..space.dim)
            .map(|i| (0..space.dim).fold(0, |s, k| f.add(s, f.mul(space.form[i][k], v[k]))))
            .collect();
        let matrix = (0..space.dim)
            .map(|i| (0..space.dim).map(|j| f.add(u8::from(i == j), f.mul(v[i], jv[j]))).collect())
            .collect();
        Self::new(space, matrix).expect("transvections preserve the form")
    }

    pub fn apply_index(&self, space: &SympSpace, i: usize) -> usize {
        space.index(&space.apply(&self.matrix, &space.point(i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_round_trip() {
        let s = SympSpace::standard(3, 4).unwrap();
        for i in 0..s.point_count() {
            assert_eq!(s.index(&s.point(i)), i);
        }
    }

    #[test]
    fn standard_pairs_are_hyperbolic() {
        let s = SympSpace::standard(5, 4).unwrap();
        assert_eq!(s.omega(&s.basis_vector(0), &s.basis_vector(2)), 1);
        assert_eq!(s.omega(&s.basis_vector(1), &s.basis_vector(3)), 1);
        assert_eq!(s.omega(&s.basis_vector(2), &s.basis_vector(0)), 4);
        assert_eq!(s.omega(&s.basis_vector(0), &s.basis_vector(1)), 0);
    }

    #[test]
    fn non_symplectic_map_is_rejected() {
        let s = SympSpace::standard(3, 4).unwrap();
        let m = vec![vec![2, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]];
        assert_eq!(SymplecticMap::new(&s, m), Err(SympError::NotSymplectic));
    }

    #[test]
    fn product_form_pairs_adjacent_coordinates() {
        let s = SympSpace::product(3).unwrap();
        assert_eq!(s.omega(&s.basis_vector(0), &s.basis_vector(1)), 1);
        assert_eq!(s.omega(&s.basis_vector(2), &s.basis_vector(3)), 1);
        assert_eq!(s.omega(&s.basis_vector(0), &s.basis_vector(2)), 0);
        assert_eq!(SympSpace::with_form(3, vec![vec![0; 4]; 4]), Err(SympError::DegenerateForm));
    }

    #[test]
    fn odd_dimension_is_rejected() {
        assert_eq!(SympSpace::standard(3, 3), Err(SympError::UnsupportedDimension(3)));
    }

    #[test]
    fn plane_in_dimension_two_is_not_isotropic() {
        let s = SympSpace::standard(3, 2).unwrap();
        let planes = s.planes();
        assert_eq!(planes.len(), 1);
        assert!(!planes[0].isotropic);
    }
}
