//! Subspaces of F_q^n kept in reduced row echelon form.

use crate::field::Fq;

#[derive(Clone, Debug)]
pub struct Span {
    field: Fq,
    len: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
    /// `multiples[r][c - 1] = c · rows[r]`, cached for fast reduction.
    multiples: Vec<Vec<Vec<u8>>>,
}

impl Span {
    pub fn new(field: Fq, len: usize) -> Self {
        Self { field, len, rows: Vec::new(), pivots: Vec::new(), multiples: Vec::new() }
    }

    pub fn from_vectors<'a>(field: Fq, len: usize, vs: impl IntoIterator<Item = &'a Vec<u8>>) -> Self {
        let mut s = Self::new(field, len);
        for v in vs {
            s.insert(v.clone());
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    fn cache(&self, row: &[u8]) -> Vec<Vec<u8>> {
        (1..self.field.q()).map(|c| self.field.scale(c, row)).collect()
    }

    /// Reduces `v` modulo the span in place.
    pub fn reduce(&self, v: &mut [u8]) {
        for (mults, &p) in self.multiples.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                let neg = self.field.neg(c);
                self.field.add_assign(v, &mults[neg as usize - 1]);
            }
        }
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Inserts `v`; returns the new reduced basis row if the span grew.
    pub fn insert(&mut self, mut v: Vec<u8>) -> Option<&[u8]> {
        assert_eq!(v.len(), self.len, "vector length");
        self.reduce(&mut v);
        let p = v.iter().position(|&x| x != 0)?;
        let inv = self.field.inv(v[p]);
        let v = self.field.scale(inv, &v);
        let new_cache = self.cache(&v);
        for r in 0..self.rows.len() {
            let c = self.rows[r][p];
            if c != 0 {
                let neg = self.field.neg(c);
                let (row, add) = (&mut self.rows[r], &new_cache[neg as usize - 1]);
                self.field.add_assign(row, add);
                self.multiples[r] = self.cache(&self.rows[r]);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        self.multiples.push(new_cache);
        self.rows.last().map(|r| r.as_slice())
    }

    pub fn contains_span(&self, other: &Span) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn same_as(&self, other: &Span) -> bool {
        self.dim() == other.dim() && self.contains_span(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_rows() {
        let f = Fq::new(3).unwrap();
        let mut s = Span::new(f, 3);
        assert!(s.insert(vec![1, 2, 0]).is_some());
        assert!(s.insert(vec![2, 1, 0]).is_none());
        assert!(s.insert(vec![0, 0, 0]).is_none());
        assert!(s.insert(vec![1, 0, 1]).is_some());
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[2, 2, 1]));
        assert!(!s.contains(&[0, 0, 1]));
    }
}
