//! Prime fields F_q with q in {2, 3, 5}, elements stored as `u8` residues.

use crate::error::{Result, SympError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fq {
    q: u8,
}

impl Fq {
    pub fn new(q: u8) -> Result<Self> {
        match q {
            2 | 3 | 5 => Ok(Self { q }),
            _ => Err(SympError::UnsupportedField(q)),
        }
    }

    pub fn q(self) -> u8 {
        self.q
    }

    pub fn size(self) -> usize {
        self.q as usize
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.q as u16) as u8
    }

    pub fn inv(self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        (1..self.q).find(|&b| self.mul(a, b) == 1).expect("prime field")
    }

    pub fn from_int(self, k: i64) -> u8 {
        k.rem_euclid(self.q as i64) as u8
    }

    /// Signed representative in `(-q/2, q/2]`.
    pub fn to_signed(self, a: u8) -> i64 {
        if 2 * a as i64 > self.q as i64 {
            a as i64 - self.q as i64
        } else {
            a as i64
        }
    }

    pub fn scale(self, c: u8, v: &[u8]) -> Vec<u8> {
        v.iter().map(|&x| self.mul(c, x)).collect()
    }

    /// `v += w`, written so the loop vectorizes.
    pub fn add_assign(self, v: &mut [u8], w: &[u8]) {
        let q = self.q;
        for (x, &y) in v.iter_mut().zip(w) {
            let s = *x + y;
            *x = s.min(s.wrapping_sub(q));
        }
    }

    pub fn axpy(self, v: &mut [u8], c: u8, w: &[u8]) {
        match c {
            0 => {}
            1 => self.add_assign(v, w),
            _ => self.add_assign(v, &self.scale(c, w)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_other_sizes() {
        assert_eq!(Fq::new(4), Err(SympError::UnsupportedField(4)));
        assert_eq!(Fq::new(7), Err(SympError::UnsupportedField(7)));
    }

    #[test]
    fn arithmetic_tables() {
        for q in [2, 3, 5] {
            let f = Fq::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    let mut v = vec![a];
                    f.add_assign(&mut v, &[b]);
                    assert_eq!(v[0], (a + b) % q);
                }
            }
        }
    }
}
