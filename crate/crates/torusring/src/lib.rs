//! Cohomology ring of a complex 2-torus: the exterior algebra on four
//! degree-one generators `a1..a4`, with integration against the
//! fundamental class and the Künneth components of the diagonal.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

pub const RANK: usize = 4;
pub const DIM: usize = 1 << RANK;
pub const TOP: Monomial = Monomial(0b1111);

/// A basis monomial `a_{i1} a_{i2} ...` with `i1 < i2 < ...`, stored as a bitmask
/// (bit `k` is generator `a_{k+1}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub u8);

/// The 16 monomials ordered by degree, then lexicographically in the
/// generator indices.
pub const ORDERED: [Monomial; DIM] = [
    Monomial(0b0000),
    Monomial(0b0001),
    Monomial(0b0010),
    Monomial(0b0100),
    Monomial(0b1000),
    Monomial(0b0011),
    Monomial(0b0101),
    Monomial(0b1001),
    Monomial(0b0110),
    Monomial(0b1010),
    Monomial(0b1100),
    Monomial(0b0111),
    Monomial(0b1011),
    Monomial(0b1101),
    Monomial(0b1110),
    Monomial(0b1111),
];

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn generator(i: usize) -> Monomial {
        assert!((1..=RANK).contains(&i), "generator index out of range: {i}");
        Monomial(1 << (i - 1))
    }

    pub fn from_generators(gens: &[usize]) -> (i64, Monomial) {
        let mut sign = 1;
        let mut acc = Monomial::ONE;
        for &g in gens {
            match acc.wedge(Monomial::generator(g)) {
                Some((s, m)) => {
                    sign *= s;
                    acc = m;
                }
                None => return (0, Monomial::ONE),
            }
        }
        (sign, acc)
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_odd(self) -> bool {
        self.degree() % 2 == 1
    }

    /// Position in [`ORDERED`].
    pub fn index(self) -> usize {
        ORDERED.iter().position(|&m| m == self).expect("valid mask")
    }

    pub fn generators(self) -> Vec<usize> {
        (0..RANK).filter(|k| self.0 >> k & 1 == 1).map(|k| k + 1).collect()
    }

    /// Product with its Koszul sign, `None` when a generator repeats.
    pub fn wedge(self, other: Monomial) -> Option<(i64, Monomial)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0;
        for j in 0..RANK {
            if other.0 >> j & 1 == 1 {
                swaps += (self.0 >> (j + 1)).count_ones();
            }
        }
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        Some((sign, Monomial(self.0 | other.0)))
    }

    pub fn complement(self) -> Monomial {
        Monomial(!self.0 & TOP.0)
    }

    /// The signed complementary monomial `m*` with `∫ m ∧ m* = 1`.
    pub fn pd_dual(self) -> (i64, Monomial) {
        let c = self.complement();
        let (s, _) = self.wedge(c).expect("disjoint");
        (s, c)
    }

    /// The signed complementary monomial `m^` with `∫ m^ ∧ m = 1`. Dual classes
    /// such as `a_i*` in the Hilbert-scheme tables are named with this one.
    pub fn left_dual(self) -> (i64, Monomial) {
        let (s, c) = self.pd_dual();
        (if self.is_odd() { -s } else { s }, c)
    }

    pub fn name(self) -> String {
        if self.0 == 0 {
            return "1".into();
        }
        if self == TOP {
            return "x".into();
        }
        self.generators().iter().map(|g| format!("a{g}")).collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// An integral class in `H*(A)`, coefficients indexed by the bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct TorusClass {
    coeffs: [i64; DIM],
}

impl TorusClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(Monomial::ONE)
    }

    pub fn point() -> Self {
        Self::from(TOP)
    }

    pub fn generator(i: usize) -> Self {
        Self::from(Monomial::generator(i))
    }

    /// Wedge of generators in the given order, e.g. `&[4, 2]` is `a4 a2 = -a2 a4`.
    pub fn product_of(gens: &[usize]) -> Self {
        let (s, m) = Monomial::from_generators(gens);
        Self::from(m) * s
    }

    pub fn coeff(&self, m: Monomial) -> i64 {
        self.coeffs[m.0 as usize]
    }

    pub fn set(&mut self, m: Monomial, c: i64) {
        self.coeffs[m.0 as usize] = c;
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, i64)> + '_ {
        ORDERED.iter().map(|&m| (m, self.coeff(m))).filter(|&(_, c)| c != 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Degree of a nonzero homogeneous class.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms().map(|(m, _)| m.degree());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            if m.degree() == d {
                out.set(m, c);
            }
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            for (n, d) in other.terms() {
                if let Some((s, p)) = m.wedge(n) {
                    out.coeffs[p.0 as usize] += s * c * d;
                }
            }
        }
        out
    }

    pub fn integrate(&self) -> i64 {
        self.coeff(TOP)
    }

    /// Sum of `(-1)^{|e|} (self ∧ e) ⊗ e*` over the 16 monomials `e`, scaled by
    /// the global sign of `convention`. Terms with `self ∧ e = 0` are dropped.
    pub fn diagonal_sweedler_with(&self, convention: SweedlerSign) -> Vec<(TorusClass, Monomial, i64)> {
        let mut out = Vec::new();
        for e in ORDERED {
            let left = self.wedge(&TorusClass::from(e));
            if left.is_zero() {
                continue;
            }
            let (s, dual) = e.pd_dual();
            let parity = if e.is_odd() { -1 } else { 1 };
            out.push((left, dual, s * parity * convention.factor()));
        }
        out
    }

    /// Künneth components of the diagonal push-forward under the pinned convention.
    pub fn diagonal_sweedler(&self) -> Vec<(TorusClass, Monomial, i64)> {
        self.diagonal_sweedler_with(SweedlerSign::PINNED)
    }
}

/// The one free global sign in the diagonal push-forward.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweedlerSign {
    Plus,
    Minus,
}

impl SweedlerSign {
    pub const PINNED: SweedlerSign = SweedlerSign::Plus;

    pub fn factor(self) -> i64 {
        match self {
            SweedlerSign::Plus => 1,
            SweedlerSign::Minus => -1,
        }
    }
}

impl From<Monomial> for TorusClass {
    fn from(m: Monomial) -> Self {
        let mut out = Self::zero();
        out.set(m, 1);
        out
    }
}

impl Add for TorusClass {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for TorusClass {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for TorusClass {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for TorusClass {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1
    }
}

impl Mul<i64> for TorusClass {
    type Output = Self;
    fn mul(mut self, k: i64) -> Self {
        for c in self.coeffs.iter_mut() {
            *c *= k;
        }
        self
    }
}

impl Mul for TorusClass {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.wedge(&rhs)
    }
}

impl fmt::Debug for TorusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TorusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            match (c.abs(), m.0) {
                (1, _) => write!(f, "{m}")?,
                (k, 0) => write!(f, "{k}")?,
                (k, _) => write!(f, "{k}{m}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Betti numbers of `A`, read off from the monomial degrees.
pub fn betti() -> [usize; 5] {
    let mut b = [0; 5];
    for m in ORDERED {
        b[m.degree() as usize] += 1;
    }
    b
}

/// Gram matrix of the Poincaré pairing `∫ m ∧ n` over [`ORDERED`].
pub fn pairing_gram() -> [[i64; DIM]; DIM] {
    let mut g = [[0; DIM]; DIM];
    for (i, m) in ORDERED.iter().enumerate() {
        for (j, n) in ORDERED.iter().enumerate() {
            g[i][j] = TorusClass::from(*m).wedge(&TorusClass::from(*n)).integrate();
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize) -> TorusClass {
        TorusClass::generator(i)
    }

    #[test]
    fn basis_products() {
        assert_eq!(a(1) * a(2), TorusClass::product_of(&[1, 2]));
        assert_eq!(a(2) * a(1), -TorusClass::product_of(&[1, 2]));
        assert!((a(1) * a(1)).is_zero());
    }

    #[test]
    fn integration() {
        assert_eq!(TorusClass::product_of(&[1, 2, 3, 4]).integrate(), 1);
        assert_eq!((a(1) * a(2)).integrate(), 0);
        let c = TorusClass::product_of(&[1, 2, 3, 4]) * 3 - a(1) * a(2);
        assert_eq!(c.integrate(), 3);
    }

    #[test]
    fn duals_pair_to_one() {
        for m in ORDERED {
            let (s, d) = m.pd_dual();
            let pd = TorusClass::from(d) * s;
            assert_eq!(TorusClass::from(m).wedge(&pd).integrate(), 1, "{m}");
        }
        assert_eq!(Monomial::ONE.pd_dual(), (1, TOP));
        for m in ORDERED {
            let (s, d) = m.left_dual();
            let ld = TorusClass::from(d) * s;
            assert_eq!(ld.wedge(&TorusClass::from(m)).integrate(), 1, "{m}");
        }
        let (s, d) = Monomial::generator(1).pd_dual();
        assert_eq!((s, d), (1, Monomial(0b1110)));
    }

    #[test]
    fn sweedler_bookkeeping() {
        let parts = TorusClass::one().diagonal_sweedler();
        assert_eq!(parts.len(), 16);
        for (l, r, _) in &parts {
            assert_eq!(l.degree().unwrap() + r.degree(), 4);
        }
        let parts = TorusClass::point().diagonal_sweedler();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0, TorusClass::point());
        assert_eq!(parts[0].1, TOP);
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(betti(), [1, 4, 6, 4, 1]);
    }

    #[test]
    fn display() {
        assert_eq!(format!("{}", a(1) * a(2) * 3 - TorusClass::one()), "-1 + 3a1a2");
        assert_eq!(format!("{}", TorusClass::point()), "x");
    }
}
