use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};
use torusring::{Monomial, TorusClass};

use crate::Q;

/// One creation factor `q_m(c)` with `m >= 1` and `c` a basis monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub m: u8,
    pub class: Monomial,
}

impl Factor {
    pub fn new(m: u8, class: Monomial) -> Self {
        assert!(m >= 1, "creation index must be positive");
        Factor { m, class }
    }

    pub fn degree(self) -> u32 {
        self.class.degree() + 2 * (self.m as u32 - 1)
    }

    pub fn is_odd(self) -> bool {
        self.class.is_odd()
    }

    fn key(self) -> (u8, usize) {
        (self.m, self.class.index())
    }
}

/// A canonically ordered product of creation factors acting on the vacuum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CreationWord(Vec<Factor>);

impl CreationWord {
    pub fn vacuum() -> Self {
        CreationWord(Vec::new())
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|f| f.m as u32).sum()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|f| f.degree()).sum()
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().filter(|f| f.is_odd()).count() % 2 == 1
    }

    /// `f · self`, reordered canonically; `None` if an odd factor would repeat.
    pub fn prepend(&self, f: Factor) -> Option<(i64, CreationWord)> {
        let pos = self.0.partition_point(|g| g.key() < f.key());
        if f.is_odd() && self.0.get(pos) == Some(&f) {
            return None;
        }
        let passed_odd = self.0[..pos].iter().filter(|g| g.is_odd()).count();
        let sign = if f.is_odd() && passed_odd % 2 == 1 { -1 } else { 1 };
        let mut v = self.0.clone();
        v.insert(pos, f);
        Some((sign, CreationWord(v)))
    }

    /// Canonical form of an arbitrary ordered product.
    pub fn from_ordered(factors: &[Factor]) -> Option<(i64, CreationWord)> {
        let mut sign = 1;
        let mut acc = CreationWord::vacuum();
        for &f in factors.iter().rev() {
            let (s, w) = acc.prepend(f)?;
            sign *= s;
            acc = w;
        }
        Some((sign, acc))
    }
}

impl fmt::Display for CreationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == g {
                run += 1;
            }
            write!(f, "q{}({})", g.m, g.class)?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        f.write_str("|0>")
    }
}

/// A finite rational combination of creation words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FockState {
    terms: BTreeMap<CreationWord, Q>,
}

impl FockState {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::from_word(CreationWord::vacuum(), Q::one())
    }

    pub fn from_word(w: CreationWord, c: Q) -> Self {
        let mut s = Self::zero();
        s.add_term(w, c);
        s
    }

    /// `q_{m1}(c1) ... q_{mk}(ck)|0>` with the factors in the given order.
    pub fn creation(factors: &[(u8, Monomial)]) -> Self {
        let fs: Vec<Factor> = factors.iter().map(|&(m, c)| Factor::new(m, c)).collect();
        match CreationWord::from_ordered(&fs) {
            Some((s, w)) => Self::from_word(w, Q::from_integer(s)),
            None => Self::zero(),
        }
    }

    /// Same as [`FockState::creation`] but with arbitrary torus classes, expanded linearly.
    pub fn creation_classes(factors: &[(u8, TorusClass)]) -> Self {
        let mut s = Self::vacuum();
        for &(m, c) in factors.iter().rev() {
            s = crate::ops::create(m, &c, &s);
        }
        s
    }

    pub fn add_term(&mut self, w: CreationWord, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CreationWord, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &CreationWord) -> Q {
        self.terms.get(w).copied().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weight and degree when homogeneous.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|w| (w.weight(), w.degree()));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|w| w.weight());
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn scale(&self, k: Q) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        FockState { terms: self.terms.iter().map(|(w, c)| (w.clone(), *c * k)).collect() }
    }
}

impl AddAssign<&FockState> for FockState {
    fn add_assign(&mut self, rhs: &FockState) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), *c);
        }
    }
}

impl Add for FockState {
    type Output = FockState;
    fn add(mut self, rhs: FockState) -> FockState {
        self += &rhs;
        self
    }
}

impl Sub for FockState {
    type Output = FockState;
    fn sub(mut self, rhs: FockState) -> FockState {
        self += &(-rhs);
        self
    }
}

impl Neg for FockState {
    type Output = FockState;
    fn neg(self) -> FockState {
        self.scale(-Q::one())
    }
}

impl Mul<Q> for FockState {
    type Output = FockState;
    fn mul(self, k: Q) -> FockState {
        self.scale(k)
    }
}

impl Mul<i64> for FockState {
    type Output = FockState;
    fn mul(self, k: i64) -> FockState {
        self.scale(Q::from_integer(k))
    }
}

impl fmt::Debug for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *c == Q::one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c}){w}")?;
            }
        }
        Ok(())
    }
}
