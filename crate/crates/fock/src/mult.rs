//! Multiplication operators `G_k(a)` and `d`, evaluated through the second
//! representation of states as words in `d` and `q_1(·)` acting on the vacuum.

use std::collections::HashMap;

use num_traits::{One, Zero};
use torusring::{Monomial, SweedlerSign, TorusClass};

use crate::error::FockError;
use crate::ops::{boundary, boundary_with, create};
use crate::state::FockState;
use crate::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    D,
    Q1(Monomial),
}

impl Letter {
    fn is_odd(self) -> bool {
        matches!(self, Letter::Q1(m) if m.is_odd())
    }
}

/// A rational combination of letter words.
pub type WordSum = Vec<(Q, Vec<Letter>)>;

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

fn binomial(n: u32, k: u32) -> i64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `q' = [d, q_1(1)] = d q_1(1) - q_1(1) d`.
fn q_prime() -> WordSum {
    vec![
        (Q::one(), vec![Letter::D, Letter::Q1(Monomial::ONE)]),
        (-Q::one(), vec![Letter::Q1(Monomial::ONE), Letter::D]),
    ]
}

fn compose(a: &WordSum, b: &WordSum) -> WordSum {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (ca, wa) in a {
        for (cb, wb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            out.push((*ca * *cb, w));
        }
    }
    out
}

fn collect(ws: WordSum) -> WordSum {
    let mut map: HashMap<Vec<Letter>, Q> = HashMap::new();
    let mut order = Vec::new();
    for (c, w) in ws {
        if !map.contains_key(&w) {
            order.push(w.clone());
        }
        *map.entry(w).or_insert_with(Q::zero) += c;
    }
    order.into_iter().filter_map(|w| {
        let c = map[&w];
        (!c.is_zero()).then_some((c, w))
    }).collect()
}

/// `(ad q')^m (q_1(c))` as a word sum; `q'` is even so `ad q'(X) = q'X - Xq'`.
pub fn ad_qprime_power(m: u32, c: Monomial) -> WordSum {
    let mut x: WordSum = vec![(Q::one(), vec![Letter::Q1(c)])];
    let qp = q_prime();
    for _ in 0..m {
        let mut next = compose(&qp, &x);
        next.extend(compose(&x, &qp).into_iter().map(|(k, w)| (-k, w)));
        x = collect(next);
    }
    x
}

/// `q_m(c) = (-1)^{m-1}/(m-1)! (ad q')^{m-1} (q_1(c))`.
pub fn creation_as_words(m: u8, c: Monomial) -> WordSum {
    let k = m as u32 - 1;
    let scale = Q::new(if k % 2 == 0 { 1 } else { -1 }, factorial(k));
    ad_qprime_power(k, c).into_iter().map(|(x, w)| (x * scale, w)).collect()
}

/// Rewrites a creation-form state in the `d`/`q_1` representation.
pub fn to_words(s: &FockState) -> WordSum {
    let mut out = Vec::new();
    for (w, v) in s.terms() {
        let mut acc: WordSum = vec![(*v, Vec::new())];
        for f in w.factors() {
            acc = compose(&acc, &creation_as_words(f.m, f.class));
        }
        out.extend(acc);
    }
    collect(out)
}

/// Evaluates letter words on the vacuum, sharing suffixes.
#[derive(Default)]
pub struct WordEvaluator {
    memo: HashMap<Vec<Letter>, FockState>,
}

impl WordEvaluator {
    pub fn eval(&mut self, word: &[Letter]) -> FockState {
        if word.is_empty() {
            return FockState::vacuum();
        }
        if let Some(s) = self.memo.get(word) {
            return s.clone();
        }
        let tail = self.eval(&word[1..]);
        let s = match word[0] {
            Letter::D => boundary(&tail),
            Letter::Q1(c) => create(1, &TorusClass::from(c), &tail),
        };
        self.memo.insert(word.to_vec(), s.clone());
        s
    }

    pub fn eval_sum(&mut self, ws: &WordSum) -> FockState {
        let mut out = FockState::zero();
        for (c, w) in ws {
            out += &self.eval(w).scale(*c);
        }
        out
    }
}

/// `G_k(a)` applied to a state: `[G_k(a), q_1(b)] = (1/k!) ad(d)^k q_1(ab)`,
/// `[G_k(a), d] = 0` and `G_k(a)|0> = 0`.
pub fn apply_g(k: u32, a: &TorusClass, s: &FockState) -> FockState {
    let words = to_words(s);
    let mut produced: WordSum = Vec::new();
    let inv_fact = Q::new(1, factorial(k));
    for (mono, ka) in a.terms() {
        for (c, w) in &words {
            let mut odd_before = false;
            for (i, letter) in w.iter().enumerate() {
                if let Letter::Q1(b) = *letter {
                    if let Some((sg, ab)) = mono.wedge(b) {
                        let sg = if mono.is_odd() && odd_before { -sg } else { sg };
                        for j in 0..=k {
                            let coeff = *c
                                * inv_fact
                                * Q::from_integer(ka * sg * binomial(k, j) * if (k - j) % 2 == 0 { 1 } else { -1 });
                            let mut nw = Vec::with_capacity(w.len() + k as usize);
                            nw.extend_from_slice(&w[..i]);
                            nw.extend(std::iter::repeat(Letter::D).take(j as usize));
                            nw.push(Letter::Q1(ab));
                            nw.extend(std::iter::repeat(Letter::D).take((k - j) as usize));
                            nw.extend_from_slice(&w[i + 1..]);
                            produced.push((coeff, nw));
                        }
                    }
                }
                odd_before ^= letter.is_odd();
            }
        }
    }
    WordEvaluator::default().eval_sum(&collect(produced))
}

/// One multiplication operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    D,
    G(u32, TorusClass),
}

impl Token {
    pub fn g(k: u32, m: Monomial) -> Token {
        Token::G(k, TorusClass::from(m))
    }

    pub fn is_odd(&self) -> bool {
        match self {
            Token::D => false,
            Token::G(_, a) => crate::ops::class_is_odd(a),
        }
    }

    fn key(&self) -> Option<(u32, usize)> {
        match self {
            Token::D => Some((0, 0)),
            Token::G(k, a) => {
                let mut it = a.terms();
                match (it.next(), it.next()) {
                    (Some((m, 1)), None) => Some((k + 1, m.index())),
                    _ => None,
                }
            }
        }
    }

    pub fn apply(&self, s: &FockState) -> FockState {
        match self {
            Token::D => boundary(s),
            Token::G(k, a) => apply_g(*k, a, s),
        }
    }
}

impl std::fmt::Display for Token {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Token::D => write!(f, "d"),
            Token::G(k, a) => write!(f, "G{k}({a})"),
        }
    }
}

/// A product of multiplication operators; the rightmost token acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultWord(pub Vec<Token>);

impl MultWord {
    pub fn identity() -> Self {
        MultWord(Vec::new())
    }

    pub fn of(tokens: &[Token]) -> Self {
        MultWord(tokens.to_vec())
    }

    pub fn contains_g0_of_generator(&self) -> bool {
        self.0.iter().any(|t| matches!(t, Token::G(0, a) if a.degree() == Some(1)))
    }

    /// Sorts tokens with monomial arguments (`d` first, then by `k` and
    /// monomial), absorbing the Koszul sign. Words with non-monomial
    /// arguments are returned unchanged.
    pub fn canonical(&self) -> (i64, MultWord) {
        if self.0.iter().any(|t| t.key().is_none()) {
            return (1, self.clone());
        }
        let mut toks = self.0.clone();
        let mut sign = 1;
        for i in 0..toks.len() {
            for j in 0..toks.len() - 1 - i {
                if toks[j].key() > toks[j + 1].key() {
                    if toks[j].is_odd() && toks[j + 1].is_odd() {
                        sign = -sign;
                    }
                    toks.swap(j, j + 1);
                }
            }
        }
        (sign, MultWord(toks))
    }
}

impl std::fmt::Display for MultWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        for t in &self.0 {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// A rational combination of operator words.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MultExpr(pub Vec<(Q, MultWord)>);

impl MultExpr {
    pub fn word(w: MultWord) -> Self {
        MultExpr(vec![(Q::one(), w)])
    }

    pub fn scaled(k: Q, w: MultWord) -> Self {
        MultExpr(vec![(k, w)])
    }

    pub fn apply(&self, s: &FockState) -> FockState {
        let mut out = FockState::zero();
        for (c, w) in &self.0 {
            out += &apply_mult_word(w, s).scale(*c);
        }
        out
    }
}

impl std::fmt::Display for MultExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, (c, w)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
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

/// The cup product of the class of `w` with `s`.
pub fn apply_mult_word(w: &MultWord, s: &FockState) -> FockState {
    let mut cur = s.clone();
    for t in w.0.iter().rev() {
        if cur.is_zero() {
            break;
        }
        cur = t.apply(&cur);
    }
    cur
}

fn apply_qprime(s: &FockState, conv: SweedlerSign) -> FockState {
    let one = TorusClass::one();
    boundary_with(&create(1, &one, s), conv) - create(1, &one, &boundary_with(s, conv))
}

/// `(ad q')^m (q_1(a))` applied to `s`, with `q' = [d, q_1(1)]`.
pub fn apply_ad_qprime(m: u32, a: &TorusClass, s: &FockState, conv: SweedlerSign) -> FockState {
    if m == 0 {
        return create(1, a, s);
    }
    let inner = apply_ad_qprime(m - 1, a, s, conv);
    apply_qprime(&inner, conv) - apply_ad_qprime(m - 1, a, &apply_qprime(s, conv), conv)
}

/// Checks `(ad q')^m (q_1(a)) = (-1)^m m! q_{m+1}(a)` on every state of the battery.
pub fn creation_from_dq1(m: u32, a: Monomial, battery: &[FockState], conv: SweedlerSign) -> Result<(), FockError> {
    let class = TorusClass::from(a);
    let scale = Q::from_integer(if m % 2 == 0 { 1 } else { -1 } * factorial(m));
    for s in battery {
        let lhs = apply_ad_qprime(m, &class, s, conv);
        let rhs = create(m as u8 + 1, &class, s).scale(scale);
        if lhs != rhs {
            return Err(FockError::IdentityFailure { m, class: a.name(), state: s.to_string() });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilb::{basis_words, gen, st, star};
    use torusring::{ORDERED, TOP};

    fn x() -> TorusClass {
        TorusClass::from(TOP)
    }

    fn battery(max_weight: u32) -> Vec<FockState> {
        (0..=max_weight).flat_map(basis_words).map(|w| FockState::from_word(w, Q::one())).collect()
    }

    #[test]
    fn boundary_turns_diagonal_into_points() {
        for n in 2..=3u32 {
            let mut f = vec![(2, x())];
            f.extend(std::iter::repeat((1, x())).take(n as usize - 2));
            let lhs = apply_mult_word(&MultWord(vec![Token::D]), &st(&f));
            assert_eq!(lhs, st(&vec![(1, x()); n as usize]));
        }
    }

    #[test]
    fn g1_on_odd_degree_five_class() {
        for i in 1..=4 {
            let s = st(&[(2, star(i)), (1, TorusClass::one())]);
            let lhs = apply_g(1, &gen(i), &s);
            let rhs = st(&[(3, x())]).scale(Q::from_integer(2)) - st(&[(1, x()), (1, x()), (1, TorusClass::one())]);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn boundary_kills_dual_of_b_times_points() {
        for b in ORDERED.iter().filter(|m| m.degree() == 2) {
            let (s, d) = b.pd_dual();
            for n in 2..=3usize {
                let mut f = vec![(1, TorusClass::from(d) * s)];
                f.extend(std::iter::repeat((1, x())).take(n - 1));
                assert!(boundary(&st(&f)).is_zero());
            }
        }
    }

    #[test]
    fn qprime_examples() {
        let v = FockState::vacuum();
        let lhs = apply_ad_qprime(1, &x(), &v, SweedlerSign::PINNED);
        assert_eq!(lhs, -st(&[(2, x())]));
        let s = st(&[(1, x())]);
        let lhs = apply_ad_qprime(2, &TorusClass::one(), &s, SweedlerSign::PINNED);
        assert_eq!(lhs, st(&[(3, TorusClass::one()), (1, x())]).scale(Q::from_integer(2)));
        assert_eq!(apply_ad_qprime(0, &x(), &s, SweedlerSign::PINNED), st(&[(1, x()), (1, x())]));
    }

    #[test]
    fn qprime_identity_pins_sweedler_sign() {
        let limits = [(0u32, 3u32), (1, 3), (2, 2), (3, 1)];
        for (m, w) in limits {
            let states = battery(w);
            for c in ORDERED {
                creation_from_dq1(m, c, &states, SweedlerSign::PINNED).unwrap();
            }
        }
        let states = battery(1);
        let failures = ORDERED.iter().filter(|&&c| creation_from_dq1(1, c, &states, SweedlerSign::Minus).is_err()).count();
        assert_eq!(failures, ORDERED.len());
    }

    #[test]
    fn virasoro_commutator_pins_sweedler_sign() {
        use crate::ops::{apply_q, virasoro_with};
        let a = TorusClass::one();
        let b = TorusClass::generator(2);
        let s = st(&[(1, x())]);
        let check = |conv| {
            let lhs = virasoro_with(1, &a, &apply_q(1, &b, &s), conv) - apply_q(1, &b, &virasoro_with(1, &a, &s, conv));
            lhs == -st(&[(2, b.clone()), (1, x())])
        };
        assert!(check(SweedlerSign::Plus));
        assert!(!check(SweedlerSign::Minus));
    }

    #[test]
    fn canonical_word_tracks_odd_swaps() {
        let w = MultWord(vec![Token::g(0, Monomial::generator(3)), Token::g(0, Monomial::generator(1))]);
        let (s, c) = w.canonical();
        assert_eq!(s, -1);
        assert_eq!(c.0[0], Token::g(0, Monomial::generator(1)));
        let u = crate::hilb::unit(2);
        assert_eq!(apply_mult_word(&w, &u), apply_mult_word(&c, &u).scale(Q::from_integer(s)));
    }
}
