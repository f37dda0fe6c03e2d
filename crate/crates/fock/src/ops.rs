//! Nakajima operators acting on creation-form states.

use num_traits::Zero;
use torusring::{Monomial, TorusClass, ORDERED};

use crate::error::FockError;
use crate::state::{CreationWord, Factor, FockState};
use crate::Q;

fn q(k: i64) -> Q {
    Q::from_integer(k)
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

/// `q_m(c)` for `m >= 1`.
pub fn create(m: u8, c: &TorusClass, s: &FockState) -> FockState {
    let mut out = FockState::zero();
    for (mono, k) in c.terms() {
        let f = Factor::new(m, mono);
        for (w, v) in s.terms() {
            if let Some((sg, nw)) = w.prepend(f) {
                out.add_term(nw, *v * q(k * sg));
            }
        }
    }
    out
}

/// `q_{-n}(a)` for `n >= 1`, moved through the creation factors with
/// `[q_{-n}(a), q_n(c)] = -n ∫ ac`.
pub fn annihilate(n: u8, a: &TorusClass, s: &FockState) -> FockState {
    let mut out = FockState::zero();
    for (mono, k) in a.terms() {
        for (w, v) in s.terms() {
            let fs = w.factors();
            let mut odd_before = false;
            for (i, f) in fs.iter().enumerate() {
                if f.m == n {
                    let pairing = TorusClass::from(mono).wedge(&TorusClass::from(f.class)).integrate();
                    if pairing != 0 {
                        let sg = sign(mono.is_odd() && odd_before);
                        let mut rest = fs.to_vec();
                        rest.remove(i);
                        let coeff = -(n as i64) * pairing * sg * k;
                        out.add_term(CreationWord::from_ordered(&rest).expect("subword").1, *v * q(coeff));
                    }
                }
                odd_before ^= f.is_odd();
            }
        }
    }
    out
}

/// `q_m(c)` for any nonzero integer `m`.
pub fn apply_q(m: i32, c: &TorusClass, s: &FockState) -> FockState {
    match m {
        0 => FockState::zero(),
        m if m > 0 => create(m as u8, c, s),
        m => annihilate((-m) as u8, c, s),
    }
}

fn max_index(s: &FockState) -> i32 {
    s.terms().flat_map(|(w, _)| w.factors().iter().map(|f| f.m as i32)).max().unwrap_or(0)
}

/// `L_m(a)` evaluated from its defining quadratic sum over the Künneth
/// components of the diagonal.
pub fn virasoro(m: i32, a: &TorusClass, s: &FockState) -> FockState {
    virasoro_with(m, a, s, torusring::SweedlerSign::PINNED)
}

pub fn virasoro_with(m: i32, a: &TorusClass, s: &FockState, conv: torusring::SweedlerSign) -> FockState {
    let w = max_index(s).max(s.weight().unwrap_or(0) as i32);
    let parts = a.diagonal_sweedler_with(conv);
    let mut out = FockState::zero();
    let ks: Vec<i32> = if m == 0 { (1..=w).collect() } else { (-w..=m + w).collect() };
    for k in ks {
        if k == 0 || k == m {
            continue;
        }
        for (left, right, eps) in &parts {
            let inner = apply_q(m - k, &TorusClass::from(*right), s);
            if inner.is_zero() {
                continue;
            }
            let outer = apply_q(k, left, &inner);
            out += &outer.scale(q(*eps));
        }
    }
    if m != 0 {
        out = out.scale(Q::new(1, 2));
    }
    out
}

/// The boundary operator, via `[d, q_m(a)] = m L_m(a)` and `d|0> = 0`.
pub fn boundary(s: &FockState) -> FockState {
    boundary_with(s, torusring::SweedlerSign::PINNED)
}

pub fn boundary_with(s: &FockState, conv: torusring::SweedlerSign) -> FockState {
    let mut out = FockState::zero();
    for (w, v) in s.terms() {
        let fs = w.factors();
        for i in 0..fs.len() {
            let suffix = FockState::creation(&fs[i + 1..].iter().map(|f| (f.m, f.class)).collect::<Vec<_>>());
            let f = fs[i];
            let mut t = virasoro_with(f.m as i32, &TorusClass::from(f.class), &suffix, conv).scale(q(f.m as i64));
            for g in fs[..i].iter().rev() {
                t = create(g.m, &TorusClass::from(g.class), &t);
            }
            out += &t.scale(*v);
        }
    }
    out
}

/// Whether a basis class has odd degree.
pub fn class_is_odd(c: &TorusClass) -> bool {
    c.terms().next().map(|(m, _)| m.is_odd()).unwrap_or(false)
}

/// Poincaré pairing `∫ α·β` on `A^[n]`; both states must have weight `n`.
pub fn vacuum_pairing(alpha: &FockState, beta: &FockState, n: u32) -> Result<Q, FockError> {
    for s in [alpha, beta] {
        for (w, _) in s.terms() {
            if w.weight() != n {
                return Err(FockError::WeightMismatch { expected: n, found: w.weight() });
            }
        }
    }
    Ok(pairing(alpha, beta))
}

/// Vacuum pairing `∫ α·β` on one weight, by turning the creation factors of
/// `α` into annihilators through the adjoint `q_m(a)† = (-1)^m q_{-m}(a)`.
pub fn pairing(alpha: &FockState, beta: &FockState) -> Q {
    let mut total = Q::zero();
    for (w, v) in alpha.terms() {
        let fs = w.factors();
        let mut cur = beta.clone();
        let mut sg = 1i64;
        for (i, f) in fs.iter().enumerate() {
            let rest = CreationWord::from_ordered(&fs[i + 1..]).expect("subword").1;
            if f.is_odd() && rest.is_odd() {
                sg = -sg;
            }
            if f.m % 2 == 1 {
                sg = -sg;
            }
            cur = annihilate(f.m, &TorusClass::from(f.class), &cur);
            if cur.is_zero() {
                break;
            }
        }
        total += *v * q(sg) * cur.coeff(&CreationWord::vacuum());
    }
    total
}

/// Every basis monomial, as torus classes.
pub fn basis_classes() -> impl Iterator<Item = (Monomial, TorusClass)> {
    ORDERED.iter().map(|&m| (m, TorusClass::from(m)))
}


#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use torusring::TOP;

    fn battery() -> Vec<FockState> {
        let mut out = Vec::new();
        for n in 0..=2 {
            for w in crate::hilb::basis_words(n) {
                out.push(FockState::from_word(w, Q::one()));
            }
        }
        out
    }

    #[test]
    fn heisenberg_commutator_on_battery() {
        let states = battery();
        let ms = [-3, -2, -1, 1, 2, 3];
        for (ma, a) in basis_classes().step_by(3) {
            for (mb, b) in basis_classes().step_by(2) {
                for &m in &ms {
                    for &n in &ms {
                        let central = if m + n == 0 { m as i64 * TorusClass::from(ma).wedge(&TorusClass::from(mb)).integrate() } else { 0 };
                        let sg = if ma.is_odd() && mb.is_odd() { -1 } else { 1 };
                        for s in states.iter().step_by(7) {
                            let lhs = apply_q(m, &a, &apply_q(n, &b, s)) - apply_q(n, &b, &apply_q(m, &a, s)).scale(q(sg));
                            assert_eq!(lhs, s.scale(q(central)), "m={m} n={n} a={ma} b={mb} on {s}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn vacuum_pairing_checks_weight() {
        let a = FockState::creation(&[(2, TOP)]);
        let b = FockState::creation(&[(1, TOP)]);
        assert_eq!(vacuum_pairing(&a, &b, 2), Err(FockError::WeightMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn mismatched_degrees_pair_to_zero() {
        let a = FockState::creation(&[(2, Monomial::ONE)]);
        let b = FockState::creation(&[(2, Monomial::ONE)]);
        assert_eq!(vacuum_pairing(&a, &b, 2), Ok(Q::zero()));
    }

    #[test]
    fn weight_one_pairing_is_torus_integral() {
        for (ma, a) in basis_classes() {
            for (mb, b) in basis_classes() {
                let p = pairing(&FockState::creation(&[(1, ma)]), &FockState::creation(&[(1, mb)]));
                assert_eq!(p, q(a.wedge(&b).integrate()));
            }
        }
    }

    #[test]
    fn boundary_of_diagonal_class() {
        let s = FockState::creation(&[(2, TOP), (1, TOP)]);
        assert_eq!(boundary(&s), FockState::creation(&[(1, TOP), (1, TOP), (1, TOP)]));
    }
}
