//! Cohomology of `A^[n]` for small `n`: Betti numbers by enumeration and the
//! integral basis of `A^[2]` with its multiplication words.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use torusring::{Monomial, TorusClass, ORDERED, TOP};

use crate::linalg::det_q;
use crate::mult::{MultExpr, MultWord, Token};
use crate::ops::pairing;
use crate::state::{CreationWord, Factor, FockState};
use crate::Q;

/// Every canonical creation word of weight `n`.
pub fn basis_words(n: u32) -> Vec<CreationWord> {
    fn rec(rest: u32, min: (u8, usize), acc: &mut Vec<Factor>, out: &mut Vec<CreationWord>) {
        if rest == 0 {
            out.push(CreationWord::from_ordered(acc).expect("canonical").1);
            return;
        }
        for m in min.0..=rest as u8 {
            for (idx, &c) in ORDERED.iter().enumerate() {
                if (m, idx) < min || ((m, idx) == min && c.is_odd() && !acc.is_empty()) {
                    continue;
                }
                acc.push(Factor::new(m, c));
                rec(rest - m as u32, (m, idx), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, (1, 0), &mut Vec::new(), &mut out);
    out
}

/// `dim H^d(A^[n], Q)` for `d = 0..=4n`, by counting canonical creation words.
pub fn goettsche_betti(n: u32) -> Vec<usize> {
    let mut b = vec![0; 4 * n as usize + 1];
    for w in basis_words(n) {
        b[w.degree() as usize] += 1;
    }
    b
}

/// The degree-1 generator `a_i`, `i` in `1..=4`.
pub fn gen(i: usize) -> TorusClass {
    TorusClass::generator(i)
}

/// The dual class `a_i*` with `∫ a_i* a_i = 1`.
pub fn star(i: usize) -> TorusClass {
    let (s, d) = Monomial::generator(i).left_dual();
    TorusClass::from(d) * s
}

/// The degree-2 monomials `b_1..b_6` in lexicographic order.
pub fn b_classes() -> Vec<Monomial> {
    ORDERED.iter().copied().filter(|m| m.degree() == 2).collect()
}

pub fn st(factors: &[(u8, TorusClass)]) -> FockState {
    FockState::creation_classes(factors)
}

fn half() -> Q {
    Q::new(1, 2)
}

fn one() -> TorusClass {
    TorusClass::one()
}

fn x() -> TorusClass {
    TorusClass::from(TOP)
}

fn g0(c: TorusClass) -> Token {
    Token::G(0, c)
}

fn g(k: u32, c: TorusClass) -> Token {
    Token::G(k, c)
}

/// One basis class together with its multiplication word.
#[derive(Clone, Debug)]
pub struct BasisEntry {
    pub degree: u32,
    pub label: String,
    pub class: FockState,
    pub word: MultExpr,
}

fn entry(label: String, class: FockState, word: MultExpr) -> BasisEntry {
    let degree = class.bidegree().expect("homogeneous").1;
    BasisEntry { degree, label, class, word }
}

fn w(tokens: Vec<Token>) -> MultExpr {
    MultExpr::word(MultWord(tokens))
}

/// The unit of `A^[n]`: `q_1(1)^n / n! |0>`.
pub fn unit(n: u32) -> FockState {
    let f: i64 = (1..=n as i64).product();
    st(&vec![(1, one()); n as usize]).scale(Q::new(1, f))
}

/// The 144 integral basis classes of `A^[2]` with multiplication words.
/// The degree-4 row `q_1(1)q_1(x)|0>` with word `G0(x)` completes the count to 44.
pub fn hilb_basis_a2() -> Vec<BasisEntry> {
    let bs = b_classes();
    let b = |m: Monomial| TorusClass::from(m);
    let mut out = Vec::new();
    out.push(entry("1/2 q1(1)^2".into(), unit(2), w(vec![])));
    for i in 1..=4 {
        out.push(entry(format!("q1(1)q1(a{i})"), st(&[(1, one()), (1, gen(i))]), w(vec![g0(gen(i))])));
    }
    out.push(entry("1/2 q2(1)".into(), st(&[(2, one())]).scale(half()), w(vec![Token::D])));
    for i in 1..=4 {
        for j in i + 1..=4 {
            out.push(entry(format!("q1(a{i})q1(a{j})"), st(&[(1, gen(i)), (1, gen(j))]), w(vec![g0(gen(i)), g0(gen(j))])));
        }
    }
    for &m in &bs {
        out.push(entry(format!("q1(1)q1({m})"), st(&[(1, one()), (1, b(m))]), w(vec![g0(b(m))])));
    }
    for i in 1..=4 {
        out.push(entry(
            format!("1/2 q2(a{i})"),
            st(&[(2, gen(i))]).scale(half()),
            MultExpr::scaled(-Q::one(), MultWord(vec![g(1, gen(i))])),
        ));
    }
    for i in 1..=4 {
        for &m in &bs {
            out.push(entry(format!("q1(a{i})q1({m})"), st(&[(1, gen(i)), (1, b(m))]), w(vec![g0(gen(i)), g0(b(m))])));
        }
    }
    for i in 1..=4 {
        out.push(entry(format!("q1(1)q1(a{i}*)"), st(&[(1, one()), (1, star(i))]), w(vec![g0(star(i))])));
    }
    for &m in &bs {
        let class = (st(&[(1, b(m)), (1, b(m))]) - st(&[(2, b(m))])).scale(half());
        let word = MultExpr(vec![
            (half(), MultWord(vec![g0(b(m)), g0(b(m))])),
            (Q::one(), MultWord(vec![g(1, b(m))])),
        ]);
        out.push(entry(format!("1/2 q1({m})^2 - 1/2 q2({m})"), class, word));
    }
    for i in 1..=4 {
        for j in 1..=4 {
            out.push(entry(format!("q1(a{i})q1(a{j}*)"), st(&[(1, gen(i)), (1, star(j))]), w(vec![g0(gen(i)), g0(star(j))])));
        }
    }
    for (p, &m) in bs.iter().enumerate() {
        for &n in &bs[p..] {
            out.push(entry(format!("q1({m})q1({n})"), st(&[(1, b(m)), (1, b(n))]), w(vec![g0(b(m)), g0(b(n))])));
        }
    }
    out.push(entry("q1(1)q1(x)".into(), st(&[(1, one()), (1, x())]), w(vec![g0(x())])));
    for i in 1..=4 {
        out.push(entry(
            format!("q2(a{i}*)"),
            st(&[(2, star(i))]),
            MultExpr::scaled(Q::from_integer(-2), MultWord(vec![g(1, star(i))])),
        ));
    }
    for i in 1..=4 {
        for &m in &bs {
            out.push(entry(format!("q1(a{i}*)q1({m})"), st(&[(1, star(i)), (1, b(m))]), w(vec![g0(star(i)), g0(b(m))])));
        }
    }
    for i in 1..=4 {
        out.push(entry(format!("q1(a{i})q1(x)"), st(&[(1, gen(i)), (1, x())]), w(vec![g0(gen(i)), g0(x())])));
    }
    out.push(entry(
        "q2(x)".into(),
        st(&[(2, x())]),
        MultExpr::scaled(Q::from_integer(-2), MultWord(vec![g(1, x())])),
    ));
    for i in 1..=4 {
        for j in i + 1..=4 {
            out.push(entry(format!("q1(a{i}*)q1(a{j}*)"), st(&[(1, star(i)), (1, star(j))]), w(vec![g0(star(i)), g0(star(j))])));
        }
    }
    for &m in &bs {
        out.push(entry(format!("q1({m})q1(x)"), st(&[(1, b(m)), (1, x())]), w(vec![g0(b(m)), g0(x())])));
    }
    for i in 1..=4 {
        out.push(entry(format!("q1(a{i}*)q1(x)"), st(&[(1, star(i)), (1, x())]), w(vec![g0(star(i)), g0(x())])));
    }
    out.push(entry("q1(x)^2".into(), st(&[(1, x()), (1, x())]), w(vec![g0(x()), g0(x())])));
    out
}

/// How a multiplication word acts on the unit compared with its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordMatch {
    Exact,
    Negated,
    Differs,
}

pub fn word_match(e: &BasisEntry) -> WordMatch {
    let image = e.word.apply(&unit(2));
    if image == e.class {
        WordMatch::Exact
    } else if image == -e.class.clone() {
        WordMatch::Negated
    } else {
        WordMatch::Differs
    }
}

/// Gram block between the degree-`d` and degree-`(8-d)` classes.
#[derive(Clone, Debug)]
pub struct GramBlock {
    pub degree: u32,
    pub gram: Vec<Vec<Q>>,
    pub det: BigRational,
    pub signed_permutation: bool,
}

impl GramBlock {
    pub fn unimodular(&self) -> bool {
        self.det.abs() == BigRational::one()
    }
}

pub fn a2_gram_blocks(basis: &[BasisEntry]) -> Vec<GramBlock> {
    (0..=8)
        .map(|d| {
            let rows: Vec<&BasisEntry> = basis.iter().filter(|e| e.degree == d).collect();
            let cols: Vec<&BasisEntry> = basis.iter().filter(|e| e.degree == 8 - d).collect();
            let gram: Vec<Vec<Q>> = rows.iter().map(|r| cols.iter().map(|c| pairing(&r.class, &c.class)).collect()).collect();
            let det = if rows.len() == cols.len() { det_q(&gram) } else { BigRational::zero() };
            let signed_permutation = gram.iter().all(|r| {
                r.iter().filter(|q| !q.is_zero()).count() == 1 && r.iter().all(|q| q.is_zero() || q.abs() == Q::one())
            });
            GramBlock { degree: d, gram, det, signed_permutation }
        })
        .collect()
}

/// True when every coefficient of the state is an integer.
pub fn is_integral(s: &FockState) -> bool {
    s.terms().all(|(_, c)| c.is_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn betti_numbers_by_enumeration() {
        assert_eq!(goettsche_betti(1), vec![1, 4, 6, 4, 1]);
        assert_eq!(goettsche_betti(2), vec![1, 4, 13, 32, 44, 32, 13, 4, 1]);
        let b3 = goettsche_betti(3);
        assert_eq!(b3[2], 6 + 4 * 3 / 2 + 1);
        assert_eq!(b3[4], 103);
    }

    #[test]
    fn a2_table_has_144_classes_in_betti_shape() {
        let basis = hilb_basis_a2();
        let mut counts = vec![0; 9];
        for e in &basis {
            counts[e.degree as usize] += 1;
            assert_eq!(e.class.weight(), Some(2));
        }
        assert_eq!(counts, goettsche_betti(2));
    }

    #[test]
    fn a2_intersection_blocks_are_unimodular() {
        let blocks = a2_gram_blocks(&hilb_basis_a2());
        assert!(blocks.iter().all(GramBlock::unimodular));
        let non_perm: Vec<u32> = blocks.iter().filter(|b| !b.signed_permutation).map(|b| b.degree).collect();
        assert_eq!(non_perm, vec![4]);
    }

    #[test]
    fn a2_dual_pairings() {
        for i in 1..=4 {
            let p = pairing(&st(&[(2, gen(i))]), &st(&[(2, star(i))]));
            assert_eq!(p, Q::from_integer(2));
            let p = pairing(&st(&[(1, one()), (1, star(i))]), &st(&[(1, x()), (1, gen(i))]));
            assert_eq!(p, Q::one());
        }
    }

    #[test]
    fn table_words_act_on_the_unit() {
        let basis = hilb_basis_a2();
        let find = |l: &str| basis.iter().find(|e| e.label == l).unwrap();
        assert_eq!(word_match(find("1/2 q2(1)")), WordMatch::Negated);
        assert_eq!(word_match(find("1/2 q1(a1a2)^2 - 1/2 q2(a1a2)")), WordMatch::Exact);
        assert_eq!(word_match(find("1/2 q2(a3)")), WordMatch::Exact);
        assert_eq!(word_match(find("q2(x)")), WordMatch::Exact);
        assert_eq!(word_match(find("q1(x)^2")), WordMatch::Exact);
    }

    #[test]
    fn word_images_form_a_unimodular_basis_too() {
        let basis: Vec<BasisEntry> = hilb_basis_a2()
            .into_iter()
            .map(|e| {
                let class = e.word.apply(&unit(2));
                BasisEntry { class, ..e }
            })
            .collect();
        assert!(a2_gram_blocks(&basis).iter().all(GramBlock::unimodular));
    }
}
