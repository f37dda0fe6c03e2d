//! The Kummer fourfold `K_2(A) ⊂ A^[3]` seen through `[K] = α_1α_2α_3α_4`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use torusring::{Monomial, TorusClass, TOP};

use crate::error::FockError;
use crate::hilb::{b_classes, gen, star, st, unit};
use crate::linalg::{det_q, state_rank};
use crate::mult::{apply_mult_word, MultExpr, MultWord, Token};
use crate::ops::{boundary, pairing};
use crate::state::FockState;
use crate::Q;

pub const KUMMER_WEIGHT: u32 = 3;

/// The word `G0(a1)G0(a2)G0(a3)G0(a4)` multiplying by `[K_2(A)]`.
pub fn kummer_word() -> MultWord {
    MultWord((1..=4).map(|i| Token::G(0, gen(i))).collect())
}

pub fn apply_kummer(s: &FockState) -> FockState {
    apply_mult_word(&kummer_word(), s)
}

fn check_weight(s: &FockState) -> Result<(), FockError> {
    match s.terms().map(|(w, _)| w.weight()).find(|&n| n != KUMMER_WEIGHT) {
        Some(found) => Err(FockError::WeightMismatch { expected: KUMMER_WEIGHT, found }),
        None => Ok(()),
    }
}

/// `∫_{A^[3]} [K]·α·β`, which equals `∫_K θ*α · θ*β`.
pub fn kummer_pairing(alpha: &FockState, beta: &FockState) -> Result<Q, FockError> {
    check_weight(alpha)?;
    check_weight(beta)?;
    Ok(pairing(alpha, &apply_kummer(beta)))
}

/// Whether `α` lies in the annihilator of `[K]`, i.e. in `ker θ*`.
pub fn annihilator_test(alpha: &FockState) -> bool {
    apply_kummer(alpha).is_zero()
}

/// Multiplication by `δ = θ*`-preimage of `e`; on states this is `-d`.
pub fn delta_times(s: &FockState) -> FockState {
    -boundary(s)
}

/// Preimage of `j(b)`: `½ q_1(b) q_1(1)^2 |0>`.
pub fn j_preimage(b: &TorusClass) -> FockState {
    st(&[(1, b.clone()), (1, TorusClass::one()), (1, TorusClass::one())]).scale(Q::new(1, 2))
}

/// Preimage of `e`: `½ q_2(1) q_1(1) |0>`.
pub fn e_preimage() -> FockState {
    st(&[(2, TorusClass::one()), (1, TorusClass::one())]).scale(Q::new(1, 2))
}

/// Degree-2 classes of `K_2(A)` named as in the lattice model.
pub const H2_NAMES: [&str; 7] = ["u1", "u2", "v1", "v2", "w1", "w2", "e"];

/// Torus class `b` with `j(b)` equal to the named class; `None` for `e`.
pub fn h2_torus_class(name: &str) -> Option<TorusClass> {
    let pair = match name {
        "u1" => [1, 2],
        "u2" => [3, 4],
        "v1" => [1, 3],
        "v2" => [4, 2],
        "w1" => [1, 4],
        "w2" => [2, 3],
        _ => return None,
    };
    Some(TorusClass::product_of(&pair))
}

/// Cup product with the named degree-2 class, as an operator on `A^[3]`.
pub fn h2_times(name: &str, s: &FockState) -> FockState {
    match h2_torus_class(name) {
        Some(b) => crate::mult::apply_g(0, &b, s),
        None => delta_times(s),
    }
}

/// The 111 universal degree-4 generators, as words applied to the unit.
pub fn degree4_generators() -> Vec<(String, MultExpr)> {
    let g0 = |c: TorusClass| Token::G(0, c);
    let g1 = |c: TorusClass| Token::G(1, c);
    let one = TorusClass::one;
    let word = |t: Vec<Token>| MultExpr::word(MultWord(t));
    let bs: Vec<TorusClass> = b_classes().into_iter().map(TorusClass::from).collect();
    let mut out = Vec::new();
    out.push(("G0(a1)G0(a2)G0(a3)G0(a4)".to_string(), word((1..=4).map(|i| g0(gen(i))).collect())));
    for i in 1..=4 {
        for j in i + 1..=4 {
            for b in &bs {
                out.push((format!("G0(a{i})G0(a{j})G0({b})"), word(vec![g0(gen(i)), g0(gen(j)), g0(b.clone())])));
            }
        }
    }
    for i in 1..=4 {
        for j in 1..=4 {
            out.push((format!("G0(a{i})G0(a{j}*)"), word(vec![g0(gen(i)), g0(star(j))])));
        }
    }
    for p in 0..bs.len() {
        for q in p..bs.len() {
            out.push((format!("G0({})G0({})", bs[p], bs[q]), word(vec![g0(bs[p].clone()), g0(bs[q].clone())])));
        }
    }
    out.push(("G0(x)".to_string(), word(vec![g0(TorusClass::from(TOP))])));
    for i in 1..=4 {
        for j in i + 1..=4 {
            out.push((format!("G0(a{i})G0(a{j})G1(1)"), word(vec![g0(gen(i)), g0(gen(j)), g1(one())])));
        }
    }
    for i in 1..=4 {
        for j in 1..=4 {
            out.push((format!("G0(a{i})G1(a{j})"), word(vec![g0(gen(i)), g1(gen(j))])));
        }
    }
    for b in &bs {
        out.push((format!("G0({b})G1(1)"), word(vec![g0(b.clone()), g1(one())])));
    }
    for b in &bs {
        out.push((format!("G1({b})"), word(vec![g1(b.clone())])));
    }
    out.push(("G1(1)^2".to_string(), word(vec![g1(one()), g1(one())])));
    out.push(("G2(1)".to_string(), word(vec![Token::G(2, one())])));
    out
}

/// Dimension counts for the degree-4 generators on `A^[3]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSummary {
    pub generators: usize,
    pub rank: usize,
    pub with_g0_of_generator: usize,
    pub annihilated_with_g0: usize,
    pub image_rank: usize,
}

pub fn generator_summary() -> GeneratorSummary {
    let gens = degree4_generators();
    let u = unit(KUMMER_WEIGHT);
    let classes: Vec<FockState> = gens.iter().map(|(_, w)| w.apply(&u)).collect();
    let with_g0: Vec<usize> = gens
        .iter()
        .enumerate()
        .filter(|(_, (_, w))| w.0.iter().all(|(_, mw)| mw.contains_g0_of_generator()))
        .map(|(i, _)| i)
        .collect();
    let annihilated_with_g0 = with_g0.iter().filter(|&&i| annihilator_test(&classes[i])).count();
    let images: Vec<FockState> = classes.iter().map(apply_kummer).collect();
    GeneratorSummary {
        generators: gens.len(),
        rank: state_rank(&classes),
        with_g0_of_generator: with_g0.len(),
        annihilated_with_g0,
        image_rank: state_rank(&images),
    }
}

/// One row of the table of preimages under `θ*`.
#[derive(Clone, Debug)]
pub struct ThetaEntry {
    pub degree: u32,
    pub label: String,
    pub name: Option<String>,
    pub state: FockState,
}

fn theta(label: String, name: Option<&str>, state: FockState) -> ThetaEntry {
    let degree = state.bidegree().expect("homogeneous").1;
    ThetaEntry { degree, label, name: name.map(str::to_string), state }
}

/// Preimages of a basis of `im θ*` in degrees 0, 2, 3, 4, 5, 6, 8. The top
/// class is represented by `q_1(x)^2 q_1(1)|0>`, the weight-3 class of degree 8.
pub fn theta_image_table() -> Vec<ThetaEntry> {
    let one = TorusClass::one;
    let x = || TorusClass::from(TOP);
    let bs: Vec<Monomial> = b_classes();
    let half = Q::new(1, 2);
    let mut out = vec![theta("1/6 q1(1)^3".into(), Some("1"), unit(KUMMER_WEIGHT))];
    for &b in &bs {
        let label = format!("1/2 q1({b})q1(1)^2");
        out.push(theta(label, None, j_preimage(&TorusClass::from(b))));
    }
    out.push(theta("1/2 q2(1)q1(1)".into(), Some("e"), e_preimage()));
    for i in 1..=4 {
        out.push(theta(format!("1/2 q1(a{i}*)q1(1)^2"), None, st(&[(1, star(i)), (1, one()), (1, one())]).scale(half)));
    }
    for i in 1..=4 {
        out.push(theta(format!("1/2 q2(a{i})q1(1)"), None, st(&[(2, gen(i)), (1, one())]).scale(half)));
    }
    let excluded = (Monomial(0b0011), Monomial(0b1100));
    for p in 0..bs.len() {
        for q in p..bs.len() {
            if (bs[p], bs[q]) == excluded {
                continue;
            }
            let s = st(&[(1, bs[p].into()), (1, bs[q].into()), (1, one())]);
            out.push(theta(format!("q1({})q1({})q1(1)", bs[p], bs[q]), None, s));
        }
    }
    out.push(theta("1/2 q1(x)q1(1)^2".into(), Some("Y_p"), st(&[(1, x()), (1, one()), (1, one())]).scale(half)));
    for &b in &bs {
        let s = (st(&[(1, b.into()), (1, b.into()), (1, one())]) - st(&[(2, b.into()), (1, one())])).scale(half);
        out.push(theta(format!("1/2 (q1({b})^2 - q2({b}))q1(1)"), None, s));
    }
    out.push(theta("1/3 q3(1)".into(), Some("W"), st(&[(3, one())]).scale(Q::new(1, 3))));
    for i in 1..=4 {
        let j = if i == 1 { 2 } else { 1 };
        let s = st(&[(1, TorusClass::product_of(&[i, j])), (1, star(j)), (1, one())]);
        out.push(theta(format!("q1(a{i}a{j})q1(a{j}*)q1(1)"), None, s));
    }
    for i in 1..=4 {
        out.push(theta(format!("q2(a{i}*)q1(1)"), None, st(&[(2, star(i)), (1, one())])));
    }
    for i in 1..=4 {
        for j in i + 1..=4 {
            out.push(theta(format!("q1(a{i}*)q1(a{j}*)q1(1)"), None, st(&[(1, star(i)), (1, star(j)), (1, one())])));
        }
    }
    out.push(theta("q2(x)q1(1)".into(), None, st(&[(2, x()), (1, one())])));
    out.push(theta("q1(x)^2q1(1)".into(), Some("top class"), st(&[(1, x()), (1, x()), (1, one())])));
    out
}

/// `Kummer` pairing Gram between entries of degree `d` and `8 - d`.
#[derive(Clone, Debug)]
pub struct ThetaBlock {
    pub degree: u32,
    pub rows: usize,
    pub gram: Vec<Vec<Q>>,
    pub det: BigRational,
}

impl ThetaBlock {
    pub fn unimodular(&self) -> bool {
        self.det == BigRational::one() || self.det == -BigRational::one()
    }
}

pub fn theta_blocks(table: &[ThetaEntry]) -> Vec<ThetaBlock> {
    [0u32, 2, 3, 4]
        .iter()
        .map(|&d| {
            let rows: Vec<&ThetaEntry> = table.iter().filter(|e| e.degree == d).collect();
            let cols: Vec<&ThetaEntry> = table.iter().filter(|e| e.degree == 8 - d).collect();
            let kcols: Vec<FockState> = cols.iter().map(|c| apply_kummer(&c.state)).collect();
            let gram: Vec<Vec<Q>> = rows.iter().map(|r| kcols.iter().map(|k| pairing(&r.state, k)).collect()).collect();
            let det = if rows.len() == cols.len() { det_q(&gram) } else { BigRational::zero() };
            ThetaBlock { degree: d, rows: rows.len(), gram, det }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn one() -> TorusClass {
        TorusClass::one()
    }

    #[test]
    fn odd_dual_pairings_have_unit_magnitude() {
        for i in 1..=4 {
            for j in (1..=4).filter(|&j| j != i) {
                let a = st(&[(1, star(i)), (1, one()), (1, one())]).scale(Q::new(1, 2));
                let b = st(&[(1, TorusClass::product_of(&[i, j])), (1, star(j)), (1, one())]);
                assert_eq!(kummer_pairing(&a, &b).unwrap(), -Q::one());
            }
            let a = st(&[(2, gen(i)), (1, one())]).scale(Q::new(1, 2));
            let b = st(&[(2, star(i)), (1, one())]);
            assert_eq!(kummer_pairing(&a, &b).unwrap(), Q::one());
        }
    }

    #[test]
    fn kummer_pairing_rejects_other_weights() {
        let a = st(&[(2, one())]);
        assert!(matches!(kummer_pairing(&a, &a), Err(FockError::WeightMismatch { expected: 3, found: 2 })));
    }

    #[test]
    fn annihilator_examples() {
        let s = crate::mult::apply_g(0, &gen(1), &st(&[(1, gen(2)), (1, one()), (1, one())]));
        assert!(annihilator_test(&s));
        assert!(!annihilator_test(&st(&[(3, one())])));
    }

    #[test]
    fn degree4_generator_counts() {
        let s = generator_summary();
        assert_eq!(
            s,
            GeneratorSummary { generators: 111, rank: 103, with_g0_of_generator: 75, annihilated_with_g0: 75, image_rank: 28 }
        );
    }

    #[test]
    fn theta_blocks_unimodular_away_from_degree_four() {
        let table = theta_image_table();
        assert_eq!(table.len(), 1 + 7 + 8 + 28 + 8 + 7 + 1);
        for b in theta_blocks(&table) {
            if b.degree == 4 {
                assert_eq!(b.det, BigRational::from_integer(BigInt::from(3u64.pow(22))));
            } else {
                assert!(b.unimodular(), "degree {}", b.degree);
            }
        }
        assert_eq!(theta_blocks(&table)[0].gram, vec![vec![Q::one()]]);
    }

    #[test]
    fn named_theta_entries() {
        let table = theta_image_table();
        let by = |n: &str| table.iter().find(|e| e.name.as_deref() == Some(n)).unwrap();
        assert_eq!(by("W").state, st(&[(3, one())]).scale(Q::new(1, 3)));
        assert_eq!(by("e").state, delta_times(&crate::hilb::unit(3)));
    }

    #[test]
    fn fujiki_side_values() {
        let u = crate::hilb::unit(3);
        let e2 = delta_times(&delta_times(&u));
        let ke2 = apply_kummer(&e2);
        assert_eq!(pairing(&e2, &ke2), Q::from_integer(324));
        let u1u2 = h2_times("u1", &h2_times("u2", &u));
        assert_eq!(pairing(&u1u2, &ke2), Q::from_integer(-18));
        assert_eq!(pairing(&st(&[(3, one())]), &ke2), Q::from_integer(243));
    }
}
