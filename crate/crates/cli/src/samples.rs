//! Seeded random samples of the algebraic properties, runnable without golden values.

use fock::hilb::basis_words;
use fock::ops::{apply_q, pairing};
use fock::{FockState, Q};
use intlat::{index, int, mat, qmat, saturate, snf, Matrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sympfin::{SympSpace, SymplecticMap};
use torusring::{TorusClass, ORDERED};

pub const SAMPLES: usize = 24;

fn random_class(rng: &mut ChaCha8Rng) -> TorusClass {
    let mut c = TorusClass::zero();
    for m in ORDERED {
        c.set(m, rng.gen_range(-3..=3));
    }
    c
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    let m: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-6..=6)).collect()).collect();
    mat(&m)
}

/// Number of basis pairs violating `xy = (−1)^{|x||y|} yx`.
pub fn supercommutativity_failures() -> usize {
    let mut bad = 0;
    for x in ORDERED {
        for y in ORDERED {
            let (cx, cy) = (TorusClass::from(x), TorusClass::from(y));
            let sign = if x.is_odd() && y.is_odd() { -1 } else { 1 };
            if cx.wedge(&cy) != cy.wedge(&cx) * sign {
                bad += 1;
            }
        }
    }
    bad
}

pub fn associativity_failures(rng: &mut ChaCha8Rng) -> usize {
    (0..SAMPLES)
        .filter(|_| {
            let (a, b, c) = (random_class(rng), random_class(rng), random_class(rng));
            a.wedge(&b).wedge(&c) != a.wedge(&b.wedge(&c))
        })
        .count()
}

/// `<q_m(a)α, β> = ±<α, q_{−m}(a)β>` on random basis states of weight 3.
pub fn adjointness_failures(rng: &mut ChaCha8Rng) -> usize {
    let targets = basis_words(3);
    (0..SAMPLES)
        .filter(|_| {
            let m: u8 = rng.gen_range(1..=2);
            let a = ORDERED[rng.gen_range(0..ORDERED.len())];
            let sources = basis_words(3 - m as u32);
            let alpha_word = sources[rng.gen_range(0..sources.len())].clone();
            let alpha_odd = alpha_word.is_odd();
            let alpha = FockState::from_word(alpha_word, Q::from_integer(1));
            let beta = FockState::from_word(targets[rng.gen_range(0..targets.len())].clone(), Q::from_integer(1));
            let x = TorusClass::from(a);
            let sign = if a.is_odd() && alpha_odd { -1 } else { 1 } * if m % 2 == 1 { -1 } else { 1 };
            let lhs = pairing(&apply_q(m as i32, &x, &alpha), &beta);
            let rhs = pairing(&alpha, &apply_q(-(m as i32), &x, &beta)) * Q::from_integer(sign);
            lhs != rhs
        })
        .count()
}

pub fn smith_failures(rng: &mut ChaCha8Rng) -> usize {
    (0..SAMPLES)
        .filter(|_| {
            let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
            let m = random_matrix(rng, r, c);
            !snf(&m).verify(&m)
        })
        .count()
}

pub fn saturation_failures(rng: &mut ChaCha8Rng) -> usize {
    let ambient = qmat(&intlat::identity(4));
    (0..SAMPLES)
        .filter(|_| {
            let sub = qmat(&random_matrix(rng, 3, 4));
            let Ok(once) = saturate(&sub, &ambient) else { return true };
            let Ok(twice) = saturate(&once, &ambient) else { return true };
            if once.is_empty() {
                return !twice.is_empty();
            }
            !matches!(index(&twice, &once, &ambient), Ok(r) if r.via_snf == int(1))
        })
        .count()
}

/// Index by Smith form against the square root of the discriminant ratio.
pub fn discriminant_index_failures(rng: &mut ChaCha8Rng) -> usize {
    let mut bad = 0;
    let mut tried = 0;
    while tried < SAMPLES {
        let sub = random_matrix(rng, 3, 3);
        if intlat::bareiss_det(&sub) == int(0) {
            continue;
        }
        tried += 1;
        let diag: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| if i == j { rng.gen_range(1..5) } else { 0 }).collect()).collect();
        let report = index(&qmat(&sub), &qmat(&intlat::identity(3)), &qmat(&mat(&diag)));
        if !matches!(report, Ok(r) if r.via_discr.as_ref() == Some(&r.via_snf)) {
            bad += 1;
        }
    }
    bad
}

pub fn transvection_failures(rng: &mut ChaCha8Rng, q: u8) -> usize {
    let s = SympSpace::standard(q, 4).expect("supported field");
    let n = s.point_count();
    (0..SAMPLES)
        .filter(|_| {
            let t = SymplecticMap::transvection(&s, &s.point(rng.gen_range(1..n)));
            let (u, w) = (s.point(rng.gen_range(0..n)), s.point(rng.gen_range(0..n)));
            s.omega(&s.apply(&t.matrix, &u), &s.apply(&t.matrix, &w)) != s.omega(&u, &w)
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn samples_pass_for_a_fixed_seed() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(supercommutativity_failures(), 0);
        assert_eq!(associativity_failures(&mut rng), 0);
        assert_eq!(smith_failures(&mut rng), 0);
        assert_eq!(saturation_failures(&mut rng), 0);
        assert_eq!(discriminant_index_failures(&mut rng), 0);
        assert_eq!(transvection_failures(&mut rng, 3), 0);
    }
}
