//! Orbits of the group generated by g₁ = diag(ξ, 1), the swap g₂ and the
//! shear g₃ on the planes of E_ξ[2] × E_ξ[2] ≅ F₂⁴.

use std::collections::{BTreeMap, BTreeSet};

/// A point of E_ξ[2] in the basis (1, ξ) of Λ₀/2Λ₀.
pub type Half = [u8; 2];
/// A point (z₁, z₂) of V = E_ξ[2] × E_ξ[2].
pub type Point = (Half, Half);
/// A plane as the unordered triple of its nonzero points.
pub type Triple = BTreeSet<Point>;

/// ξ² = c₁ξ + c₀ with (c₀, c₁) = (−1, 1).
pub const XI_MINIMAL: (i64, i64) = (-1, 1);

/// Matrix of multiplication by ξ on Λ₀/2Λ₀, in coordinates a + bξ ↦ a' + b'ξ.
pub fn xi_matrix() -> [[u8; 2]; 2] {
    let (c0, c1) = XI_MINIMAL;
    // ξ(a + bξ) = c₀ b + (a + c₁ b) ξ
    let r = |k: i64| k.rem_euclid(2) as u8;
    [[0, r(c0)], [1, r(c1)]]
}

fn mul_xi(z: Half) -> Half {
    let m = xi_matrix();
    [(m[0][0] * z[0] + m[0][1] * z[1]) % 2, (m[1][0] * z[0] + m[1][1] * z[1]) % 2]
}

fn add(a: Half, b: Half) -> Half {
    [a[0] ^ b[0], a[1] ^ b[1]]
}

pub const ZERO: Half = [0, 0];

/// The nonzero points x₁ = 1, x₂ = ξ, x₃ = ξ², cyclically permuted by ξ.
pub fn nonzero_halves() -> [Half; 3] {
    let x1 = [1, 0];
    let x2 = mul_xi(x1);
    [x1, x2, mul_xi(x2)]
}

pub fn g1(p: Point) -> Point {
    (mul_xi(p.0), p.1)
}

pub fn g2(p: Point) -> Point {
    (p.1, p.0)
}

pub fn g3(p: Point) -> Point {
    (add(p.0, p.1), p.1)
}

pub fn generators() -> [fn(Point) -> Point; 3] {
    [g1, g2, g3]
}

fn all_points() -> Vec<Point> {
    let halves = [[0, 0], [1, 0], [0, 1], [1, 1]];
    halves.iter().flat_map(|&a| halves.iter().map(move |&b| (a, b))).collect()
}

fn padd(x: Point, y: Point) -> Point {
    (add(x.0, y.0), add(x.1, y.1))
}

/// The 35 triples {x, y, z} of nonzero points with x + y + z = 0.
pub fn triples() -> Vec<Triple> {
    let nonzero: Vec<Point> = all_points().into_iter().filter(|&p| p != (ZERO, ZERO)).collect();
    let mut out = BTreeSet::new();
    for &x in &nonzero {
        for &y in &nonzero {
            if x != y {
                out.insert(Triple::from([x, y, padd(x, y)]));
            }
        }
    }
    out.into_iter().collect()
}

pub fn image(g: fn(Point) -> Point, t: &Triple) -> Triple {
    t.iter().map(|&p| g(p)).collect()
}

/// Orbits of ⟨g₁, g₂, g₃⟩ on the triples, sorted by size.
pub fn gxi_orbits() -> Vec<Vec<Triple>> {
    let all = triples();
    let mut orbit_of: BTreeMap<Triple, usize> = BTreeMap::new();
    let mut orbits: Vec<Vec<Triple>> = Vec::new();
    for t in &all {
        if orbit_of.contains_key(t) {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![t.clone()];
        orbit_of.insert(t.clone(), id);
        let mut i = 0;
        while i < members.len() {
            for g in generators() {
                let img = image(g, &members[i]);
                if !orbit_of.contains_key(&img) {
                    orbit_of.insert(img.clone(), id);
                    members.push(img);
                }
            }
            i += 1;
        }
        orbits.push(members);
    }
    orbits.sort_by_key(|o| o.len());
    orbits
}

/// The five triples listed for the small orbit.
pub fn expected_small_orbit() -> BTreeSet<Triple> {
    let [x1, x2, x3] = nonzero_halves();
    BTreeSet::from([
        Triple::from([(ZERO, x1), (ZERO, x2), (ZERO, x3)]),
        Triple::from([(x1, ZERO), (x2, ZERO), (x3, ZERO)]),
        Triple::from([(x1, x1), (x2, x2), (x3, x3)]),
        Triple::from([(x1, x2), (x2, x3), (x3, x1)]),
        Triple::from([(x1, x3), (x2, x1), (x3, x2)]),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_permutes_nonzero_points_cyclically() {
        let [x1, x2, x3] = nonzero_halves();
        assert_eq!(mul_xi(x3), x1);
        assert!(x1 != x2 && x2 != x3 && x1 != x3);
    }

    #[test]
    fn thirty_five_triples() {
        assert_eq!(triples().len(), 35);
    }

    #[test]
    fn generators_are_bijective_on_triples() {
        let all: BTreeSet<Triple> = triples().into_iter().collect();
        for g in generators() {
            let imgs: BTreeSet<Triple> = all.iter().map(|t| image(g, t)).collect();
            assert_eq!(imgs, all);
        }
    }

    #[test]
    fn orbit_sizes_and_small_orbit() {
        let orbits = gxi_orbits();
        assert_eq!(orbits.iter().map(|o| o.len()).collect::<Vec<_>>(), vec![5, 30]);
        let small: BTreeSet<Triple> = orbits[0].iter().cloned().collect();
        assert_eq!(small, expected_small_orbit());
    }
}
