use proptest::prelude::*;
use sympfin::{GroupAlgebraElement, Ideals, Plane, SympSpace, SymplecticMap};

fn space_and_points() -> impl Strategy<Value = (u8, usize, usize, usize)> {
    prop_oneof![Just(2u8), Just(3u8), Just(5u8)].prop_flat_map(|q| {
        let n = (q as usize).pow(4);
        (Just(q), 1..n, 0..n, 0..n)
    })
}

proptest! {
    #[test]
    fn transvections_preserve_the_form((q, v, a, b) in space_and_points()) {
        let s = SympSpace::standard(q, 4).unwrap();
        let t = SymplecticMap::transvection(&s, &s.point(v));
        let (u, w) = (s.point(a), s.point(b));
        prop_assert_eq!(s.omega(&s.apply(&t.matrix, &u), &s.apply(&t.matrix, &w)), s.omega(&u, &w));
    }

    #[test]
    fn composed_transvections_are_symplectic((q, v, w, _) in space_and_points()) {
        let s = SympSpace::standard(q, 4).unwrap();
        let t1 = SymplecticMap::transvection(&s, &s.point(v));
        let t2 = SymplecticMap::transvection(&s, &s.point(w));
        let prod: Vec<Vec<u8>> = (0..4)
            .map(|i| (0..4).map(|j| (0..4).fold(0, |acc, k| s.field.add(acc, s.field.mul(t1.matrix[i][k], t2.matrix[k][j])))).collect())
            .collect();
        prop_assert!(SymplecticMap::new(&s, prod).is_ok());
    }

    #[test]
    fn triple_criterion_for_isotropy(x in 1usize..16, y in 1usize..16) {
        prop_assume!(x != y);
        let s = SympSpace::standard(2, 4).unwrap();
        let (px, py) = (s.point(x), s.point(y));
        let pz = s.add(&px, &py);
        let plane = Plane::through(&s, &px, &py);
        prop_assert_eq!(s.omega(&px, &py), s.omega(&px, &pz));
        prop_assert_eq!(s.omega(&px, &py), s.omega(&py, &pz));
        prop_assert_eq!(plane.isotropic, s.omega(&px, &py) == 0);
    }
}

#[test]
fn every_plane_sum_lies_in_the_non_isotropic_ideal() {
    for q in [2, 3] {
        let s = SympSpace::standard(q, 4).unwrap();
        let ideals = Ideals::compute(&s);
        for p in ideals.planes.iter().filter(|p| p.isotropic) {
            assert!(ideals.n.contains(&GroupAlgebraElement::sum_over(&s, &p.points).0));
        }
        assert!(ideals.m.same_as(&ideals.n));
    }
}
