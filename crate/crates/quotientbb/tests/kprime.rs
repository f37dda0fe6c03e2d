use num_rational::Rational64;
use quotientbb::gram::{discriminant, is_odd, z2_forms_agree};
use quotientbb::{certify, expected_gram, kprime_gram_symbolic, solve_fujiki, FixedLocus};

#[test]
fn unique_scale_gives_fujiki_constant_eight() {
    let s = solve_fujiki(&kprime_gram_symbolic()).unwrap();
    assert_eq!(s.t, Rational64::new(1, 2));
    assert_eq!(s.c, Rational64::from_integer(8));
    assert_eq!(s.gram, expected_gram());
    assert!(is_odd(&s.gram));
    assert_eq!(discriminant(&s.gram), 6561);
    assert!(z2_forms_agree(s.c));
}

#[test]
fn certification_from_computed_invariants() {
    let model = kummer4::H4Model::build().unwrap();
    let inv = kummer4::involution_invariants(&model).unwrap();
    let cert = certify(&inv, &FixedLocus::default()).unwrap();
    assert_eq!(cert.c_fujiki, 8);
    assert_eq!((cert.balance.lhs, cert.balance.rhs), (60, 60));
    assert_eq!((cert.betti.b2, cert.betti.b3, cert.betti.b4, cert.betti.euler), (8, 0, 90, 108));
    assert_eq!(cert.ddelta, 36);
    assert!(cert.passes());
}
