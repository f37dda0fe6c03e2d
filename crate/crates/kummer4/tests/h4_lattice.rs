use std::sync::OnceLock;

use intlat::EquivariantInvariants;
use kummer4::{appendix_verify, certify, class_identities, fock_crosscheck, involution_invariants, H4Model};
use num_bigint::BigInt;

fn model() -> &'static H4Model {
    static MODEL: OnceLock<H4Model> = OnceLock::new();
    MODEL.get_or_init(|| H4Model::build().expect("assembly"))
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn pow(p: i64, k: u32) -> BigInt {
    big(p).pow(k)
}

fn repeated(x: i64, n: usize) -> Vec<BigInt> {
    vec![big(x); n]
}

#[test]
fn certificate_matches_expected_invariants() {
    let c = certify(model()).unwrap();
    assert_eq!(c.discr_sym, pow(2, 14) * pow(3, 38));
    assert_eq!(c.discr_pi_prime, pow(3, 84));
    assert_eq!(c.discr_sym_sat, pow(3, 22));
    assert_eq!(c.discr_pi_sat, pow(3, 22));
    assert_eq!(c.det_full, big(1));
    assert!(c.full_is_integral);
    let mut sym_q = repeated(2, 7);
    sym_q.extend(repeated(3, 8));
    assert_eq!(c.sym_quotient, sym_q);
    assert_eq!(c.pi_quotient, repeated(3, 31));
    let mut full_q = repeated(3, 19);
    full_q.push(big(27));
    assert_eq!(c.full_quotient, full_q);
    assert_eq!(c.index_sym_pi.via_snf, pow(2, 7) * pow(3, 61));
    assert_eq!(c.index_sat.via_snf, pow(3, 22));
    assert!(c.sym_over_is_sat && c.pi_over_is_sat);
    assert!(c.sat_idempotent);
    assert!(c.complement_discr_matches);
}

#[test]
fn explicit_classes_are_divisible_and_independent() {
    let r = appendix_verify(model()).unwrap();
    assert_eq!(r.xxxi_rank_mod3, 31);
    assert!(r.xxxi_span_is_d);
    assert_eq!(r.xix_quotient, repeated(3, 19));
    assert!(r.not_divisible.is_empty(), "{:?}", r.not_divisible);
    assert!(r.isotropic.is_empty(), "{:?}", r.isotropic);
    assert!(!r.line_control_divisible);
    assert!(r.passes());
    eprintln!("standard form isotropic: {:?}; isotropic plane control divisible: {}", r.isotropic_standard_form, r.isotropic_control_divisible);
}

#[test]
fn class_identities_hold() {
    let r = class_identities(model()).unwrap();
    assert!(r.w_formula && r.c2_is_third_of_sum && r.c2_from_yp, "{r:?}");
    assert_eq!(r.sym_pi_dimension, 1);
    assert_eq!(r.sym_pi_generator_multiple, big(3));
    assert_eq!(r.c2_content, big(1));
    assert!(r.passes(), "{r:?}");
}

#[test]
fn involution_ranks_by_degree() {
    let r = involution_invariants(model()).unwrap();
    assert_eq!(r.h2, EquivariantInvariants { l2: 0, l1_minus: 0, l1_plus: 7 });
    assert_eq!(r.h3, EquivariantInvariants { l2: 0, l1_minus: 8, l1_plus: 0 });
    assert_eq!(r.h4, EquivariantInvariants { l2: 40, l1_minus: 0, l1_plus: 28 });
}

#[test]
fn operator_side_agrees_with_lattice_side() {
    let r = fock_crosscheck().unwrap();
    assert_eq!(r.quadruples_checked, 210);
    assert!(r.mismatches.is_empty(), "{:?}", &r.mismatches[..r.mismatches.len().min(5)]);
    assert!(r.c2_agrees);
    assert!(r.yp_agrees);
    assert!(r.passes(), "{r:?}");
}
