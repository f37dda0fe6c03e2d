use kummer4::h2::{fujiki_vectors, Q};
use kummer4::model::sym_product_pairing;
use proptest::prelude::*;

fn class() -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec(-4i64..=4, 7).prop_map(|v| v.into_iter().map(|k| Q::from_integer(k.into())).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fujiki_product_is_symmetric(a in class(), b in class(), c in class(), d in class()) {
        let base = fujiki_vectors([&a, &b, &c, &d]);
        prop_assert_eq!(fujiki_vectors([&b, &a, &c, &d]), base.clone());
        prop_assert_eq!(fujiki_vectors([&c, &d, &a, &b]), base.clone());
        prop_assert_eq!(fujiki_vectors([&d, &b, &c, &a]), base);
    }

    #[test]
    fn fujiki_product_is_additive(a in class(), a2 in class(), b in class(), c in class(), d in class()) {
        let sum: Vec<Q> = a.iter().zip(&a2).map(|(x, y)| x + y).collect();
        prop_assert_eq!(
            fujiki_vectors([&sum, &b, &c, &d]),
            fujiki_vectors([&a, &b, &c, &d]) + fujiki_vectors([&a2, &b, &c, &d])
        );
    }

    #[test]
    fn sym_gram_reproduces_quadruple_products(a in class(), b in class(), c in class(), d in class()) {
        let (gram_side, fujiki_side) = sym_product_pairing([&a, &b, &c, &d]);
        prop_assert_eq!(gram_side, fujiki_side);
    }
}
