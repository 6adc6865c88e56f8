use crystal::{enumerate_component, props, GtArray, Pattern};
use proptest::prelude::*;
use rand::SeedableRng;

fn ambient() -> impl Strategy<Value = Pattern> {
    (0i64..=20, any::<bool>(), -20i64..=20, -20i64..=20, -20i64..=20, -20i64..=20).prop_map(
        |(a, first, m12, m21, m01, m02)| {
            let (m1, m2) = if first { (a, 0) } else { (0, a) };
            Pattern { m1, m2, m12, m21, m01, m02 }
        },
    )
}

proptest! {
    #[test]
    fn verma_relation(m in ambient(), r in -10i64..=10, s in -10i64..=10) {
        prop_assert_eq!(
            m.e_pow(1, s).e_pow(2, r + s).e_pow(1, r),
            m.e_pow(2, r).e_pow(1, r + s).e_pow(2, s)
        );
    }

    #[test]
    fn cactus_relations(m in ambient(), r in -10i64..=10) {
        for i in [1u8, 2] {
            let j = 3 - i;
            prop_assert_eq!(m.sigma_i(i).sigma_i(i), m);
            prop_assert_eq!(m.e_pow(i, r).sigma_i(i), m.sigma_i(i).e_pow(i, -r));
            prop_assert_eq!(m.e_pow(i, r).sigma_outer(), m.sigma_outer().e_pow(j, -r));
            prop_assert_eq!(m.sigma_outer().sigma_i(i), m.sigma_i(j).sigma_outer());
        }
        prop_assert_eq!(m.sigma_i(1).sigma_i(2).sigma_i(1), m.sigma_i(2).sigma_i(1).sigma_i(2));
    }

    #[test]
    fn khat_roundtrip(m in ambient()) {
        prop_assert_eq!(m.khat().khat_inv().unwrap(), m);
    }

    #[test]
    fn khat_is_onto_integer_arrays(a1 in -20i64..=20, a2 in -20i64..=20, a3 in -20i64..=20, l1 in -20i64..=20, l2 in -20i64..=20) {
        let g = GtArray { a1, a2, a3, l1, l2 };
        let m = g.khat_inv().unwrap();
        prop_assert_eq!(m.khat(), g);
    }

    #[test]
    fn invariants_preserved(m in ambient(), r in -10i64..=10) {
        for i in [1u8, 2] {
            let e = m.e_pow(i, r);
            prop_assert_eq!((e.l1(), e.l2()), (m.l1(), m.l2()));
            prop_assert!(e.m1 >= 0 && e.m2 >= 0 && e.m1 * e.m2 == 0);
        }
    }
}

#[test]
fn seeded_suites() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    props::operator_identities(&mut rng, 10_000, 20, 10).unwrap();
    props::basis_preserved(&mut rng, 2_000, 20).unwrap();
}

#[test]
fn counting() {
    props::component_sizes(12).unwrap();
    props::zero_weight_counts(10).unwrap();
    props::components_closed(6).unwrap();
}

#[test]
fn component_order_is_lexicographic() {
    let c = enumerate_component(3, 2);
    assert!(c.windows(2).all(|w| w[0] < w[1]));
    assert!(c.iter().all(|m| m.is_basis() && m.l1() == 3 && m.l2() == 2));
}
