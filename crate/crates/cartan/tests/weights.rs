use cartan::{CartanDatum, Weight};
use num_rational::BigRational;
use proptest::prelude::*;

fn r(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

const TYPES: [&str; 6] = ["A2", "A3", "B2", "B3", "G2", "A1xA2"];

fn weight(n: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-4i64..=4, n).prop_map(Weight)
}

proptest! {
    #[test]
    fn form_is_weyl_invariant(t in 0usize..TYPES.len(), seed in any::<u64>()) {
        let c = CartanDatum::from_type(TYPES[t]).unwrap();
        let n = c.rank();
        let elems = c.weyl().elements().unwrap();
        let w = &elems[(seed as usize) % elems.len()];
        let mut s = seed;
        let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1); ((s >> 33) % 9) as i64 - 4 };
        let lam = Weight((0..n).map(|_| next()).collect());
        let mu = Weight((0..n).map(|_| next()).collect());
        let wl = c.weyl_act(w, &lam).unwrap();
        let wm = c.weyl_act(w, &mu).unwrap();
        prop_assert_eq!(c.form(&wl, &wm), c.form(&lam, &mu));
    }

    #[test]
    fn form_is_symmetric(l in weight(2), m in weight(2)) {
        let c = CartanDatum::sl3();
        prop_assert_eq!(c.form(&l, &m), c.form(&m, &l));
    }
}

#[test]
fn exponents_are_nonnegative_and_track_degree() {
    for t in TYPES {
        let c = CartanDatum::from_type(t).unwrap();
        let n = c.rank();
        let lambdas: Vec<Weight> = (0..n)
            .map(|i| Weight::fundamental(n, i + 1))
            .chain([Weight(vec![1; n]), Weight((0..n as i64).map(|i| i + 1).collect())])
            .collect();
        for w in c.weyl().elements().unwrap() {
            let word = c.weyl().reduced_word(&w);
            for lam in &lambdas {
                let a = c.extremal_exponents(&word, lam).unwrap();
                assert!(a.iter().all(|&x| x >= 0), "{t} {word:?} {lam}");
                let mut deg = Weight::zero(n);
                for (k, &i) in word.iter().enumerate() {
                    deg = &deg + &c.simple_root(i).scaled(a[k]);
                }
                assert_eq!(deg, lam - &c.weyl_act(&w, lam).unwrap(), "{t} {word:?} {lam}");
            }
        }
    }
}

#[test]
fn rho_vee_on_simple_roots_and_orthogonal_weights() {
    for t in TYPES {
        let c = CartanDatum::from_type(t).unwrap();
        let n = c.rank();
        for j in coxeter::props::all_subsets(n) {
            for i in j.iter() {
                let (_, v) = c.rho_functionals(&j, &c.simple_root(i)).unwrap();
                assert_eq!(v, r(1), "{t} {j} {i}");
            }
            // weights orthogonal to every root of J are killed
            for k in 1..=n {
                let w = Weight::fundamental(n, k);
                if j.iter().all(|i| w.coord(i) == 0) {
                    let (p, v) = c.rho_functionals(&j, &w).unwrap();
                    assert_eq!((p, v), (r(0), r(0)), "{t} {j} {k}");
                }
            }
        }
    }
}

#[test]
fn rho_pairs_to_one_with_every_simple_coroot() {
    for t in TYPES {
        let c = CartanDatum::from_type(t).unwrap();
        let n = c.rank();
        let all = c.weyl().index_set();
        // (rho, a_i) = d_i, i.e. rho = sum of fundamental weights
        for i in 1..=n {
            let (p, _) = c.rho_functionals(&all, &c.simple_root(i)).unwrap();
            assert_eq!(p, r(c.symmetrizer()[i - 1]), "{t} {i}");
        }
    }
}

#[test]
fn weight_parsing() {
    assert_eq!(Weight::parse("2, 3").unwrap(), Weight(vec![2, 3]));
    assert!(Weight::parse("x").is_err());
}
