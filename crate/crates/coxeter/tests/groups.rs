use coxeter::props::{self, CHECKED_TYPES};
use coxeter::{CoxeterDatum, KernelMode, SubsetJ};

#[test]
fn group_orders() {
    for (t, n) in
        [("A1", 2), ("A2", 6), ("A3", 24), ("A4", 120), ("B2", 8), ("B3", 48), ("G2", 12), ("A1xA1", 4), ("A1xA2", 12)]
    {
        assert_eq!(CoxeterDatum::from_type(t).unwrap().elements().unwrap().len(), n, "{t}");
    }
}

#[test]
fn unknown_types_are_rejected() {
    for t in ["", "Q3", "A0", "G3", "B1", "A1x"] {
        assert!(CoxeterDatum::from_type(t).is_err(), "{t}");
    }
}

#[test]
fn kernels_formula_matches_bruteforce() {
    for t in CHECKED_TYPES {
        props::kernels_agree(t).unwrap();
    }
}

#[test]
fn faithful_on_connected_types() {
    for t in ["A2", "A3", "B3", "G2"] {
        let d = CoxeterDatum::from_type(t).unwrap();
        for j in props::all_subsets(d.rank()) {
            if j.len() < d.rank() {
                let k = d.kernel_parabolic(&j, KernelMode::BruteForce).unwrap();
                assert_eq!(k, vec![d.identity()], "{t} {j}");
            }
        }
    }
}

#[test]
fn product_type_kernel() {
    let d = CoxeterDatum::from_type("A1xA2").unwrap();
    let k = d.kernel_parabolic(&SubsetJ::new([2, 3]), KernelMode::BruteForce).unwrap();
    assert_eq!(k.len(), 6);
}

#[test]
fn structural_properties() {
    for t in CHECKED_TYPES {
        props::parabolic_intersections(t).unwrap();
        props::closed_factorization(t).unwrap();
        props::reduced_words(t).unwrap();
        props::longest_and_star(t).unwrap();
    }
}

#[test]
fn longest_element_lengths() {
    for (t, n) in [("A3", 6), ("A4", 10), ("B3", 9), ("G2", 6)] {
        let d = CoxeterDatum::from_type(t).unwrap();
        assert_eq!(d.length(&d.longest_element(&d.index_set()).unwrap()), n);
    }
}
