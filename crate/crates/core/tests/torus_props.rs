use proptest::prelude::*;
use sepinv_core::poly::rat;
use sepinv_core::torus::{
    example_point, invariant_monomials, is_invariant, separates, span_data_respects_separation, WeightMatrix,
};

#[test]
fn unreduced_enumeration_confirms_n3_sharpness() {
    let w = WeightMatrix::example(3, 2).unwrap();
    let v = example_point(3, rat(-1), &rat(1), &rat(0));
    let vp = example_point(3, rat(1), &rat(1), &rat(0));
    for skip in 0..4 {
        let support: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
        for m in invariant_monomials(&w, 12, Some(&support)).unwrap() {
            assert_eq!(m.eval(&v), m.eval(&vp), "{}", m.render(3));
        }
    }
    assert!(invariant_monomials(&w, 12, None).unwrap().iter().any(|m| m.eval(&v) != m.eval(&vp)));
}

#[test]
fn span_lemma_holds_on_random_recombinations() {
    let w = WeightMatrix::example(3, 2).unwrap().with_copies(3);
    let r = span_data_respects_separation(&w, 60, 5, 8).unwrap();
    assert!(r.ok(), "{r:?}");
}

#[test]
fn permuting_copies_keeps_the_verdict() {
    let w = WeightMatrix::example(3, 2).unwrap();
    let v = example_point(3, rat(-1), &rat(1), &rat(0));
    let vp = example_point(3, rat(1), &rat(1), &rat(0));
    let swap = |p: &[num::BigRational]| -> Vec<num::BigRational> {
        let mut q = p.to_vec();
        for j in 0..3 {
            q.swap(j, 9 + j);
        }
        q
    };
    assert!(separates(&w, &v, &vp, 4, None).unwrap().is_some());
    assert!(separates(&w, &swap(&v), &swap(&vp), 4, None).unwrap().is_some());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn enumerated_monomials_are_invariant(n in 2usize..=4, exponent in 2i64..=3, cap in 0u32..=8) {
        let w = WeightMatrix::example(n, exponent).unwrap();
        for m in invariant_monomials(&w, cap, None).unwrap() {
            prop_assert!(is_invariant(&w, &m));
            prop_assert!(m.degree() <= cap);
            let md = m.multidegree(n);
            prop_assert_eq!(md[0] as i64, exponent * md[1] as i64);
        }
    }
}
