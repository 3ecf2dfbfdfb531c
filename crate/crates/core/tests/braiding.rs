mod common;

use braidlink::braiding::{
    evaluate_configurations, evaluate_recursive, evaluate_single_pass, format_symbol,
    is_eigenword, parse_symbol, SymbolSum,
};
use braidlink::coalgebra::{functional_from_symbol, hopf_evaluate, realized_functional};
use braidlink::lie::LyndonBasis;
use braidlink::words::{parse_word, Alphabet};
use braidlink::{Scalar, Q};
use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn three_evaluations_agree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(1..=3);
        let s = random_symbol(&mut rng, m, 4);
        let w = random_word(&mut rng, m, 9);
        let single = evaluate_single_pass(&s, &w);
        prop_assert_eq!(&single, &evaluate_recursive(&s, &w));
        prop_assert_eq!(&single, &evaluate_configurations(&s, &w));
    }

    #[test]
    fn free_reduction_does_not_change_values(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(1..=3);
        let s = random_symbol(&mut rng, m, 4);
        let w = random_word(&mut rng, m, 12);
        prop_assert_eq!(evaluate_single_pass(&s, &w), evaluate_single_pass(&s, &w.free_reduce()));
    }

    #[test]
    fn evaluation_is_linear_in_the_symbol(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(1..=3);
        let s = random_symbol(&mut rng, m, 3);
        let t = random_symbol(&mut rng, m, 3);
        let w = random_word(&mut rng, m, 8);
        let c = q(rng.gen_range(-3..=3));
        let combo = s.add(&t.scale(&c));
        prop_assert_eq!(
            evaluate_single_pass(&combo, &w),
            evaluate_single_pass(&s, &w) + c * evaluate_single_pass(&t, &w)
        );
    }

    #[test]
    fn format_then_parse_is_identity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(1..=4);
        let alphabet = Alphabet::letters(m);
        let s = random_symbol(&mut rng, m, 4);
        let text = format_symbol(&s, &alphabet);
        let back: SymbolSum<Q> = parse_symbol(&text, &alphabet).unwrap();
        prop_assert_eq!(back, s, "{}", text);
    }

    #[test]
    fn eigenword_values_are_hopf_values(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(1..=3);
        let basis = LyndonBasis::new(m, 5).unwrap();
        let s = random_symbol(&mut rng, m, 5);
        let w = eigenword_candidate(&mut rng, m);
        prop_assume!(is_eigenword(&s, &w));
        let phi = realized_functional(&basis, &s);
        prop_assert_eq!(evaluate_single_pass(&s, &w), hopf_evaluate(&basis, &phi, &w).unwrap());
    }
}

#[test]
fn repeated_labels_need_the_realized_functional() {
    let abc = Alphabet::letters(3);
    let basis = LyndonBasis::new(3, 3).unwrap();
    let s: SymbolSum<Q> = parse_symbol("((C|C)|A)", &abc).unwrap();
    let w = parse_word("c a^-1 c^-1 a", &abc).unwrap();
    assert!(is_eigenword(&s, &w));
    assert_eq!(evaluate_single_pass(&s, &w), q(0));
    let graded = functional_from_symbol(&basis, &s);
    assert_eq!(hopf_evaluate(&basis, &graded, &w).unwrap(), Q::from_ratio(-1, 2));
    let realized = realized_functional(&basis, &s);
    assert_eq!(hopf_evaluate(&basis, &realized, &w).unwrap(), q(0));
}

#[test]
fn symbols_on_commutators() {
    let ab = Alphabet::letters(2);
    let s: SymbolSum<Q> = parse_symbol("(A|B)", &ab).unwrap();
    for (word, value) in [("a b A B", 1), ("b a B A", -1), ("a b a^-1 b^-1 a b a^-1 b^-1", 2)] {
        let w = parse_word(word, &ab).unwrap();
        assert!(is_eigenword(&s, &w));
        assert_eq!(evaluate_single_pass(&s, &w), q(value), "{word}");
    }
}

#[test]
fn symbol_parse_errors() {
    let ab = Alphabet::letters(2);
    for bad in ["(A|B", "(A|)", "(|B)", "A|B", "(A|C)", "2", "()", "(A)(B)"] {
        assert!(parse_symbol::<Q>(bad, &ab).is_err(), "{bad}");
    }
}
