mod common;

use braidlink::words::{load_presentation, parse_word, Alphabet, Homomorphism, Presentation, Word};
use braidlink::{Error, Q};
use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn word_strategy(m: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=m as i32, 0..=max_len)
        .prop_flat_map(|gens| {
            let n = gens.len();
            (Just(gens), prop::collection::vec(any::<bool>(), n))
        })
        .prop_map(|(gens, signs)| {
            let signed: Vec<i32> = gens.iter().zip(&signs).map(|(&g, &s)| if s { -g } else { g }).collect();
            Word::from_signed(&signed)
        })
}

proptest! {
    #[test]
    fn format_parse_round_trip(w in word_strategy(4, 12)) {
        let alphabet = Alphabet::letters(4);
        prop_assert_eq!(parse_word(&w.format(&alphabet), &alphabet).unwrap(), w.clone());
        let compact = w.format_compact(&alphabet).unwrap();
        prop_assert_eq!(parse_word(&compact, &alphabet).unwrap(), w);
    }

    #[test]
    fn reduction_is_idempotent(w in word_strategy(3, 16)) {
        let r = w.free_reduce();
        prop_assert!(r.is_reduced());
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(r.exponent_sums(3), w.exponent_sums(3));
    }

    #[test]
    fn word_times_inverse_reduces_to_empty(w in word_strategy(3, 12)) {
        prop_assert!(w.concat(&w.inverse()).free_reduce().is_empty());
        prop_assert!(w.inverse().concat(&w).free_reduce().is_empty());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn homomorphisms_are_additive(u in word_strategy(3, 8), v in word_strategy(3, 8), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_hom(&mut rng, 3);
        prop_assert_eq!(h.on_word(&u.concat(&v)), h.on_word(&u) + h.on_word(&v));
        prop_assert_eq!(h.on_word(&u.inverse()), -h.on_word(&u));
    }
}

#[test]
fn powers_and_commutators() {
    let ab = Alphabet::letters(2);
    let a = parse_word("a", &ab).unwrap();
    let b = parse_word("b", &ab).unwrap();
    assert_eq!(Word::commutator(&a, &b), parse_word("a b a^-1 b^-1", &ab).unwrap());
    assert_eq!(a.pow(3), parse_word("a^3", &ab).unwrap());
    assert_eq!(a.pow(-2), parse_word("A A", &ab).unwrap());
    assert_eq!(a.pow(0), Word::empty());
    assert_eq!(b.conjugate_by(&a), parse_word("aba^-1", &ab).unwrap());
}

#[test]
fn token_syntax() {
    let xy = Alphabet::new(["x1", "y"]).unwrap();
    assert_eq!(parse_word("x1^2 * y^-1", &xy).unwrap(), Word::from_signed(&[1, 1, -2]));
    assert!(!xy.is_compact());
    assert!(matches!(parse_word("z", &xy), Err(Error::UnknownGenerator(_))));
    assert!(matches!(parse_word("y^", &xy), Err(Error::MalformedExponent(_))));
    assert!(matches!(parse_word("y^x", &xy), Err(Error::MalformedExponent(_))));
    assert!(parse_word("y * * y", &xy).is_err());
    assert!(Alphabet::new(["a", "a"]).is_err());
    assert!(Alphabet::new(Vec::<String>::new()).is_err());
}

#[test]
fn homomorphism_values() {
    let h: Homomorphism<Q> = Homomorphism::new(vec![q(1), q(-2), q(0)]);
    let abc = Alphabet::letters(3);
    assert_eq!(h.on_word(&parse_word("a b b C a^-1", &abc).unwrap()), q(-4));
    assert_eq!(h.format(&abc), "A-2B");
}

#[test]
fn presentations_from_json() {
    let p = load_presentation(r#"{"generators":["a","b"],"relations":["a b a^-1 b^-1", "a a^-1"]}"#)
        .unwrap();
    assert_eq!(p.alphabet().len(), 2);
    assert_eq!(p.relations()[0].len(), 4);
    assert!(p.relations()[1].is_empty());
    assert!(load_presentation(r#"{"generators":["a"],"relations":["b"]}"#).is_err());
    assert!(load_presentation(r#"{"generators":["a"],"relations":[],"extra":1}"#).is_err());
    assert!(load_presentation(r#"{"generators":[],"relations":[]}"#).is_err());
    let free = Presentation::free(Alphabet::letters(3));
    assert!(free.relations().is_empty());

    let dir = std::env::temp_dir().join(format!("braidlink-words-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("torus.json");
    std::fs::write(&path, r#"{"generators":["a","b"],"relations":["a b A B"]}"#).unwrap();
    let from_file = load_presentation(path.to_str().unwrap()).unwrap();
    assert_eq!(from_file.relations(), p.relations()[..1].to_vec().as_slice());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn random_words_respect_alphabet() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let m = rng.gen_range(1..=4);
        let w = random_word(&mut rng, m, 10);
        assert!(w.check_alphabet(m).is_ok());
        assert!(w.max_generator().is_none_or(|g| g < m));
    }
}
