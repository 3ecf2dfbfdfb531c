mod common;

use braidlink::membership::{commutator_depth, depth_with, Depth, DepthReport};
use braidlink::descent::descending_invariants;
use braidlink::words::{load_presentation, parse_word, Alphabet, Presentation, Word};
use braidlink::Q;
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn depth_of_iterated_commutators_of_generators() {
    let abc = Alphabet::letters(3);
    let free = Presentation::free(abc.clone());
    let e = descending_invariants::<Q>(&free, 4).unwrap();
    let gens: Vec<Word> = (1..=3).map(|g| Word::from_signed(&[g])).collect();
    let mut w = gens[0].clone();
    for (depth, g) in [gens[1].clone(), gens[2].clone(), gens[0].clone()].iter().enumerate() {
        w = Word::commutator(&w, g);
        let r = depth_with(&w, &e).unwrap();
        assert_eq!(r.depth, Depth::Exactly(depth + 2), "{}", w.format(&abc));
        assert!(r.witness.is_some());
    }
}

#[test]
fn depth_is_at_least_the_nesting() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let free = Presentation::free(Alphabet::letters(2));
    let e = descending_invariants::<Q>(&free, 4).unwrap();
    for _ in 0..40 {
        let nesting = rng.gen_range(1..=3);
        let w = nested_commutator(&mut rng, 2, nesting);
        let r = depth_with(&w, &e).unwrap();
        match r.depth {
            Depth::Exactly(c) => assert!(c > nesting, "{c} for nesting {nesting}"),
            Depth::GreaterThan(k) => assert_eq!(k, 4),
        }
    }
}

#[test]
fn relation_words_have_unbounded_depth() {
    let p = load_presentation(r#"{"generators":["a","b","c"],"relations":["a b a^-1 c"]}"#).unwrap();
    let w = parse_word("a b a^-1 c", p.alphabet()).unwrap();
    let r: DepthReport<Q> = commutator_depth(&w, &p, 4).unwrap();
    assert_eq!(r.depth, Depth::GreaterThan(4));
    let conj = w.conjugate_by(&parse_word("b c", p.alphabet()).unwrap());
    let r: DepthReport<Q> = commutator_depth(&conj, &p, 4).unwrap();
    assert_eq!(r.depth, Depth::GreaterThan(4));
}

#[test]
fn report_json() {
    let p = Presentation::free(Alphabet::letters(2));
    let e = descending_invariants::<Q>(&p, 3).unwrap();
    let r = depth_with(&parse_word("a b a^-1 b^-1", p.alphabet()).unwrap(), &e).unwrap();
    let json = r.to_json(&e);
    assert_eq!(json["summary"], "exactly 2");
    assert_eq!(json["depth"]["kind"], "exactly");
    assert_eq!(json["witness"]["value"], "1/1");
    let r = depth_with(&Word::empty(), &e).unwrap();
    assert_eq!(r.to_json(&e)["witness"], serde_json::Value::Null);
}
