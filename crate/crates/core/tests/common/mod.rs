#![allow(dead_code)]

use braidlink::braiding::{SymbolSum, TreeSymbol};
use braidlink::words::{Homomorphism, SignedLetter, Word};
use braidlink::{Scalar, Q};
use rand::Rng;

pub fn q(n: i64) -> Q {
    Q::from_int(n)
}

pub fn random_word<R: Rng>(rng: &mut R, m: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let g = rng.gen_range(0..m);
            if rng.gen_bool(0.5) {
                SignedLetter::pos(g)
            } else {
                SignedLetter::neg(g)
            }
        })
        .collect()
}

/// A random word with every exponent sum zero: a random word followed by a
/// shuffled copy of the inverse letters.
pub fn zero_sum_word<R: Rng>(rng: &mut R, m: usize, half_len: usize) -> Word {
    let w = random_word(rng, m, half_len);
    let mut rest: Vec<SignedLetter> = w.letters().iter().map(|l| l.inv()).collect();
    for i in (1..rest.len()).rev() {
        let j = rng.gen_range(0..=i);
        rest.swap(i, j);
    }
    w.concat(&Word::new(rest))
}

/// A random iterated commutator of short random words, nested `depth` times.
pub fn nested_commutator<R: Rng>(rng: &mut R, m: usize, depth: usize) -> Word {
    let mut w = random_word(rng, m, 3);
    for _ in 0..depth {
        let v = random_word(rng, m, 3);
        w = if rng.gen_bool(0.5) {
            Word::commutator(&w, &v)
        } else {
            Word::commutator(&v, &w)
        };
    }
    w
}

/// Words that are often eigenwords for small symbols.
pub fn eigenword_candidate<R: Rng>(rng: &mut R, m: usize) -> Word {
    match rng.gen_range(0..5) {
        0 => zero_sum_word(rng, m, 5),
        1 => nested_commutator(rng, m, 1),
        2 => nested_commutator(rng, m, 2),
        3 => nested_commutator(rng, m, 3),
        _ => {
            let da = rng.gen_range(1..=2);
            let a = nested_commutator(rng, m, da);
            let db = rng.gen_range(1..=3);
            let b = nested_commutator(rng, m, db);
            a.concat(&b)
        }
    }
}

/// Mostly indicators, sometimes a small integer combination.
pub fn random_hom<R: Rng>(rng: &mut R, m: usize) -> Homomorphism<Q> {
    if rng.gen_bool(0.7) {
        return Homomorphism::indicator(rng.gen_range(0..m), m);
    }
    loop {
        let values: Vec<Q> = (0..m).map(|_| q(rng.gen_range(-2..=2))).collect();
        let h = Homomorphism::new(values);
        if !h.is_zero() {
            return h;
        }
    }
}

/// A random recursive tree: vertex `k` hangs below a uniformly chosen earlier vertex.
pub fn random_tree<R: Rng>(rng: &mut R, m: usize, weight: usize) -> TreeSymbol<Q> {
    let parents: Vec<usize> = (1..weight).map(|k| rng.gen_range(0..k)).collect();
    let labels: Vec<Homomorphism<Q>> = (0..weight).map(|_| random_hom(rng, m)).collect();
    build(0, &parents, &labels)
}

fn build(v: usize, parents: &[usize], labels: &[Homomorphism<Q>]) -> TreeSymbol<Q> {
    let children = (1..labels.len())
        .filter(|&k| parents[k - 1] == v)
        .map(|k| build(k, parents, labels))
        .collect();
    TreeSymbol::new(labels[v].clone(), children)
}

pub fn random_symbol<R: Rng>(rng: &mut R, m: usize, max_weight: usize) -> SymbolSum<Q> {
    let terms = rng.gen_range(1..=2);
    SymbolSum::new(
        (0..terms)
            .map(|_| {
                let w = rng.gen_range(1..=max_weight);
                (q(rng.gen_range(1..=3)), random_tree(rng, m, w))
            })
            .collect(),
    )
}

/// All rooted unordered tree shapes with `n` vertices, as parent arrays
/// (vertex 0 is the root). Duplicated shapes are harmless for testing.
pub fn tree_shapes(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 1..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..k).map(move |parent| {
                    let mut p = p.clone();
                    p.push(parent);
                    p
                })
            })
            .collect();
    }
    out
}

/// Every tree with `n` vertices labelled by indicators of `m` generators.
pub fn all_indicator_trees(m: usize, n: usize) -> Vec<TreeSymbol<Q>> {
    let mut out = Vec::new();
    for parents in tree_shapes(n) {
        let total = m.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let labels: Vec<Homomorphism<Q>> = (0..n)
                .map(|_| {
                    let g = c % m;
                    c /= m;
                    Homomorphism::indicator(g, m)
                })
                .collect();
            out.push(build(0, &parents, &labels));
        }
    }
    out
}
