use crate::scalar::Scalar;
use crate::words::{SignedLetter, Word};

use super::tree::{SymbolSum, TreeSymbol};
use super::{cobound, induced_dfunction, DFunction};

fn assert_alphabet(size: usize, w: &Word) {
    if let Some(g) = w.max_generator() {
        assert!(
            g < size,
            "word uses generator {g} but labels cover only {size} generators"
        );
    }
}

/// `w*T`: the pointwise product of the cobounded children with `w*h` at the root.
pub fn induced_tree_dfunction<S: Scalar>(t: &TreeSymbol<S>, w: &Word) -> DFunction<S> {
    assert_alphabet(t.alphabet_size(), w);
    let mut f = induced_dfunction(w, &t.label);
    for child in &t.children {
        let c = induced_tree_dfunction(child, w);
        let cb = cobound(w, &c).expect("lengths agree");
        f = cb.pointwise(&f).expect("lengths agree");
    }
    f
}

/// Evaluate by performing the braiding products recursively.
///
/// # Panics
/// If the word uses a generator outside the label alphabet.
pub fn evaluate_recursive<S: Scalar>(sum: &SymbolSum<S>, w: &Word) -> S {
    sum.terms().iter().fold(S::zero(), |acc, (c, t)| {
        acc + c.clone() * induced_tree_dfunction(t, w).integrate()
    })
}

/// Per-vertex counters recorded after each letter of a single-pass run.
/// Vertices are numbered in post-order, so the root is last.
#[derive(Clone, Debug, PartialEq)]
pub struct SinglePassTrace<S> {
    /// `sigma[v][i]` is `Σ_v` after letter `i`.
    pub sigma: Vec<Vec<S>>,
    /// `delta[v][i]` is `Δ_v` after letter `i`.
    pub delta: Vec<Vec<S>>,
    pub value: S,
}

struct Stream<'a, S> {
    labels: Vec<&'a crate::words::Homomorphism<S>>,
    children: Vec<Vec<usize>>,
    sigma: Vec<S>,
    delta: Vec<S>,
}

impl<'a, S: Scalar> Stream<'a, S> {
    fn new(t: &'a TreeSymbol<S>) -> Self {
        let (labels, children) = t.flatten();
        let n = labels.len();
        Stream {
            labels,
            children,
            sigma: vec![S::zero(); n],
            delta: vec![S::zero(); n],
        }
    }

    fn step(&mut self, letter: SignedLetter) {
        for v in 0..self.labels.len() {
            let d = std::mem::replace(&mut self.delta[v], S::zero());
            self.sigma[v] += d;
            let h = self.labels[v].on_letter(letter);
            let val = if h.is_zero() {
                h
            } else {
                self.children[v]
                    .iter()
                    .fold(h, |acc, &c| acc * &self.sigma[c])
            };
            if letter.inverse {
                self.sigma[v] += val;
            } else {
                self.delta[v] = val;
            }
        }
    }

    fn value(&self) -> S {
        let root = self.labels.len() - 1;
        self.sigma[root].clone() + &self.delta[root]
    }
}

/// One left-to-right pass keeping a pair of counters per vertex.
///
/// # Panics
/// If the word uses a generator outside the label alphabet.
pub fn evaluate_single_pass<S: Scalar>(sum: &SymbolSum<S>, w: &Word) -> S {
    sum.terms().iter().fold(S::zero(), |acc, (c, t)| {
        assert_alphabet(t.alphabet_size(), w);
        let mut stream = Stream::new(t);
        for &l in w.letters() {
            stream.step(l);
        }
        acc + c.clone() * stream.value()
    })
}

/// Single-pass evaluation of one tree, recording all counters.
pub fn single_pass_trace<S: Scalar>(t: &TreeSymbol<S>, w: &Word) -> SinglePassTrace<S> {
    assert_alphabet(t.alphabet_size(), w);
    let mut stream = Stream::new(t);
    let n = stream.labels.len();
    let mut sigma = vec![Vec::with_capacity(w.len()); n];
    let mut delta = vec![Vec::with_capacity(w.len()); n];
    for &l in w.letters() {
        stream.step(l);
        for v in 0..n {
            sigma[v].push(stream.sigma[v].clone());
            delta[v].push(stream.delta[v].clone());
        }
    }
    SinglePassTrace {
        sigma,
        delta,
        value: stream.value(),
    }
}

/// Sum over proper configurations of one tree, by exhaustive enumeration.
///
/// A configuration places every vertex at a letter position; it is proper
/// when each child sits at or before its parent, strictly before whenever the
/// parent's letter is not an inverse. Exponential in the tree size: meant as
/// an oracle for small inputs.
pub fn configuration_value<S: Scalar>(t: &TreeSymbol<S>, w: &Word) -> S {
    assert_alphabet(t.alphabet_size(), w);
    let (labels, children) = t.flatten();
    let n = w.len();
    let k = labels.len();
    if n == 0 {
        return S::zero();
    }
    let letters = w.letters();
    let mut parent = vec![usize::MAX; k];
    for (v, kids) in children.iter().enumerate() {
        for &c in kids {
            parent[c] = v;
        }
    }
    let mut total = S::zero();
    let mut config = vec![0usize; k];
    'outer: loop {
        let proper = (0..k).all(|v| {
            let p = parent[v];
            p == usize::MAX || {
                let (cv, cp) = (config[v], config[p]);
                cv < cp || (cv == cp && letters[cp].inverse)
            }
        });
        if proper {
            let mut value = S::one();
            for v in 0..k {
                value *= labels[v].on_letter(letters[config[v]]);
                if value.is_zero() {
                    break;
                }
            }
            total += value;
        }
        for slot in config.iter_mut() {
            *slot += 1;
            if *slot < n {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    total
}

pub fn evaluate_configurations<S: Scalar>(sum: &SymbolSum<S>, w: &Word) -> S {
    sum.terms().iter().fold(S::zero(), |acc, (c, t)| {
        acc + c.clone() * configuration_value(t, w)
    })
}

/// Every non-root subtree of every term integrates to zero on `w`.
pub fn is_eigenword<S: Scalar>(sum: &SymbolSum<S>, w: &Word) -> bool {
    fn subtrees_vanish<S: Scalar>(t: &TreeSymbol<S>, w: &Word) -> bool {
        t.children.iter().all(|c| {
            induced_tree_dfunction(c, w).integrate().is_zero() && subtrees_vanish(c, w)
        })
    }
    sum.terms().iter().all(|(_, t)| subtrees_vanish(t, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::parse_symbol;
    use crate::words::{parse_word, Alphabet};
    use crate::Q;

    fn run(symbol: &str, word: &str, m: usize) -> (Q, Q, Q) {
        let alphabet = Alphabet::letters(m);
        let s: SymbolSum<Q> = parse_symbol(symbol, &alphabet).unwrap();
        let w = parse_word(word, &alphabet).unwrap();
        (
            evaluate_recursive(&s, &w),
            evaluate_single_pass(&s, &w),
            evaluate_configurations(&s, &w),
        )
    }

    fn all(v: i64) -> (Q, Q, Q) {
        (Q::from_int(v), Q::from_int(v), Q::from_int(v))
    }

    #[test]
    fn worked_values() {
        assert_eq!(run("(B-2A|C)", "b c a B C b b", 3), all(3));
        assert_eq!(run("(A|B)", "A b b a b", 2), all(-2));
        assert_eq!(run("(A|B)", "a b A B", 2), all(1));
        assert_eq!(run("(A|A)", "a a", 1), all(1));
        assert_eq!(run("(A|A)", "A A", 1), all(3));
        assert_eq!(run("(A|B)", "a b a b", 2), all(3));
    }

    #[test]
    fn empty_word_gives_zero() {
        assert_eq!(run("((A|B)|C)", "", 3), all(0));
        assert_eq!(run("A", "", 3), all(0));
    }

    #[test]
    fn corolla_is_a_product_of_children() {
        // The root can only sit on `c` and each child only on the first
        // letter, so there is a single configuration. Adding the children's
        // counters instead of multiplying would give 2.
        let (r, s, c) = run("(A)(A)C", "a c A", 3);
        assert_eq!(r, s);
        assert_eq!(r, c);
        assert_eq!(r, Q::from_int(1));
    }

    #[test]
    fn trace_of_worked_example() {
        let alphabet = Alphabet::letters(3);
        let s: SymbolSum<Q> = parse_symbol("(B-2A|C)", &alphabet).unwrap();
        let w = parse_word("bcaBCbb", &alphabet).unwrap();
        let trace = single_pass_trace(&s.terms()[0].1, &w);
        let ints = |v: &[i64]| v.iter().map(|&x| Q::from_int(x)).collect::<Vec<_>>();
        assert_eq!(trace.delta[0], ints(&[1, 0, -2, 0, 0, 1, 1]));
        assert_eq!(trace.sigma[0], ints(&[0, 1, 1, -2, -2, -2, -1]));
        assert_eq!(trace.delta[1], ints(&[0, 1, 0, 0, 0, 0, 0]));
        assert_eq!(trace.sigma[1], ints(&[0, 0, 1, 1, 3, 3, 3]));
        assert_eq!(trace.value, Q::from_int(3));
    }

    #[test]
    fn eigenword_examples() {
        let alphabet = Alphabet::letters(3);
        let s: SymbolSum<Q> = parse_symbol("(A|B)", &alphabet).unwrap();
        assert!(is_eigenword(&s, &parse_word("abAB", &alphabet).unwrap()));
        assert!(!is_eigenword(&s, &parse_word("ab", &alphabet).unwrap()));
        let s: SymbolSum<Q> = parse_symbol("((A|B)|C)", &alphabet).unwrap();
        let ab = parse_word("abAB", &alphabet).unwrap();
        let c = parse_word("c", &alphabet).unwrap();
        let w = Word::commutator(&ab, &c);
        assert_eq!(w.len(), 10);
        assert!(is_eigenword(&s, &w));
    }
}
