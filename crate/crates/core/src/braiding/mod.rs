//! Discrete functions on words, braiding products, and braiding symbols.

mod eval;
mod parse;
mod tree;

pub use eval::{
    configuration_value, evaluate_configurations, evaluate_recursive, evaluate_single_pass,
    induced_tree_dfunction, is_eigenword, single_pass_trace, SinglePassTrace,
};
pub use parse::{format_symbol, format_tree, parse_symbol};
pub use tree::{SymbolSum, TreeSymbol};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::words::{Homomorphism, Word};

/// A scalar-valued function on the letter positions of a word.
#[derive(Clone, Debug, PartialEq)]
pub struct DFunction<S> {
    values: Vec<S>,
}

impl<S: Scalar> DFunction<S> {
    pub fn new(values: Vec<S>) -> Self {
        DFunction { values }
    }

    pub fn zero(len: usize) -> Self {
        DFunction {
            values: vec![S::zero(); len],
        }
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn integrate(&self) -> S {
        self.values.iter().fold(S::zero(), |acc, v| acc + v)
    }

    /// Pointwise product.
    pub fn pointwise(&self, other: &Self) -> Result<Self> {
        check_len(self.len(), other.len())?;
        Ok(DFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.clone() * b)
                .collect(),
        })
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, found })
    }
}

/// `i ↦ εᵢ·h(sᵢ)`.
pub fn induced_dfunction<S: Scalar>(w: &Word, h: &Homomorphism<S>) -> DFunction<S> {
    DFunction::new(w.letters().iter().map(|&l| h.on_letter(l)).collect())
}

pub fn integrate<S: Scalar>(f: &DFunction<S>) -> S {
    f.integrate()
}

/// Partial sums of `f` in the order `≤_w`: position `j` sees every earlier
/// position, and itself exactly when the `j`-th letter is an inverse.
pub fn cobound<S: Scalar>(w: &Word, f: &DFunction<S>) -> Result<DFunction<S>> {
    check_len(w.len(), f.len())?;
    let mut running = S::zero();
    let mut out = Vec::with_capacity(f.len());
    for (l, v) in w.letters().iter().zip(f.values()) {
        if l.inverse {
            running += v;
            out.push(running.clone());
        } else {
            out.push(running.clone());
            running += v;
        }
    }
    Ok(DFunction::new(out))
}

/// `(⤙f)·g`.
pub fn braiding_product<S: Scalar>(
    w: &Word,
    f: &DFunction<S>,
    g: &DFunction<S>,
) -> Result<DFunction<S>> {
    check_len(w.len(), g.len())?;
    cobound(w, f)?.pointwise(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn q(values: &[i64]) -> DFunction<Q> {
        DFunction::new(values.iter().map(|&v| Q::from_int(v)).collect())
    }

    fn bcabcbb() -> Word {
        Word::from_signed(&[2, 3, 1, -2, -3, 2, 2])
    }

    #[test]
    fn induced_examples() {
        let a: Homomorphism<Q> = Homomorphism::indicator(0, 2);
        assert_eq!(
            induced_dfunction(&Word::from_signed(&[-1, 2, 2, 1, 2]), &a),
            q(&[-1, 0, 0, 1, 0])
        );
        let h = Homomorphism::new(vec![Q::from_int(-2), Q::from_int(1), Q::from_int(0)]);
        let f = induced_dfunction(&bcabcbb(), &h);
        assert_eq!(f, q(&[1, 0, -2, -1, 0, 1, 1]));
        assert_eq!(f.integrate(), Q::from_int(0));
        let zero: Homomorphism<Q> = Homomorphism::zero(3);
        assert_eq!(induced_dfunction(&bcabcbb(), &zero), q(&[0; 7]));
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(integrate(&q(&[])), Q::from_int(0));
        assert_eq!(integrate(&q(&[0, 1, 0, 0, 2, 0, 0])), Q::from_int(3));
    }

    #[test]
    fn cobound_examples() {
        let f = q(&[1, 0, -2, -1, 0, 1, 1]);
        assert_eq!(cobound(&bcabcbb(), &f).unwrap(), q(&[0, 1, 1, -2, -2, -2, -1]));
        let w = Word::from_signed(&[1, -1]);
        let f = q(&[1, -1]);
        let g = braiding_product(&w, &f, &f).unwrap();
        assert_eq!(cobound(&w, &f).unwrap(), q(&[0, 0]));
        assert_eq!(g.integrate(), Q::from_int(0));
        assert_eq!(cobound(&bcabcbb(), &q(&[0; 7])).unwrap(), q(&[0; 7]));
        assert!(matches!(
            cobound(&w, &q(&[1])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn braiding_product_examples() {
        let w = bcabcbb();
        let f = q(&[1, 0, -2, -1, 0, 1, 1]);
        let c: Homomorphism<Q> = Homomorphism::indicator(2, 3);
        let g = induced_dfunction(&w, &c);
        assert_eq!(
            braiding_product(&w, &f, &g).unwrap(),
            q(&[0, 1, 0, 0, 2, 0, 0])
        );
        assert_eq!(braiding_product(&w, &f, &q(&[0; 7])).unwrap(), q(&[0; 7]));
    }
}
