//! Rational lower central series depth of a word in a presented group, up to
//! a weight cutoff.
//!
//! Depth is reported as a γ-filtration index: depth `c` means every
//! invariant of weight below `c` vanishes on the word and some weight-`c`
//! invariant does not, i.e. `log w` lies in `γ_c` but not in `γ_{c+1}` of the
//! Malcev Lie algebra. The invariant spaces are nested with
//! `E≤n ∩ (weight ≤ n-1) = E≤n-1`, so it suffices to test the weight-`n`
//! layer at each `n`.

use serde_json::{json, Value};

use crate::coalgebra::Functional;
use crate::descent::{descending_invariants, InvariantBasis};
use crate::error::Result;
use crate::scalar::Exact;
use crate::words::{Presentation, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Depth {
    Exactly(usize),
    GreaterThan(usize),
}

#[derive(Clone, Debug)]
pub struct Witness<S> {
    pub functional: Functional<S>,
    pub value: S,
}

#[derive(Clone, Debug)]
pub struct DepthReport<S> {
    pub word: Word,
    pub cutoff: usize,
    pub depth: Depth,
    pub witness: Option<Witness<S>>,
    pub notes: Vec<String>,
}

pub fn commutator_depth<S: Exact>(w: &Word, p: &Presentation, cutoff: usize) -> Result<DepthReport<S>> {
    let invariants = descending_invariants(p, cutoff)?;
    depth_with(w, &invariants)
}

/// Depth against an already computed invariant basis.
pub fn depth_with<S: Exact>(w: &Word, invariants: &InvariantBasis<S>) -> Result<DepthReport<S>> {
    let cutoff = invariants.cutoff();
    let mut notes: Vec<String> = invariants.notes().to_vec();
    for n in 1..=cutoff {
        for f in invariants.layer(n) {
            let value = invariants.hopf_evaluate(f, w)?;
            if !value.is_zero() {
                return Ok(DepthReport {
                    word: w.clone(),
                    cutoff,
                    depth: Depth::Exactly(n),
                    witness: Some(Witness {
                        functional: f.clone(),
                        value,
                    }),
                    notes,
                });
            }
        }
    }
    if invariants.is_zero() {
        notes.push(
            "no invariants survive up to this weight; the group has trivial rational \
             nilpotent quotients through this weight, so the depth test cannot see the word"
                .to_string(),
        );
    }
    Ok(DepthReport {
        word: w.clone(),
        cutoff,
        depth: Depth::GreaterThan(cutoff),
        witness: None,
        notes,
    })
}

impl<S: Exact> DepthReport<S> {
    pub fn to_json(&self, invariants: &InvariantBasis<S>) -> Value {
        let alphabet = invariants.presentation().alphabet();
        let basis = invariants.coalgebra().basis();
        let (kind, depth) = match self.depth {
            Depth::Exactly(c) => ("exactly", c),
            Depth::GreaterThan(k) => ("greater_than", k),
        };
        let witness = match &self.witness {
            Some(w) => json!({
                "functional": w.functional.to_json(basis, alphabet),
                "symbol": invariants
                    .coalgebra()
                    .symbol_for_functional(&w.functional)
                    .format(alphabet),
                "value": w.value.to_ratio_string(),
            }),
            None => Value::Null,
        };
        let summary = match self.depth {
            Depth::Exactly(c) => format!("exactly {c}"),
            Depth::GreaterThan(k) => format!("greater than {k}"),
        };
        json!({
            "word": self.word.format(alphabet),
            "max_weight": self.cutoff,
            "depth": { "kind": kind, "value": depth },
            "summary": summary,
            "witness": witness,
            "notes": self.notes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{load_presentation, Alphabet};
    use crate::{Scalar, Q};

    #[test]
    fn commutator_in_free_group() {
        let p = Presentation::free(Alphabet::letters(2));
        let w = Word::from_signed(&[1, 2, -1, -2]);
        let r: DepthReport<Q> = commutator_depth(&w, &p, 3).unwrap();
        assert_eq!(r.depth, Depth::Exactly(2));
        let wit = r.witness.unwrap();
        assert_eq!(wit.value, Q::from_int(1));
    }

    #[test]
    fn generators_have_depth_one() {
        let p = Presentation::free(Alphabet::letters(2));
        let r: DepthReport<Q> = commutator_depth(&Word::from_signed(&[1]), &p, 2).unwrap();
        assert_eq!(r.depth, Depth::Exactly(1));
        let r: DepthReport<Q> = commutator_depth(&Word::empty(), &p, 2).unwrap();
        assert_eq!(r.depth, Depth::GreaterThan(2));
    }

    #[test]
    fn relator_is_invisible() {
        let p = load_presentation(r#"{"generators":["a","b"],"relations":["a b a^-1 b^-1"]}"#)
            .unwrap();
        let w = Word::from_signed(&[1, 2, -1, -2]);
        let r: DepthReport<Q> = commutator_depth(&w, &p, 4).unwrap();
        assert_eq!(r.depth, Depth::GreaterThan(4));
    }
}
