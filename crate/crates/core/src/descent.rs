//! Invariants of a presented group: functionals on the free Lie algebra that
//! vanish on the logarithms of all relations and whose iterated cobrackets
//! stay inside the same space.
//!
//! `E≤1` is the space of homomorphisms killing every relation. Given `E≤k`,
//! a functional of weight at most `k+1` belongs to `E≤k+1` when its
//! cobracket lies in `E≤k ⊗ E≤k` and it vanishes on every relation. Since
//! cobrackets are antisymmetric, the first condition only needs to be checked
//! on one tensor factor: `(a ⊗ id)]φ[ = 0` for every `a` in the annihilator
//! of `E≤k`.

use log::warn;
use rand::Rng;
use serde_json::{json, Map, Value};

use crate::coalgebra::{log_coordinates, Coalgebra, Functional};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Subspace};
use crate::scalar::Exact;
use crate::words::{Presentation, Word};

#[derive(Clone, Debug)]
pub struct InvariantBasis<S> {
    presentation: Presentation,
    coalgebra: Coalgebra<S>,
    relations: Vec<Word>,
    /// `spaces[n-1]` is `E≤n`, inside the functionals of weight at most `n`
    /// (the first `dim_up_to(n)` basis coordinates).
    spaces: Vec<Subspace<S>>,
    /// `layers[n-1]` complements `E≤n-1` in `E≤n`; each element has weight exactly `n`.
    layers: Vec<Vec<Functional<S>>>,
    notes: Vec<String>,
}

/// Reduce, deduplicate, and drop trivial relations.
fn clean_relations(p: &Presentation, notes: &mut Vec<String>) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for (i, r) in p.relations().iter().enumerate() {
        let r = r.free_reduce();
        if r.is_empty() {
            let msg = format!("relation {} reduces to the empty word and was dropped", i + 1);
            warn!("{msg}");
            notes.push(msg);
            continue;
        }
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

pub fn descending_invariants<S: Exact>(p: &Presentation, cutoff: usize) -> Result<InvariantBasis<S>> {
    let coalgebra = Coalgebra::new(p.alphabet().len(), cutoff)?;
    descending_invariants_with(p, coalgebra)
}

/// As [`descending_invariants`], reusing precomputed structure constants.
pub fn descending_invariants_with<S: Exact>(
    p: &Presentation,
    coalgebra: Coalgebra<S>,
) -> Result<InvariantBasis<S>> {
    if coalgebra.alphabet_size() != p.alphabet().len() {
        return Err(Error::DimensionMismatch(format!(
            "structure constants for {} generators, presentation has {}",
            coalgebra.alphabet_size(),
            p.alphabet().len()
        )));
    }
    let basis = coalgebra.basis();
    let k_max = basis.cutoff();
    let mut notes = Vec::new();
    let relations = clean_relations(p, &mut notes);
    let logs: Vec<Vec<S>> = relations
        .iter()
        .map(|r| log_coordinates::<S>(basis, r).map(|l| l.coords().to_vec()))
        .collect::<Result<_>>()?;

    let n1 = basis.dim_up_to(1);
    let mut e = Echelon::new(n1);
    for l in &logs {
        e.insert(l[..n1].to_vec());
    }
    let mut spaces = vec![e.kernel()];

    for k in 1..k_max {
        let nk = basis.dim_up_to(k);
        let next = basis.dim_up_to(k + 1);
        let ann = spaces[k - 1].annihilator();
        let mut rows = Echelon::new(next);
        for l in &logs {
            rows.insert(l[..next].to_vec());
        }
        for a in ann.basis() {
            for j in 0..nk {
                let mut row = vec![S::zero(); next];
                let mut any = false;
                for (i, ai) in a.iter().enumerate() {
                    if ai.is_zero() {
                        continue;
                    }
                    for (l, c) in coalgebra.bracket_constants(i, j) {
                        if *l < next {
                            row[*l] += ai.clone() * c;
                            any = true;
                        }
                    }
                }
                if any {
                    rows.insert(row);
                }
            }
        }
        spaces.push(rows.kernel());
    }

    let layers = (1..=k_max)
        .map(|n| graded_layer(&coalgebra, &spaces[n - 1], n))
        .collect();

    Ok(InvariantBasis {
        presentation: p.clone(),
        coalgebra,
        relations,
        spaces,
        layers,
        notes,
    })
}

/// Elements of `E≤n` with a nonzero weight-`n` part, reduced so that they
/// form a complement of `E≤n-1`: echelonize with the highest weight first.
fn graded_layer<S: Exact>(co: &Coalgebra<S>, space: &Subspace<S>, n: usize) -> Vec<Functional<S>> {
    let basis = co.basis();
    let dim = space.ambient();
    let reversed = |v: &[S]| v.iter().rev().cloned().collect::<Vec<S>>();
    let mut e = Echelon::new(dim);
    for v in space.basis() {
        e.insert(reversed(v));
    }
    let lower = basis.dim_up_to(n - 1);
    e.rows()
        .iter()
        .zip(e.pivots())
        .filter(|(_, &p)| dim - 1 - p >= lower)
        .map(|(row, _)| Functional::from_prefix(basis, &reversed(row)))
        .collect()
}

impl<S: Exact> InvariantBasis<S> {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn coalgebra(&self) -> &Coalgebra<S> {
        &self.coalgebra
    }

    pub fn cutoff(&self) -> usize {
        self.coalgebra.cutoff()
    }

    /// Relations actually used (reduced, deduplicated, nonempty).
    pub fn relations(&self) -> &[Word] {
        &self.relations
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// `E≤n` in the coordinates of functionals of weight at most `n`.
    pub fn space(&self, n: usize) -> &Subspace<S> {
        &self.spaces[n - 1]
    }

    /// `dim E≤n` for `n = 1..=K`.
    pub fn cumulative_dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    /// `dim E≤n − dim E≤n-1` for `n = 1..=K`.
    pub fn weight_dims(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    /// Basis elements of weight exactly `n` (complementing lower weights).
    pub fn layer(&self, n: usize) -> &[Functional<S>] {
        &self.layers[n - 1]
    }

    /// All basis functionals, lowest weight first.
    pub fn functionals(&self) -> impl Iterator<Item = (usize, &Functional<S>)> {
        self.layers
            .iter()
            .enumerate()
            .flat_map(|(i, l)| l.iter().map(move |f| (i + 1, f)))
    }

    /// Whether `φ` lies in `E≤K`.
    pub fn contains(&self, phi: &Functional<S>) -> bool {
        let n = self.cutoff();
        self.spaces[n - 1].contains(&phi.coords()[..self.coalgebra.basis().dim_up_to(n)])
    }

    pub fn is_zero(&self) -> bool {
        self.spaces.last().is_some_and(|s| s.dim() == 0)
    }

    pub fn hopf_evaluate(&self, phi: &Functional<S>, w: &Word) -> Result<S> {
        self.coalgebra.hopf_evaluate(phi, w)
    }

    /// Every basis functional vanishes on every relation.
    pub fn vanishes_on_relations(&self) -> Result<bool> {
        for r in &self.relations {
            for (_, f) in self.functionals() {
                if !self.hopf_evaluate(f, r)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The cobracket of every basis functional lies in `E≤K ⊗ E≤K`.
    pub fn is_closed_under_cobracket(&self) -> bool {
        let basis = self.coalgebra.basis();
        let n = basis.dim_up_to(self.cutoff());
        let ann = self.spaces[self.cutoff() - 1].annihilator();
        self.functionals().all(|(_, f)| {
            let t = self.coalgebra.cobracket_functional(f);
            ann.basis().iter().all(|a| {
                (0..n).all(|j| {
                    (0..n)
                        .fold(S::zero(), |acc, i| acc + a[i].clone() * t.get(i, j))
                        .is_zero()
                })
            })
        })
    }

    /// JSON report; symbols are realized only when requested.
    pub fn to_json(&self, with_symbols: bool) -> Value {
        let alphabet = self.presentation.alphabet();
        let basis = self.coalgebra.basis();
        let mut weights = Map::new();
        for n in 1..=self.cutoff() {
            let items: Vec<Value> = self
                .layer(n)
                .iter()
                .map(|f| {
                    let mut item = Map::new();
                    item.insert("coordinates".into(), f.to_json(basis, alphabet));
                    if with_symbols {
                        let s = self.coalgebra.symbol_for_functional(f);
                        item.insert("symbol".into(), Value::String(s.format(alphabet)));
                    }
                    Value::Object(item)
                })
                .collect();
            weights.insert(n.to_string(), Value::Array(items));
        }
        json!({
            "presentation": self.presentation.to_file(),
            "max_weight": self.cutoff(),
            "dimensions": {
                "cumulative": self.cumulative_dims(),
                "per_weight": self.weight_dims(),
            },
            "invariants": weights,
            "notes": self.notes,
        })
    }
}

fn random_word<R: Rng + ?Sized>(rng: &mut R, m: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let g = rng.gen_range(0..m);
            if rng.gen_bool(0.5) {
                crate::words::SignedLetter::pos(g)
            } else {
                crate::words::SignedLetter::neg(g)
            }
        })
        .collect()
}

/// Randomized check that `φ` is unchanged by multiplying words with
/// conjugates of relations (or their inverses).
pub fn verify_descent<S: Exact, R: Rng + ?Sized>(
    phi: &Functional<S>,
    basis: &InvariantBasis<S>,
    trials: usize,
    rng: &mut R,
) -> Result<bool> {
    let relations = basis.relations();
    if relations.is_empty() {
        return Ok(true);
    }
    let m = basis.presentation().alphabet().len();
    for _ in 0..trials {
        let u = random_word(rng, m, 6);
        let g = random_word(rng, m, 4);
        let mut r = relations[rng.gen_range(0..relations.len())].clone();
        if rng.gen_bool(0.5) {
            r = r.inverse();
        }
        let moved = u.concat(&r.conjugate_by(&g));
        if basis.hopf_evaluate(phi, &u)? != basis.hopf_evaluate(phi, &moved)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check one explicit instance `u` versus `u·g r g⁻¹`.
pub fn descends_on<S: Exact>(
    phi: &Functional<S>,
    basis: &InvariantBasis<S>,
    u: &Word,
    g: &Word,
    r: &Word,
) -> Result<bool> {
    let moved = u.concat(&r.conjugate_by(g));
    Ok(basis.hopf_evaluate(phi, u)? == basis.hopf_evaluate(phi, &moved)?)
}
