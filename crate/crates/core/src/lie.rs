//! Free Lie algebra truncated at a weight cutoff, in the Lyndon basis.
//!
//! Basis elements are ordered by weight, then lexicographically. The
//! bracketing of a Lyndon word `w` follows its standard factorization
//! `w = uv` (`v` the longest proper Lyndon suffix): `P(w) = [P(u), P(v)]`.
//! The lexicographically least monomial of `P(w)` is `w` itself with
//! coefficient 1 and every other monomial is larger, which makes coordinate
//! extraction a triangular solve.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{Monomial, TruncatedTensor};
use crate::words::Alphabet;

pub fn is_lyndon(w: &[u16]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Lyndon words of length exactly `n` over `m` letters, in lexicographic order.
pub fn lyndon_words(m: usize, n: usize) -> Vec<Monomial> {
    lyndon_words_up_to(m, n)
        .into_iter()
        .filter(|w| w.len() == n)
        .collect()
}

/// Duval's generation of all Lyndon words of length `1..=n`, in lexicographic order.
fn lyndon_words_up_to(m: usize, n: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    if m == 0 || n == 0 {
        return out;
    }
    let top = (m - 1) as u16;
    let mut w: Vec<u16> = vec![0];
    while !w.is_empty() {
        out.push(w.clone());
        let base = w.clone();
        while w.len() < n {
            w.push(base[w.len() % base.len()]);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    out
}

/// Number of Lyndon words of length `n` over `m` letters.
pub fn witt_number(m: usize, n: usize) -> usize {
    fn mobius(mut d: usize) -> i64 {
        let mut result = 1;
        let mut p = 2;
        while p * p <= d {
            if d.is_multiple_of(p) {
                d /= p;
                if d.is_multiple_of(p) {
                    return 0;
                }
                result = -result;
            }
            p += 1;
        }
        if d > 1 {
            result = -result;
        }
        result
    }
    let total: i128 = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| mobius(d) as i128 * (m as i128).pow((n / d) as u32))
        .sum();
    (total / n as i128) as usize
}

/// Split a Lyndon word of length ≥ 2 as `uv` with `v` its longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u16]) -> Option<(&[u16], &[u16])> {
    if w.len() < 2 {
        return None;
    }
    (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .map(|i| w.split_at(i))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracket {
    Letter(u16),
    Pair(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    pub fn of_lyndon(w: &[u16]) -> Result<Self> {
        if !is_lyndon(w) {
            return Err(Error::NotLyndon(format!("{w:?}")));
        }
        Ok(Self::build(w))
    }

    fn build(w: &[u16]) -> Self {
        match standard_factorization(w) {
            None => Bracket::Letter(w[0]),
            Some((u, v)) => Bracket::Pair(Box::new(Self::build(u)), Box::new(Self::build(v))),
        }
    }

    /// Integer expansion into monomials.
    pub fn expand(&self) -> BTreeMap<Monomial, i64> {
        match self {
            Bracket::Letter(g) => BTreeMap::from([(vec![*g], 1)]),
            Bracket::Pair(a, b) => {
                let (ea, eb) = (a.expand(), b.expand());
                let mut out: BTreeMap<Monomial, i64> = BTreeMap::new();
                for (ma, ca) in &ea {
                    for (mb, cb) in &eb {
                        let ab = [ma.as_slice(), mb.as_slice()].concat();
                        let ba = [mb.as_slice(), ma.as_slice()].concat();
                        *out.entry(ab).or_default() += ca * cb;
                        *out.entry(ba).or_default() -= ca * cb;
                    }
                }
                out.retain(|_, c| *c != 0);
                out
            }
        }
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        match self {
            Bracket::Letter(g) => alphabet.name(*g as usize).to_string(),
            Bracket::Pair(a, b) => format!("[{},{}]", a.format(alphabet), b.format(alphabet)),
        }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Letter(g) => write!(f, "x{g}"),
            Bracket::Pair(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Expansion of the standard bracketing of a Lyndon word, at cutoff equal to its length.
pub fn bracketing_expand<S: Scalar>(w: &[u16]) -> Result<TruncatedTensor<S>> {
    let b = Bracket::of_lyndon(w)?;
    let mut t = TruncatedTensor::zero(w.len());
    for (m, c) in b.expand() {
        t.add_term(m, S::from_int(c));
    }
    Ok(t)
}

#[derive(Clone, Debug)]
pub struct LyndonElement {
    pub word: Monomial,
    pub bracket: Bracket,
    pub expansion: BTreeMap<Monomial, i64>,
}

impl LyndonElement {
    pub fn weight(&self) -> usize {
        self.word.len()
    }
}

/// The Lyndon basis of the free Lie algebra on `m` generators up to weight `K`.
#[derive(Clone, Debug)]
pub struct LyndonBasis {
    alphabet_size: usize,
    cutoff: usize,
    elements: Vec<LyndonElement>,
    /// `offsets[n]` is the index of the first weight-`n` element; `offsets[K+1]` is the total.
    offsets: Vec<usize>,
    index: HashMap<Monomial, usize>,
}

impl LyndonBasis {
    pub fn new(alphabet_size: usize, cutoff: usize) -> Result<Self> {
        if cutoff == 0 {
            return Err(Error::ZeroCutoff);
        }
        if alphabet_size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        let mut words = lyndon_words_up_to(alphabet_size, cutoff);
        words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut offsets = vec![0; cutoff + 2];
        for w in &words {
            offsets[w.len() + 1] += 1;
        }
        for n in 1..offsets.len() {
            offsets[n] += offsets[n - 1];
        }
        let elements: Vec<LyndonElement> = words
            .into_iter()
            .map(|word| {
                let bracket = Bracket::build(&word);
                let expansion = bracket.expand();
                LyndonElement {
                    word,
                    bracket,
                    expansion,
                }
            })
            .collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.word.clone(), i))
            .collect();
        Ok(LyndonBasis {
            alphabet_size,
            cutoff,
            elements,
            offsets,
            index,
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[LyndonElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &LyndonElement {
        &self.elements[i]
    }

    pub fn index_of(&self, word: &[u16]) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// Index range of the weight-`n` elements.
    pub fn weight_range(&self, n: usize) -> std::ops::Range<usize> {
        if n == 0 || n > self.cutoff {
            return 0..0;
        }
        self.offsets[n]..self.offsets[n + 1]
    }

    /// Number of basis elements of weight at most `n`.
    pub fn dim_up_to(&self, n: usize) -> usize {
        self.offsets[n.min(self.cutoff) + 1]
    }

    pub fn weight_of(&self, i: usize) -> usize {
        self.elements[i].weight()
    }

    /// Expansion of basis element `i` as a tensor at the given cutoff.
    pub fn expansion<S: Scalar>(&self, i: usize, cutoff: usize) -> TruncatedTensor<S> {
        let mut t = TruncatedTensor::zero(cutoff);
        for (m, c) in &self.elements[i].expansion {
            t.add_term(m.clone(), S::from_int(*c));
        }
        t
    }

    pub fn zero<S: Scalar>(&self) -> LieElement<S> {
        LieElement {
            coords: vec![S::zero(); self.len()],
        }
    }

    pub fn basis_element<S: Scalar>(&self, i: usize) -> LieElement<S> {
        let mut e = self.zero();
        e.coords[i] = S::one();
        e
    }

    pub fn generator<S: Scalar>(&self, g: usize) -> LieElement<S> {
        self.basis_element(g)
    }

    /// Tensor expansion of a Lie element.
    pub fn to_tensor<S: Scalar>(&self, u: &LieElement<S>) -> TruncatedTensor<S> {
        let mut t = TruncatedTensor::zero(self.cutoff);
        for (i, c) in u.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (m, e) in &self.elements[i].expansion {
                t.add_term(m.clone(), c.clone() * S::from_int(*e));
            }
        }
        t
    }

    /// Coordinates of a Lie element given by its tensor expansion. Weights
    /// above the basis cutoff are ignored.
    pub fn lie_coordinates<S: Scalar>(&self, p: &TruncatedTensor<S>) -> Result<LieElement<S>> {
        if !p.constant().is_zero() {
            return Err(Error::NotPrimitive(String::new()));
        }
        let mut coords = vec![S::zero(); self.len()];
        for n in 1..=self.cutoff.min(p.cutoff()) {
            let mut residual: BTreeMap<Monomial, S> = p.weight_part(n).clone();
            while let Some((m, c)) = residual.pop_first() {
                let i = self
                    .index_of(&m)
                    .ok_or_else(|| Error::NotPrimitive(format!("{m:?}")))?;
                for (mono, e) in &self.elements[i].expansion {
                    if *mono == m {
                        continue;
                    }
                    let delta = -(c.clone() * S::from_int(*e));
                    match residual.get_mut(mono) {
                        Some(v) => {
                            *v += delta;
                            if v.is_zero() {
                                residual.remove(mono);
                            }
                        }
                        None => {
                            residual.insert(mono.clone(), delta);
                        }
                    }
                }
                coords[i] = c;
            }
        }
        Ok(LieElement { coords })
    }

    /// `[u, v]`, truncated at the basis cutoff.
    pub fn bracket<S: Scalar>(&self, u: &LieElement<S>, v: &LieElement<S>) -> LieElement<S> {
        let c = self
            .to_tensor(u)
            .commutator(&self.to_tensor(v))
            .expect("same cutoff");
        self.lie_coordinates(&c)
            .expect("commutators of Lie elements are Lie elements")
    }

    /// `[b_i, b_j]` in coordinates.
    pub fn bracket_basis<S: Scalar>(&self, i: usize, j: usize) -> LieElement<S> {
        if self.weight_of(i) + self.weight_of(j) > self.cutoff {
            return self.zero();
        }
        self.bracket(&self.basis_element(i), &self.basis_element(j))
    }

    pub fn word_string(&self, i: usize, alphabet: &Alphabet) -> String {
        alphabet.monomial_string(&self.elements[i].word)
    }
}

pub fn lie_coordinates<S: Scalar>(
    basis: &LyndonBasis,
    p: &TruncatedTensor<S>,
) -> Result<LieElement<S>> {
    basis.lie_coordinates(p)
}

pub fn lie_bracket<S: Scalar>(
    basis: &LyndonBasis,
    u: &LieElement<S>,
    v: &LieElement<S>,
) -> LieElement<S> {
    basis.bracket(u, v)
}

/// A Lie element in Lyndon coordinates (dense, indexed like its basis).
#[derive(Clone, Debug, PartialEq)]
pub struct LieElement<S> {
    coords: Vec<S>,
}

impl<S: Scalar> LieElement<S> {
    pub fn from_coords(coords: Vec<S>) -> Self {
        LieElement { coords }
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &S {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        LieElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        LieElement {
            coords: self.coords.iter().map(|a| a.clone() * c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn lyndon_enumeration() {
        assert_eq!(lyndon_words(2, 2), vec![vec![0, 1]]);
        assert_eq!(lyndon_words(2, 3), vec![vec![0, 0, 1], vec![0, 1, 1]]);
        let counts: Vec<usize> = (1..=5).map(|n| lyndon_words(2, n).len()).collect();
        assert_eq!(counts, vec![2, 1, 2, 3, 6]);
        assert_eq!(lyndon_words(3, 3).len(), 8);
        for m in 1..=4 {
            for n in 1..=6 {
                assert_eq!(lyndon_words(m, n).len(), witt_number(m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn factorization_and_expansion() {
        assert_eq!(
            standard_factorization(&[0, 0, 1]),
            Some((&[0u16][..], &[0u16, 1][..]))
        );
        assert_eq!(
            standard_factorization(&[0, 1, 1]),
            Some((&[0u16, 1][..], &[1u16][..]))
        );
        let e = bracketing_expand::<Q>(&[0, 0, 1]).unwrap();
        assert_eq!(e.coefficient(&[0, 0, 1]), Q::from_int(1));
        assert_eq!(e.coefficient(&[0, 1, 0]), Q::from_int(-2));
        assert_eq!(e.coefficient(&[1, 0, 0]), Q::from_int(1));
        let e = bracketing_expand::<Q>(&[0]).unwrap();
        assert_eq!(e.coefficient(&[0]), Q::from_int(1));
        assert!(matches!(
            bracketing_expand::<Q>(&[1, 0]),
            Err(Error::NotLyndon(_))
        ));
    }

    #[test]
    fn expansions_are_triangular() {
        let basis = LyndonBasis::new(3, 5).unwrap();
        for e in basis.elements() {
            let (first, c) = e.expansion.iter().next().unwrap();
            assert_eq!(first, &e.word);
            assert_eq!(*c, 1);
        }
    }

    #[test]
    fn coordinates_of_brackets() {
        let basis = LyndonBasis::new(2, 3).unwrap();
        let a: LieElement<Q> = basis.generator(0);
        let b: LieElement<Q> = basis.generator(1);
        let ab = basis.bracket(&a, &b);
        let i = basis.index_of(&[0, 1]).unwrap();
        assert_eq!(ab, basis.basis_element(i));
        assert!(basis.bracket(&ab, &ab).is_zero());
        let ba = basis.bracket(&b, &a);
        assert_eq!(ba, ab.scale(&Q::from_int(-1)));
        let xy = TruncatedTensor::<Q>::monomial(vec![0, 1], Q::from_int(1), 3);
        assert!(matches!(
            basis.lie_coordinates(&xy),
            Err(Error::NotPrimitive(_))
        ));
    }

    #[test]
    fn basis_layout() {
        let basis = LyndonBasis::new(2, 4).unwrap();
        assert_eq!(basis.len(), 2 + 1 + 2 + 3);
        assert_eq!(basis.weight_range(3), 3..5);
        assert_eq!(basis.dim_up_to(2), 3);
        let alphabet = Alphabet::letters(2);
        assert_eq!(basis.word_string(3, &alphabet), "aab");
        assert_eq!(basis.element(3).bracket.format(&alphabet), "[a,[a,b]]");
    }
}
