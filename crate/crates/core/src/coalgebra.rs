//! Functionals on the truncated free Lie algebra and their relation to tree
//! symbols.
//!
//! A [`Functional`] stores its values on the Lyndon basis elements, in basis
//! order. Linear trees `h₁|…|hₙ` act on a Lie element through its tensor
//! expansion, a monomial `x_{j₁}⋯x_{jₙ}` contributing `h₁(j₁)⋯hₙ(jₙ)`.
//! Branching trees are first rewritten into linear ones with the nested
//! Arnold relation `(α)(β)γ = ((α)β)γ + (α(β))γ`.
//!
//! Those functionals are homogeneous. [`realized_functional`] adds the
//! lower-weight terms that appear when vertices on the same generator are
//! realized by separate bump forms; braiding values on eigenwords pair with
//! that version.

use std::collections::BTreeMap;

use serde_json::{Map, Value};

use crate::braiding::{SymbolSum, TreeSymbol};
use crate::error::{Error, Result};
use crate::lie::{LieElement, LyndonBasis};
use crate::scalar::Scalar;
use crate::tensor::{bch_of_word, Monomial};
use crate::words::{Alphabet, Homomorphism, Word};

/// A linear functional on the free Lie algebra up to weight `K`, in the dual
/// of the Lyndon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Functional<S> {
    cutoff: usize,
    coords: Vec<S>,
}

impl<S: Scalar> Functional<S> {
    pub fn zero(basis: &LyndonBasis) -> Self {
        Functional {
            cutoff: basis.cutoff(),
            coords: vec![S::zero(); basis.len()],
        }
    }

    pub fn from_coords(basis: &LyndonBasis, coords: Vec<S>) -> Result<Self> {
        if coords.len() != basis.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a basis of size {}",
                coords.len(),
                basis.len()
            )));
        }
        Ok(Functional {
            cutoff: basis.cutoff(),
            coords,
        })
    }

    /// Coordinates given only on a prefix of the basis; the rest are zero.
    pub fn from_prefix(basis: &LyndonBasis, prefix: &[S]) -> Self {
        let mut f = Self::zero(basis);
        f.coords[..prefix.len()].clone_from_slice(prefix);
        f
    }

    /// The dual basis element of basis index `i`.
    pub fn dual(basis: &LyndonBasis, i: usize) -> Self {
        let mut f = Self::zero(basis);
        f.coords[i] = S::one();
        f
    }

    pub fn dual_word(basis: &LyndonBasis, word: &[u16]) -> Result<Self> {
        let i = basis
            .index_of(word)
            .ok_or_else(|| Error::NotLyndon(format!("{word:?}")))?;
        Ok(Self::dual(basis, i))
    }

    /// Weight-1 functional of a homomorphism.
    pub fn from_homomorphism(basis: &LyndonBasis, h: &Homomorphism<S>) -> Self {
        Self::from_prefix(basis, h.values())
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
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

    /// Highest weight with a nonzero coordinate (0 for the zero functional).
    pub fn weight(&self, basis: &LyndonBasis) -> usize {
        self.coords
            .iter()
            .rposition(|c| !c.is_zero())
            .map_or(0, |i| basis.weight_of(i))
    }

    /// The weight-`n` component.
    pub fn homogeneous(&self, basis: &LyndonBasis, n: usize) -> Self {
        let mut f = Self::zero(basis);
        for i in basis.weight_range(n) {
            f.coords[i] = self.coords[i].clone();
        }
        f
    }

    pub fn add(&self, other: &Self) -> Self {
        Functional {
            cutoff: self.cutoff,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Functional {
            cutoff: self.cutoff,
            coords: self.coords.iter().map(|a| a.clone() * c).collect(),
        }
    }

    /// `⟨φ, u⟩`.
    pub fn pair(&self, u: &LieElement<S>) -> Result<S> {
        if u.coords().len() != self.coords.len() {
            return Err(Error::DimensionMismatch(format!(
                "functional has {} coordinates, Lie element {}",
                self.coords.len(),
                u.coords().len()
            )));
        }
        Ok(self
            .coords
            .iter()
            .zip(u.coords())
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b))
    }

    /// `{weight: {lyndon word: "p/q"}}` with nonzero entries only.
    pub fn to_json(&self, basis: &LyndonBasis, alphabet: &Alphabet) -> Value {
        let mut out = Map::new();
        for n in 1..=basis.cutoff() {
            let mut part = Map::new();
            for i in basis.weight_range(n) {
                if !self.coords[i].is_zero() {
                    part.insert(
                        basis.word_string(i, alphabet),
                        Value::String(self.coords[i].to_ratio_string()),
                    );
                }
            }
            if !part.is_empty() {
                out.insert(n.to_string(), Value::Object(part));
            }
        }
        Value::Object(out)
    }

    pub fn from_json(value: &Value, basis: &LyndonBasis, alphabet: &Alphabet) -> Result<Self> {
        let schema = |msg: &str| Error::Schema(msg.to_string());
        let obj = value.as_object().ok_or_else(|| schema("functional must be an object"))?;
        let mut f = Self::zero(basis);
        for (weight, part) in obj {
            let n: usize = weight
                .parse()
                .map_err(|_| schema("weight keys must be integers"))?;
            let part = part
                .as_object()
                .ok_or_else(|| schema("weight component must be an object"))?;
            for (word, coeff) in part {
                let m = alphabet.parse_monomial(word)?;
                if m.len() != n {
                    return Err(schema(&format!("`{word}` does not have weight {n}")));
                }
                let i = basis.index_of(&m).ok_or_else(|| Error::NotLyndon(word.clone()))?;
                let text = coeff
                    .as_str()
                    .ok_or_else(|| schema("coefficients must be \"p/q\" strings"))?;
                f.coords[i] = S::parse_ratio(text)
                    .ok_or_else(|| schema(&format!("bad coefficient `{text}`")))?;
            }
        }
        Ok(f)
    }
}

/// An element of dual ⊗ dual, keyed by pairs of basis indices.
#[derive(Clone, Debug, PartialEq)]
pub struct CobracketTensor<S> {
    entries: BTreeMap<(usize, usize), S>,
}

impl<S: Scalar> Default for CobracketTensor<S> {
    fn default() -> Self {
        CobracketTensor {
            entries: BTreeMap::new(),
        }
    }
}

impl<S: Scalar> CobracketTensor<S> {
    pub fn get(&self, i: usize, j: usize) -> S {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_entry(&mut self, i: usize, j: usize, c: S) {
        if c.is_zero() {
            return;
        }
        let e = self.entries.entry((i, j)).or_insert_with(S::zero);
        *e += c;
        if e.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &S)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.entries
            .iter()
            .all(|(&(i, j), c)| self.get(j, i) == -c.clone())
    }

    /// `φ ⊗ ψ`.
    pub fn outer(phi: &Functional<S>, psi: &Functional<S>) -> Self {
        let mut t = Self::default();
        for (i, a) in phi.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in psi.coords.iter().enumerate() {
                t.add_entry(i, j, a.clone() * b);
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.entries {
            out.add_entry(i, j, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::default();
        for (&(i, j), v) in &self.entries {
            out.add_entry(i, j, v.clone() * c);
        }
        out
    }
}

/// A Lyndon basis together with its bracket structure constants.
#[derive(Clone, Debug)]
pub struct Coalgebra<S> {
    basis: LyndonBasis,
    /// `brackets[i][j]` lists the nonzero coordinates of `[b_i, b_j]`, for
    /// pairs whose weights sum to at most the cutoff.
    brackets: Vec<Vec<Vec<(usize, S)>>>,
}

impl<S: Scalar> Coalgebra<S> {
    pub fn new(alphabet_size: usize, cutoff: usize) -> Result<Self> {
        Ok(Self::from_basis(LyndonBasis::new(alphabet_size, cutoff)?))
    }

    #[allow(clippy::needless_range_loop)]
    pub fn from_basis(basis: LyndonBasis) -> Self {
        let n = basis.len();
        let k = basis.cutoff();
        let mut brackets = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                if basis.weight_of(i) + basis.weight_of(j) > k {
                    continue;
                }
                let b: LieElement<S> = basis.bracket_basis(i, j);
                let entries: Vec<(usize, S)> = b
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(l, c)| (l, c.clone()))
                    .collect();
                brackets[j][i] = entries.iter().map(|(l, c)| (*l, -c.clone())).collect();
                brackets[i][j] = entries;
            }
        }
        Coalgebra { basis, brackets }
    }

    pub fn basis(&self) -> &LyndonBasis {
        &self.basis
    }

    pub fn cutoff(&self) -> usize {
        self.basis.cutoff()
    }

    pub fn alphabet_size(&self) -> usize {
        self.basis.alphabet_size()
    }

    /// Nonzero coordinates of `[b_i, b_j]`.
    pub fn bracket_constants(&self, i: usize, j: usize) -> &[(usize, S)] {
        &self.brackets[i][j]
    }

    /// `⟨]φ[, b_i ⊗ b_j⟩ = ⟨φ, [b_i, b_j]⟩`.
    pub fn cobracket_functional(&self, phi: &Functional<S>) -> CobracketTensor<S> {
        let mut t = CobracketTensor::default();
        let n = self.basis.len();
        for i in 0..n {
            for j in 0..n {
                let v = self.brackets[i][j]
                    .iter()
                    .fold(S::zero(), |acc, (l, c)| acc + c.clone() * &phi.coords[*l]);
                t.add_entry(i, j, v);
            }
        }
        t
    }

    pub fn zero_functional(&self) -> Functional<S> {
        Functional::zero(&self.basis)
    }

    pub fn functional_from_bar(&self, t: &TreeSymbol<S>) -> Result<Functional<S>> {
        functional_from_bar(&self.basis, t)
    }

    pub fn functional_from_symbol(&self, sum: &SymbolSum<S>) -> Functional<S> {
        functional_from_symbol(&self.basis, sum)
    }

    pub fn symbol_for_functional(&self, phi: &Functional<S>) -> SymbolSum<S> {
        symbol_for_functional(&self.basis, phi)
    }

    pub fn realized_functional(&self, sum: &SymbolSum<S>) -> Functional<S> {
        realized_functional(&self.basis, sum)
    }

    pub fn hopf_evaluate(&self, phi: &Functional<S>, w: &Word) -> Result<S> {
        hopf_evaluate(&self.basis, phi, w)
    }

    /// Image of a formal sum of tree pairs in dual ⊗ dual.
    pub fn tree_pairs_to_tensor(&self, pairs: &[(S, TreeSymbol<S>, TreeSymbol<S>)]) -> CobracketTensor<S> {
        pairs.iter().fold(CobracketTensor::default(), |acc, (c, l, r)| {
            let fl = self.functional_from_symbol(&SymbolSum::from_tree(l.clone()));
            let fr = self.functional_from_symbol(&SymbolSum::from_tree(r.clone()));
            acc.add(&CobracketTensor::outer(&fl, &fr).scale(c))
        })
    }
}

/// Functional of a linear tree `h₁|…|hₙ` (`h₁` the leaf, `hₙ` the root).
pub fn functional_from_bar<S: Scalar>(
    basis: &LyndonBasis,
    t: &TreeSymbol<S>,
) -> Result<Functional<S>> {
    let labels = t.chain_labels().ok_or(Error::NotLinear)?;
    let mut f = Functional::zero(basis);
    let n = labels.len();
    for i in basis.weight_range(n) {
        let mut total = S::zero();
        for (m, c) in &basis.element(i).expansion {
            let mut prod = S::from_int(*c);
            for (h, &g) in labels.iter().zip(m) {
                let v = h.generator_value(g as usize);
                if v.is_zero() {
                    prod = S::zero();
                    break;
                }
                prod *= v;
            }
            total += prod;
        }
        f.coords[i] = total;
    }
    Ok(f)
}

/// Find the path (child indices from the root) to a branching vertex with
/// no branching descendants.
fn deepest_branching<S: Scalar>(t: &TreeSymbol<S>) -> Option<Vec<usize>> {
    for (k, c) in t.children.iter().enumerate() {
        if let Some(mut path) = deepest_branching(c) {
            path.insert(0, k);
            return Some(path);
        }
    }
    (t.children.len() >= 2).then(Vec::new)
}

fn vertex_at_mut<'a, S>(t: &'a mut TreeSymbol<S>, path: &[usize]) -> &'a mut TreeSymbol<S> {
    path.iter().fold(t, |node, &k| &mut node.children[k])
}

/// Rewrite a tree as a combination of linear trees.
///
/// At a branching vertex whose children are all chains, two children `α`,
/// `β` are replaced using `(α)(β)γ = ((α)β)γ + (α(β))γ`: one term attaches
/// `α` to the root of `β`, the other `β` to the root of `α`. The new
/// branching (if any) sits one level deeper, so weighting each surplus child
/// by `M^{-depth}` gives a strictly decreasing measure.
pub fn linearize_tree<S: Scalar>(t: &TreeSymbol<S>) -> Vec<(S, TreeSymbol<S>)> {
    let mut out = Vec::new();
    let mut stack = vec![(S::one(), t.clone())];
    while let Some((c, tree)) = stack.pop() {
        let Some(path) = deepest_branching(&tree) else {
            out.push((c, tree));
            continue;
        };
        for (keep, moved) in [(1usize, 0usize), (0, 1)] {
            let mut next = tree.clone();
            let v = vertex_at_mut(&mut next, &path);
            let alpha = v.children[moved].clone();
            v.children[keep].children.push(alpha);
            v.children.remove(moved);
            stack.push((c.clone(), next));
        }
    }
    out
}

pub fn functional_from_symbol<S: Scalar>(basis: &LyndonBasis, sum: &SymbolSum<S>) -> Functional<S> {
    let mut f = Functional::zero(basis);
    for (c, t) in sum.terms() {
        if t.weight() > basis.cutoff() {
            continue;
        }
        for (d, lin) in linearize_tree(t) {
            let g = functional_from_bar(basis, &lin).expect("linearized trees are linear");
            f = f.add(&g.scale(&(c.clone() * d)));
        }
    }
    f
}

/// Coefficient of a word in `k` distinct letters in `log(e^{x₁}⋯e^{x_k})`,
/// where the word has `d` descents: `(-1)^d / (k·C(k-1, d))`.
pub fn log_product_coefficient<S: Scalar>(k: usize, descents: usize) -> S {
    let mut binom: i64 = 1;
    for i in 0..descents {
        binom = binom * (k - 1 - i) as i64 / (i + 1) as i64;
    }
    let sign = if descents.is_multiple_of(2) { 1 } else { -1 };
    S::from_ratio(sign, k as i64 * binom)
}

/// Orders of the vertices (post-order indices) with every child before its parent.
fn linear_extensions(children: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn grow(
        children: &[Vec<usize>],
        placed: &mut Vec<bool>,
        order: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if order.len() == children.len() {
            out.push(order.clone());
            return;
        }
        for v in 0..children.len() {
            if !placed[v] && children[v].iter().all(|&c| placed[c]) {
                placed[v] = true;
                order.push(v);
                grow(children, placed, order, out);
                order.pop();
                placed[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    grow(children, &mut vec![false; children.len()], &mut Vec::new(), &mut out);
    out
}

/// Bar expansion of a tree realized by bump forms with disjoint supports,
/// each bump placed after its parent's on the same handle.
///
/// Each linear extension is cut into consecutive blocks. A block whose
/// labels share a generator contributes that generator once, weighted by
/// [`log_product_coefficient`] for the block's order relative to the bump
/// order. Singleton blocks give the homogeneous bar words; longer blocks give
/// the lower-weight corrections. Monomials longer than `max_len` are dropped.
pub fn realized_expansion<S: Scalar>(
    t: &TreeSymbol<S>,
    m: usize,
    max_len: usize,
) -> BTreeMap<Monomial, S> {
    struct Walk<'a, S> {
        labels: Vec<&'a Homomorphism<S>>,
        m: usize,
        max_len: usize,
        out: BTreeMap<Monomial, S>,
    }

    impl<S: Scalar> Walk<'_, S> {
        fn cut(&mut self, order: &[usize], start: usize, blocks: &mut Vec<Vec<S>>, coef: S) {
            if start == order.len() {
                self.emit(blocks, coef);
                return;
            }
            if blocks.len() == self.max_len {
                return;
            }
            let mut merged: Vec<S> = vec![S::one(); self.m];
            let mut descents = 0;
            for end in start..order.len() {
                let v = order[end];
                for (g, x) in merged.iter_mut().enumerate() {
                    *x *= self.labels[v].generator_value(g).clone();
                }
                if merged.iter().all(|x| x.is_zero()) {
                    break;
                }
                // Post-order puts descendants first, so their bumps come later.
                if end > start && order[end - 1] < v {
                    descents += 1;
                }
                let k = end - start + 1;
                blocks.push(merged.clone());
                let c = coef.clone() * log_product_coefficient::<S>(k, descents);
                self.cut(order, end + 1, blocks, c);
                blocks.pop();
            }
        }

        fn emit(&mut self, blocks: &[Vec<S>], coef: S) {
            let mut partial: Vec<(Monomial, S)> = vec![(Vec::new(), coef)];
            for block in blocks {
                let mut next = Vec::new();
                for (mono, c) in &partial {
                    for (g, x) in block.iter().enumerate() {
                        if !x.is_zero() {
                            let mut mono = mono.clone();
                            mono.push(g as u16);
                            next.push((mono, c.clone() * x.clone()));
                        }
                    }
                }
                partial = next;
            }
            for (mono, c) in partial {
                let entry = self.out.entry(mono).or_insert_with(S::zero);
                *entry += c;
            }
        }
    }

    let (labels, children) = t.flatten();
    let mut walk = Walk { labels, m, max_len, out: BTreeMap::new() };
    for order in linear_extensions(&children) {
        walk.cut(&order, 0, &mut Vec::new(), S::one());
    }
    walk.out.retain(|_, c| !c.is_zero());
    walk.out
}

fn functional_from_monomials<S: Scalar>(
    basis: &LyndonBasis,
    bar: &BTreeMap<Monomial, S>,
) -> Functional<S> {
    let mut f = Functional::zero(basis);
    for (i, coord) in f.coords.iter_mut().enumerate() {
        for (mono, c) in &basis.element(i).expansion {
            if let Some(v) = bar.get(mono) {
                *coord += v.clone() * S::from_int(*c);
            }
        }
    }
    f
}

/// The functional of the disjoint-support realization of a symbol.
///
/// Its top-weight part is [`functional_from_symbol`]; the lower-weight
/// corrections vanish unless some edge joins two labels sharing a generator.
/// This is the functional whose Hopf value matches the braiding value on
/// eigenwords.
pub fn realized_functional<S: Scalar>(basis: &LyndonBasis, sum: &SymbolSum<S>) -> Functional<S> {
    let mut f = Functional::zero(basis);
    for (c, t) in sum.terms() {
        let bar = realized_expansion(t, basis.alphabet_size(), basis.cutoff());
        f = f.add(&functional_from_monomials(basis, &bar).scale(c));
    }
    f
}

/// Edges of a tree as (subtree below the edge, tree with that subtree removed).
pub fn coproduct_tree<S: Scalar>(t: &TreeSymbol<S>) -> Vec<(TreeSymbol<S>, TreeSymbol<S>)> {
    let mut out = Vec::new();
    for k in 0..t.children.len() {
        let mut rest = t.clone();
        let branch = rest.children.remove(k);
        out.push((branch, rest));
        for (below, inner_rest) in coproduct_tree(&t.children[k]) {
            let mut rest = t.clone();
            rest.children[k] = inner_rest;
            out.push((below, rest));
        }
    }
    out
}

/// `]T[ = Δ T − τ Δ T`.
pub fn cobracket_tree<S: Scalar>(t: &TreeSymbol<S>) -> Vec<(S, TreeSymbol<S>, TreeSymbol<S>)> {
    let mut out = Vec::new();
    for (branch, rest) in coproduct_tree(t) {
        out.push((S::one(), branch.clone(), rest.clone()));
        out.push((-S::one(), rest, branch));
    }
    out
}

/// A combination of linear trees whose functional is `φ`.
///
/// Weight 1 becomes a single vertex. For weight `n ≥ 2` the chain of
/// indicators spelling a monomial `u` pairs with a Lyndon element `P(b)` to
/// the coefficient of `u` in `P(b)`. Using only Lyndon words `u`, that matrix
/// is unitriangular, so coefficients follow by back-substitution from the
/// largest word down.
pub fn symbol_for_functional<S: Scalar>(basis: &LyndonBasis, phi: &Functional<S>) -> SymbolSum<S> {
    let m = basis.alphabet_size();
    let mut terms: Vec<(S, TreeSymbol<S>)> = Vec::new();
    let weight_one: Vec<S> = basis.weight_range(1).map(|i| phi.coords[i].clone()).collect();
    if weight_one.iter().any(|c| !c.is_zero()) {
        terms.push((S::one(), TreeSymbol::leaf(Homomorphism::new(weight_one))));
    }
    for n in 2..=basis.cutoff() {
        let range = basis.weight_range(n);
        let mut solved: Vec<(usize, S)> = Vec::new();
        for b in range.rev() {
            let expansion = &basis.element(b).expansion;
            let mut c = phi.coords[b].clone();
            for (u, cu) in &solved {
                if let Some(e) = expansion.get(&basis.element(*u).word) {
                    c -= cu.clone() * S::from_int(*e);
                }
            }
            if !c.is_zero() {
                solved.push((b, c));
            }
        }
        for (b, c) in solved.into_iter().rev() {
            let labels: Vec<Homomorphism<S>> = basis
                .element(b)
                .word
                .iter()
                .map(|&g| Homomorphism::indicator(g as usize, m))
                .collect();
            terms.push((c, TreeSymbol::chain(&labels)));
        }
    }
    SymbolSum::new(terms)
}

/// `⟨φ, log w⟩`, with `log w` computed from the BCH expansion at the basis cutoff.
pub fn hopf_evaluate<S: Scalar>(basis: &LyndonBasis, phi: &Functional<S>, w: &Word) -> Result<S> {
    w.check_alphabet(basis.alphabet_size())?;
    let log = bch_of_word::<S>(w, basis.cutoff())?;
    phi.pair(&basis.lie_coordinates(&log)?)
}

/// Lie coordinates of `log w`.
pub fn log_coordinates<S: Scalar>(basis: &LyndonBasis, w: &Word) -> Result<LieElement<S>> {
    w.check_alphabet(basis.alphabet_size())?;
    basis.lie_coordinates(&bch_of_word::<S>(w, basis.cutoff())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::parse_symbol;
    use crate::tensor::TruncatedTensor;
    use crate::Q;

    fn sym(text: &str, m: usize) -> SymbolSum<Q> {
        parse_symbol(text, &Alphabet::letters(m)).unwrap()
    }

    fn tree(text: &str, m: usize) -> TreeSymbol<Q> {
        sym(text, m).terms()[0].1.clone()
    }

    #[test]
    fn pairing_with_duals() {
        let basis = LyndonBasis::new(2, 3).unwrap();
        let ab = basis.index_of(&[0, 1]).unwrap();
        let phi: Functional<Q> = Functional::dual(&basis, ab);
        let a = basis.generator::<Q>(0);
        let b = basis.generator::<Q>(1);
        assert_eq!(phi.pair(&basis.bracket(&a, &b)).unwrap(), Q::from_int(1));
        assert_eq!(phi.pair(&basis.bracket(&b, &a)).unwrap(), Q::from_int(-1));
        let bar = functional_from_bar(&basis, &tree("(A|B)", 2)).unwrap();
        let w = Word::from_signed(&[1, 2, -1, -2]);
        assert_eq!(bar.pair(&log_coordinates(&basis, &w).unwrap()).unwrap(), Q::from_int(1));
    }

    #[test]
    fn bar_functionals() {
        let basis = LyndonBasis::new(2, 3).unwrap();
        let f = functional_from_bar(&basis, &tree("(A|B)", 2)).unwrap();
        assert_eq!(f, Functional::dual_word(&basis, &[0, 1]).unwrap());
        let f = functional_from_bar(&basis, &tree("A", 2)).unwrap();
        assert_eq!(f, Functional::dual_word(&basis, &[0]).unwrap());
        let one = LyndonBasis::new(1, 3).unwrap();
        let f = functional_from_bar(&one, &tree("(A|A)", 1)).unwrap();
        assert!(f.is_zero());
        assert_eq!(
            functional_from_bar(&basis, &tree("(A)(B)A", 2)),
            Err(Error::NotLinear)
        );
    }

    #[test]
    fn cobracket_of_duals() {
        let co: Coalgebra<Q> = Coalgebra::new(2, 3).unwrap();
        let basis = co.basis();
        let a = Functional::dual_word(basis, &[0]).unwrap();
        assert!(co.cobracket_functional(&a).is_zero());
        let ab = Functional::dual_word(basis, &[0, 1]).unwrap();
        let t = co.cobracket_functional(&ab);
        assert_eq!(t.get(0, 1), Q::from_int(1));
        assert_eq!(t.get(1, 0), Q::from_int(-1));
        assert_eq!(t.entries().count(), 2);
        let aab = Functional::dual_word(basis, &[0, 0, 1]).unwrap();
        let t = co.cobracket_functional(&aab);
        assert!(t.is_antisymmetric());
        for (&(i, j), _) in t.entries() {
            assert_eq!(basis.weight_of(i) + basis.weight_of(j), 3);
        }
    }

    #[test]
    fn corolla_linearization() {
        let lin = linearize_tree(&tree("(A)(B)C", 3));
        let got = SymbolSum::new(lin);
        assert_eq!(got, sym("((A|B)|C)+((B|A)|C)", 3));
        let lin = linearize_tree(&tree("((A|B)|C)", 3));
        assert_eq!(lin.len(), 1);
    }

    #[test]
    fn symbol_conversions() {
        let basis = LyndonBasis::new(3, 3).unwrap();
        assert_eq!(
            functional_from_symbol(&basis, &sym("(A|B)", 3)),
            Functional::dual_word(&basis, &[0, 1]).unwrap()
        );
        assert!(functional_from_symbol(&basis, &sym("(A|B)+(B|A)", 3)).is_zero());
        let f = functional_from_symbol(&basis, &sym("((A|B)|C)", 3));
        let a = basis.generator::<Q>(0);
        let b = basis.generator::<Q>(1);
        let c = basis.generator::<Q>(2);
        let abc = basis.bracket(&basis.bracket(&a, &b), &c);
        assert_eq!(f.pair(&abc).unwrap(), Q::from_int(1));

        let ab: Functional<Q> = Functional::dual_word(&basis, &[0, 1]).unwrap();
        assert_eq!(symbol_for_functional(&basis, &ab), sym("(A|B)", 3));
        let a_only = Functional::dual_word(&basis, &[0]).unwrap();
        assert_eq!(symbol_for_functional(&basis, &a_only), sym("A", 3));
        let aab = Functional::dual_word(&basis, &[0, 0, 1]).unwrap();
        let s = symbol_for_functional(&basis, &aab);
        assert_eq!(s, sym("((A|A)|B)", 3));
        assert_eq!(functional_from_symbol(&basis, &s), aab);
    }

    #[test]
    fn log_coefficients_match_tensor_log() {
        let k = 4;
        let mut g = TruncatedTensor::<Q>::one(k);
        for x in 0..k {
            g = g.mul(&TruncatedTensor::generator(x, k).exp().unwrap()).unwrap();
        }
        let log = g.log().unwrap();
        let perms: [[u16; 4]; 4] = [[0, 1, 2, 3], [1, 0, 2, 3], [3, 1, 0, 2], [3, 2, 1, 0]];
        for p in perms {
            let d = p.windows(2).filter(|w| w[0] > w[1]).count();
            assert_eq!(log.coefficient(&p), log_product_coefficient::<Q>(4, d));
        }
        assert_eq!(log.coefficient(&[1, 0]), log_product_coefficient::<Q>(2, 1));
    }

    #[test]
    fn realized_expansions() {
        let half = Q::from_ratio(1, 2);
        let e = realized_expansion(&tree("(A|A)", 1), 1, 3);
        assert_eq!(e.get(&vec![0, 0]), Some(&Q::from_int(1)));
        assert_eq!(e.get(&vec![0]), Some(&-half.clone()));
        let e = realized_expansion(&tree("((C|C)|A)", 3), 3, 3);
        assert_eq!(e.len(), 2);
        assert_eq!(e.get(&vec![2, 2, 0]), Some(&Q::from_int(1)));
        assert_eq!(e.get(&vec![2, 0]), Some(&-half));
        // Sibling merges cancel between the two orders.
        let e = realized_expansion(&tree("(A)(A)B", 2), 2, 3);
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&vec![0, 0, 1]), Some(&Q::from_int(2)));
        let e = realized_expansion(&tree("(A)(B)C", 3), 3, 3);
        assert_eq!(e.len(), 2);
        let e = realized_expansion(&tree("((A|A)|A)", 1), 1, 2);
        assert!(e.keys().all(|m| m.len() <= 2));
    }

    #[test]
    fn realized_matches_homogeneous_without_shared_edges() {
        let basis = LyndonBasis::new(3, 4).unwrap();
        for text in ["((A|B)|C)", "(A)(B)C", "((A|B)|A)", "(A)(A)B", "((A)(C)B|A)"] {
            let s = sym(text, 3);
            assert_eq!(realized_functional(&basis, &s), functional_from_symbol(&basis, &s), "{text}");
        }
        let s = sym("((C|C)|A)", 3);
        let diff = realized_functional(&basis, &s).add(&functional_from_symbol(&basis, &s).scale(&Q::from_int(-1)));
        assert_eq!(diff, Functional::dual_word(&basis, &[0, 2]).unwrap().scale(&Q::from_ratio(1, 2)));
    }

    #[test]
    fn coproducts_of_small_trees() {
        let pairs = coproduct_tree(&tree("(A)(B)C", 3));
        assert_eq!(pairs.len(), 2);
        assert!(pairs.contains(&(tree("A", 3), tree("(B|C)", 3))));
        assert!(pairs.contains(&(tree("B", 3), tree("(A|C)", 3))));
        let pairs = coproduct_tree(&tree("((A|B)|C)", 3));
        assert!(pairs.contains(&(tree("A", 3), tree("(B|C)", 3))));
        assert!(pairs.contains(&(tree("(A|B)", 3), tree("C", 3))));
        assert!(cobracket_tree(&tree("A", 3)).is_empty());
    }

    #[test]
    fn hopf_values() {
        let basis = LyndonBasis::new(2, 3).unwrap();
        let ab: Functional<Q> = Functional::dual_word(&basis, &[0, 1]).unwrap();
        assert_eq!(
            hopf_evaluate(&basis, &ab, &Word::from_signed(&[1, 2, -1, -2])).unwrap(),
            Q::from_int(1)
        );
        assert_eq!(hopf_evaluate(&basis, &ab, &Word::empty()).unwrap(), Q::from_int(0));
        assert_eq!(
            hopf_evaluate(&basis, &ab, &Word::from_signed(&[1, 1])).unwrap(),
            Q::from_int(0)
        );
    }

    #[test]
    fn json_round_trip() {
        let alphabet = Alphabet::letters(2);
        let basis = LyndonBasis::new(2, 3).unwrap();
        let f = Functional::dual_word(&basis, &[0, 1])
            .unwrap()
            .add(&Functional::dual_word(&basis, &[0, 0, 1]).unwrap().scale(&Q::from_ratio(-1, 2)));
        let json = f.to_json(&basis, &alphabet);
        assert_eq!(json.to_string(), r#"{"2":{"ab":"1/1"},"3":{"aab":"-1/2"}}"#);
        assert_eq!(Functional::from_json(&json, &basis, &alphabet).unwrap(), f);
    }
}
