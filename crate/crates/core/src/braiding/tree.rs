use crate::scalar::Scalar;
use crate::words::{Alphabet, Homomorphism};

/// A rooted tree whose vertices carry homomorphism labels. Children are
/// unordered: equality ignores their order.
#[derive(Clone, Debug)]
pub struct TreeSymbol<S> {
    pub label: Homomorphism<S>,
    pub children: Vec<TreeSymbol<S>>,
}

impl<S: Scalar> TreeSymbol<S> {
    pub fn leaf(label: Homomorphism<S>) -> Self {
        TreeSymbol {
            label,
            children: Vec::new(),
        }
    }

    pub fn new(label: Homomorphism<S>, children: Vec<TreeSymbol<S>>) -> Self {
        TreeSymbol { label, children }
    }

    /// The linear tree `h₁|h₂|…|hₙ`: `h₁` is the deepest leaf, `hₙ` the root.
    pub fn chain(labels: &[Homomorphism<S>]) -> Self {
        let (first, rest) = labels.split_first().expect("chain needs a label");
        rest.iter().fold(TreeSymbol::leaf(first.clone()), |below, h| {
            TreeSymbol::new(h.clone(), vec![below])
        })
    }

    /// Attach `branch` as a new child of the root of `self`.
    pub fn attach(mut self, branch: TreeSymbol<S>) -> Self {
        self.children.push(branch);
        self
    }

    pub fn weight(&self) -> usize {
        1 + self.children.iter().map(TreeSymbol::weight).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(TreeSymbol::depth).max().unwrap_or(0)
    }

    pub fn alphabet_size(&self) -> usize {
        self.label.alphabet_size()
    }

    /// Every vertex has at most one child.
    pub fn is_linear(&self) -> bool {
        match self.children.as_slice() {
            [] => true,
            [child] => child.is_linear(),
            _ => false,
        }
    }

    /// Labels of a linear tree from the deepest leaf up to the root.
    pub fn chain_labels(&self) -> Option<Vec<&Homomorphism<S>>> {
        let mut labels = vec![&self.label];
        let mut node = self;
        loop {
            match node.children.as_slice() {
                [] => break,
                [child] => {
                    labels.push(&child.label);
                    node = child;
                }
                _ => return None,
            }
        }
        labels.reverse();
        Some(labels)
    }

    pub fn has_zero_label(&self) -> bool {
        self.label.is_zero() || self.children.iter().any(TreeSymbol::has_zero_label)
    }

    /// Vertices in post-order (children before parents, root last).
    pub fn post_order(&self) -> Vec<&TreeSymbol<S>> {
        fn walk<'a, S: Scalar>(t: &'a TreeSymbol<S>, out: &mut Vec<&'a TreeSymbol<S>>) {
            for c in &t.children {
                walk(c, out);
            }
            out.push(t);
        }
        let mut out = Vec::with_capacity(self.weight());
        walk(self, &mut out);
        out
    }

    /// Flattened post-order layout: labels and child index lists.
    pub(crate) fn flatten(&self) -> (Vec<&Homomorphism<S>>, Vec<Vec<usize>>) {
        fn walk<'a, S: Scalar>(
            t: &'a TreeSymbol<S>,
            labels: &mut Vec<&'a Homomorphism<S>>,
            children: &mut Vec<Vec<usize>>,
        ) -> usize {
            let kids: Vec<usize> = t.children.iter().map(|c| walk(c, labels, children)).collect();
            labels.push(&t.label);
            children.push(kids);
            labels.len() - 1
        }
        let mut labels = Vec::new();
        let mut children = Vec::new();
        walk(self, &mut labels, &mut children);
        (labels, children)
    }

    /// Structural equality with unordered children.
    pub fn same_tree(&self, other: &Self) -> bool {
        if self.label != other.label || self.children.len() != other.children.len() {
            return false;
        }
        let mut used = vec![false; other.children.len()];
        self.children.iter().all(|c| {
            let found = other
                .children
                .iter()
                .enumerate()
                .find(|(i, d)| !used[*i] && c.same_tree(d));
            match found {
                Some((i, _)) => {
                    used[i] = true;
                    true
                }
                None => false,
            }
        })
    }

    /// Expand every label into indicator homomorphisms; returns (coefficient, tree) pairs.
    pub fn expand_multilinear(&self) -> Vec<(S, TreeSymbol<S>)> {
        let n = self.alphabet_size();
        let label_terms: Vec<(S, Homomorphism<S>)> = self
            .label
            .values()
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(g, v)| (v.clone(), Homomorphism::indicator(g, n)))
            .collect();
        let mut partial: Vec<(S, Vec<TreeSymbol<S>>)> = vec![(S::one(), Vec::new())];
        for child in &self.children {
            let expanded = child.expand_multilinear();
            let mut next = Vec::with_capacity(partial.len() * expanded.len());
            for (c, kids) in &partial {
                for (d, t) in &expanded {
                    let mut kids = kids.clone();
                    kids.push(t.clone());
                    next.push((c.clone() * d, kids));
                }
            }
            partial = next;
        }
        let mut out = Vec::new();
        for (c, h) in &label_terms {
            for (d, kids) in &partial {
                out.push((c.clone() * d, TreeSymbol::new(h.clone(), kids.clone())));
            }
        }
        out
    }
}

impl<S: Scalar> PartialEq for TreeSymbol<S> {
    fn eq(&self, other: &Self) -> bool {
        self.same_tree(other)
    }
}

/// A formal rational linear combination of tree symbols.
#[derive(Clone, Debug)]
pub struct SymbolSum<S> {
    terms: Vec<(S, TreeSymbol<S>)>,
}

impl<S: Scalar> Default for SymbolSum<S> {
    fn default() -> Self {
        SymbolSum { terms: Vec::new() }
    }
}

impl<S: Scalar> SymbolSum<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Build and normalize.
    pub fn new(terms: Vec<(S, TreeSymbol<S>)>) -> Self {
        let mut s = SymbolSum { terms };
        s.normalize();
        s
    }

    pub fn from_tree(tree: TreeSymbol<S>) -> Self {
        Self::new(vec![(S::one(), tree)])
    }

    pub fn terms(&self) -> &[(S, TreeSymbol<S>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximum term weight (0 for the empty sum).
    pub fn weight(&self) -> usize {
        self.terms.iter().map(|(_, t)| t.weight()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|p| p[0].1.weight() == p[1].1.weight())
    }

    /// Alphabet size of the labels, if any term exists.
    pub fn alphabet_size(&self) -> Option<usize> {
        self.terms.first().map(|(_, t)| t.alphabet_size())
    }

    /// Merge equal trees, fold the coefficient of single-vertex trees into
    /// their label, and drop zero terms.
    pub fn normalize(&mut self) {
        let mut merged: Vec<(S, TreeSymbol<S>)> = Vec::with_capacity(self.terms.len());
        for (c, mut t) in self.terms.drain(..) {
            if t.children.is_empty() && !c.is_one() {
                t.label = t.label.scale(&c);
                merged.push((S::one(), t));
            } else {
                merged.push((c, t));
            }
        }
        let mut out: Vec<(S, TreeSymbol<S>)> = Vec::with_capacity(merged.len());
        for (c, t) in merged {
            if c.is_zero() || t.has_zero_label() {
                continue;
            }
            if t.children.is_empty() {
                if let Some(pos) = out.iter().position(|(_, u)| u.children.is_empty()) {
                    let label = out[pos].1.label.add(&t.label);
                    out[pos].1.label = label;
                    continue;
                }
            }
            match out.iter_mut().find(|(_, u)| u.same_tree(&t)) {
                Some((d, _)) => *d += c,
                None => out.push((c, t)),
            }
        }
        out.retain(|(c, t)| !c.is_zero() && !t.has_zero_label());
        self.terms = out;
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::new(terms)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(
            self.terms
                .iter()
                .map(|(d, t)| (d.clone() * c, t.clone()))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    /// Every label replaced by indicator homomorphisms, using multilinearity.
    pub fn expand_multilinear(&self) -> Self {
        let mut terms = Vec::new();
        for (c, t) in &self.terms {
            for (d, u) in t.expand_multilinear() {
                terms.push((c.clone() * d, u));
            }
        }
        // Keep single-vertex terms separate so they are not folded back together.
        let mut s = SymbolSum { terms };
        s.merge_equal();
        s
    }

    fn merge_equal(&mut self) {
        let mut out: Vec<(S, TreeSymbol<S>)> = Vec::new();
        for (c, t) in self.terms.drain(..) {
            match out.iter_mut().find(|(_, u)| u.same_tree(&t)) {
                Some((d, _)) => *d += c,
                None => out.push((c, t)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        self.terms = out;
    }

    /// Equality as formal sums of trees.
    pub fn same_sum(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        super::parse::format_symbol(self, alphabet)
    }
}

impl<S: Scalar> PartialEq for SymbolSum<S> {
    fn eq(&self, other: &Self) -> bool {
        self.same_sum(other)
    }
}

impl<S: Scalar> From<TreeSymbol<S>> for SymbolSum<S> {
    fn from(t: TreeSymbol<S>) -> Self {
        SymbolSum::from_tree(t)
    }
}
