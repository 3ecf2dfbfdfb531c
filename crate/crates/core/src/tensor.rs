//! Truncated free associative algebra: noncommutative polynomials in the
//! generators with every monomial of length greater than the cutoff dropped.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::words::{SignedLetter, Word};

/// A monomial: generator indices, read left to right.
pub type Monomial = Vec<u16>;

#[derive(Clone, PartialEq)]
pub struct TruncatedTensor<S> {
    cutoff: usize,
    /// `parts[n]` holds the weight-`n` monomials; zero coefficients are never stored.
    parts: Vec<BTreeMap<Monomial, S>>,
}

impl<S: Scalar> fmt::Debug for TruncatedTensor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms().map(|(m, c)| (m.clone(), c.to_ratio_string())))
            .finish()
    }
}

impl<S: Scalar> TruncatedTensor<S> {
    pub fn zero(cutoff: usize) -> Self {
        TruncatedTensor {
            cutoff,
            parts: vec![BTreeMap::new(); cutoff + 1],
        }
    }

    pub fn one(cutoff: usize) -> Self {
        Self::monomial(Vec::new(), S::one(), cutoff)
    }

    /// `c·m`, or zero if `m` is longer than the cutoff.
    pub fn monomial(m: Monomial, c: S, cutoff: usize) -> Self {
        let mut t = Self::zero(cutoff);
        t.add_term(m, c);
        t
    }

    pub fn generator(g: usize, cutoff: usize) -> Self {
        Self::monomial(vec![g as u16], S::one(), cutoff)
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(BTreeMap::is_empty)
    }

    pub fn constant(&self) -> S {
        self.parts[0].get(&Vec::new()).cloned().unwrap_or_else(S::zero)
    }

    pub fn coefficient(&self, m: &[u16]) -> S {
        self.parts
            .get(m.len())
            .and_then(|p| p.get(m))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    /// Terms ordered by weight, then lexicographically.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.parts.iter().flat_map(|p| p.iter())
    }

    pub fn weight_part(&self, n: usize) -> &BTreeMap<Monomial, S> {
        &self.parts[n]
    }

    /// The homogeneous component of weight `n` as a tensor.
    pub fn homogeneous(&self, n: usize) -> Self {
        let mut t = Self::zero(self.cutoff);
        if n <= self.cutoff {
            t.parts[n] = self.parts[n].clone();
        }
        t
    }

    /// Highest weight carrying a nonzero coefficient.
    pub fn max_weight(&self) -> Option<usize> {
        (0..=self.cutoff).rev().find(|&n| !self.parts[n].is_empty())
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if m.len() > self.cutoff || c.is_zero() {
            return;
        }
        let part = &mut self.parts[m.len()];
        match part.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    part.remove(&m);
                }
            }
            None => {
                part.insert(m, c);
            }
        }
    }

    fn check_cutoff(&self, other: &Self) -> Result<()> {
        if self.cutoff == other.cutoff {
            Ok(())
        } else {
            Err(Error::CutoffMismatch {
                left: self.cutoff,
                right: other.cutoff,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_cutoff(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.cutoff);
        }
        TruncatedTensor {
            cutoff: self.cutoff,
            parts: self
                .parts
                .iter()
                .map(|p| p.iter().map(|(m, v)| (m.clone(), v.clone() * c)).collect())
                .collect(),
        }
    }

    /// Concatenation product, discarding weights above the cutoff.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_cutoff(other)?;
        let k = self.cutoff;
        let mut out = Self::zero(k);
        for i in 0..=k {
            if self.parts[i].is_empty() {
                continue;
            }
            for j in 0..=(k - i) {
                if other.parts[j].is_empty() {
                    continue;
                }
                for (m1, c1) in &self.parts[i] {
                    for (m2, c2) in &other.parts[j] {
                        let mut m = Vec::with_capacity(i + j);
                        m.extend_from_slice(m1);
                        m.extend_from_slice(m2);
                        out.add_term(m, c1.clone() * c2);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `xy − yx`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// `exp(x) = Σ xⁿ/n!`; requires zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant().is_zero() {
            return Err(Error::DimensionMismatch(
                "exp needs a tensor without constant term".into(),
            ));
        }
        let mut out = Self::one(self.cutoff);
        let mut power = Self::one(self.cutoff);
        for n in 1..=self.cutoff {
            power = power.mul(self)?.scale(&S::from_ratio(1, n as i64));
            if power.is_zero() {
                break;
            }
            out = out.add(&power)?;
        }
        Ok(out)
    }

    /// `log g = Σ (−1)ⁿ⁺¹ (g − 1)ⁿ / n`; requires constant term 1.
    pub fn log(&self) -> Result<Self> {
        log_grouplike(self)
    }

    /// Left-normed bracketing `[[…[x₁,x₂],…],xₙ]` applied to every monomial.
    pub fn dynkin(&self) -> Self {
        let mut out = Self::zero(self.cutoff);
        for (m, c) in self.terms() {
            if m.is_empty() {
                continue;
            }
            let mut acc: Vec<(Monomial, S)> = vec![(vec![m[0]], c.clone())];
            for &g in &m[1..] {
                let mut next = Vec::with_capacity(acc.len() * 2);
                for (u, v) in acc {
                    let mut right = u.clone();
                    right.push(g);
                    let mut left = Vec::with_capacity(u.len() + 1);
                    left.push(g);
                    left.extend_from_slice(&u);
                    next.push((right, v.clone()));
                    next.push((left, -v));
                }
                acc = next;
            }
            for (u, v) in acc {
                out.add_term(u, v);
            }
        }
        out
    }

    /// Dynkin criterion: the weight-`n` part `p` satisfies `D(p) = n·p` for
    /// every `n`, and the constant term vanishes. Returns the first failing
    /// monomial.
    pub fn primitivity_defect(&self) -> Option<Monomial> {
        if !self.constant().is_zero() {
            return Some(Vec::new());
        }
        for n in 1..=self.cutoff {
            let part = self.homogeneous(n);
            let d = part.dynkin();
            let diff = d
                .sub(&part.scale(&S::from_int(n as i64)))
                .expect("same cutoff");
            let first = diff.terms().next().map(|(m, _)| m.clone());
            if first.is_some() {
                return first;
            }
        }
        None
    }

    pub fn is_primitive(&self) -> bool {
        self.primitivity_defect().is_none()
    }

    /// Same element viewed at a different cutoff (truncating if smaller).
    pub fn with_cutoff(&self, cutoff: usize) -> Self {
        let mut out = Self::zero(cutoff);
        for n in 0..=cutoff.min(self.cutoff) {
            out.parts[n] = self.parts[n].clone();
        }
        out
    }
}

pub fn truncated_product<S: Scalar>(
    x: &TruncatedTensor<S>,
    y: &TruncatedTensor<S>,
) -> Result<TruncatedTensor<S>> {
    x.mul(y)
}

/// `exp(±x_g)` truncated at `cutoff`.
pub fn exp_letter<S: Scalar>(letter: SignedLetter, cutoff: usize) -> TruncatedTensor<S> {
    let mut out = TruncatedTensor::zero(cutoff);
    let mut coeff = S::one();
    let sign = S::from_int(letter.sign());
    for j in 0..=cutoff {
        out.add_term(vec![letter.generator as u16; j], coeff.clone());
        coeff = coeff * &sign * S::from_ratio(1, j as i64 + 1);
    }
    out
}

pub fn log_grouplike<S: Scalar>(g: &TruncatedTensor<S>) -> Result<TruncatedTensor<S>> {
    if !g.constant().is_one() {
        return Err(Error::NotGrouplike);
    }
    let k = g.cutoff;
    let x = g.sub(&TruncatedTensor::one(k))?;
    let mut out = TruncatedTensor::zero(k);
    let mut power = TruncatedTensor::one(k);
    for n in 1..=k {
        power = power.mul(&x)?;
        if power.is_zero() {
            break;
        }
        let c = S::from_ratio(if n % 2 == 1 { 1 } else { -1 }, n as i64);
        out = out.add(&power.scale(&c))?;
    }
    Ok(out)
}

/// `log(e^{ℓ₁} e^{ℓ₂} ⋯ e^{ℓₙ})` over the letters of `w`.
pub fn bch_of_word<S: Scalar>(w: &Word, cutoff: usize) -> Result<TruncatedTensor<S>> {
    if cutoff == 0 {
        return Err(Error::ZeroCutoff);
    }
    let mut g = TruncatedTensor::one(cutoff);
    for &l in w.free_reduce().letters() {
        g = g.mul(&exp_letter(l, cutoff))?;
    }
    log_grouplike(&g)
}
