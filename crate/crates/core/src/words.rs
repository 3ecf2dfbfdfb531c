//! Alphabets, free-group words and group presentations.
//!
//! Word grammar: tokens are separated by whitespace or `*`; a token is
//! `NAME` or `NAME^INTEGER`, negative exponents denoting inverses. When every
//! generator name is a single lowercase letter the alphabet also accepts the
//! compact form, where a token is a run of letters, an uppercase letter is the
//! inverse of its lowercase generator, and an exponent applies to the last
//! letter of the run (`"bcaBCbb"`, `"ab^-1"`).

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<I, T>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !is_valid_name(name) {
                return Err(Error::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        Ok(Alphabet { names, index })
    }

    /// Parse a comma-separated list such as `"a,b,c"`.
    pub fn from_csv(text: &str) -> Result<Self> {
        Alphabet::new(text.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    /// The first `m` lowercase letters.
    pub fn letters(m: usize) -> Self {
        assert!((1..=26).contains(&m), "alphabet size must be 1..=26");
        Alphabet::new((0..m).map(|i| ((b'a' + i as u8) as char).to_string()))
            .expect("letters are valid names")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Whether the compact single-character mode applies.
    pub fn is_compact(&self) -> bool {
        self.names
            .iter()
            .all(|n| n.len() == 1 && n.as_bytes()[0].is_ascii_lowercase())
    }

    pub fn is_single_char(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Indicator-homomorphism name for generator `index` (its name uppercased).
    pub fn indicator_name(&self, index: usize) -> String {
        self.names[index].to_uppercase()
    }

    /// Render a monomial (sequence of generator indices) as a string of names.
    pub fn monomial_string(&self, monomial: &[u16]) -> String {
        let sep = if self.is_single_char() { "" } else { "*" };
        monomial
            .iter()
            .map(|&g| self.names[g as usize].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Inverse of [`Alphabet::monomial_string`].
    pub fn parse_monomial(&self, text: &str) -> Result<Vec<u16>> {
        let parts: Vec<String> = if self.is_single_char() {
            text.chars().map(|c| c.to_string()).collect()
        } else {
            text.split('*').map(|s| s.to_string()).collect()
        };
        parts
            .iter()
            .map(|p| {
                self.index_of(p)
                    .map(|i| i as u16)
                    .ok_or_else(|| Error::UnknownGenerator(p.clone()))
            })
            .collect()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedLetter {
    pub generator: usize,
    pub inverse: bool,
}

impl SignedLetter {
    pub fn new(generator: usize, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        SignedLetter {
            generator,
            inverse: sign < 0,
        }
    }

    pub fn pos(generator: usize) -> Self {
        SignedLetter {
            generator,
            inverse: false,
        }
    }

    pub fn neg(generator: usize) -> Self {
        SignedLetter {
            generator,
            inverse: true,
        }
    }

    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        SignedLetter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    fn cancels(&self, other: &SignedLetter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// A finite sequence of signed letters. Not reduced unless [`Word::free_reduce`]
/// has been applied.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<SignedLetter>,
}

impl Word {
    pub fn new(letters: Vec<SignedLetter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    /// Build from signed 1-based indices: `3` is the third generator, `-3` its inverse.
    pub fn from_signed(indices: &[i32]) -> Self {
        Word::new(
            indices
                .iter()
                .map(|&i| {
                    assert!(i != 0, "0 is not a signed generator index");
                    SignedLetter::new(i.unsigned_abs() as usize - 1, i.signum() as i8)
                })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<SignedLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last().is_some_and(|last| last.cancels(&l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| !p[0].cancels(&p[1]))
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word { letters }
    }

    /// `g w g⁻¹`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.concat(self).concat(&g.inverse())
    }

    /// `[u, v] = u v u⁻¹ v⁻¹`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.concat(v).concat(&u.inverse()).concat(&v.inverse())
    }

    /// Insert `other` before position `at`.
    pub fn insert(&self, at: usize, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters[..at]);
        letters.extend_from_slice(&other.letters);
        letters.extend_from_slice(&self.letters[at..]);
        Word { letters }
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    /// Signed occurrence count of each generator.
    pub fn exponent_sums(&self, alphabet_size: usize) -> Vec<i64> {
        let mut sums = vec![0; alphabet_size];
        for l in &self.letters {
            sums[l.generator] += l.sign();
        }
        sums
    }

    pub fn check_alphabet(&self, alphabet_size: usize) -> Result<()> {
        match self.max_generator() {
            Some(g) if g >= alphabet_size => Err(Error::GeneratorOutOfRange {
                index: g,
                size: alphabet_size,
            }),
            _ => Ok(()),
        }
    }

    /// Canonical text form, e.g. `"a b a^-1 b^-1"`; the empty word prints as `""`.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        self.letters
            .iter()
            .map(|l| {
                let name = alphabet.name(l.generator);
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Compact form (`"abAB"`); `None` unless the alphabet is compact.
    pub fn format_compact(&self, alphabet: &Alphabet) -> Option<String> {
        if !alphabet.is_compact() {
            return None;
        }
        Some(
            self.letters
                .iter()
                .map(|l| {
                    let c = alphabet.name(l.generator).chars().next().unwrap();
                    if l.inverse {
                        c.to_ascii_uppercase()
                    } else {
                        c
                    }
                })
                .collect(),
        )
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl FromIterator<SignedLetter> for Word {
    fn from_iter<I: IntoIterator<Item = SignedLetter>>(iter: I) -> Self {
        Word::new(iter.into_iter().collect())
    }
}

fn parse_exponent(token: &str, exponent: &str) -> Result<i64> {
    let digits = exponent.strip_prefix(['-', '+']).unwrap_or(exponent);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::MalformedExponent(token.to_string()));
    }
    exponent
        .parse::<i64>()
        .map_err(|_| Error::MalformedExponent(token.to_string()))
}

fn push_power(out: &mut Vec<SignedLetter>, letter: SignedLetter, exponent: i64) {
    let l = if exponent < 0 { letter.inv() } else { letter };
    out.extend(std::iter::repeat_n(l, exponent.unsigned_abs() as usize));
}

fn parse_token(token: &str, alphabet: &Alphabet, out: &mut Vec<SignedLetter>) -> Result<()> {
    let (name, exponent) = match token.split_once('^') {
        Some((n, e)) => (n, parse_exponent(token, e)?),
        None => (token, 1),
    };
    if name.is_empty() {
        return Err(Error::EmptyToken);
    }
    if let Some(g) = alphabet.index_of(name) {
        push_power(out, SignedLetter::pos(g), exponent);
        return Ok(());
    }
    if alphabet.is_compact() && name.bytes().all(|b| b.is_ascii_alphabetic()) {
        let chars: Vec<char> = name.chars().collect();
        for (k, c) in chars.iter().enumerate() {
            let lower = c.to_ascii_lowercase().to_string();
            let g = alphabet
                .index_of(&lower)
                .ok_or_else(|| Error::UnknownGenerator(c.to_string()))?;
            let letter = SignedLetter {
                generator: g,
                inverse: c.is_ascii_uppercase(),
            };
            let e = if k + 1 == chars.len() { exponent } else { 1 };
            push_power(out, letter, e);
        }
        return Ok(());
    }
    Err(Error::UnknownGenerator(name.to_string()))
}

/// Parse a word. The result is not freely reduced.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    let mut letters = Vec::new();
    let pieces: Vec<&str> = text.split('*').collect();
    for piece in &pieces {
        let piece = piece.trim();
        if piece.is_empty() {
            if pieces.len() > 1 {
                return Err(Error::EmptyToken);
            }
            continue;
        }
        for token in piece.split_whitespace() {
            parse_token(token, alphabet, &mut letters)?;
        }
    }
    Ok(Word::new(letters))
}

pub fn free_reduce(w: &Word) -> Word {
    w.free_reduce()
}

pub fn invert_word(w: &Word) -> Word {
    w.inverse()
}

/// A homomorphism from the free group to the scalars, given by its values on
/// the generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Homomorphism<S> {
    values: Vec<S>,
}

impl<S: Scalar> Homomorphism<S> {
    pub fn new(values: Vec<S>) -> Self {
        Homomorphism { values }
    }

    pub fn zero(alphabet_size: usize) -> Self {
        Homomorphism {
            values: vec![S::zero(); alphabet_size],
        }
    }

    pub fn indicator(generator: usize, alphabet_size: usize) -> Self {
        let mut h = Self::zero(alphabet_size);
        h.values[generator] = S::one();
        h
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn alphabet_size(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn generator_value(&self, generator: usize) -> &S {
        &self.values[generator]
    }

    /// `h(s^ε) = ε·h(s)`.
    pub fn on_letter(&self, letter: SignedLetter) -> S {
        let v = self.values[letter.generator].clone();
        if letter.inverse {
            -v
        } else {
            v
        }
    }

    pub fn on_word(&self, w: &Word) -> S {
        w.letters()
            .iter()
            .fold(S::zero(), |acc, &l| acc + self.on_letter(l))
    }

    pub fn scale(&self, c: &S) -> Self {
        Homomorphism {
            values: self.values.iter().map(|v| v.clone() * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Homomorphism {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }

    /// Render as a combination of indicator names, e.g. `"B-2A"`.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        for (g, v) in self.values.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let negative = v.is_negative();
            let magnitude = v.abs();
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if !magnitude.is_one() {
                let s = magnitude.to_ratio_string();
                out.push_str(s.strip_suffix("/1").unwrap_or(&s));
            }
            out.push_str(&alphabet.indicator_name(g));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relations: Vec<Word>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub generators: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
}

impl Presentation {
    /// Relations are freely reduced on construction.
    pub fn new(alphabet: Alphabet, relations: Vec<Word>) -> Result<Self> {
        let relations = relations
            .iter()
            .map(|r| {
                r.check_alphabet(alphabet.len())?;
                Ok(r.free_reduce())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Presentation {
            alphabet,
            relations,
        })
    }

    pub fn free(alphabet: Alphabet) -> Self {
        Presentation {
            alphabet,
            relations: Vec::new(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PresentationFile =
            serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        let alphabet = Alphabet::new(file.generators)?;
        let relations = file
            .relations
            .iter()
            .map(|r| parse_word(r, &alphabet))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(alphabet, relations)
    }

    pub fn to_file(&self) -> PresentationFile {
        PresentationFile {
            generators: self.alphabet.names().to_vec(),
            relations: self
                .relations
                .iter()
                .map(|r| r.format(&self.alphabet))
                .collect(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> &[Word] {
        &self.relations
    }
}

/// Accepts either inline JSON (first non-blank character `{`) or a file path.
pub fn load_presentation(path_or_text: &str) -> Result<Presentation> {
    if path_or_text.trim_start().starts_with('{') {
        return Presentation::from_json(path_or_text);
    }
    let text = std::fs::read_to_string(Path::new(path_or_text))
        .map_err(|e| Error::Io(format!("{path_or_text}: {e}")))?;
    Presentation::from_json(&text)
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}", self.alphabet.names().join(", "))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self
                .relations
                .iter()
                .map(|r| r.format(&self.alphabet))
                .collect();
            write!(f, " | {}", rels.join(", "))?;
        }
        write!(f, ">")
    }
}
