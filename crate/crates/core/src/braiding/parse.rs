//! Text form of braiding symbols.
//!
//! ```text
//! SUM   := TERM (("+" | "-") TERM)*
//! TERM  := [COEF ["*"]] TREE
//! TREE  := GROUP+ ATOM          corolla: every group becomes a child of ATOM
//!        | "(" TREE "|" TREE ")"  branch | root: attach the first tree to the root of the second
//!        | "(" TREE ")"
//!        | ATOM
//! GROUP := "(" TREE ")" | "(" TREE "|" TREE ")"
//! ATOM  := [sign] [COEF ["*"]] NAME ((+|-) [COEF ["*"]] NAME)*
//! ```
//!
//! `NAME` is a generator name in upper case and denotes its indicator
//! homomorphism. An atom extends across a sign only when a name (possibly
//! after a coefficient) follows, so `(A|B)-(C|D)` is a sum while `(A)B-2C`
//! has root label `B-2C`. The root atom of a corolla may not start with a sign.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::words::{Alphabet, Homomorphism};

use super::tree::{SymbolSum, TreeSymbol};

struct Parser<'a, S> {
    src: &'a [u8],
    pos: usize,
    names: HashMap<String, usize>,
    size: usize,
    _marker: std::marker::PhantomData<S>,
}

fn is_name_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_'
}

fn is_name_char(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

impl<'a, S: Scalar> Parser<'a, S> {
    fn new(text: &'a str, alphabet: &Alphabet) -> Self {
        let names = (0..alphabet.len())
            .map(|g| (alphabet.indicator_name(g), g))
            .collect();
        Parser {
            src: text.as_bytes(),
            pos: 0,
            names,
            size: alphabet.len(),
            _marker: std::marker::PhantomData,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.syntax(&format!("expected `{}`", b as char))
        }
    }

    /// Position just past a coefficient and optional `*` starting at `from`,
    /// skipping whitespace; returns `from` (after whitespace) if there is none.
    fn scan_coef(&self, from: usize) -> usize {
        let skip = |mut p: usize| {
            while p < self.src.len() && self.src[p].is_ascii_whitespace() {
                p += 1;
            }
            p
        };
        let digits = |mut p: usize| {
            let start = p;
            while p < self.src.len() && self.src[p].is_ascii_digit() {
                p += 1;
            }
            (p, p > start)
        };
        let start = skip(from);
        let (mut p, any) = digits(start);
        if !any {
            return start;
        }
        let q = skip(p);
        if self.src.get(q) == Some(&b'/') {
            let (r, any) = digits(skip(q + 1));
            if any {
                p = r;
            }
        }
        let q = skip(p);
        if self.src.get(q) == Some(&b'*') {
            p = q + 1;
        }
        skip(p)
    }

    fn parse_coef(&mut self) -> Result<Option<S>> {
        self.skip_ws();
        if !self.peek().is_some_and(|b| b.is_ascii_digit()) {
            return Ok(None);
        }
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let mut text = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        let save = self.pos;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let dstart = self.pos;
            while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                self.pos += 1;
            }
            if self.pos == dstart {
                return self.syntax("expected denominator");
            }
            text.push('/');
            text.push_str(&String::from_utf8_lossy(&self.src[dstart..self.pos]));
        } else {
            self.pos = save;
        }
        if self.peek() == Some(b'*') {
            self.pos += 1;
        }
        match S::parse_ratio(&text) {
            Some(c) => Ok(Some(c)),
            None => self.syntax("invalid coefficient"),
        }
    }

    fn parse_name(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        if !self.src.get(self.pos).copied().is_some_and(is_name_start) {
            return self.syntax("expected an indicator name");
        }
        while self.src.get(self.pos).copied().is_some_and(is_name_char) {
            self.pos += 1;
        }
        let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        self.names
            .get(&name)
            .copied()
            .ok_or(Error::UnknownGenerator(name))
    }

    /// After a sign at the current position, does an atom term follow?
    fn sign_continues_atom(&self) -> bool {
        let p = self.scan_coef(self.pos + 1);
        self.src.get(p).copied().is_some_and(is_name_start)
    }

    fn parse_atom(&mut self, allow_sign: bool) -> Result<Homomorphism<S>> {
        let mut h = Homomorphism::zero(self.size);
        let mut first = true;
        loop {
            let mut sign = S::one();
            match self.peek() {
                Some(b @ (b'+' | b'-')) if !first || allow_sign => {
                    if !first && !self.sign_continues_atom() {
                        break;
                    }
                    self.pos += 1;
                    if b == b'-' {
                        sign = -sign;
                    }
                }
                _ if !first => break,
                _ => {}
            }
            let coef = self.parse_coef()?.unwrap_or_else(S::one);
            let g = self.parse_name()?;
            let term = Homomorphism::indicator(g, self.size).scale(&(coef * sign));
            h = h.add(&term);
            first = false;
        }
        Ok(h)
    }

    fn starts_atom(&mut self) -> bool {
        self.peek()
            .is_some_and(|b| b.is_ascii_digit() || is_name_start(b))
    }

    fn parse_tree(&mut self) -> Result<TreeSymbol<S>> {
        if self.peek() != Some(b'(') {
            if !self.starts_atom() && !matches!(self.peek(), Some(b'+' | b'-')) {
                return match self.peek() {
                    Some(b'|') | Some(b')') => Err(Error::EmptyBranch(self.pos)),
                    None => self.syntax("unexpected end of symbol"),
                    _ => self.syntax("unexpected character"),
                };
            }
            return Ok(TreeSymbol::leaf(self.parse_atom(true)?));
        }
        let mut groups: Vec<(TreeSymbol<S>, bool)> = Vec::new();
        while self.peek() == Some(b'(') {
            self.pos += 1;
            if matches!(self.peek(), Some(b')' | b'|')) {
                return Err(Error::EmptyBranch(self.pos));
            }
            let first = self.parse_tree()?;
            if self.peek() == Some(b'|') {
                self.pos += 1;
                if matches!(self.peek(), Some(b')' | b'|') | None) {
                    return Err(Error::EmptyBranch(self.pos));
                }
                let root = self.parse_tree()?;
                self.expect(b')')?;
                groups.push((root.attach(first), true));
            } else {
                self.expect(b')')?;
                groups.push((first, false));
            }
        }
        if self.starts_atom() {
            let root = self.parse_atom(false)?;
            let children = groups.into_iter().map(|(t, _)| t).collect();
            return Ok(TreeSymbol::new(root, children));
        }
        if groups.len() == 1 {
            return Ok(groups.pop().unwrap().0);
        }
        self.syntax("a corolla needs a root label")
    }

    fn parse_sum(&mut self) -> Result<SymbolSum<S>> {
        let mut terms = Vec::new();
        if self.peek().is_none() {
            return self.syntax("empty symbol");
        }
        loop {
            let mut sign = S::one();
            if let Some(b @ (b'+' | b'-')) = self.peek() {
                if self.sign_continues_atom() {
                    // Leading sign belongs to the atom.
                } else {
                    self.pos += 1;
                    if b == b'-' {
                        sign = -sign;
                    }
                }
            }
            let p = self.scan_coef(self.pos);
            let coef = if p != self.pos && self.src.get(p) == Some(&b'(') {
                self.parse_coef()?.unwrap_or_else(S::one)
            } else {
                S::one()
            };
            let tree = self.parse_tree()?;
            terms.push((coef * sign, tree));
            match self.peek() {
                None => break,
                Some(b'+' | b'-') => continue,
                Some(b')') => return Err(Error::UnbalancedDelimiters),
                Some(_) => return self.syntax("expected `+`, `-` or end of symbol"),
            }
        }
        Ok(SymbolSum::new(terms))
    }
}

fn check_balance(text: &str) -> Result<()> {
    let mut depth = 0i64;
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::UnbalancedDelimiters);
                }
            }
            _ => {}
        }
    }
    if depth == 0 {
        Ok(())
    } else {
        Err(Error::UnbalancedDelimiters)
    }
}

pub fn parse_symbol<S: Scalar>(text: &str, alphabet: &Alphabet) -> Result<SymbolSum<S>> {
    check_balance(text)?;
    Parser::new(text, alphabet).parse_sum()
}

fn format_magnitude<S: Scalar>(c: &S) -> String {
    let s = c.abs().to_ratio_string();
    s.strip_suffix("/1").map(str::to_string).unwrap_or(s)
}

fn single_positive_term<S: Scalar>(h: &Homomorphism<S>) -> bool {
    let nonzero: Vec<&S> = h.values().iter().filter(|v| !v.is_zero()).collect();
    nonzero.len() == 1 && nonzero[0].is_positive()
}

pub fn format_tree<S: Scalar>(t: &TreeSymbol<S>, alphabet: &Alphabet) -> String {
    let label = t.label.format(alphabet);
    match t.children.as_slice() {
        [] => label,
        [child] => format!("({}|{})", format_tree(child, alphabet), label),
        children if single_positive_term(&t.label) => {
            let mut out = String::new();
            for c in children {
                out.push('(');
                out.push_str(&format_tree(c, alphabet));
                out.push(')');
            }
            out.push_str(&label);
            out
        }
        children => {
            let mut out = label;
            for c in children.iter().rev() {
                out = format!("({}|{})", format_tree(c, alphabet), out);
            }
            out
        }
    }
}

pub fn format_symbol<S: Scalar>(sum: &SymbolSum<S>, alphabet: &Alphabet) -> String {
    if sum.is_zero() {
        return "0".to_string();
    }
    // A bare label right after a corolla root would be read as part of that
    // root, so the single-vertex term goes first.
    let mut terms: Vec<&(S, TreeSymbol<S>)> = sum.terms().iter().collect();
    terms.sort_by_key(|(_, t)| !t.children.is_empty());
    let mut out = String::new();
    for (c, t) in terms {
        let body = format_tree(t, alphabet);
        if t.children.is_empty() && c.is_one() {
            // The label carries its own signs.
            if !out.is_empty() && !body.starts_with('-') {
                out.push('+');
            }
            out.push_str(&body);
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !c.abs().is_one() {
            out.push_str(&format_magnitude(c));
        }
        out.push_str(&body);
    }
    out
}
