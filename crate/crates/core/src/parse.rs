//! Surface syntax for ideals and graded-system files.
//!
//! ```text
//! ideal  := "<" term ("," term)* ">" | "<0>"
//! term   := "1" | factor ("*" factor)*
//! factor := varname ("^" uint)?
//! ```
//!
//! Whitespace between tokens is ignored. Variable names come from a declared
//! list whose order fixes the exponent coordinates.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graded::GradedSystem;
use crate::monomial::{Exponent, MonomialIdeal};

/// `x, y, z` for up to three variables, `x1, ..., xn` beyond that.
pub fn default_variables(arity: usize) -> Vec<String> {
    if arity <= 3 {
        ["x", "y", "z"][..arity].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=arity).map(|i| format!("x{i}")).collect()
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses a comma-separated variable list such as `x,y,z`.
pub fn parse_variables(list: &str) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    let mut offset = 0;
    for part in list.split(',') {
        let name = part.trim();
        let at = offset + part.len() - part.trim_start().len();
        if !is_identifier(name) {
            return Err(Error::parse(at, format!("invalid variable name `{name}`")));
        }
        if names.iter().any(|n| n == name) {
            return Err(Error::parse(at, format!("variable `{name}` declared twice")));
        }
        names.push(name.to_string());
        offset += part.len() + 1;
    }
    Ok(names)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Comma,
    Star,
    Caret,
    Minus,
    Number(String),
    Name(String),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let single = match c {
            b'<' => Some(Token::Open),
            b'>' => Some(Token::Close),
            b',' => Some(Token::Comma),
            b'*' => Some(Token::Star),
            b'^' => Some(Token::Caret),
            b'-' => Some(Token::Minus),
            _ => None,
        };
        if let Some(t) = single {
            out.push((i, t));
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Token::Number(text[start..i].to_string())));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Token::Name(text[start..i].to_string())));
        } else {
            let ch = text[i..].chars().next().unwrap_or('?');
            return Err(Error::parse(i, format!("unexpected character `{ch}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.offset(), format!("expected {what}")))
        }
    }

    fn ideal(&mut self) -> Result<MonomialIdeal> {
        let arity = self.vars.len();
        self.expect(Token::Open, "`<`")?;
        if self.peek() == Some(&Token::Number("0".into())) {
            self.pos += 1;
            self.expect(Token::Close, "`>` after `0`")?;
            return self.finish(MonomialIdeal::zero(arity));
        }
        let mut gens = vec![self.term()?];
        while self.peek() == Some(&Token::Comma) {
            self.pos += 1;
            gens.push(self.term()?);
        }
        self.expect(Token::Close, "`,` or `>`")?;
        let ideal = MonomialIdeal::minimalize(gens, arity)?;
        self.finish(ideal)
    }

    fn finish(&self, ideal: MonomialIdeal) -> Result<MonomialIdeal> {
        if self.pos != self.tokens.len() {
            return Err(Error::parse(self.offset(), "trailing input after `>`"));
        }
        Ok(ideal)
    }

    fn term(&mut self) -> Result<Exponent> {
        let mut e = vec![0u32; self.vars.len()];
        if let Some(Token::Number(n)) = self.peek() {
            if n == "1" {
                self.pos += 1;
                return Ok(Exponent::new(e));
            }
            return Err(Error::parse(self.offset(), format!("coefficient `{n}` not allowed, only the term `1`")));
        }
        self.factor(&mut e)?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            self.factor(&mut e)?;
        }
        Ok(Exponent::new(e))
    }

    fn factor(&mut self, e: &mut [u32]) -> Result<()> {
        let at = self.offset();
        let Some(Token::Name(name)) = self.peek().cloned() else {
            return Err(Error::parse(at, "expected a variable"));
        };
        let Some(index) = self.vars.iter().position(|v| *v == name) else {
            return Err(Error::parse(at, format!("unknown variable `{name}`")));
        };
        self.pos += 1;
        let mut power = 1u32;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let at = self.offset();
            match self.peek().cloned() {
                Some(Token::Number(n)) => {
                    power = n
                        .parse()
                        .map_err(|_| Error::parse(at, format!("exponent `{n}` is too large")))?;
                    self.pos += 1;
                }
                Some(Token::Minus) => return Err(Error::parse(at, "negative exponent")),
                _ => return Err(Error::parse(at, "expected an exponent after `^`")),
            }
        }
        e[index] = e[index]
            .checked_add(power)
            .ok_or_else(|| Error::parse(at, "exponent overflow"))?;
        Ok(())
    }
}

/// Parses an ideal over the declared variables; the result is minimalized.
pub fn parse_ideal(text: &str, vars: &[String]) -> Result<MonomialIdeal> {
    let tokens = tokenize(text)?;
    Parser {
        tokens,
        pos: 0,
        end: text.len(),
        vars,
    }
    .ideal()
}

/// Variable names used in `text`, for when none are declared: the smallest
/// default list covering them, otherwise order of first appearance.
pub fn infer_variables(text: &str) -> Result<Vec<String>> {
    let mut seen: Vec<String> = Vec::new();
    for (_, t) in tokenize(text)? {
        if let Token::Name(n) = t {
            if !seen.contains(&n) {
                seen.push(n);
            }
        }
    }
    if seen.is_empty() {
        return Ok(default_variables(1));
    }
    for arity in 1..=seen.len().max(3) + 64 {
        let defaults = default_variables(arity);
        if seen.iter().all(|n| defaults.contains(n)) {
            return Ok(defaults);
        }
    }
    Ok(seen)
}

fn render_monomial(e: &Exponent, vars: &[String]) -> String {
    let factors: Vec<String> = e
        .coords()
        .iter()
        .zip(vars)
        .filter(|(&k, _)| k > 0)
        .map(|(&k, v)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Renders in the input grammar, generators in descending lex order, e.g.
/// `<x^2, y^3>`.
pub fn render_ideal(ideal: &MonomialIdeal, vars: &[String]) -> String {
    if ideal.is_zero() {
        return "<0>".to_string();
    }
    let terms: Vec<String> = ideal
        .generators()
        .iter()
        .rev()
        .map(|g| render_monomial(g, vars))
        .collect();
    format!("<{}>", terms.join(", "))
}

pub fn render_monomial_default(e: &Exponent) -> String {
    render_monomial(e, &default_variables(e.arity()))
}

/// Renders with [`default_variables`].
pub fn render_default(ideal: &MonomialIdeal) -> String {
    render_ideal(ideal, &default_variables(ideal.arity()))
}

/// Reads a graded-system file:
///
/// ```text
/// # comment
/// arity = 2
/// p_max = 3
/// vars = x,y        (optional)
/// 1 = <x^2, y>
/// 2 = <x^4, x^2*y, y^2>
/// 3 = <...>
/// ```
///
/// Every index `1..=p_max` must appear exactly once. The system is validated.
pub fn parse_system(text: &str, vars: Option<&[String]>) -> Result<GradedSystem> {
    let mut arity: Option<usize> = None;
    let mut p_max: Option<usize> = None;
    let mut file_vars: Option<Vec<String>> = None;
    let mut rows: BTreeMap<usize, (usize, String)> = BTreeMap::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let here = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(Error::parse(here, format!("expected `key = value`, got `{content}`")));
        };
        let (key, value) = (key.trim(), value.trim());
        let value_at = here + line.find(value).unwrap_or(0);
        let number = |v: &str| -> Result<usize> {
            v.parse()
                .map_err(|_| Error::parse(value_at, format!("expected a natural number, got `{v}`")))
        };
        match key {
            "arity" => arity = Some(number(value)?),
            "p_max" => p_max = Some(number(value)?),
            "vars" => file_vars = Some(parse_variables(value).map_err(|e| shift(e, value_at))?),
            k if k.bytes().all(|b| b.is_ascii_digit()) && !k.is_empty() => {
                let p: usize = number(k)?;
                if rows.insert(p, (value_at, value.to_string())).is_some() {
                    return Err(Error::parse(here, format!("index {p} given twice")));
                }
            }
            other => return Err(Error::parse(here, format!("unknown key `{other}`"))),
        }
    }
    let arity = arity.ok_or_else(|| Error::input("system file lacks `arity = N`"))?;
    let p_max = p_max.ok_or_else(|| Error::input("system file lacks `p_max = N`"))?;
    let names = match (vars, file_vars) {
        (Some(v), _) => v.to_vec(),
        (None, Some(v)) => v,
        (None, None) => default_variables(arity),
    };
    if names.len() != arity {
        return Err(Error::input(format!(
            "{} variable names for arity {arity}",
            names.len()
        )));
    }
    let mut entries = Vec::with_capacity(p_max);
    for p in 1..=p_max {
        let (at, text) = rows
            .remove(&p)
            .ok_or_else(|| Error::input(format!("system file lacks entry {p}")))?;
        entries.push(parse_ideal(&text, &names).map_err(|e| shift(e, at))?);
    }
    if let Some((&p, _)) = rows.iter().next() {
        return Err(Error::input(format!("entry {p} is beyond p_max = {p_max}")));
    }
    let system = GradedSystem::new(arity, entries)?;
    if let Some((p, q)) = system.validate().violation {
        return Err(Error::input(format!(
            "not a graded system: a_{p}·a_{q} is not contained in a_{}",
            p + q
        )));
    }
    Ok(system)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { position, message } => Error::Parse {
            position: position + by,
            message,
        },
        other => other,
    }
}
