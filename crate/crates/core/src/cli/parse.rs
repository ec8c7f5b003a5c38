use crate::arrangement::{Arrangement, ArrangementError, Hyperplane};
use crate::exactmath::Rational;
use crate::newton::{LaurentPolynomial, NewtonError};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("empty input")]
    Empty,
    #[error("{0}")]
    Variables(String),
    #[error("invalid arrangement: {0}")]
    Json(String),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Newton(#[from] NewtonError),
}

fn syntax(position: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        position,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            c if c.is_ascii_digit() => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                Tok::Num(digits.parse().expect("digits"))
            }
            c if c.is_ascii_alphabetic() => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_alphanumeric() {
                    i += 1;
                }
                Tok::Var(chars[start..=i].iter().collect())
            }
            other => return Err(syntax(start, format!("unexpected character '{other}'"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Naming {
    Plain,
    OneBased,
    ZeroBased,
}

fn classify_var(name: &str, position: usize) -> Result<(Naming, usize), ParseError> {
    match name {
        "x" => return Ok((Naming::Plain, 0)),
        "y" => return Ok((Naming::Plain, 1)),
        "z" => return Ok((Naming::Plain, 2)),
        _ => {}
    }
    let (head, digits) = name.split_at(1);
    let index: Option<usize> = digits
        .parse()
        .ok()
        .filter(|_| digits.chars().all(|c| c.is_ascii_digit()));
    match (head, index) {
        ("x", Some(k)) if k >= 1 => Ok((Naming::OneBased, k - 1)),
        ("z", Some(k)) => Ok((Naming::ZeroBased, k)),
        _ => Err(syntax(
            position,
            format!("unknown variable '{name}' (use x, y, z, or x1.., or z0..)"),
        )),
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    naming: Option<Naming>,
}

type Term = (Vec<(usize, i64)>, Rational);

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        match self.toks.get(self.pos) {
            Some((_, Tok::Num(n))) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(syntax(self.here(), "expected a number")),
        }
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let negative = self.peek() == Some(&Tok::Minus);
        if negative {
            self.pos += 1;
        }
        let at = self.here();
        let n = self.number()?;
        let e = i64::try_from(if negative { -n } else { n })
            .map_err(|_| syntax(at, "exponent out of range"))?;
        Ok(e)
    }

    fn item(&mut self, term: &mut Term) -> Result<(), ParseError> {
        let at = self.here();
        match self.toks.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Tok::Num(_)) => {
                let num = self.number()?;
                let mut value = Rational::from_integer(num);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let den_at = self.here();
                    let den = self.number()?;
                    if den.is_zero() {
                        return Err(syntax(den_at, "zero denominator"));
                    }
                    value /= Rational::from_integer(den);
                }
                term.1 *= value;
            }
            Some(Tok::Var(name)) => {
                self.pos += 1;
                let (naming, slot) = classify_var(&name, at)?;
                match self.naming {
                    None => self.naming = Some(naming),
                    Some(prev) if prev != naming => {
                        return Err(syntax(
                            at,
                            format!("variable '{name}' mixes naming schemes"),
                        ))
                    }
                    _ => {}
                }
                let e = if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    self.exponent()?
                } else {
                    1
                };
                term.0.push((slot, e));
            }
            _ => return Err(syntax(at, "expected a coefficient or a variable")),
        }
        Ok(())
    }

    fn term(&mut self, sign: i64) -> Result<Term, ParseError> {
        let mut term: Term = (Vec::new(), Rational::from_integer(sign.into()));
        self.item(&mut term)?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            self.item(&mut term)?;
        }
        Ok(term)
    }

    fn terms(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut out = Vec::new();
        let mut sign = 1;
        if self.peek() == Some(&Tok::Minus) {
            sign = -1;
            self.pos += 1;
        } else if self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
        }
        loop {
            out.push(self.term(sign)?);
            match self.peek() {
                None => return Ok(out),
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                Some(_) => return Err(syntax(self.here(), "expected '+', '-' or '*'")),
            }
            self.pos += 1;
            if self.peek() == Some(&Tok::Minus) {
                sign = -sign;
                self.pos += 1;
            }
        }
    }
}

/// Parses a Laurent polynomial such as `3/2*x^-1*y + z - 1`.
///
/// Variables are `x, y, z` (slots 0, 1, 2), or indexed `x1, x2, …` (1-based),
/// or indexed `z0, z1, …` (0-based); one scheme per input. The number of
/// variables is one past the highest slot used unless `nvars` asks for more.
pub fn parse_laurent(text: &str, nvars: Option<usize>) -> Result<LaurentPolynomial, ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
        naming: None,
    };
    let terms = parser.terms()?;
    let needed = terms
        .iter()
        .flat_map(|(vars, _)| vars.iter().map(|(slot, _)| slot + 1))
        .max()
        .unwrap_or(1);
    let n = match nvars {
        Some(n) if n < needed => {
            return Err(ParseError::Variables(format!(
                "polynomial uses {needed} variables but nvars is {n}"
            )))
        }
        Some(n) => n,
        None => needed,
    };
    let exps = terms.into_iter().map(|(vars, c)| {
        let mut e = vec![0i64; n];
        for (slot, k) in vars {
            e[slot] += k;
        }
        (e, c)
    });
    Ok(LaurentPolynomial::new(n, exps)?)
}

fn rational_from_json(v: &Value, what: &str) -> Result<Rational, ParseError> {
    match v {
        Value::String(s) => Rational::from_str(s.trim())
            .map_err(|_| ParseError::Json(format!("{what}: '{s}' is not a rational number"))),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| {
                ParseError::Json(format!("{what}: {n} is not an integer; quote fractions"))
            }),
        other => Err(ParseError::Json(format!(
            "{what}: expected a number, got {other}"
        ))),
    }
}

/// Parses `{"dim": r, "hyperplanes": [{"a": [...], "b": ...}, …]}`; each
/// hyperplane is `a·x + b = 0`. Numbers may be JSON integers or strings
/// holding rationals such as `"-3/4"`.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, ParseError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let dim = doc
        .get("dim")
        .ok_or_else(|| ParseError::Json("missing \"dim\"".into()))
        .and_then(|d| rational_from_json(d, "dim"))?;
    if !dim.is_integer() || dim < Rational::zero() {
        return Err(ParseError::Json(format!(
            "dim must be a nonnegative integer, got {dim}"
        )));
    }
    let dim =
        usize::try_from(dim.to_integer()).map_err(|_| ParseError::Json("dim too large".into()))?;
    let hyps = doc
        .get("hyperplanes")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError::Json("missing \"hyperplanes\" array".into()))?;
    let mut out = Vec::with_capacity(hyps.len());
    for (i, h) in hyps.iter().enumerate() {
        let a = h
            .get("a")
            .and_then(Value::as_array)
            .ok_or_else(|| ParseError::Json(format!("hyperplane {i}: missing \"a\" array")))?;
        let normal = a
            .iter()
            .map(|v| rational_from_json(v, &format!("hyperplane {i}")))
            .collect::<Result<Vec<_>, _>>()?;
        let b = match h.get("b") {
            Some(v) => rational_from_json(v, &format!("hyperplane {i}"))?,
            None => Rational::zero(),
        };
        let h = Hyperplane::new(normal, b)
            .map_err(|e| ParseError::Json(format!("hyperplane {i}: {e}")))?;
        out.push(h);
    }
    Ok(Arrangement::new(dim, out)?)
}

/// Canonical JSON form accepted by [`parse_arrangement`].
pub fn arrangement_json(a: &Arrangement) -> Value {
    let hyps: Vec<Value> = a
        .hyperplanes()
        .iter()
        .map(|h| {
            json!({
                "a": h.normal().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "b": h.offset().to_string(),
            })
        })
        .collect();
    json!({ "dim": a.dim().to_string(), "hyperplanes": hyps })
}

/// Comma- or whitespace-separated integers.
pub fn parse_ints(text: &str) -> Result<Vec<BigInt>, ParseError> {
    split_list(text)
        .map(|(at, s)| {
            BigInt::from_str(s).map_err(|_| syntax(at, format!("'{s}' is not an integer")))
        })
        .collect()
}

/// Comma- or whitespace-separated rationals.
pub fn parse_rationals(text: &str) -> Result<Vec<Rational>, ParseError> {
    split_list(text)
        .map(|(at, s)| {
            Rational::from_str(s).map_err(|_| syntax(at, format!("'{s}' is not a rational number")))
        })
        .collect()
}

fn split_list(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let trimmed = text.trim().trim_start_matches('[').trim_end_matches(']');
    let offset = text.find(trimmed).unwrap_or(0);
    trimmed
        .split(|c: char| c == ',' || c.is_whitespace())
        .scan(offset, |at, s| {
            let here = *at;
            *at += s.len() + 1;
            Some((here, s))
        })
        .filter(|(_, s)| !s.is_empty())
}
