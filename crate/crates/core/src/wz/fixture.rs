//! Plain-text WZ pair fixtures.
//!
//! ```text
//! # comment
//! name: thm2
//! params: s, t
//! indices:
//! term: sign(0) * 1 * prod binom(n, k)^1 * binom(t + k, k)^-1
//! certificate: k*(t + k)/((k - n - 1)*(n + t + s + 1))
//! orientation: +1
//! ```
//!
//! The term is a `*`-separated list of items: at most one `sign(<affine>)`,
//! rational constants, and `binom(<affine>, <affine>)` optionally raised to
//! `^1`, `^+1` or `^-1`. The word `prod` may precede any item and is ignored.
//! The certificate uses the ordinary expression grammar. The summation
//! variables are always `n` and `k`; `params` lists the continuous parameters
//! and `indices` any further integer indices that range over `0..=n`.

use std::path::Path;

use thiserror::Error;

use super::{AffineForm, BinomFactor, HyperTerm, TermError, WZPair};
use crate::exact::Rational;
use crate::polyrat::{parse_expr, to_ratfunc, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0}")]
    Io(String),
    #[error("unknown pair {0:?}")]
    UnknownPair(String),
}

const BUILTIN: [(&str, &str); 3] = [
    ("thm1", include_str!("../../fixtures/wz/thm1.wz")),
    ("thm2", include_str!("../../fixtures/wz/thm2.wz")),
    ("thm3", include_str!("../../fixtures/wz/thm3.wz")),
];

pub fn builtin_pair_names() -> Vec<&'static str> {
    BUILTIN.iter().map(|(n, _)| *n).collect()
}

pub fn builtin_pair(name: &str) -> Result<WZPair, FixtureError> {
    let (_, text) = BUILTIN
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| FixtureError::UnknownPair(name.to_string()))?;
    parse_pair(text)
}

/// Loads `<dir>/<name>.wz`.
pub fn load_pair(dir: &Path, name: &str) -> Result<WZPair, FixtureError> {
    let path = dir.join(format!("{name}.wz"));
    let text = std::fs::read_to_string(&path)
        .map_err(|e| FixtureError::Io(format!("{}: {e}", path.display())))?;
    parse_pair(&text)
}

fn err(line: usize, column: usize, message: impl Into<String>) -> FixtureError {
    FixtureError::Parse { line, column, message: message.into() }
}

/// Splits at `sep` outside parentheses, returning `(byte offset, piece)`.
fn split_top(text: &str, sep: u8) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, b) in text.bytes().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ if b == sep && depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out
}

fn trim_at(offset: usize, s: &str) -> (usize, &str) {
    let lead = s.len() - s.trim_start().len();
    (offset + lead, s.trim())
}

fn affine_at(text: &str, col: usize, line: usize) -> Result<AffineForm, FixtureError> {
    AffineForm::parse(text).map_err(|e| match e {
        TermError::Syntax { offset, message } => err(line, col + offset, message),
        other => err(line, col, other.to_string()),
    })
}

/// `col` is the 1-based column of `text[0]`.
fn parse_term(text: &str, col: usize, line: usize) -> Result<HyperTerm, FixtureError> {
    let mut constant = Rational::one();
    let mut sign: Option<AffineForm> = None;
    let mut factors = Vec::new();
    for (off, raw) in split_top(text, b'*') {
        let (off, mut item) = trim_at(off, raw);
        let mut c = col + off;
        if item.is_empty() {
            return Err(err(line, c, "empty term item"));
        }
        if let Some(rest) = item.strip_prefix("prod") {
            if rest.starts_with(char::is_whitespace) {
                let (o, r) = trim_at(4, rest);
                c += o;
                item = r;
            }
        }
        if let Some(inner) = item.strip_prefix("sign(").and_then(|r| r.strip_suffix(')')) {
            if sign.is_some() {
                return Err(err(line, c, "duplicate sign item"));
            }
            let form = affine_at(inner, c + 5, line)?;
            if !form.constant_part().is_integer() {
                return Err(err(line, c + 5, "sign exponent must have an integer constant"));
            }
            sign = Some(form);
        } else if let Some(rest) = item.strip_prefix("binom(") {
            let close = rest.rfind(')').ok_or_else(|| err(line, c, "unclosed binom"))?;
            let args = &rest[..close];
            let exponent = match rest[close + 1..].trim() {
                "" | "^1" | "^+1" => 1,
                "^-1" => -1,
                other => {
                    return Err(err(
                        line,
                        c + 6 + close + 1,
                        format!("exponent must be ^1 or ^-1, found {other:?}"),
                    ))
                }
            };
            let parts = split_top(args, b',');
            if parts.len() != 2 {
                return Err(err(line, c, "binom takes two arguments"));
            }
            let (o1, a1) = trim_at(parts[0].0, parts[0].1);
            let (o2, a2) = trim_at(parts[1].0, parts[1].1);
            let top = affine_at(a1, c + 6 + o1, line)?;
            let bottom = affine_at(a2, c + 6 + o2, line)?;
            factors.push(BinomFactor::new(top, bottom, exponent));
        } else {
            let q: Rational = item
                .parse()
                .map_err(|_| err(line, c, format!("unrecognized term item {item:?}")))?;
            constant *= q;
        }
    }
    Ok(HyperTerm::new(
        constant,
        sign.unwrap_or_else(|| AffineForm::constant(Rational::zero())),
        factors,
    ))
}

fn var_list(text: &str) -> Vec<Var> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(Var::new).collect()
}

pub fn parse_pair(text: &str) -> Result<WZPair, FixtureError> {
    let mut name = None;
    let mut params = Vec::new();
    let mut indices = Vec::new();
    let mut term = None;
    let mut certificate = None;
    let mut orientation = None;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let key_col = raw.len() - trimmed.len() + 1;
        let (key, value) =
            trimmed.split_once(':').ok_or_else(|| err(line, key_col, "expected `key: value`"))?;
        let value_off = key_col + key.len() + 1;
        let (lead, value) = trim_at(0, value);
        let col = value_off + lead;
        match key.trim() {
            "name" => name = Some(value.to_string()),
            "params" => params = var_list(value),
            "indices" => indices = var_list(value),
            "term" => term = Some(parse_term(value, col, line)?),
            "certificate" => {
                let e = parse_expr(value).map_err(|e| err(line, col + e.offset, e.message))?;
                certificate = Some(to_ratfunc(&e).map_err(|e| err(line, col, e.to_string()))?);
            }
            "orientation" => {
                orientation = Some(match value {
                    "+1" | "1" => 1,
                    "-1" => -1,
                    _ => return Err(err(line, col, "orientation must be +1 or -1")),
                })
            }
            other => return Err(err(line, key_col, format!("unknown key {other:?}"))),
        }
    }
    let missing = |what: &str| err(last_line + 1, 1, format!("missing `{what}:` line"));
    Ok(WZPair {
        name: name.unwrap_or_else(|| "pair".to_string()),
        term: term.ok_or_else(|| missing("term"))?,
        certificate: certificate.ok_or_else(|| missing("certificate"))?,
        orientation: orientation.ok_or_else(|| missing("orientation"))?,
        params,
        indices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_parse() {
        for name in builtin_pair_names() {
            let p = builtin_pair(name).unwrap();
            assert_eq!(p.name, name);
            assert_eq!(p.term.factors.len(), 5);
        }
        let p = builtin_pair("thm1").unwrap();
        assert_eq!(p.orientation, -1);
        assert_eq!(p.indices, vec![Var::new("j")]);
        assert_eq!(p.term.factors[3].exponent, -1);
    }

    #[test]
    fn errors_carry_line_and_column() {
        let text = "# c\nterm: binom(n, k)^2\ncertificate: 1\norientation: +1\n";
        match parse_pair(text) {
            Err(FixtureError::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(column, 18);
            }
            other => panic!("{other:?}"),
        }
        let text = "term: binom(n, k)\ncertificate: n+*k\norientation: 1\n";
        assert!(matches!(parse_pair(text), Err(FixtureError::Parse { line: 2, column: 16, .. })));
        let text = "term: binom(n/2, k)\ncertificate: 1\norientation: 1\n";
        assert!(matches!(parse_pair(text), Err(FixtureError::Parse { line: 1, column: 13, .. })));
        assert!(matches!(
            parse_pair("term: 1\norientation: 1\n"),
            Err(FixtureError::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn constants_and_sign_default() {
        let text = "term: -3/2 * binom(n,k)\ncertificate: 0\norientation: 1\n";
        let p = parse_pair(text).unwrap();
        assert_eq!(p.term.constant, "-3/2".parse().unwrap());
        assert_eq!(p.term.sign, AffineForm::constant(Rational::zero()));
    }
}
