use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

/// Syntax tree of the certificate expression language.
///
/// Grammar (whitespace ignored, all binary operators left-associative):
///
/// ```text
/// expr  := term (('+' | '-') term)*
/// term  := unary (('*' | '/') unary)*
/// unary := '-' unary | power
/// power := atom ('^' INT)*
/// atom  := INT | IDENT | '(' expr ')'
/// IDENT := [A-Za-z_][A-Za-z0-9_]*
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at offset {offset}: {message}")]
pub struct ParseError {
    /// Byte offset of the offending input.
    pub offset: usize,
    pub message: String,
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error_here("expected operator or end of input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error_here(&self, expected: &str) -> ParseError {
        let message = match self.src.get(self.pos) {
            None => format!("{expected}, found end of input"),
            Some(&c) if is_token_start(c) => format!("{expected}, found '{}'", c as char),
            Some(&c) => {
                format!("unknown character '{}'", char_at(self.src, self.pos).unwrap_or(c as char))
            }
        };
        ParseError { offset: self.pos, message }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                return Err(self.error_here("expected non-negative integer exponent"));
            }
            let e: u32 = digits
                .parse()
                .map_err(|_| ParseError { offset: start, message: "exponent too large".into() })?;
            base = Expr::Pow(Box::new(base), e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                Ok(Expr::Int(digits.parse().expect("ascii digits")))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == b'_');
                Ok(Expr::Var(name))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error_here("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.error_here("expected number, variable or '('")),
        }
    }

    fn take_while(&mut self, pred: impl Fn(u8) -> bool) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && pred(self.src[self.pos]) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

fn is_token_start(c: u8) -> bool {
    c.is_ascii_alphanumeric() || b"+-*/^()_".contains(&c)
}

fn char_at(src: &[u8], pos: usize) -> Option<char> {
    std::str::from_utf8(&src[pos..]).ok()?.chars().next()
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(..) | Expr::Var(..) => 5,
        }
    }
}

struct Wrap<'a>(&'a Expr, u8);

impl fmt::Display for Wrap<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.precedence() < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Renders with the minimum parentheses needed for the text to parse back
/// to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(i) => write!(f, "{i}"),
            Expr::Var(v) => f.write_str(v),
            Expr::Neg(a) => write!(f, "-{}", Wrap(a, 3)),
            Expr::Add(a, b) => write!(f, "{} + {}", Wrap(a, 1), Wrap(b, 2)),
            Expr::Sub(a, b) => write!(f, "{} - {}", Wrap(a, 1), Wrap(b, 2)),
            Expr::Mul(a, b) => write!(f, "{}*{}", Wrap(a, 2), Wrap(b, 3)),
            Expr::Div(a, b) => write!(f, "{}/{}", Wrap(a, 2), Wrap(b, 3)),
            Expr::Pow(a, e) => write!(f, "{}^{e}", Wrap(a, 4)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(s: &str) -> Box<Expr> {
        Box::new(Expr::Var(s.into()))
    }

    #[test]
    fn product_of_sums() {
        let e = parse_expr("(n+1)*(k-j)").unwrap();
        let expected = Expr::Mul(
            Box::new(Expr::Add(var("n"), Box::new(Expr::Int(1.into())))),
            Box::new(Expr::Sub(var("k"), var("j"))),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn unary_minus_over_sum() {
        let e = parse_expr("-(alpha - beta - n - 1)").unwrap();
        let Expr::Neg(inner) = e else { panic!("expected negation") };
        // ((alpha - beta) - n) - 1
        let Expr::Sub(l, r) = *inner else { panic!("expected difference") };
        assert_eq!(*r, Expr::Int(1.into()));
        assert!(matches!(*l, Expr::Sub(..)));
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_expr("-x^2").unwrap(), Expr::Neg(Box::new(Expr::Pow(var("x"), 2))));
        assert_eq!(
            parse_expr("a - b - c").unwrap(),
            Expr::Sub(Box::new(Expr::Sub(var("a"), var("b"))), var("c"))
        );
        assert_eq!(
            parse_expr("a / b * c").unwrap(),
            Expr::Mul(Box::new(Expr::Div(var("a"), var("b"))), var("c"))
        );
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let err = parse_expr("n+*k").unwrap_err();
        assert_eq!(err.offset, 2);
        assert!(err.message.contains("expected"), "{}", err.message);

        let err = parse_expr("n + $").unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(err.message.contains("unknown character '$'"));

        assert_eq!(parse_expr("(n+1").unwrap_err().offset, 4);
        assert_eq!(parse_expr("n^x").unwrap_err().offset, 2);
        assert_eq!(parse_expr("n k").unwrap_err().offset, 2);
        assert_eq!(parse_expr("").unwrap_err().offset, 0);
    }

    #[test]
    fn rendering_keeps_structure() {
        for text in ["a - (b - c)", "-(a*b)", "(-a)^2", "a*-b", "a/(b*c)", "a^2^3", "--a", "a - -b"]
        {
            let e = parse_expr(text).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e, "{text}");
        }
    }
}
