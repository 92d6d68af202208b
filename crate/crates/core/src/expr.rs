//! The ring-specification language.
//!
//! ```text
//! expr  := "Z(" int ")" | "Zi(" int ")" | "M(" int "," expr ")" | "T(" int "," expr ")"
//!        | "prod(" expr ("," expr)* ")" | "quot(" expr "," ideal ")" | "corner(" expr "," elem ")"
//! ideal := "zero" | "all" | "jacobson" | "gen(" elem ("," elem)* ")"
//! elem  := the canonical name of an element of the enclosing ring
//! ```
//!
//! Whitespace is ignored everywhere. Element literals are matched against the
//! canonical element names produced by the constructors, so `3` names a
//! residue, `1+2i` a Gaussian integer and `[0,1,0,0]` a 2x2 matrix given
//! row-major.

use std::fmt;

use crate::error::{Error, Result};

/// Abstract syntax of a ring expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingExpr {
    Cyclic(u64),
    Gaussian(u64),
    Matrix(u64, Box<RingExpr>),
    Triangular(u64, Box<RingExpr>),
    Product(Vec<RingExpr>),
    Quotient(Box<RingExpr>, IdealSpec),
    Corner(Box<RingExpr>, String),
}

/// How an ideal is named inside an expression or on the command line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IdealSpec {
    Zero,
    All,
    Jacobson,
    /// Two-sided ideal generated by the listed element literals.
    Gen(Vec<String>),
}

impl RingExpr {
    fn render(&self, out: &mut String) {
        use std::fmt::Write;
        let _ = match self {
            RingExpr::Cyclic(n) => write!(out, "Z({n})"),
            RingExpr::Gaussian(n) => write!(out, "Zi({n})"),
            RingExpr::Matrix(k, base) => write!(out, "M({k},{base})"),
            RingExpr::Triangular(k, base) => write!(out, "T({k},{base})"),
            RingExpr::Product(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(out, "prod({})", parts.join(","))
            }
            RingExpr::Quotient(base, ideal) => write!(out, "quot({base},{ideal})"),
            RingExpr::Corner(base, e) => write!(out, "corner({base},{e})"),
        };
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(&mut s);
        f.pad(&s)
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealSpec::Zero => f.pad("zero"),
            IdealSpec::All => f.pad("all"),
            IdealSpec::Jacobson => f.pad("jacobson"),
            IdealSpec::Gen(elems) => f.pad(&format!("gen({})", elems.join(","))),
        }
    }
}

impl std::str::FromStr for RingExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ring_expr(s)
    }
}

impl std::str::FromStr for IdealSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ideal_spec(s)
    }
}

pub fn parse_ring_expr(text: &str) -> Result<RingExpr> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_ideal_spec(text: &str) -> Result<IdealSpec> {
    let mut p = Parser::new(text);
    let i = p.ideal()?;
    p.finish()?;
    Ok(i)
}

/// Normalizes a free-standing element literal (whitespace removed).
pub fn normalize_literal(text: &str) -> String {
    text.chars().filter(|c| !c.is_whitespace()).collect()
}

const EXPR_START: &[&str] = &["Z(", "Zi(", "M(", "T(", "prod(", "quot(", "corner("];
const IDEAL_START: &[&str] = &["zero", "all", "jacobson", "gen("];

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, offset: usize, expected: &[&str]) -> Result<T> {
        Err(Error::Syntax {
            offset,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            let s = (c as char).to_string();
            self.err(self.pos, &[s.as_str()])
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return self.err(self.pos, &["end of input"]);
        }
        Ok(())
    }

    fn ident(&mut self) -> (usize, &'a str) {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        // identifiers are ASCII, so this slice is valid UTF-8
        (start, std::str::from_utf8(&self.src[start..self.pos]).unwrap_or(""))
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        match digits.parse::<u64>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => self.err(start, &["positive integer"]),
        }
    }

    fn expr(&mut self) -> Result<RingExpr> {
        let (start, name) = self.ident();
        let tag = match name {
            "Z" | "Zi" | "M" | "T" | "prod" | "quot" | "corner" => name,
            _ => return self.err(start, EXPR_START),
        };
        self.expect(b'(')?;
        let e = match tag {
            "Z" => RingExpr::Cyclic(self.int()?),
            "Zi" => RingExpr::Gaussian(self.int()?),
            "M" | "T" => {
                let k = self.int()?;
                self.expect(b',')?;
                let base = Box::new(self.expr()?);
                if tag == "M" {
                    RingExpr::Matrix(k, base)
                } else {
                    RingExpr::Triangular(k, base)
                }
            }
            "prod" => {
                let mut parts = vec![self.expr()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    parts.push(self.expr()?);
                }
                RingExpr::Product(parts)
            }
            "quot" => {
                let base = Box::new(self.expr()?);
                self.expect(b',')?;
                RingExpr::Quotient(base, self.ideal()?)
            }
            _ => {
                let base = Box::new(self.expr()?);
                self.expect(b',')?;
                RingExpr::Corner(base, self.elem()?)
            }
        };
        self.expect(b')')?;
        Ok(e)
    }

    fn ideal(&mut self) -> Result<IdealSpec> {
        let (start, name) = self.ident();
        match name {
            "zero" => Ok(IdealSpec::Zero),
            "all" => Ok(IdealSpec::All),
            "jacobson" => Ok(IdealSpec::Jacobson),
            "gen" => {
                self.expect(b'(')?;
                let mut elems = vec![self.elem()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    elems.push(self.elem()?);
                }
                self.expect(b')')?;
                Ok(IdealSpec::Gen(elems))
            }
            _ => self.err(start, IDEAL_START),
        }
    }

    /// Scans a bracket-balanced literal up to the next top-level `,` or `)`.
    fn elem(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0usize;
        while let Some(&c) = self.src.get(self.pos) {
            match c {
                b'(' | b'[' | b'<' => depth += 1,
                b']' | b'>' => {
                    if depth == 0 {
                        return self.err(self.pos, &["element literal"]);
                    }
                    depth -= 1;
                }
                b')' if depth == 0 => break,
                b')' => depth -= 1,
                b',' if depth == 0 => break,
                _ => {}
            }
            self.pos += 1;
        }
        let raw = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        let lit = normalize_literal(raw);
        if lit.is_empty() || depth != 0 {
            return self.err(self.pos, &["element literal"]);
        }
        Ok(lit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_matrix_over_cyclic() {
        let e = parse_ring_expr("M(2,Z(2))").unwrap();
        assert_eq!(e, RingExpr::Matrix(2, Box::new(RingExpr::Cyclic(2))));
    }

    #[test]
    fn parses_quotient_by_radical() {
        let e = parse_ring_expr("quot(T(2,Z(2)),jacobson)").unwrap();
        assert_eq!(
            e,
            RingExpr::Quotient(
                Box::new(RingExpr::Triangular(2, Box::new(RingExpr::Cyclic(2)))),
                IdealSpec::Jacobson
            )
        );
    }

    #[test]
    fn unclosed_paren_reports_offset() {
        let err = parse_ring_expr("Zi(3").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                offset: 4,
                expected: vec![")".into()]
            }
        );
    }

    #[test]
    fn whitespace_is_ignored() {
        let a = parse_ring_expr(" prod( Z (2) ,\tZi(3) ) ").unwrap();
        assert_eq!(a.to_string(), "prod(Z(2),Zi(3))");
        let c = parse_ring_expr("corner(M(2,Z(2)), [1, 0, 0, 0])").unwrap();
        assert_eq!(c.to_string(), "corner(M(2,Z(2)),[1,0,0,0])");
    }

    #[test]
    fn rejects_zero_parameter_and_unknown_tags() {
        assert!(matches!(parse_ring_expr("Z(0)"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_ring_expr("Q(3)"), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(
            parse_ring_expr("Z(3) x"),
            Err(Error::Syntax { offset: 5, .. })
        ));
    }

    #[test]
    fn ideal_specs() {
        assert_eq!(
            parse_ideal_spec("gen(2, 4)").unwrap(),
            IdealSpec::Gen(vec!["2".into(), "4".into()])
        );
        assert_eq!(parse_ideal_spec("all").unwrap(), IdealSpec::All);
        assert!(parse_ideal_spec("gen()").is_err());
        let nested = parse_ideal_spec("gen((1,0),[0,1,0,0])").unwrap();
        assert_eq!(nested.to_string(), "gen((1,0),[0,1,0,0])");
    }
}
