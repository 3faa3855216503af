//! Text syntax for polynomials and ideal files.
//!
//! Polynomials: terms joined by `+`/`-`, factors joined by `*` (which may be
//! omitted after a coefficient), powers with `^`. Coefficients are integers
//! of any size and are reduced modulo `n` while reading.
//!
//! Ideal files:
//!
//! ```text
//! # comment
//! modulus 30
//! vars x y
//! order degrevlex
//! 2*x
//! 3*x
//! ```

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::polynomial::{Monomial, MonomialOrder, Polynomial};
use crate::residue::ResidueRing;

/// Contents of an ideal file: ring, variables, order and generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub ring: ResidueRing,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub generators: Vec<Polynomial>,
}

impl IdealFile {
    pub fn new(ring: ResidueRing, vars: Vec<String>, order: MonomialOrder, generators: Vec<Polynomial>) -> Self {
        IdealFile {
            ring,
            vars,
            order,
            generators,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.ring.modulus()
    }
}

impl fmt::Display for IdealFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "modulus {}", self.ring.modulus())?;
        writeln!(f, "vars {}", self.vars.join(" "))?;
        writeln!(f, "order {}", self.order)?;
        for g in &self.generators {
            writeln!(f, "{}", g.display(&self.vars))?;
        }
        Ok(())
    }
}

pub fn read_ideal_file(path: impl AsRef<Path>) -> Result<IdealFile> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_ideal_file(&text)
}

/// Reads a list of polynomials in the context of `ideal`: either a full
/// ideal file over the same ring and variables, or bare polynomial lines.
pub fn parse_basis_text(text: &str, ideal: &IdealFile) -> Result<Vec<Polynomial>> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    if first.is_some_and(|l| l.starts_with("modulus")) {
        let file = parse_ideal_file(text)?;
        if file.ring != ideal.ring {
            return Err(Error::RingMismatch {
                left: ideal.modulus(),
                right: file.modulus(),
            });
        }
        if file.vars != ideal.vars {
            return Err(Error::domain("basis file declares different variables"));
        }
        return Ok(file.generators.into_iter().map(|g| g.with_order(ideal.order)).collect());
    }
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let p = parse_polynomial(line, ideal.ring, ideal.order, &ideal.vars).map_err(|e| match e {
            Error::Parse { column, message, .. } => parse_error(idx + 1, column, message),
            other => other,
        })?;
        out.push(p);
    }
    Ok(out)
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile> {
    let mut ring = None;
    let mut vars: Option<Vec<String>> = None;
    let mut order = None;
    let mut generators = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start().len();
        let col = indent + 1;

        let Some(ring) = ring else {
            let rest = trimmed
                .strip_prefix("modulus")
                .ok_or_else(|| parse_error(lineno, col, "expected 'modulus <int>'"))?
                .trim();
            let n: u64 = rest
                .parse()
                .map_err(|_| parse_error(lineno, col + 8, format!("invalid modulus '{rest}'")))?;
            ring = Some(ResidueRing::new(n).map_err(|e| parse_error(lineno, col + 8, e.to_string()))?);
            continue;
        };
        let Some(vars) = &vars else {
            let rest = trimmed
                .strip_prefix("vars")
                .ok_or_else(|| parse_error(lineno, col, "expected 'vars <id> ...'"))?;
            let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if names.is_empty() {
                return Err(parse_error(lineno, col, "at least one variable is required"));
            }
            for (i, name) in names.iter().enumerate() {
                if !is_identifier(name) {
                    return Err(parse_error(lineno, col, format!("invalid variable name '{name}'")));
                }
                if names[..i].contains(name) {
                    return Err(parse_error(lineno, col, format!("duplicate variable '{name}'")));
                }
            }
            vars = Some(names);
            continue;
        };
        let Some(order) = order else {
            let rest = trimmed
                .strip_prefix("order")
                .ok_or_else(|| parse_error(lineno, col, "expected 'order lex|degrevlex'"))?
                .trim();
            order = Some(match rest {
                "lex" => MonomialOrder::Lex,
                "degrevlex" => MonomialOrder::DegRevLex,
                other => return Err(parse_error(lineno, col + 6, format!("unknown order '{other}'"))),
            });
            continue;
        };
        let p = parse_polynomial(line, ring, order, vars).map_err(|e| match e {
            Error::Parse { column, message, .. } => parse_error(lineno, column, message),
            other => other,
        })?;
        generators.push(p);
    }

    let missing = |what: &str| parse_error(text.lines().count().max(1), 1, format!("missing '{what}' line"));
    Ok(IdealFile {
        ring: ring.ok_or_else(|| missing("modulus"))?,
        vars: vars.ok_or_else(|| missing("vars"))?,
        order: order.ok_or_else(|| missing("order"))?,
        generators,
    })
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Token<'a> {
    Number(&'a str),
    Ident(&'a str),
    Plus,
    Minus,
    Star,
    Caret,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(usize, Token<'a>)>> {
        let mut lx = Lexer {
            bytes: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        while lx.pos < lx.bytes.len() {
            let c = lx.bytes[lx.pos];
            let start = lx.pos;
            let col = start + 1;
            match c {
                b' ' | b'\t' | b'\r' => {
                    lx.pos += 1;
                }
                b'+' => {
                    out.push((col, Token::Plus));
                    lx.pos += 1;
                }
                b'-' => {
                    out.push((col, Token::Minus));
                    lx.pos += 1;
                }
                b'*' => {
                    out.push((col, Token::Star));
                    lx.pos += 1;
                }
                b'^' => {
                    out.push((col, Token::Caret));
                    lx.pos += 1;
                }
                b'0'..=b'9' => {
                    while lx.pos < lx.bytes.len() && lx.bytes[lx.pos].is_ascii_digit() {
                        lx.pos += 1;
                    }
                    out.push((col, Token::Number(&src[start..lx.pos])));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    while lx.pos < lx.bytes.len()
                        && (lx.bytes[lx.pos].is_ascii_alphanumeric() || lx.bytes[lx.pos] == b'_')
                    {
                        lx.pos += 1;
                    }
                    out.push((col, Token::Ident(&src[start..lx.pos])));
                }
                _ => {
                    return Err(parse_error(
                        0,
                        col,
                        format!("unexpected character '{}'", src[start..].chars().next().unwrap()),
                    ))
                }
            }
        }
        Ok(out)
    }
}

fn reduce_decimal(digits: &str, n: u64) -> u64 {
    digits.bytes().fold(0u64, |acc, d| {
        ((acc as u128 * 10 + (d - b'0') as u128) % n as u128) as u64
    })
}

/// Parses one polynomial. Errors carry column numbers (line `0`).
pub fn parse_polynomial(src: &str, ring: ResidueRing, order: MonomialOrder, vars: &[String]) -> Result<Polynomial> {
    let tokens = Lexer::tokens(src)?;
    let n = ring.modulus();
    let nvars = vars.len();
    let end_col = src.trim_end().len() + 1;
    if tokens.is_empty() {
        return Err(parse_error(0, 1, "empty polynomial"));
    }

    let mut terms: Vec<(i128, Monomial)> = Vec::new();
    let mut i = 0;
    let mut first = true;
    while i < tokens.len() {
        let mut negative = false;
        match tokens[i].1 {
            Token::Plus | Token::Minus => {
                negative = tokens[i].1 == Token::Minus;
                let op_col = tokens[i].0;
                i += 1;
                if i >= tokens.len() {
                    return Err(parse_error(0, op_col, "dangling operator at end of polynomial"));
                }
            }
            _ if !first => {
                return Err(parse_error(0, tokens[i].0, "expected '+' or '-' between terms"));
            }
            _ => {}
        }
        first = false;

        let mut coeff: u64 = 1 % n;
        let mut exps = vec![0u32; nvars];
        let mut expect_factor = true;
        while i < tokens.len() {
            let (col, ref tok) = tokens[i];
            match tok {
                Token::Number(d) if expect_factor => {
                    coeff = ring.mul(coeff, reduce_decimal(d, n));
                    i += 1;
                    expect_factor = false;
                }
                Token::Ident(name) if expect_factor || matches!(tokens[i - 1].1, Token::Number(_)) => {
                    let v = vars
                        .iter()
                        .position(|x| x == name)
                        .ok_or_else(|| parse_error(0, col, format!("unknown variable '{name}'")))?;
                    i += 1;
                    let mut e = 1u32;
                    if i < tokens.len() && tokens[i].1 == Token::Caret {
                        let caret_col = tokens[i].0;
                        i += 1;
                        match tokens.get(i) {
                            Some((_, Token::Number(d))) => {
                                e = d
                                    .parse()
                                    .map_err(|_| parse_error(0, tokens[i].0, format!("exponent '{d}' too large")))?;
                                i += 1;
                            }
                            Some((c, _)) => return Err(parse_error(0, *c, "expected exponent after '^'")),
                            None => return Err(parse_error(0, caret_col, "expected exponent after '^'")),
                        }
                    }
                    exps[v] += e;
                    expect_factor = false;
                }
                Token::Star if !expect_factor => {
                    i += 1;
                    expect_factor = true;
                    if i >= tokens.len() {
                        return Err(parse_error(0, col, "dangling '*' at end of polynomial"));
                    }
                }
                Token::Plus | Token::Minus if !expect_factor => break,
                _ => return Err(parse_error(0, col, "unexpected token")),
            }
        }
        if expect_factor {
            return Err(parse_error(0, end_col, "expected a factor"));
        }
        let c = if negative { -(coeff as i128) } else { coeff as i128 };
        terms.push((c, Monomial::new(&exps)));
    }
    Polynomial::from_terms(ring, order, nvars, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_text_in_both_shapes() {
        let ideal = parse_ideal_file("modulus 30\nvars x y\norder degrevlex\n2*x\n3*x\n").unwrap();
        let bare = parse_basis_text("# basis\nx\n\n2*y + 1\n", &ideal).unwrap();
        let full = parse_basis_text("modulus 30\nvars x y\norder lex\nx\n2*y + 1\n", &ideal).unwrap();
        assert_eq!(bare, full);
        assert_eq!(bare[0].order(), MonomialOrder::DegRevLex);
        assert!(parse_basis_text("modulus 6\nvars x y\norder lex\nx\n", &ideal).is_err());
        let err = parse_basis_text("x\nx + \n", &ideal).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_simple_ideal_file() {
        let f = parse_ideal_file("modulus 6\nvars x\norder degrevlex\nx + 5\n").unwrap();
        assert_eq!(f.modulus(), 6);
        assert_eq!(f.vars, vars(&["x"]));
        assert_eq!(f.order, MonomialOrder::DegRevLex);
        assert_eq!(f.generators.len(), 1);
        let g = &f.generators[0];
        assert_eq!(g.terms().len(), 2);
        assert_eq!(g.terms()[1].coeff, 5);
    }

    #[test]
    fn coefficients_are_reduced() {
        let f = parse_ideal_file("modulus 30\nvars x y\norder lex\n2*x^2*y - 3\n").unwrap();
        let coeffs: Vec<u64> = f.generators[0].terms().iter().map(|t| t.coeff).collect();
        assert_eq!(coeffs, vec![2, 27]);
    }

    #[test]
    fn trailing_operator_is_reported() {
        let err = parse_ideal_file("modulus 6\nvars x\norder lex\nx + \n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 4,
                column: 3,
                message: "dangling operator at end of polynomial".into()
            }
        );
    }

    #[test]
    fn header_errors() {
        assert!(matches!(
            parse_ideal_file("modulus 1\nvars x\norder lex\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_ideal_file("modulus 6\nvars x x\norder lex\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_ideal_file("modulus 6\nvars x\norder grevlex\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_ideal_file("modulus 6\nvars x\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_ideal_file("modulus 6\nvars x\norder lex\nx + y\n"),
            Err(Error::Parse { line: 4, column: 5, .. })
        ));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\nmodulus 7 # seven\n\nvars a b\norder lex\n  a*b + 1  # gen\n\n";
        let f = parse_ideal_file(text).unwrap();
        assert_eq!(f.generators.len(), 1);
        assert_eq!(f.vars, vars(&["a", "b"]));
    }

    #[test]
    fn polynomial_syntax_variants() {
        let ring = ResidueRing::new(101).unwrap();
        let v = vars(&["x", "y"]);
        let p = |s: &str| parse_polynomial(s, ring, MonomialOrder::DegRevLex, &v).unwrap();
        assert_eq!(p("2x^2y"), p("2*x^2*y"));
        assert_eq!(p("x*x*y"), p("x^2*y"));
        assert_eq!(p("-x + x"), p("0"));
        assert_eq!(p("3*4*x"), p("12x"));
        assert_eq!(
            p("1000000000000000000000000000000 x"),
            p("x").scale(reduce_decimal("1000000000000000000000000000000", 101))
        );
        assert!(parse_polynomial("x y", ring, MonomialOrder::Lex, &v).is_err());
        assert!(parse_polynomial("x^", ring, MonomialOrder::Lex, &v).is_err());
        assert!(parse_polynomial("x*", ring, MonomialOrder::Lex, &v).is_err());
        assert!(parse_polynomial("", ring, MonomialOrder::Lex, &v).is_err());
        assert!(parse_polynomial("x + $", ring, MonomialOrder::Lex, &v).is_err());
    }

    #[test]
    fn display_round_trips() {
        let text = "modulus 30\nvars x y z\norder degrevlex\n2*x^2*y - 3*y + 1\nx*z - y^3\n7\n";
        let f = parse_ideal_file(text).unwrap();
        let printed = f.to_string();
        assert_eq!(parse_ideal_file(&printed).unwrap(), f);
    }
}
