//! Text form of rationals and polynomials.
//!
//! Terms are written in ascending powers. Polynomials in the order parameter
//! use the variable `a` and parenthesize every non-unit coefficient:
//!
//! ```text
//! (-1/12)*a + (1/4)*a^2
//! ```
//!
//! Polynomials in `x` with rational coefficients fold signs into the
//! separators and omit unit coefficients:
//!
//! ```text
//! 1/6 - x + x^2
//! ```
//!
//! Elements of Q[a][x] use the second style for rational coefficients and
//! write `(<a-polynomial>)*x^k` otherwise, e.g. `(-1/2)*a + x`.
//!
//! Grammar accepted by the parsers (whitespace is ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'a' | 'x' | '(' expr ')'
//! ```
//!
//! Division is only allowed by a nonzero rational constant.

use crate::error::ParseError;
use crate::poly::{AlphaScalar, BiPoly, Poly, RatPoly};
use crate::rational::Rational;

pub fn format_alpha(p: &AlphaScalar) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        terms.push(match k {
            0 => c.to_string(),
            _ if c.is_one() => power_text('a', k),
            _ => format!("({c})*{}", power_text('a', k)),
        });
    }
    terms.join(" + ")
}

pub fn format_rat_poly(p: &RatPoly) -> String {
    format_with_var(p, 'x')
}

/// Sign-folded style with an arbitrary variable name.
pub fn format_with_var(p: &RatPoly, var: char) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        push_signed(&mut out, c, k, var);
    }
    out
}

fn push_signed(out: &mut String, c: &Rational, k: usize, var: char) {
    let first = out.is_empty();
    match (first, c.is_negative()) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    let mag = c.abs();
    if k == 0 {
        out.push_str(&mag.to_string());
    } else if mag.is_one() {
        out.push_str(&power_text(var, k));
    } else {
        out.push_str(&format!("{mag}*{}", power_text(var, k)));
    }
}

pub fn format_bipoly(p: &BiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        match c.as_constant() {
            Some(q) => push_signed(&mut out, &q, k, 'x'),
            None => {
                if !out.is_empty() {
                    out.push_str(" + ");
                }
                if k == 0 {
                    out.push_str(&format_alpha(c));
                } else {
                    out.push_str(&format!("({})*{}", format_alpha(c), power_text('x', k)));
                }
            }
        }
    }
    out
}

fn power_text(var: char, k: usize) -> String {
    if k == 1 {
        var.to_string()
    } else {
        format!("{var}^{k}")
    }
}

pub fn parse_bipoly(s: &str) -> Result<BiPoly, ParseError> {
    let tokens = tokenize(s)?;
    let mut parser = Parser { tokens, pos: 0 };
    let value = parser.expr()?;
    match parser.peek() {
        None => Ok(value),
        Some((tok, offset)) => Err(ParseError::UnexpectedToken {
            found: tok.describe(),
            expected: "end of input",
            offset,
        }),
    }
}

pub fn parse_alpha(s: &str) -> Result<AlphaScalar, ParseError> {
    let p = parse_bipoly(s)?;
    if p.degree().unwrap_or(0) > 0 {
        return Err(ParseError::ForeignVariable('x'));
    }
    Ok(p.coeff(0))
}

pub fn parse_rat_poly(s: &str) -> Result<RatPoly, ParseError> {
    let p = parse_bipoly(s)?;
    p.coeffs()
        .iter()
        .map(|c| c.as_constant().ok_or(ParseError::ForeignVariable('a')))
        .collect::<Result<Vec<_>, _>>()
        .map(Poly::from_coeffs)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(num_bigint::BigInt),
    Alpha,
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(n) => format!("integer {n}"),
            Token::Alpha => "`a`".into(),
            Token::X => "`x`".into(),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Star => "`*`".into(),
            Token::Slash => "`/`".into(),
            Token::Caret => "`^`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
        }
    }
}

fn tokenize(s: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(i, ch)) = chars.peek() {
        let tok = match ch {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '0'..='9' => {
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        end = j + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((Token::Int(s[i..end].parse().expect("digits")), i));
                continue;
            }
            'a' => Token::Alpha,
            'x' => Token::X,
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            other => return Err(ParseError::UnexpectedChar { ch: other, offset: i }),
        };
        chars.next();
        out.push((tok, i));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<(Token, usize)> {
        self.tokens.get(self.pos).cloned()
    }

    fn end_offset(&self) -> usize {
        self.tokens.last().map(|(_, o)| o + 1).unwrap_or(0)
    }

    fn eat(&mut self, want: &Token) -> bool {
        if self.tokens.get(self.pos).is_some_and(|(t, _)| t == want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Token::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Token::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Token::Star) {
                acc = acc.mul(&self.unary()?);
            } else if let Some((Token::Slash, offset)) = self.peek() {
                self.pos += 1;
                let divisor = self.unary()?;
                let inv = divisor
                    .as_constant()
                    .and_then(|c| c.as_constant())
                    .and_then(|q| q.recip())
                    .ok_or(ParseError::BadDivision(offset))?;
                acc = acc.scale_by(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<BiPoly, ParseError> {
        if self.eat(&Token::Minus) {
            Ok(self.unary()?.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<BiPoly, ParseError> {
        let base = self.atom()?;
        if !self.eat(&Token::Caret) {
            return Ok(base);
        }
        match self.peek() {
            Some((Token::Int(n), offset)) => {
                self.pos += 1;
                let exp: u32 = n
                    .try_into()
                    .ok()
                    .filter(|e| *e <= 10_000)
                    .ok_or(ParseError::ExponentOverflow(offset))?;
                Ok(base.power(exp))
            }
            Some((tok, offset)) => Err(ParseError::UnexpectedToken {
                found: tok.describe(),
                expected: "integer exponent",
                offset,
            }),
            None => Err(ParseError::UnexpectedToken {
                found: "end of input".into(),
                expected: "integer exponent",
                offset: self.end_offset(),
            }),
        }
    }

    fn atom(&mut self) -> Result<BiPoly, ParseError> {
        let Some((tok, offset)) = self.peek() else {
            return Err(ParseError::UnexpectedToken {
                found: "end of input".into(),
                expected: "operand",
                offset: self.end_offset(),
            });
        };
        self.pos += 1;
        match tok {
            Token::Int(n) => Ok(BiPoly::constant(AlphaScalar::constant(Rational::from(n)))),
            Token::Alpha => Ok(BiPoly::constant(AlphaScalar::alpha())),
            Token::X => Ok(BiPoly::var()),
            Token::LParen => {
                let inner = self.expr()?;
                if self.eat(&Token::RParen) {
                    Ok(inner)
                } else {
                    let (found, offset) = self
                        .peek()
                        .map(|(t, o)| (t.describe(), o))
                        .unwrap_or(("end of input".into(), self.end_offset()));
                    Err(ParseError::UnexpectedToken {
                        found,
                        expected: "`)`",
                        offset,
                    })
                }
            }
            other => Err(ParseError::UnexpectedToken {
                found: other.describe(),
                expected: "operand",
                offset,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn alpha_style() {
        let p = Poly::from_coeffs(vec![q(0, 1), q(-1, 12), q(1, 4)]);
        assert_eq!(format_alpha(&p), "(-1/12)*a + (1/4)*a^2");
        assert_eq!(format_alpha(&Poly::from_coeffs(vec![q(0, 1), q(-1, 2)])), "(-1/2)*a");
        assert_eq!(format_alpha(&AlphaScalar::one()), "1");
        assert_eq!(format_alpha(&AlphaScalar::zero()), "0");
        assert_eq!(format_alpha(&AlphaScalar::alpha()), "a");
        assert_eq!(parse_alpha("(-1/12)*a + (1/4)*a^2").unwrap(), p);
    }

    #[test]
    fn x_style() {
        let p = Poly::from_coeffs(vec![q(1, 6), q(-1, 1), q(1, 1)]);
        assert_eq!(format_rat_poly(&p), "1/6 - x + x^2");
        assert_eq!(parse_rat_poly("1/6 - x + x^2").unwrap(), p);
        let r = Poly::from_coeffs(vec![q(0, 1), q(-3, 2), q(0, 1), q(2, 1)]);
        assert_eq!(format_rat_poly(&r), "-3/2*x + 2*x^3");
        assert_eq!(parse_rat_poly("-3/2*x + 2*x^3").unwrap(), r);
    }

    #[test]
    fn bipoly_style() {
        // x - a/2
        let p: BiPoly = Poly::from_coeffs(vec![
            Poly::from_coeffs(vec![q(0, 1), q(-1, 2)]),
            AlphaScalar::one(),
        ]);
        assert_eq!(format_bipoly(&p), "(-1/2)*a + x");
        assert_eq!(parse_bipoly("(-1/2)*a + x").unwrap(), p);
        let r = parse_bipoly("x^2 - a*x + (3*a^2 - a)/12").unwrap();
        assert_eq!(parse_bipoly(&format_bipoly(&r)).unwrap(), r);
    }

    #[test]
    fn parser_semantics() {
        assert_eq!(parse_rat_poly("-x^2").unwrap(), RatPoly::monomial(q(-1, 1), 2));
        assert_eq!(parse_rat_poly("(x+1)^2").unwrap().coeffs().len(), 3);
        assert_eq!(parse_rat_poly("2/4/2").unwrap(), RatPoly::constant(q(1, 4)));
        assert!(matches!(parse_rat_poly("1/x"), Err(ParseError::BadDivision(1))));
        assert!(matches!(parse_rat_poly("1/0"), Err(ParseError::BadDivision(1))));
        assert!(matches!(parse_rat_poly("a"), Err(ParseError::ForeignVariable('a'))));
        assert!(matches!(parse_alpha("x"), Err(ParseError::ForeignVariable('x'))));
        assert!(parse_bipoly("(x").is_err());
        assert!(parse_bipoly("x y").is_err());
        assert!(parse_bipoly("x^").is_err());
        assert!(matches!(parse_bipoly("y"), Err(ParseError::UnexpectedChar { ch: 'y', .. })));
    }
}
