//! Text syntax for exact scalars.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary | unary)*      juxtaposition multiplies
//! unary  := "-" unary | "+" unary | power
//! power  := atom ("^" int)?                         int may be negative
//! atom   := integer | "z" | "l" | "t" | "(" expr ")"
//! ```
//!
//! `z` is the primitive 8th root of unity (also written `ζ` or `zeta`),
//! `l` the family parameter (also `λ` or `lambda`), `t` the curve parameter.

use thiserror::Error;

use super::field::Field;
use super::scalar::{Scalar, TPoly, TRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("division by zero in `{0}`")]
    DivisionByZero(String),
    #[error("`{0}` depends on t, expected a constant")]
    NotConstant(String),
    #[error("`{0}` is not a polynomial in t")]
    NotPolynomial(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(num_bigint::BigInt),
    Z,
    L,
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = it.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    it.next();
                } else {
                    break;
                }
            }
            out.push((pos, Tok::Int(s.parse().expect("digit string"))));
            continue;
        }
        if c.is_alphabetic() {
            let mut s = String::new();
            while let Some(&(_, d)) = it.peek() {
                if d.is_alphabetic() {
                    s.push(d);
                    it.next();
                } else {
                    break;
                }
            }
            let tok = match s.as_str() {
                "z" | "zeta" | "ζ" => vec![Tok::Z],
                "l" | "lambda" | "λ" => vec![Tok::L],
                "t" => vec![Tok::T],
                // runs like "lt" or "zt" are juxtaposed single letters
                _ if s.chars().all(|ch| matches!(ch, 'z' | 'l' | 't' | 'ζ' | 'λ')) => s
                    .chars()
                    .map(|ch| match ch {
                        'z' | 'ζ' => Tok::Z,
                        'l' | 'λ' => Tok::L,
                        _ => Tok::T,
                    })
                    .collect(),
                _ => {
                    return Err(ParseError::Syntax {
                        pos,
                        msg: format!("unknown symbol `{s}`"),
                    })
                }
            };
            out.extend(tok.into_iter().map(|t| (pos, t)));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(ParseError::Syntax {
                    pos,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        };
        it.next();
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(usize, Tok)>,
    i: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.src.len(), |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<TRational, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.i += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.i += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<TRational, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.i += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.i += 1;
                    let d = self.unary()?;
                    acc = acc
                        .div(&d)
                        .ok_or_else(|| ParseError::DivisionByZero(self.src.to_string()))?;
                }
                Some(Tok::Int(_) | Tok::Z | Tok::L | Tok::T | Tok::LParen) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<TRational, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.i += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.i += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<TRational, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.i += 1;
        let exp = self.exponent()?;
        let mag = u32::try_from(exp.unsigned_abs()).or_else(|_| self.err("exponent too large"))?;
        let p = base.pow(mag);
        if exp < 0 {
            p.inv()
                .ok_or_else(|| ParseError::DivisionByZero(self.src.to_string()))
        } else {
            Ok(p)
        }
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let paren = self.peek() == Some(&Tok::LParen);
        if paren {
            self.i += 1;
        }
        let neg = self.peek() == Some(&Tok::Minus);
        if neg {
            self.i += 1;
        }
        let v = match self.peek() {
            Some(Tok::Int(n)) => {
                let v = i64::try_from(n).or_else(|_| self.err("exponent too large"))?;
                self.i += 1;
                v
            }
            _ => return self.err("expected an integer exponent"),
        };
        if paren {
            if self.peek() != Some(&Tok::RParen) {
                return self.err("expected `)`");
            }
            self.i += 1;
        }
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<TRational, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        self.i += 1;
        Ok(match tok {
            Tok::Int(n) => {
                let q = num_rational::BigRational::from_integer(n);
                TRational::constant(Scalar::Const(super::Cyclo8::rational(q)))
            }
            Tok::Z => TRational::constant(Scalar::Const(super::Cyclo8::zeta())),
            Tok::L => TRational::constant(Scalar::lambda()),
            Tok::T => TRational::x(),
            Tok::LParen => {
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.i += 1;
                e
            }
            _ => {
                self.i -= 1;
                return self.err("expected a number, symbol or `(`");
            }
        })
    }
}

/// Parses an expression in `z`, `l` and `t`.
pub fn parse_rational(src: &str) -> Result<TRational, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { src, toks, i: 0 };
    let e = p.expr()?;
    if p.i != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses an expression that must not involve `t`.
pub fn parse_scalar(src: &str) -> Result<Scalar, ParseError> {
    parse_rational(src)?
        .as_constant()
        .ok_or_else(|| ParseError::NotConstant(src.to_string()))
}

/// Parses an expression that must be a polynomial in `t`.
pub fn parse_tpoly(src: &str) -> Result<TPoly, ParseError> {
    parse_rational(src)?
        .as_poly()
        .ok_or_else(|| ParseError::NotPolynomial(src.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{display_t, Cyclo8};

    #[test]
    fn constants() {
        assert_eq!(parse_scalar("-3/4").unwrap(), Scalar::from_ratio(-3, 4));
        assert_eq!(parse_scalar("z - z^3").unwrap(), Scalar::Const(Cyclo8::sqrt2()));
        assert_eq!(parse_scalar("(z+z^3)^2").unwrap(), Scalar::from_i64(-2));
        assert_eq!(
            parse_scalar("ζ^-1").unwrap(),
            Scalar::Const(Cyclo8::from_ints([0, 0, 0, -1]))
        );
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        assert_eq!(parse_scalar("-2^2").unwrap(), Scalar::from_i64(-4));
    }

    #[test]
    fn implicit_multiplication() {
        assert_eq!(parse_rational("2t").unwrap(), parse_rational("2*t").unwrap());
        assert_eq!(
            parse_rational("(t+1)(t-1)").unwrap(),
            parse_rational("t^2 - 1").unwrap()
        );
        assert_eq!(parse_rational("lt").unwrap(), parse_rational("λ*t").unwrap());
    }

    #[test]
    fn negative_powers_of_t() {
        let r = parse_rational("1 + t^-1").unwrap();
        assert_eq!(display_t(&r), "(t + 1)/(t)");
        assert!(parse_tpoly("t^-1").is_err());
    }

    #[test]
    fn lambda_coefficients() {
        let s = parse_scalar("1/(1 + lambda)").unwrap();
        assert!(s.depends_on_lambda());
        let back = s.mul(&parse_scalar("1 + l").unwrap());
        assert!(back.is_one());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_rational("1/0"),
            Err(ParseError::DivisionByZero(_))
        ));
        assert!(matches!(parse_rational("x"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_rational("(1"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_scalar("t"), Err(ParseError::NotConstant(_))));
    }
}
