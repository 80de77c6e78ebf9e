//! The expression grammar shared by the CLI and the canonical label forms.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := '-'? base ('^' exponent)?
//! base   := uint | 'X' | 'sqrt' '(' int ')' | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant. Rational literals like `1/3` fall out of
//! `/` being exact field division. The exponent is an unsigned integer;
//! a negative exponent is accepted only on a parenthesized base, as sugar
//! for `1/(...)^n`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rational;

/// Abstract syntax tree of the expression grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// Unsigned integer literal.
    Integer(BigInt),
    /// The indeterminate `X`.
    Var,
    /// `sqrt(d)` for a (possibly negative) integer d.
    Sqrt(i64),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// Syntax error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var,
    Sqrt,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(input: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut toks = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let n: BigInt = digits.parse().expect("digits parse");
                toks.push(Spanned { tok: Tok::Num(n), line: tl, col: tc });
            }
            c if c.is_ascii_alphabetic() => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() {
                        ident.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                match ident.as_str() {
                    "X" => toks.push(Spanned { tok: Tok::Var, line: tl, col: tc }),
                    "sqrt" => toks.push(Spanned { tok: Tok::Sqrt, line: tl, col: tc }),
                    other => {
                        return Err(ParseError {
                            line: tl,
                            col: tc,
                            msg: format!("unknown identifier `{other}`"),
                        })
                    }
                }
            }
            _ => {
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    other => {
                        return Err(ParseError {
                            line: tl,
                            col: tc,
                            msg: format!("unexpected character `{other}`"),
                        })
                    }
                };
                chars.next();
                col += 1;
                toks.push(Spanned { tok, line: tl, col: tc });
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end_line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|s| (s.line, s.col))
            .unwrap_or((self.end_line, self.end_col))
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError { line, col, msg: msg.into() }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.parse_factor()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.parse_factor()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        let negated = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let (base, parenthesized) = self.parse_base()?;
        let mut out = base;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let exp_negative = if self.peek() == Some(&Tok::Minus) {
                if !parenthesized {
                    return Err(self.err(
                        "negative exponent is only allowed on a parenthesized base \
                         (sugar for 1/(...)^n)",
                    ));
                }
                self.pos += 1;
                true
            } else {
                false
            };
            let n = match self.bump() {
                Some(Tok::Num(n)) => n,
                _ => return Err(self.err("expected integer exponent after `^`")),
            };
            let exp = n
                .to_u32()
                .ok_or_else(|| self.err("exponent too large"))?;
            out = Expr::Pow(Box::new(out), exp);
            if exp_negative {
                out = Expr::Div(Box::new(Expr::Integer(BigInt::one())), Box::new(out));
            }
        }
        if negated {
            out = Expr::Neg(Box::new(out));
        }
        Ok(out)
    }

    /// Returns the base and whether it was parenthesized.
    fn parse_base(&mut self) -> Result<(Expr, bool), ParseError> {
        match self.bump() {
            Some(Tok::Num(n)) => Ok((Expr::Integer(n), false)),
            Some(Tok::Var) => Ok((Expr::Var, false)),
            Some(Tok::Sqrt) => {
                self.expect(Tok::LParen, "`(` after sqrt")?;
                let negative = if self.peek() == Some(&Tok::Minus) {
                    self.pos += 1;
                    true
                } else {
                    false
                };
                let n = match self.bump() {
                    Some(Tok::Num(n)) => n,
                    _ => return Err(self.err("expected integer inside sqrt(...)")),
                };
                self.expect(Tok::RParen, "`)` after sqrt argument")?;
                let mut d = n
                    .to_i64()
                    .ok_or_else(|| self.err("sqrt argument too large"))?;
                if negative {
                    d = -d;
                }
                Ok((Expr::Sqrt(d), false))
            }
            Some(Tok::LParen) => {
                let inner = self.parse_expr()?;
                self.expect(Tok::RParen, "closing `)`")?;
                Ok((inner, true))
            }
            _ => Err(self.err("expected a number, `X`, `sqrt(...)`, or `(`")),
        }
    }
}

/// Parse an expression string.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let toks = lex(input)?;
    let end_line = 1 + input.matches('\n').count();
    let end_col = input
        .rsplit('\n')
        .next()
        .map(|l| l.chars().count() + 1)
        .unwrap_or(1);
    let mut p = Parser { toks, pos: 0, end_line, end_col };
    let e = p.parse_expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after expression"));
    }
    Ok(e)
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Integer(_) | Expr::Var | Expr::Sqrt(_) => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let prec = self.precedence();
        let paren = prec < min;
        if paren {
            write!(f, "(")?;
        }
        match self {
            Expr::Integer(n) => write!(f, "{n}")?,
            Expr::Var => write!(f, "X")?,
            Expr::Sqrt(d) => write!(f, "sqrt({d})")?,
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_prec(f, 4)?;
            }
            Expr::Add(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, "+")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Sub(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, "-")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Mul(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "*")?;
                b.fmt_prec(f, 3)?;
            }
            Expr::Div(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "/")?;
                b.fmt_prec(f, 3)?;
            }
            Expr::Pow(a, n) => {
                a.fmt_prec(f, 5)?;
                write!(f, "^{n}")?;
            }
        }
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Evaluate an expression containing no `X` and no `sqrt` to a rational.
pub fn eval_rational(e: &Expr) -> Result<Rational, String> {
    match e {
        Expr::Integer(n) => Ok(Rational::from_integer(n.clone())),
        Expr::Var => Err("`X` is not allowed in a constant expression".into()),
        Expr::Sqrt(_) => Err("`sqrt` is not allowed in a rational expression".into()),
        Expr::Neg(a) => Ok(-eval_rational(a)?),
        Expr::Add(a, b) => Ok(eval_rational(a)? + eval_rational(b)?),
        Expr::Sub(a, b) => Ok(eval_rational(a)? - eval_rational(b)?),
        Expr::Mul(a, b) => Ok(eval_rational(a)? * eval_rational(b)?),
        Expr::Div(a, b) => {
            let d = eval_rational(b)?;
            if d.is_zero() {
                return Err("division by zero".into());
            }
            Ok(eval_rational(a)? / d)
        }
        Expr::Pow(a, n) => {
            let base = eval_rational(a)?;
            let mut acc = Rational::one();
            for _ in 0..*n {
                acc *= base.clone();
            }
            Ok(acc)
        }
    }
}

/// Evaluate an expression over ℚ[X] to a dense coefficient vector
/// (ascending degree, trailing zeros stripped). `sqrt` is rejected, and
/// division is allowed only by nonzero constants.
pub fn eval_rational_poly(e: &Expr) -> Result<Vec<Rational>, String> {
    fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }
    fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            out.push(x + y);
        }
        trim(out)
    }
    fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x.clone() * y.clone();
            }
        }
        trim(out)
    }
    match e {
        Expr::Integer(n) => {
            if n.is_zero() {
                Ok(Vec::new())
            } else {
                Ok(vec![Rational::from_integer(n.clone())])
            }
        }
        Expr::Var => Ok(vec![Rational::zero(), Rational::one()]),
        Expr::Sqrt(_) => Err("`sqrt` is not allowed in a polynomial over the rationals".into()),
        Expr::Neg(a) => Ok(eval_rational_poly(a)?
            .into_iter()
            .map(|c| -c)
            .collect()),
        Expr::Add(a, b) => Ok(add(&eval_rational_poly(a)?, &eval_rational_poly(b)?)),
        Expr::Sub(a, b) => {
            let rhs: Vec<Rational> = eval_rational_poly(b)?.into_iter().map(|c| -c).collect();
            Ok(add(&eval_rational_poly(a)?, &rhs))
        }
        Expr::Mul(a, b) => Ok(mul(&eval_rational_poly(a)?, &eval_rational_poly(b)?)),
        Expr::Div(a, b) => {
            let den = eval_rational_poly(b)?;
            if den.len() > 1 {
                return Err("division by a non-constant is not a polynomial".into());
            }
            let c = den.first().cloned().unwrap_or_else(Rational::zero);
            if c.is_zero() {
                return Err("division by zero".into());
            }
            Ok(eval_rational_poly(a)?
                .into_iter()
                .map(|x| x / c.clone())
                .collect())
        }
        Expr::Pow(a, n) => {
            let base = eval_rational_poly(a)?;
            let mut acc = vec![Rational::one()];
            for _ in 0..*n {
                acc = mul(&acc, &base);
            }
            Ok(acc)
        }
    }
}

/// Render a signed integer as a factor-level expression string, wrapping
/// negatives in parentheses so the result can appear after `*` or `+`.
pub fn signed_atom(n: &BigInt) -> String {
    if n.is_negative() {
        format!("({n})")
    } else {
        format!("{n}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(s: &str) {
        let e = parse(s).unwrap();
        let rendered = e.to_string();
        let e2 = parse(&rendered).unwrap_or_else(|err| {
            panic!("re-parse of `{rendered}` failed: {err}");
        });
        assert_eq!(e, e2, "roundtrip through `{rendered}`");
    }

    #[test]
    fn parses_polynomials() {
        roundtrip("6*X^2 + 4*X + 10");
        roundtrip("(1 + sqrt(-5))/2");
        roundtrip("X^3 - 2*X + 5");
        roundtrip("1/3*X + 2/7");
    }

    #[test]
    fn negative_exponent_requires_parens() {
        assert!(parse("X^-1").is_err());
        let ok = parse("(X)^-1").unwrap();
        assert_eq!(
            ok,
            Expr::Div(
                Box::new(Expr::Integer(BigInt::one())),
                Box::new(Expr::Pow(Box::new(Expr::Var), 1))
            )
        );
    }

    #[test]
    fn error_positions() {
        let err = parse("2 + $").unwrap_err();
        assert_eq!((err.line, err.col), (1, 5));
        let err = parse("2 +").unwrap_err();
        assert_eq!((err.line, err.col), (1, 4));
        assert!(parse("y + 1").is_err());
    }

    #[test]
    fn rational_literals() {
        let e = parse("4/9").unwrap();
        assert_eq!(
            eval_rational(&e).unwrap(),
            Rational::new(4.into(), 9.into())
        );
        let e = parse("-12").unwrap();
        assert_eq!(
            eval_rational(&e).unwrap(),
            Rational::from_integer((-12).into())
        );
    }

    #[test]
    fn poly_coefficients() {
        let e = parse("X^2+1").unwrap();
        let coeffs = eval_rational_poly(&e).unwrap();
        assert_eq!(
            coeffs,
            vec![
                Rational::one(),
                Rational::zero(),
                Rational::one()
            ]
        );
        let e = parse("(3*X+1)/3").unwrap();
        let coeffs = eval_rational_poly(&e).unwrap();
        assert_eq!(
            coeffs,
            vec![Rational::new(1.into(), 3.into()), Rational::one()]
        );
        assert!(eval_rational_poly(&parse("1/X").unwrap()).is_err());
    }

    #[test]
    fn subtraction_is_not_signed_literal() {
        let e = parse("3-2").unwrap();
        assert_eq!(eval_rational(&e).unwrap(), Rational::one());
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0u64..500).prop_map(|n| Expr::Integer(n.into())),
            Just(Expr::Var),
            prop_oneof![Just(-5i64), Just(-1), Just(2), Just(3)].prop_map(Expr::Sqrt),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
                (inner.clone(), 0u32..5).prop_map(|(a, n)| Expr::Pow(Box::new(a), n)),
                inner.prop_map(|a| Expr::Neg(Box::new(a))),
            ]
        })
    }

    proptest! {
        #[test]
        fn rendering_reparses_structurally_equal(e in arb_expr()) {
            let rendered = e.to_string();
            let back = parse(&rendered)
                .unwrap_or_else(|err| panic!("`{rendered}` failed to reparse: {err}"));
            prop_assert_eq!(back, e);
        }
    }
}
