//! Evaluation of parsed expressions into ring elements.

use num_traits::Zero;

use crate::cli::CommandFailure;
use crate::expr::{self, Expr};
use crate::field::Field;
use crate::function_field::RationalFunction;
use crate::number_rings::{QuadContext, QuadElement, QuadIdeal};
use crate::{Int, QuadFunc, QuadPoly, RatFunc, RatPoly, Rational};

/// The ring selected by `--ring`.
#[derive(Debug, Clone, Copy)]
pub enum Ring {
    Rational,
    Quad(QuadContext),
}

impl Ring {
    pub fn parse(text: &str) -> Result<Ring, CommandFailure> {
        if text == "q" {
            return Ok(Ring::Rational);
        }
        if let Some(d_text) = text.strip_prefix("quad:") {
            let d: i64 = d_text.parse().map_err(|_| {
                CommandFailure::usage(format!("bad ring `{text}`: expected quad:<integer>"))
            })?;
            return Ok(Ring::Quad(QuadContext::new(d)?));
        }
        Err(CommandFailure::usage(format!(
            "bad ring `{text}`: expected `q` or `quad:D`"
        )))
    }
}

fn eval_func<K: Field>(
    e: &Expr,
    int: &dyn Fn(&Int) -> K,
    sqrt: &dyn Fn(i64) -> Result<K, String>,
) -> Result<RationalFunction<K>, String> {
    Ok(match e {
        Expr::Integer(n) => RationalFunction::constant(int(n)),
        Expr::Var => RationalFunction::x(),
        Expr::Sqrt(d) => RationalFunction::constant(sqrt(*d)?),
        Expr::Neg(a) => -eval_func(a, int, sqrt)?,
        Expr::Add(a, b) => eval_func(a, int, sqrt)? + eval_func(b, int, sqrt)?,
        Expr::Sub(a, b) => eval_func(a, int, sqrt)? - eval_func(b, int, sqrt)?,
        Expr::Mul(a, b) => eval_func(a, int, sqrt)? * eval_func(b, int, sqrt)?,
        Expr::Div(a, b) => {
            let den = eval_func(b, int, sqrt)?;
            if den.is_zero() {
                return Err("division by zero".into());
            }
            eval_func(a, int, sqrt)? / den
        }
        Expr::Pow(a, n) => eval_func(a, int, sqrt)?.pow(*n),
    })
}

/// A rational function over whichever base field the ring selected.
pub enum EvaluatedFunc {
    Rational(RatFunc),
    Quad(QuadFunc),
}

impl EvaluatedFunc {
    pub fn into_rational(self) -> RatFunc {
        match self {
            EvaluatedFunc::Rational(f) => f,
            EvaluatedFunc::Quad(_) => unreachable!("ring dispatch guarantees the base"),
        }
    }

    pub fn into_quad(self) -> QuadFunc {
        match self {
            EvaluatedFunc::Quad(f) => f,
            EvaluatedFunc::Rational(_) => unreachable!("ring dispatch guarantees the base"),
        }
    }

    pub fn into_rational_poly(self) -> Result<RatPoly, CommandFailure> {
        let f = self.into_rational();
        f.as_polynomial().cloned().ok_or_else(|| {
            CommandFailure::usage(format!("expected a polynomial, got {f}"))
        })
    }

    pub fn into_quad_poly(self) -> Result<QuadPoly, CommandFailure> {
        let f = self.into_quad();
        f.as_polynomial().cloned().ok_or_else(|| {
            CommandFailure::usage(format!("expected a polynomial, got {f}"))
        })
    }
}

/// Parse an expression into a rational function over the selected ring.
pub fn parse_ratfunc(text: &str, ring: &Ring) -> Result<EvaluatedFunc, CommandFailure> {
    let ast = expr::parse(text)?;
    match ring {
        Ring::Rational => {
            let f = eval_func(
                &ast,
                &|n| Rational::from_integer(n.clone()),
                &|d| Err(format!("sqrt({d}) needs --ring quad:{d}")),
            )
            .map_err(CommandFailure::usage)?;
            Ok(EvaluatedFunc::Rational(f))
        }
        Ring::Quad(ctx) => {
            let ctx = *ctx;
            let f = eval_func(
                &ast,
                &|n| QuadElement::rational(Rational::from_integer(n.clone())),
                &move |d| {
                    if d == ctx.d() {
                        Ok(ctx.sqrt_d())
                    } else {
                        Err(format!(
                            "sqrt({d}) does not match --ring quad:{}",
                            ctx.d()
                        ))
                    }
                },
            )
            .map_err(CommandFailure::usage)?;
            Ok(EvaluatedFunc::Quad(f))
        }
    }
}

/// Parse a constant rational expression.
pub fn parse_rational(text: &str) -> Result<Rational, CommandFailure> {
    let f = parse_ratfunc(text, &Ring::Rational)?.into_rational();
    f.as_constant()
        .ok_or_else(|| CommandFailure::usage(format!("expected a rational constant, got {f}")))
}

/// Parse a constant element of ℚ(√d).
pub fn parse_quad_element(
    text: &str,
    ctx: QuadContext,
) -> Result<QuadElement, CommandFailure> {
    let f = parse_ratfunc(text, &Ring::Quad(ctx))?.into_quad();
    f.as_constant()
        .ok_or_else(|| CommandFailure::usage(format!("expected a field element, got {f}")))
}

/// Parse an ideal literal: `(g1, g2, ...)` with generator expressions, or
/// a single generator expression.
pub fn parse_quad_ideal(text: &str, ctx: QuadContext) -> Result<QuadIdeal, CommandFailure> {
    let trimmed = text.trim();
    let parts: Vec<String> = match trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
    {
        Some(inner) => {
            let mut depth = 0i32;
            let mut parts = Vec::new();
            let mut current = String::new();
            for c in inner.chars() {
                match c {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    ',' if depth == 0 => {
                        parts.push(std::mem::take(&mut current));
                        continue;
                    }
                    _ => {}
                }
                current.push(c);
            }
            parts.push(current);
            parts
        }
        None => vec![trimmed.to_string()],
    };
    let mut gens = Vec::with_capacity(parts.len());
    for p in &parts {
        gens.push(parse_quad_element(p, ctx)?);
    }
    Ok(QuadIdeal::from_generators(ctx, &gens)?)
}
