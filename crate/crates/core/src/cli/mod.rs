//! The `demival` command-line front end.
//!
//! JSON on stdout is the machine interface and the default; `--human`
//! switches to a readable rendering. Exit codes: 0 success, 1 domain
//! error (with a machine-readable error code), 2 usage or parse error.

mod eval;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::Error;
use crate::expr;
use crate::function_field::{
    coefficient_cofactors, content_value, contract_ideal, kronecker_factor,
    kronecker_ring_member, rw_principal_generator, t_value, u_value, w_value,
    KroneckerRingIdeal, QuadIdealToolkit, RationalIdealToolkit,
};
use crate::number_rings::{
    is_principal_search, quad_divisor_valuation, rational_valuation,
    QuadDivisorValuation, QuadIdeal, RationalDivisorValuation, DEFAULT_FACTOR_BOUND,
};
use crate::suites::{run_all, run_suite, SuiteConfig, SUITE_NAMES};
use crate::valuation_core::reconstruct_unit;
use crate::value_groups::ExtendedValue;
use crate::function_field::UValuation;

use eval::{parse_quad_element, parse_quad_ideal, parse_rational, parse_ratfunc, Ring};

#[derive(Parser, Debug)]
#[command(
    name = "demival",
    version,
    about = "Demi-valuations over exact arithmetic: divisor valuations, content \
             valuations, and Kronecker function rings"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    opts: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Ring selector: `q` for the rationals, `quad:D` for Q(sqrt(D)).
    #[arg(long, global = true, default_value = "q")]
    ring: String,

    /// Emit JSON (the default output format; flag kept for explicitness).
    #[arg(long, global = true)]
    json: bool,

    /// Emit a human-readable rendering instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    human: bool,

    /// Master seed for the property suites.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Samples per property suite.
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,

    /// Search bound for `ideal principal-search`.
    #[arg(long, global = true, default_value_t = 100)]
    bound: u64,

    /// Degree bound for polynomial factorization.
    #[arg(long, global = true, default_value_t = 6)]
    degree_bound: usize,

    /// Trial-division bound for integer factorization
    /// (env: DEMIVAL_FACTOR_BOUND).
    #[arg(long, global = true)]
    factor_bound: Option<u64>,
}

impl GlobalOpts {
    fn factor_bound(&self) -> u64 {
        self.factor_bound
            .or_else(|| {
                std::env::var("DEMIVAL_FACTOR_BOUND")
                    .ok()
                    .and_then(|s| s.parse().ok())
            })
            .unwrap_or(DEFAULT_FACTOR_BOUND)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a valuation on a field element or rational function.
    Valuate {
        /// Which valuation: divisor | w | t | u.
        #[arg(long, default_value = "divisor")]
        valuation: String,
        expr: String,
    },
    /// Content of a polynomial under the ring's divisor valuation.
    Content { expr: String },
    /// The Bézout coefficients c = X^{deg q + 1}, d = 1 and the verified
    /// meet w(c·p + d·q).
    Bezout { p: String, q: String },
    /// Principal generator of a finitely generated ideal of R(w), with
    /// certificate.
    Pgen {
        #[arg(long, num_args = 1.., required = true)]
        gens: Vec<String>,
    },
    /// Coefficient cofactors a_i/p, each a member of R(w).
    Cofactors { expr: String },
    /// Generators of the contraction J ∩ R(ν) of an R(w)-ideal.
    Contract {
        #[arg(long, num_args = 1.., required = true)]
        gens: Vec<String>,
    },
    /// Factor a polynomial over Q into monic irreducibles.
    Factor { expr: String },
    /// Fractional-ideal arithmetic in a quadratic ring of integers.
    Ideal {
        #[command(subcommand)]
        op: IdealOp,
    },
    /// Divide out irreducible representatives to reconstruct a unit.
    Reconstruct {
        #[arg(long, default_value = "divisor")]
        valuation: String,
        expr: String,
    },
    /// Run the seeded property suites.
    Check {
        /// Run only the named suites (repeatable). Defaults to all.
        #[arg(long)]
        suite: Vec<String>,
        /// List available suite names and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand, Debug)]
enum IdealOp {
    /// Product of two ideals.
    Mul { i: String, j: String },
    /// Inverse in the group of fractional ideals.
    Inverse { i: String },
    /// Sum (the meet under reverse inclusion).
    Add { i: String, j: String },
    /// Exact membership of an element in an ideal.
    Membership { elem: String, ideal: String },
    /// Bounded exhaustive search for a generator.
    PrincipalSearch { ideal: String },
}

/// What a command produced: a JSON payload and a human rendering of the
/// same content.
pub struct CommandOutcome {
    pub json: Value,
    pub human: String,
}

/// A failed command: exit code 1 (domain) or 2 (usage/parse), with a
/// machine-readable error code.
#[derive(Debug)]
pub struct CommandFailure {
    pub exit_code: i32,
    pub code: String,
    pub message: String,
}

impl CommandFailure {
    fn domain(code: &str, message: impl Into<String>) -> Self {
        CommandFailure { exit_code: 1, code: code.into(), message: message.into() }
    }

    fn usage(message: impl Into<String>) -> Self {
        CommandFailure { exit_code: 2, code: "parse-error".into(), message: message.into() }
    }
}

impl From<Error> for CommandFailure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::FactorBoundExceeded { .. } => "factor-bound-exceeded",
            Error::DegreeBoundExceeded { .. } => "degree-bound-exceeded",
            Error::MissingRepresentative { .. } => "missing-representative",
            Error::InvalidLabel(_) => "invalid-label",
            Error::ZeroIdeal => "zero-ideal",
            Error::InvalidContext(_) => "invalid-context",
            Error::InvalidCertificate { .. } => "invalid-certificate",
            Error::DivisionByZero => "division-by-zero",
            Error::InvalidArgument(_) => "invalid-argument",
        };
        CommandFailure::domain(code, e.to_string())
    }
}

impl From<expr::ParseError> for CommandFailure {
    fn from(e: expr::ParseError) -> Self {
        CommandFailure::usage(e.to_string())
    }
}

fn value_json(v: &ExtendedValue) -> Value {
    serde_json::to_value(v).expect("extended values serialize")
}

fn ideal_json(i: &QuadIdeal) -> Value {
    let [(a, _), (b, c)] = i.basis_rows();
    json!({
        "d": i.context().d(),
        "denominator": i.denominator().to_string(),
        "basis": [[a.to_string(), "0"], [b.to_string(), c.to_string()]],
        "norm": i.norm().to_string(),
    })
}

fn run(cli: &Cli) -> Result<CommandOutcome, CommandFailure> {
    let opts = &cli.opts;
    let ring = Ring::parse(&opts.ring)?;
    let factor_bound = opts.factor_bound();
    match &cli.command {
        Command::Valuate { valuation, expr: text } => {
            let value = match (valuation.as_str(), &ring) {
                ("divisor", Ring::Rational) => {
                    rational_valuation(&parse_rational(text)?, factor_bound)?
                }
                ("divisor", Ring::Quad(ctx)) => {
                    quad_divisor_valuation(*ctx, &parse_quad_element(text, *ctx)?, factor_bound)?
                }
                ("w", Ring::Rational) => {
                    let f = parse_ratfunc(text, &ring)?.into_rational();
                    w_value(&f, &RationalDivisorValuation { factor_bound })?
                }
                ("w", Ring::Quad(ctx)) => {
                    let f = parse_ratfunc(text, &ring)?.into_quad();
                    let mut v = QuadDivisorValuation::new(*ctx);
                    v.factor_bound = factor_bound;
                    w_value(&f, &v)?
                }
                ("t", Ring::Rational) => {
                    let f = parse_ratfunc(text, &ring)?.into_rational();
                    t_value(&f, opts.degree_bound, factor_bound)?
                }
                ("u", Ring::Rational) => {
                    let f = parse_ratfunc(text, &ring)?.into_rational();
                    u_value(&f, opts.degree_bound, factor_bound)?
                }
                ("t" | "u", Ring::Quad(_)) => {
                    return Err(CommandFailure::domain(
                        "invalid-argument",
                        "t and u are defined over --ring q only",
                    ))
                }
                (other, _) => {
                    return Err(CommandFailure::usage(format!(
                        "unknown valuation `{other}` (expected divisor, w, t, or u)"
                    )))
                }
            };
            Ok(CommandOutcome { json: value_json(&value), human: value.to_string() })
        }

        Command::Content { expr: text } => {
            let value = match &ring {
                Ring::Rational => {
                    let p = parse_ratfunc(text, &ring)?.into_rational_poly()?;
                    content_value(&p, &RationalDivisorValuation { factor_bound })?
                }
                Ring::Quad(ctx) => {
                    let p = parse_ratfunc(text, &ring)?.into_quad_poly()?;
                    let mut v = QuadDivisorValuation::new(*ctx);
                    v.factor_bound = factor_bound;
                    content_value(&p, &v)?
                }
            };
            Ok(CommandOutcome { json: value_json(&value), human: value.to_string() })
        }

        Command::Bezout { p, q } => {
            macro_rules! bezout_over {
                ($p:expr, $q:expr, $v:expr) => {{
                    let p = $p;
                    let q = $q;
                    let (c, d) = crate::function_field::bezout_coefficients(&p, &q)?;
                    let combo = &(&c * &p) + &q;
                    let meet = content_value(&p, &$v)?.meet(&content_value(&q, &$v)?);
                    let verified = content_value(&combo, &$v)? == meet;
                    Ok(CommandOutcome {
                        json: json!({
                            "c": c.to_string(),
                            "d": d.to_string(),
                            "combination": combo.to_string(),
                            "meet": value_json(&meet),
                            "verified": verified,
                        }),
                        human: format!(
                            "c = {c}, d = {d}; w({combo}) = {meet} (verified: {verified})"
                        ),
                    })
                }};
            }
            match &ring {
                Ring::Rational => {
                    let v = RationalDivisorValuation { factor_bound };
                    bezout_over!(
                        parse_ratfunc(p, &ring)?.into_rational_poly()?,
                        parse_ratfunc(q, &ring)?.into_rational_poly()?,
                        v
                    )
                }
                Ring::Quad(ctx) => {
                    let mut v = QuadDivisorValuation::new(*ctx);
                    v.factor_bound = factor_bound;
                    bezout_over!(
                        parse_ratfunc(p, &ring)?.into_quad_poly()?,
                        parse_ratfunc(q, &ring)?.into_quad_poly()?,
                        v
                    )
                }
            }
        }

        Command::Pgen { gens } => {
            macro_rules! pgen_over {
                ($gens:expr, $v:expr) => {{
                    let ideal = KroneckerRingIdeal::new(&$v, $gens)?;
                    let out = rw_principal_generator(&$v, &ideal)?;
                    let json = json!({
                        "generator": out.generator.to_string(),
                        "value": value_json(&out.value),
                        "cofactors": out.cofactors.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "combination": out.combination.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "steps": out.steps.iter().map(|s| json!({
                            "h": s.h,
                            "p_from_accumulator": s.p_from_accumulator,
                        })).collect::<Vec<_>>(),
                    });
                    let human = format!(
                        "generator {} with w = {}; cofactors [{}]; combination [{}]",
                        out.generator,
                        out.value,
                        out.cofactors.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
                        out.combination.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
                    );
                    Ok(CommandOutcome { json, human })
                }};
            }
            match &ring {
                Ring::Rational => {
                    let v = RationalDivisorValuation { factor_bound };
                    let gens: Result<Vec<_>, CommandFailure> = gens
                        .iter()
                        .map(|g| Ok(parse_ratfunc(g, &ring)?.into_rational()))
                        .collect();
                    pgen_over!(gens?, v)
                }
                Ring::Quad(ctx) => {
                    let mut v = QuadDivisorValuation::new(*ctx);
                    v.factor_bound = factor_bound;
                    let gens: Result<Vec<_>, CommandFailure> = gens
                        .iter()
                        .map(|g| Ok(parse_ratfunc(g, &ring)?.into_quad()))
                        .collect();
                    pgen_over!(gens?, v)
                }
            }
        }

        Command::Cofactors { expr: text } => {
            macro_rules! cofactors_over {
                ($p:expr, $v:expr) => {{
                    let p = $p;
                    let cofs = coefficient_cofactors(&p, &$v)?;
                    let mut rows = Vec::new();
                    for c in &cofs {
                        rows.push(json!({
                            "cofactor": c.to_string(),
                            "member": kronecker_ring_member(c, &$v)?,
                        }));
                    }
                    let human = cofs
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(", ");
                    Ok(CommandOutcome {
                        json: json!({"polynomial": p.to_string(), "cofactors": rows}),
                        human: format!("cofactors of {p}: [{human}]"),
                    })
                }};
            }
            match &ring {
                Ring::Rational => {
                    let v = RationalDivisorValuation { factor_bound };
                    cofactors_over!(parse_ratfunc(text, &ring)?.into_rational_poly()?, v)
                }
                Ring::Quad(ctx) => {
                    let mut v = QuadDivisorValuation::new(*ctx);
                    v.factor_bound = factor_bound;
                    cofactors_over!(parse_ratfunc(text, &ring)?.into_quad_poly()?, v)
                }
            }
        }

        Command::Contract { gens } => match &ring {
            Ring::Rational => {
                let v = RationalDivisorValuation { factor_bound };
                let parsed: Result<Vec<_>, CommandFailure> = gens
                    .iter()
                    .map(|g| Ok(parse_ratfunc(g, &ring)?.into_rational()))
                    .collect();
                let ideal = KroneckerRingIdeal::new(&v, parsed?)?;
                let out = contract_ideal(&v, &RationalIdealToolkit, &ideal)?;
                let rendered: Vec<String> = out.iter().map(|g| g.to_string()).collect();
                Ok(CommandOutcome {
                    json: json!({ "generators": rendered }),
                    human: format!("contracted generators: [{}]", rendered.join(", ")),
                })
            }
            Ring::Quad(ctx) => {
                let mut v = QuadDivisorValuation::new(*ctx);
                v.factor_bound = factor_bound;
                let parsed: Result<Vec<_>, CommandFailure> = gens
                    .iter()
                    .map(|g| Ok(parse_ratfunc(g, &ring)?.into_quad()))
                    .collect();
                let ideal = KroneckerRingIdeal::new(&v, parsed?)?;
                let out = contract_ideal(&v, &QuadIdealToolkit::new(*ctx), &ideal)?;
                let rendered: Vec<String> = out.iter().map(|g| g.to_string()).collect();
                Ok(CommandOutcome {
                    json: json!({ "generators": rendered }),
                    human: format!("contracted generators: [{}]", rendered.join(", ")),
                })
            }
        },

        Command::Factor { expr: text } => {
            if !matches!(ring, Ring::Rational) {
                return Err(CommandFailure::domain(
                    "invalid-argument",
                    "factorization is implemented over --ring q only",
                ));
            }
            let p = parse_ratfunc(text, &ring)?.into_rational_poly()?;
            let factored = kronecker_factor(&p, opts.degree_bound, factor_bound)?;
            Ok(CommandOutcome {
                json: serde_json::to_value(&factored).expect("factorization serializes"),
                human: factored.to_string(),
            })
        }

        Command::Ideal { op } => {
            let Ring::Quad(ctx) = ring else {
                return Err(CommandFailure::domain(
                    "invalid-argument",
                    "ideal arithmetic needs --ring quad:D",
                ));
            };
            match op {
                IdealOp::Mul { i, j } => {
                    let a = parse_quad_ideal(i, ctx)?;
                    let b = parse_quad_ideal(j, ctx)?;
                    let out = a.mul(&b);
                    Ok(CommandOutcome { json: ideal_json(&out), human: out.to_string() })
                }
                IdealOp::Inverse { i } => {
                    let a = parse_quad_ideal(i, ctx)?;
                    let out = a.inverse();
                    Ok(CommandOutcome { json: ideal_json(&out), human: out.to_string() })
                }
                IdealOp::Add { i, j } => {
                    let a = parse_quad_ideal(i, ctx)?;
                    let b = parse_quad_ideal(j, ctx)?;
                    let out = a.add(&b);
                    Ok(CommandOutcome { json: ideal_json(&out), human: out.to_string() })
                }
                IdealOp::Membership { elem, ideal } => {
                    let x = parse_quad_element(elem, ctx)?;
                    let i = parse_quad_ideal(ideal, ctx)?;
                    let member = i.contains(&x);
                    Ok(CommandOutcome {
                        json: json!({ "member": member }),
                        human: format!("{x} ∈ {i}: {member}"),
                    })
                }
                IdealOp::PrincipalSearch { ideal } => {
                    let i = parse_quad_ideal(ideal, ctx)?;
                    let found = is_principal_search(&i, opts.bound)?;
                    let json = match &found {
                        Some(g) => json!({ "principal": true, "generator": g.to_string() }),
                        None => json!({ "principal": false }),
                    };
                    let human = match &found {
                        Some(g) => format!("principal with generator {g}"),
                        None => format!("no generator found within bound {}", opts.bound),
                    };
                    Ok(CommandOutcome { json, human })
                }
            }
        }

        Command::Reconstruct { valuation, expr: text } => {
            let unit = match (valuation.as_str(), &ring) {
                ("divisor", Ring::Rational) => {
                    let v = RationalDivisorValuation { factor_bound };
                    reconstruct_unit(&v, &parse_rational(text)?)?.to_string()
                }
                ("u", Ring::Rational) => {
                    let v = UValuation {
                        degree_bound: opts.degree_bound,
                        factor_bound,
                    };
                    let f = parse_ratfunc(text, &ring)?.into_rational();
                    reconstruct_unit(&v, &f)?.to_string()
                }
                _ => {
                    return Err(CommandFailure::domain(
                        "missing-representative",
                        "reconstruction needs a valuation with representatives \
                         (divisor or u over --ring q)",
                    ))
                }
            };
            Ok(CommandOutcome {
                json: json!({ "unit": unit }),
                human: format!("unit: {unit}"),
            })
        }

        Command::Check { suite, list } => {
            if *list {
                let names: Vec<&str> = SUITE_NAMES.to_vec();
                return Ok(CommandOutcome {
                    json: json!({ "suites": names }),
                    human: names.join("\n"),
                });
            }
            let cfg = SuiteConfig {
                seed: opts.seed,
                samples: opts.samples,
                factor_bound,
                degree_bound: opts.degree_bound,
            };
            let results = if suite.is_empty() {
                run_all(&cfg)?
            } else {
                let mut out = Vec::new();
                for name in suite {
                    out.push(run_suite(name, &cfg)?);
                }
                out.sort_by(|a, b| a.name.cmp(&b.name));
                out
            };
            let all_passed = results.iter().all(|r| r.passed());
            let human = results
                .iter()
                .map(|r| {
                    format!(
                        "{} {} ({} samples{})",
                        if r.passed() { "PASS" } else { "FAIL" },
                        r.name,
                        r.samples,
                        if r.failures.is_empty() {
                            String::new()
                        } else {
                            format!(", {} failures", r.failures.len())
                        }
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            let outcome = CommandOutcome {
                json: json!({
                    "seed": opts.seed,
                    "suites": serde_json::to_value(&results).expect("results serialize"),
                    "passed": all_passed,
                }),
                human,
            };
            if all_passed {
                Ok(outcome)
            } else {
                // Render the report, then fail the invocation.
                emit(&outcome, opts.human);
                Err(CommandFailure::domain("suite-failure", "one or more suites failed"))
            }
        }
    }
}

fn emit(outcome: &CommandOutcome, human: bool) {
    if human {
        println!("{}", outcome.human);
    } else {
        println!("{}", outcome.json);
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders help/version on stdout with exit 0 and usage
            // errors on stderr with exit 2.
            let _ = e.print();
            return if e.exit_code() == 0 { 0 } else { 2 };
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            emit(&outcome, cli.opts.human);
            0
        }
        Err(failure) => {
            if cli.opts.human {
                eprintln!("error[{}]: {}", failure.code, failure.message);
            } else {
                println!(
                    "{}",
                    json!({ "error": failure.code, "message": failure.message })
                );
            }
            failure.exit_code
        }
    }
}

pub fn main() -> i32 {
    main_with_args(std::env::args_os())
}
