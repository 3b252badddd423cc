//! `chordcc`: compute the chord cubic of y² = x³ + ax² + bx and run the
//! verification suite from the command line.
//!
//! JSON goes to stdout, diagnostics to stderr. Exit status is 0 when every
//! report passed or was skipped, 1 when any check failed and 2 on rejected input.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use chord_core::sample::random_curves;
use chord_core::verify::{self, Report, Status};
use chord_core::{
    chord_cubic, chord_map, cubic_invariants, CubicInvariants, CurveParams, CurvePoint, FieldElement, Fp, PrimeField, Rational,
    TernaryForm,
};

#[derive(Parser, Debug)]
#[command(name = "chordcc", version, about = "Chord construction on y² = x³ + ax² + bx")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Symbolic incidence and image-cubic identities.
    Identity(Opts),
    /// Image cubic and its invariants (over Q, or F_p with --prime).
    Cubic(Opts),
    /// Chord of one point; O when --x/--y are omitted.
    Map(Opts),
    /// Every check at one prime, or over --random N seeded curves.
    Suite(Opts),
    /// Translation chords by a point of order --order.
    Degree(Opts),
    /// Isogeny identity and point counts; --prime may repeat.
    Quotient(Opts),
    /// Flexes of the image cubic and of the Weierstrass model.
    Flexes(Opts),
}

#[derive(Args, Debug)]
struct Opts {
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long)]
    prime: Vec<u64>,
    #[arg(long)]
    order: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    #[arg(long, default_value_t = 8)]
    dmax: u32,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Input the tool refuses to act on.
struct Rejected(String);

impl<E: std::fmt::Display> From<E> for Rejected {
    fn from(e: E) -> Self {
        Rejected(e.to_string())
    }
}

enum Output {
    Reports(Vec<Report>),
    Batch(Vec<(CurveParams<Rational>, Vec<Report>)>),
    Object(Value),
}

impl Output {
    fn ok(&self) -> bool {
        match self {
            Output::Reports(r) => verify::all_ok(r),
            Output::Batch(b) => b.iter().all(|(_, r)| verify::all_ok(r)),
            Output::Object(_) => true,
        }
    }

    fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Entry<'a> {
            curve: &'a CurveParams<Rational>,
            reports: &'a [Report],
        }
        let text = match self {
            Output::Reports(r) => serde_json::to_string(r),
            Output::Batch(b) => {
                let entries: Vec<_> = b.iter().map(|(curve, reports)| Entry { curve, reports }).collect();
                serde_json::to_string(&entries)
            }
            Output::Object(v) => serde_json::to_string(v),
        };
        text.expect("serializable")
    }

    fn to_text(&self) -> String {
        let line = |r: &Report| {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
            };
            let ms = r.stats.elapsed_ms;
            match r.status {
                Status::Fail => format!("{:<20} {status} {ms}ms {}", r.claim, r.witness),
                Status::Skipped => format!("{:<20} {status} ({})", r.claim, r.stats.extra["reason"].as_str().unwrap_or("")),
                Status::Pass => format!("{:<20} {status} {ms}ms", r.claim),
            }
        };
        match self {
            Output::Reports(r) => r.iter().map(line).collect::<Vec<_>>().join("\n"),
            Output::Batch(b) => b
                .iter()
                .map(|(c, r)| {
                    let body: Vec<_> = r.iter().map(|r| format!("  {}", line(r))).collect();
                    format!("a = {}, b = {}\n{}", c.a(), c.b(), body.join("\n"))
                })
                .collect::<Vec<_>>()
                .join("\n"),
            Output::Object(Value::Object(m)) => m
                .iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k}: {s}"),
                    other => format!("{k}: {other}"),
                })
                .collect::<Vec<_>>()
                .join("\n"),
            Output::Object(v) => v.to_string(),
        }
    }
}

fn rational(name: &str, s: &Option<String>) -> Result<Rational, Rejected> {
    let s = s.as_deref().ok_or_else(|| Rejected(format!("--{name} is required")))?;
    s.parse().map_err(|e| Rejected(format!("--{name}: {e}")))
}

fn rational_curve(o: &Opts) -> Result<CurveParams<Rational>, Rejected> {
    Ok(CurveParams::new(rational("a", &o.a)?, rational("b", &o.b)?)?)
}

fn primes(o: &Opts) -> Result<Vec<PrimeField>, Rejected> {
    o.prime.iter().map(|&p| Ok(verify::check_prime(p)?)).collect()
}

fn optional_prime(o: &Opts) -> Result<Option<PrimeField>, Rejected> {
    match primes(o)?.as_slice() {
        [] => Ok(None),
        [f] => Ok(Some(*f)),
        _ => Err(Rejected("give --prime once".into())),
    }
}

fn one_prime(o: &Opts) -> Result<PrimeField, Rejected> {
    optional_prime(o)?.ok_or_else(|| Rejected("--prime is required".into()))
}

/// `g` is expected normalized already.
fn cubic_object(curve: Value, field: Value, g: TernaryForm<Rational>, inv: CubicInvariants<Rational>) -> Value {
    json!({
        "curve": curve,
        "field": field,
        "cubic": g,
        "display": g.to_string(),
        "invariants": inv,
    })
}

/// Representative in [0, p); reads better than "v mod p" inside a polynomial.
fn lift(v: &Fp) -> Rational {
    Rational::from(v.value() as i64)
}

fn map_object<F: FieldElement>(params: &CurveParams<F>, pt: Option<(F, F)>) -> Result<Value, Rejected> {
    let pt: CurvePoint<F> = match pt {
        Some((x, y)) => params.point(x, y)?,
        None => params.identity(),
    };
    Ok(json!({
        "curve": params,
        "point": pt,
        "partner": pt.translate_by_beta(),
        "chord": chord_map(&pt),
    }))
}

fn point_args(o: &Opts) -> Result<Option<(Rational, Rational)>, Rejected> {
    match (&o.x, &o.y) {
        (None, None) => Ok(None),
        (Some(_), Some(_)) => Ok(Some((rational("x", &o.x)?, rational("y", &o.y)?))),
        _ => Err(Rejected("give both --x and --y, or neither".into())),
    }
}

fn reduced(params: &CurveParams<Rational>, field: PrimeField) -> Result<CurveParams<Fp>, Rejected> {
    Ok(params.reduce(field)?)
}

fn run(command: &Command) -> Result<Output, Rejected> {
    Ok(match command {
        Command::Identity(_) => {
            Output::Reports(vec![verify::verify_chord_incidence_symbolic(), verify::verify_identity_symbolic()])
        }
        Command::Cubic(o) => {
            let c = rational_curve(o)?;
            match optional_prime(o)? {
                None => Output::Object(cubic_object(json!(c), json!("Q"), chord_cubic(&c).normalized(), cubic_invariants(&c))),
                Some(f) => {
                    let fp = reduced(&c, f)?;
                    let g = chord_cubic(&fp).normalized().map_coeffs(|v| Ok::<_, ()>(lift(v))).expect("infallible");
                    let inv = cubic_invariants(&fp);
                    let inv = CubicInvariants { e: lift(&inv.e), c1: lift(&inv.c1), c2: lift(&inv.c2), mu_inv: lift(&inv.mu_inv) };
                    let curve = json!({ "a": lift(fp.a()).to_string(), "b": lift(fp.b()).to_string() });
                    Output::Object(cubic_object(curve, json!(f.modulus()), g, inv))
                }
            }
        }
        Command::Map(o) => {
            let c = rational_curve(o)?;
            let pt = point_args(o)?;
            match optional_prime(o)? {
                None => Output::Object(map_object(&c, pt)?),
                Some(f) => {
                    let pt = match pt {
                        Some((x, y)) => Some((f.from_rational(&x)?, f.from_rational(&y)?)),
                        None => None,
                    };
                    Output::Object(map_object(&reduced(&c, f)?, pt)?)
                }
            }
        }
        Command::Suite(o) => {
            let field = one_prime(o)?;
            let p = field.modulus() as u64;
            match o.random {
                None => Output::Reports(verify::run_full_suite(&rational_curve(o)?, p, o.dmax)?),
                Some(n) => {
                    let seed = o.seed.ok_or_else(|| Rejected("--random needs --seed".into()))?;
                    let mut batch = Vec::with_capacity(n);
                    for c in random_curves(seed, field, n) {
                        let lifted = CurveParams::new(Rational::from(c.a().value() as i64), Rational::from(c.b().value() as i64))?;
                        let reports = verify::run_full_suite(&lifted, p, o.dmax)?;
                        batch.push((lifted, reports));
                    }
                    Output::Batch(batch)
                }
            }
        }
        Command::Degree(o) => {
            let order = o.order.ok_or_else(|| Rejected("--order is required".into()))?;
            let fp = reduced(&rational_curve(o)?, one_prime(o)?)?;
            Output::Reports(vec![verify::verify_degree_remark(&fp, order, o.dmax)?])
        }
        Command::Quotient(o) => {
            let c = rational_curve(o)?;
            let mut ps: Vec<u64> = primes(o)?.iter().map(|f| f.modulus() as u64).collect();
            if ps.is_empty() {
                ps = vec![101, 211, 409];
            }
            Output::Reports(vec![verify::verify_quotient(&c, &ps)?])
        }
        Command::Flexes(o) => {
            let fp = reduced(&rational_curve(o)?, one_prime(o)?)?;
            Output::Reports(vec![verify::verify_flex_correspondence(&fp)?, verify::verify_weierstrass_flexes(&fp)?])
        }
    })
}

fn opts(command: &Command) -> &Opts {
    match command {
        Command::Identity(o)
        | Command::Cubic(o)
        | Command::Map(o)
        | Command::Suite(o)
        | Command::Degree(o)
        | Command::Quotient(o)
        | Command::Flexes(o) => o,
    }
}

fn name(command: &Command) -> &'static str {
    match command {
        Command::Identity(_) => "identity",
        Command::Cubic(_) => "cubic",
        Command::Map(_) => "map",
        Command::Suite(_) => "suite",
        Command::Degree(_) => "degree",
        Command::Quotient(_) => "quotient",
        Command::Flexes(_) => "flexes",
    }
}

fn reject(subcommand: Option<&str>, message: &str) -> ExitCode {
    eprintln!("chordcc: {message}");
    println!("{}", json!({ "error": message, "subcommand": subcommand }));
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            let first = e.to_string().lines().next().unwrap_or("bad arguments").trim_start_matches("error: ").to_string();
            return reject(None, &first);
        }
    };
    match run(&cli.command) {
        Ok(out) => {
            match opts(&cli.command).format {
                Format::Json => println!("{}", out.to_json()),
                Format::Text => println!("{}", out.to_text()),
            }
            if out.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Rejected(msg)) => reject(Some(name(&cli.command)), &msg),
    }
}
