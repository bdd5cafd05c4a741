//! Command-line front end.
//!
//! One prime per invocation (`--ell`). Output is exact text unless `--circle`
//! is given; `--json` wraps the result in `{"ok": .., "result": ..}`.
//! Exit codes: 0 success, 2 malformed input, 3 input outside an operation's
//! domain.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::digits::{expand, from_digits, parse_digits};
use crate::element::{parse_element, SolenoidElement};
use crate::error::{Error, Result};
use crate::measure::parse_cylinder;
use crate::metric;
use crate::rational::{parse_rational, PrimeContext, Rational};
use crate::solenoid::{coords, from_coords, TorusPoint};
use crate::structure::{self, HomothetyRatio, RealCoordinate};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

type Q = Rational<BigInt>;
type E = SolenoidElement<BigInt>;
type Ctx = PrimeContext<BigInt>;

#[derive(Parser, Debug)]
#[command(name = "ladic", version, about = "Exact arithmetic on the l-adic solenoid")]
struct Cli {
    /// The prime l.
    #[arg(long)]
    ell: u64,
    /// Print torus coordinates as (cos, sin) pairs.
    #[arg(long, global = true)]
    circle: bool,
    /// Wrap output in a JSON envelope.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ApproxKind {
    Real,
    Padic,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical form of the pair (q, r).
    Canon {
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(allow_hyphen_values = true)]
        r: String,
    },
    Add {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    Neg {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    Abs {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    Dist {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Decomposition [x]_a + {x}_a.
    Sf {
        #[arg(allow_hyphen_values = true)]
        a: i64,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    Tau {
        #[arg(allow_hyphen_values = true)]
        s: String,
    },
    /// Torsion order, or `none`.
    Order {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// The m-torsion subgroup.
    Torsion { m: String },
    /// All y with n y = x.
    Divide {
        n: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Closure of the cyclic group generated by (q, r).
    Classify {
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(allow_hyphen_values = true, required_unless_present = "irrational")]
        r: Option<String>,
        /// Treat the real coordinate as irrational.
        #[arg(long)]
        irrational: bool,
    },
    /// Multiplication by rho in Z[1/l].
    Mul {
        #[arg(allow_hyphen_values = true)]
        rho: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Character chi_rho(x) in [0, 1).
    Char {
        #[arg(allow_hyphen_values = true)]
        rho: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Kernel of chi_rho.
    Kernel {
        #[arg(allow_hyphen_values = true)]
        rho: String,
    },
    Measure { cylinder: String },
    Contains {
        cylinder: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    Digits {
        #[arg(allow_hyphen_values = true)]
        lo: i64,
        #[arg(allow_hyphen_values = true)]
        hi: i64,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    Fromdigits { digits: String },
    /// Circle coordinates x_0, ..., x_N.
    Coords {
        n: usize,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// An element with depth-N coordinate p.
    Fromcoords { p: String, n: u32 },
    /// The l^(2k)-point net of radius l^-k.
    Net { k: u32 },
    Approx {
        kind: ApproxKind,
        n: u32,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
}

/// What an invocation printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Envelope<'a> {
    ok: bool,
    result: &'a str,
}

fn integer(s: &str) -> Result<BigInt> {
    let t = s.trim();
    let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse("integer", s));
    }
    t.trim_start_matches('+')
        .parse()
        .map_err(|_| Error::parse("integer", s))
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().collect::<Vec<_>>().join("\n")
}

fn execute(cli: &Cli, ctx: &Ctx) -> Result<String> {
    let el = |s: &str| parse_element::<BigInt>(s, ctx);
    let ratio = |s: &str| -> Result<HomothetyRatio<BigInt>> {
        HomothetyRatio::new(parse_rational(s)?, ctx)
    };
    Ok(match &cli.command {
        Command::Canon { q, r } => {
            E::from_pair(parse_rational(q)?, parse_rational(r)?, ctx).to_string()
        }
        Command::Add { x, y } => (el(x)? + el(y)?).to_string(),
        Command::Neg { x } => (-el(x)?).to_string(),
        Command::Abs { x } => metric::abs(&el(x)?).to_string(),
        Command::Dist { x, y } => metric::dist(&el(x)?, &el(y)?).to_string(),
        Command::Sf { a, x } => el(x)?.standard_form_at(*a).to_string(),
        Command::Tau { s } => E::tau(parse_rational(s)?, ctx).to_string(),
        Command::Order { x } => match el(x)?.torsion_order() {
            Some(m) => m.to_string(),
            None => "none".to_string(),
        },
        Command::Torsion { m } => lines(
            structure::torsion_subgroup(&integer(m)?, ctx)?
                .iter()
                .map(E::to_string),
        ),
        Command::Divide { n, x } => lines(
            structure::division_points(&el(x)?, &integer(n)?)?
                .iter()
                .map(E::to_string),
        ),
        Command::Classify { q, r, irrational } => {
            let real = if *irrational {
                RealCoordinate::Irrational
            } else {
                let r = r.as_deref().ok_or_else(|| Error::parse("real coordinate", ""))?;
                RealCoordinate::Rational(parse_rational(r)?)
            };
            structure::classify_closure(parse_rational(q)?, real, ctx).to_string()
        }
        Command::Mul { rho, x } => structure::scalar_mul(&ratio(rho)?, &el(x)?).to_string(),
        Command::Char { rho, x } => structure::character_eval(&ratio(rho)?, &el(x)?).to_string(),
        Command::Kernel { rho } => structure::character_kernel(&ratio(rho)?, ctx).to_string(),
        Command::Measure { cylinder } => parse_cylinder(cylinder, ctx)?.haar_measure().to_string(),
        Command::Contains { cylinder, x } => {
            parse_cylinder(cylinder, ctx)?.contains(&el(x)?).to_string()
        }
        Command::Digits { lo, hi, x } => expand(&el(x)?, *lo, *hi)?.to_string(),
        Command::Fromdigits { digits } => {
            from_digits(&parse_digits(digits, ctx.ell_u64())?, ctx)?.to_string()
        }
        Command::Coords { n, x } => {
            let seq = coords(&el(x)?, *n);
            let parts: Vec<String> = seq
                .points()
                .iter()
                .map(|p| {
                    if cli.circle {
                        let (c, s) = p.circle_form::<f64>();
                        format!("({c:.12}, {s:.12})")
                    } else {
                        p.value().to_string()
                    }
                })
                .collect();
            parts.join(", ")
        }
        Command::Fromcoords { p, n } => {
            let point = TorusPoint::new(parse_rational(p)?)?;
            from_coords(&point, *n, ctx).to_string()
        }
        Command::Net { k } => lines(metric::epsilon_net(*k, ctx).iter().map(E::to_string)),
        Command::Approx { kind, n, x } => {
            let x = el(x)?;
            let r: Q = match kind {
                ApproxKind::Real => metric::approximate_real(&x, *n),
                ApproxKind::Padic => metric::approximate_padic(&x, *n),
            };
            r.to_string()
        }
    })
}

fn envelope(ok: bool, result: &str) -> String {
    let mut s = serde_json::to_string(&Envelope { ok, result }).expect("plain struct serializes");
    s.push('\n');
    s
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let result = PrimeContext::new(cli.ell).and_then(|ctx| execute(&cli, &ctx));
    match result {
        Ok(text) => Outcome {
            code: EXIT_OK,
            stdout: if cli.json {
                envelope(true, &text)
            } else {
                format!("{text}\n")
            },
            stderr: String::new(),
        },
        Err(e) => {
            let code = if e.is_parse() { EXIT_PARSE } else { EXIT_DOMAIN };
            let message = e.to_string();
            if cli.json {
                Outcome {
                    code,
                    stdout: envelope(false, &message),
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: format!("error: {message}\n"),
                }
            }
        }
    }
}
