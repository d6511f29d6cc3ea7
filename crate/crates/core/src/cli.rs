//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error (the error name is printed
//! on stderr), 2 on a usage or parse error.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::error::Error;
use crate::pell2::{classify, identify_solution, solve, verify, PellProblem, PellSolution};
use crate::pellm::{divisibility_probe, solve_m, PellMSolution};
use crate::polyring::{parse_poly, IntPoly, PolyJson};
use crate::redei::{redei_recurrence, RedeiSequence};

#[derive(Debug, Parser)]
#[command(
    name = "pellred",
    version,
    about = "Rédei polynomials and polynomial Pell equations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct RedeiArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub z: String,
}

#[derive(Debug, Args)]
pub struct FdArgs {
    #[arg(short = 'f', allow_hyphen_values = true)]
    pub f: String,
    #[arg(short = 'd', allow_hyphen_values = true)]
    pub d: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print N_n and D_n for the given alpha and z.
    Redei {
        #[command(flatten)]
        poly: RedeiArgs,
        #[arg(short = 'n')]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Normalized solution of P^2 - (f^2 + d) Q^2 = 1.
    Solve {
        #[command(flatten)]
        fd: FdArgs,
        #[arg(short = 'n')]
        n: u32,
        /// Fail with NotIntegral unless the solution is in Z[x].
        #[arg(long)]
        require_integral: bool,
        #[arg(long)]
        json: bool,
    },
    /// Normalized solution of the degree-m circulant equation with R = (-f)^m + r.
    SolveM {
        #[arg(short = 'f', allow_hyphen_values = true)]
        f: String,
        #[arg(short = 'r', allow_hyphen_values = true)]
        r: i64,
        #[arg(short = 'm')]
        m: usize,
        #[arg(short = 'n')]
        n: u32,
        #[arg(long)]
        require_integral: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check P^2 - D Q^2 = 1 with D given by --alpha, or by -f and -d as f^2 + d.
    Verify {
        #[arg(long = "p", allow_hyphen_values = true)]
        p: String,
        #[arg(long = "q", allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["f", "d"])]
        alpha: Option<String>,
        #[arg(short = 'f', allow_hyphen_values = true, requires = "d")]
        f: Option<String>,
        #[arg(short = 'd', allow_hyphen_values = true, requires = "f")]
        d: Option<i64>,
    },
    /// Recover the Rédei index of an integral solution by descent.
    Identify {
        #[arg(long = "p", allow_hyphen_values = true)]
        p: String,
        #[arg(long = "q", allow_hyphen_values = true)]
        q: String,
        #[command(flatten)]
        fd: FdArgs,
    },
    /// Integrality class of d: ALL_N, EVEN_N or NONE.
    Classify {
        #[arg(short = 'd', allow_hyphen_values = true)]
        d: i64,
    },
    /// Rows n = 1..=n_max of (N_n, D_n).
    Table {
        #[command(flatten)]
        poly: RedeiArgs,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        json: bool,
    },
    /// Check m^floor(n/m) | A_n for r = +-m, n <= n_max.
    Probe {
        #[arg(short = 'f', allow_hyphen_values = true)]
        f: String,
        #[arg(short = 'm')]
        m: usize,
        #[arg(long)]
        n_max: u32,
    },
}

/// Output of a successful or failed command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn poly_arg(text: &str) -> Result<IntPoly, Outcome> {
    parse_poly(text).map_err(|e| Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("{}: {e}\n", e.name()),
    })
}

fn domain_error(e: Error) -> Outcome {
    let code = if matches!(e, Error::Parse { .. }) {
        2
    } else {
        1
    };
    Outcome {
        code,
        stdout: String::new(),
        stderr: format!("{}: {e}\n", e.name()),
    }
}

fn ok(stdout: String) -> Outcome {
    Outcome {
        code: 0,
        stdout,
        stderr: String::new(),
    }
}

/// Rows `1..=n_max` of `(N_n, D_n)`, one per line: tab-separated text, or
/// JSON lines `{"n": k, "N": {...}, "D": {...}}`.
pub fn emit_table(alpha: &IntPoly, z: &IntPoly, n_max: u32, json: bool) -> String {
    let mut out = String::new();
    for (n, (rational, radical)) in RedeiSequence::new(alpha, z)
        .enumerate()
        .skip(1)
        .take(n_max as usize)
    {
        if json {
            let row = json!({
                "n": n,
                "N": PolyJson::from(&rational),
                "D": PolyJson::from(&radical),
            });
            writeln!(out, "{row}").unwrap();
        } else {
            writeln!(out, "{n}\t{rational}\t{radical}").unwrap();
        }
    }
    out
}

fn solution_text(s: &PellSolution, json: bool) -> String {
    if json {
        let v = json!({
            "n": s.index,
            "P": PolyJson::from(&s.p),
            "Q": PolyJson::from(&s.q),
            "integral": s.integral,
            "normalizer": s.normalizer.to_string(),
        });
        return format!("{v}\n");
    }
    format!(
        "P = {}\nQ = {}\nintegral = {}\nnormalizer = {}\n",
        s.p, s.q, s.integral, s.normalizer
    )
}

fn solution_m_text(s: &PellMSolution, json: bool) -> String {
    if json {
        let sols: Vec<PolyJson> = s.sols.iter().map(PolyJson::from).collect();
        let v = json!({
            "m": s.m,
            "n": s.index,
            "R": PolyJson::from(&s.twist),
            "sols": sols,
            "integral": s.integral,
            "raw_norm": s.raw_norm.to_string(),
            "normalizer": s.normalizer.to_string(),
        });
        return format!("{v}\n");
    }
    let mut out = format!("R = {}\n", s.twist);
    for (i, p) in s.sols.iter().enumerate() {
        writeln!(out, "P{} = {p}", i + 1).unwrap();
    }
    write!(
        out,
        "integral = {}\nraw_norm = {}\nnormalizer = {}\n",
        s.integral, s.raw_norm, s.normalizer
    )
    .unwrap();
    out
}

pub fn execute(cmd: &Command) -> Outcome {
    match run_command(cmd) {
        Ok(out) => out,
        Err(out) => out,
    }
}

fn run_command(cmd: &Command) -> Result<Outcome, Outcome> {
    match cmd {
        Command::Redei { poly, n, json } => {
            let (alpha, z) = (poly_arg(&poly.alpha)?, poly_arg(&poly.z)?);
            let pair = redei_recurrence(&alpha, &z, *n);
            if *json {
                let v = json!({
                    "n": n,
                    "N": PolyJson::from(&pair.rational),
                    "D": PolyJson::from(&pair.radical),
                });
                return Ok(ok(format!("{v}\n")));
            }
            Ok(ok(format!("N = {}\nD = {}\n", pair.rational, pair.radical)))
        }
        Command::Solve {
            fd,
            n,
            require_integral,
            json,
        } => {
            let f = poly_arg(&fd.f)?;
            let problem = PellProblem::new(f, fd.d).map_err(domain_error)?;
            let s = solve(&problem, *n).map_err(domain_error)?;
            if *require_integral {
                s.to_integral().map_err(domain_error)?;
            }
            Ok(ok(solution_text(&s, *json)))
        }
        Command::SolveM {
            f,
            r,
            m,
            n,
            require_integral,
            json,
        } => {
            let f = poly_arg(f)?;
            let s = solve_m(&f, *r, *m, *n).map_err(domain_error)?;
            if *require_integral && !s.integral {
                return Err(domain_error(Error::NotIntegral));
            }
            Ok(ok(solution_m_text(&s, *json)))
        }
        Command::Verify { p, q, alpha, f, d } => {
            let (p, q) = (poly_arg(p)?, poly_arg(q)?);
            let radicand = match (alpha, f, d) {
                (Some(a), _, _) => poly_arg(a)?,
                (None, Some(f), Some(d)) => {
                    let problem = PellProblem::new(poly_arg(f)?, *d).map_err(domain_error)?;
                    problem.radicand().clone()
                }
                _ => {
                    return Err(Outcome {
                        code: 2,
                        stdout: String::new(),
                        stderr: "usage: pass --alpha <D> or both -f and -d\n".into(),
                    })
                }
            };
            if verify(&p.to_rat(), &q.to_rat(), &radicand) {
                Ok(ok("true\n".into()))
            } else {
                Err(Outcome {
                    code: 1,
                    stdout: "false\n".into(),
                    stderr: "NotASolution\n".into(),
                })
            }
        }
        Command::Identify { p, q, fd } => {
            let (p, q, f) = (poly_arg(p)?, poly_arg(q)?, poly_arg(&fd.f)?);
            match identify_solution(&p, &q, &f, fd.d).map_err(domain_error)? {
                Some(n) => Ok(ok(format!("{n}\n"))),
                None => Ok(ok("none\n".into())),
            }
        }
        Command::Classify { d } => {
            let class = classify(*d).map_err(domain_error)?;
            Ok(ok(format!("{}\n", class.tag)))
        }
        Command::Table { poly, n_max, json } => {
            let (alpha, z) = (poly_arg(&poly.alpha)?, poly_arg(&poly.z)?);
            Ok(ok(emit_table(&alpha, &z, *n_max, *json)))
        }
        Command::Probe { f, m, n_max } => {
            let f = poly_arg(f)?;
            let report = divisibility_probe(&f, *m, *n_max).map_err(domain_error)?;
            match &report.first_violation {
                None => Ok(ok(format!(
                    "ok: {} components checked for r = ±{}, n <= {}\n",
                    report.checked, m, n_max
                ))),
                Some(v) => Err(Outcome {
                    code: 1,
                    stdout: format!(
                        "violation: r = {}, n = {}, component {}\n",
                        v.r, v.index, v.component
                    ),
                    stderr: "DivisibilityViolation\n".into(),
                }),
            }
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => execute(&cli.command),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                ok(rendered)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            }
        }
    }
}
