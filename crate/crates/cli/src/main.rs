//! `polybern`: compute Stirling-type numbers, poly-Bernoulli numbers and
//! polynomials, chromatic polynomials, and run the identity verification
//! suites.

mod output;
mod params;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polybern::chromatic::{chromatic_polynomial, pbar, pbar_bruteforce, SimpleGraph};
use polybern::hpbpoly::{hpb_poly_convolution, hpb_poly_negative};
use polybern::mstirling::{m_stirling_explicit, m_stirling_table, weighted_m_stirling};
use polybern::polybern::{m_hpb, m_hpb_matrix, m_hpb_negative, validate_a, HpbRoute};
use polybern::stirling::{
    lah, r_stirling, stirling_first, stirling_second, weighted_stirling, weighted_stirling_poly,
};
use polybern::verify::{self, Suite};
use polybern::Rational;

use output::{Format, Output, Value};
use params::{parse_rational, Cap, Span};

/// Error carrying the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<polybern::Error> for Failure {
    fn from(e: polybern::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "polybern",
    version,
    about = "Exact poly-Bernoulli and Stirling-type number toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// First index for bfile output; defaults to the first index computed.
    #[arg(long, global = true, allow_hyphen_values = true)]
    offset: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Signed Stirling numbers of the first kind s(n,k).
    First {
        #[arg(long)]
        n: Span,
        /// Defaults to 0..n, giving a triangle.
        #[arg(long)]
        k: Option<Span>,
    },
    /// Stirling numbers of the second kind S(n,k).
    Second {
        #[arg(long)]
        n: Span,
        #[arg(long)]
        k: Option<Span>,
    },
    /// Weighted Stirling numbers S_n^i(x); polynomials in x when --x is omitted.
    Weighted {
        #[arg(long)]
        n: Span,
        #[arg(long)]
        i: Option<Span>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        x: Option<Rational>,
    },
    /// r-Stirling numbers.
    R {
        #[arg(long)]
        n: Span,
        #[arg(long)]
        i: Option<Span>,
        #[arg(long)]
        r: usize,
    },
    /// Lah numbers L(m,k).
    Lah {
        #[arg(long)]
        m: Span,
        #[arg(long)]
        k: Option<Span>,
    },
    /// m-Stirling numbers R_n^k(m), or their weighted form with --x.
    Mstirling {
        #[arg(long)]
        m: usize,
        /// Print the triangle for n = 0..rows.
        #[arg(long, conflicts_with = "n")]
        rows: Option<usize>,
        #[arg(long)]
        n: Option<Span>,
        #[arg(long)]
        k: Option<Span>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        x: Option<Rational>,
    },
    /// m-Hurwitz poly-Bernoulli numbers B_{n,m}^(k)(a).
    Polybern {
        #[arg(long)]
        n: Span,
        #[arg(long, default_value = "0")]
        m: Span,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        a: Rational,
        /// Use upper index -k, computed through m-Stirling numbers (k >= 0).
        #[arg(long, conflicts_with = "algorithm")]
        negative: bool,
        #[arg(long, value_enum)]
        algorithm: Option<Algorithm>,
    },
    /// m-Hurwitz poly-Bernoulli polynomials B_{n,m}^(k)(x; a).
    Poly {
        #[arg(long)]
        n: Span,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        a: Rational,
        /// Use upper index -k, computed through m-Stirling numbers (k >= 0).
        #[arg(long)]
        negative: bool,
        /// Evaluate at this point instead of printing the polynomial.
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        x: Option<Rational>,
    },
    /// Chromatic polynomial of a graph given as an edge list file.
    Chromatic {
        graph: PathBuf,
        /// Print (-1)^n P(-x) instead of P(x).
        #[arg(long)]
        pbar: bool,
        /// Evaluate at this integer.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<i64>,
        /// Count (acyclic orientation, compatible map) pairs by enumeration.
        #[arg(long, conflicts_with_all = ["pbar", "eval"])]
        bruteforce: Option<u32>,
    },
    /// Run identity verification suites.
    Verify {
        /// all, tables, formulas, egf, graphs, duality or polynomials.
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Explicit,
    Form2,
    Matrix,
}

impl From<Algorithm> for HpbRoute {
    fn from(a: Algorithm) -> Self {
        match a {
            Algorithm::Explicit => HpbRoute::Explicit,
            Algorithm::Form2 => HpbRoute::Form2,
            Algorithm::Matrix => HpbRoute::Matrix,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("polybern: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cap = Cap::from_env()?;
    let result = match cli.command {
        Command::Verify { suite, seed } => return run_verify(&suite, seed, cli.format, cli.out),
        command => compute(command, cap)?,
    };
    emit(&result.render(cli.format, cli.offset)?, cli.out)
}

fn emit(text: &str, out: Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn u(v: i64) -> usize {
    usize::try_from(v).expect("validated non-negative")
}

/// Lays out `f(row, col)` according to which arguments are ranges. Without
/// an explicit column range, each row gets the columns `0..=last_col(row)`.
fn grid(
    rows: Span,
    cols: Option<Span>,
    labels: (&'static str, &'static str),
    last_col: impl Fn(i64) -> i64,
    f: impl Fn(i64, i64) -> Result<Value, Failure>,
) -> Result<Output, Failure> {
    let (row_label, col_label) = labels;
    let Some(cols) = cols else {
        let rows_out = rows
            .iter()
            .map(|r| (0..=last_col(r)).map(|c| f(r, c)).collect())
            .collect::<Result<_, _>>()?;
        return Ok(Output::Table {
            row_label,
            col_label,
            row_start: rows.lo,
            col_start: 0,
            rows: rows_out,
        });
    };
    Ok(match (rows.is_single(), cols.is_single()) {
        (true, true) => Output::Single(f(rows.lo, cols.lo)?),
        (false, true) => Output::Sequence {
            label: row_label,
            start: rows.lo,
            values: rows
                .iter()
                .map(|r| f(r, cols.lo))
                .collect::<Result<_, _>>()?,
        },
        (true, false) => Output::Sequence {
            label: col_label,
            start: cols.lo,
            values: cols
                .iter()
                .map(|c| f(rows.lo, c))
                .collect::<Result<_, _>>()?,
        },
        (false, false) => Output::Table {
            row_label,
            col_label,
            row_start: rows.lo,
            col_start: cols.lo,
            rows: rows
                .iter()
                .map(|r| cols.iter().map(|c| f(r, c)).collect())
                .collect::<Result<_, _>>()?,
        },
    })
}

fn naturals(cap: &Cap, name: &str, span: Span) -> Result<Span, Failure> {
    let span = span.natural(name)?;
    cap.check_span(name, span)?;
    Ok(span)
}

fn optional_naturals(cap: &Cap, name: &str, span: Option<Span>) -> Result<Option<Span>, Failure> {
    span.map(|s| naturals(cap, name, s)).transpose()
}

fn compute(command: Command, cap: Cap) -> Result<Output, Failure> {
    let ok = |v: Value| -> Result<Value, Failure> { Ok(v) };
    match command {
        Command::First { n, k } => {
            let (n, k) = (naturals(&cap, "n", n)?, optional_naturals(&cap, "k", k)?);
            grid(
                n,
                k,
                ("n", "k"),
                |n| n,
                |n, k| ok(Value::Int(stirling_first(u(n), u(k)))),
            )
        }
        Command::Second { n, k } => {
            let (n, k) = (naturals(&cap, "n", n)?, optional_naturals(&cap, "k", k)?);
            grid(
                n,
                k,
                ("n", "k"),
                |n| n,
                |n, k| ok(Value::Int(stirling_second(u(n), u(k)))),
            )
        }
        Command::Weighted { n, i, x } => {
            let (n, i) = (naturals(&cap, "n", n)?, optional_naturals(&cap, "i", i)?);
            grid(
                n,
                i,
                ("n", "i"),
                |n| n,
                |n, i| {
                    ok(match &x {
                        Some(x) => Value::Rat(weighted_stirling(u(n), u(i), x)),
                        None => Value::Poly(weighted_stirling_poly(u(n), u(i))),
                    })
                },
            )
        }
        Command::R { n, i, r } => {
            let (n, i) = (naturals(&cap, "n", n)?, optional_naturals(&cap, "i", i)?);
            cap.check("r", r as i64)?;
            grid(
                n,
                i,
                ("n", "i"),
                |n| n,
                |n, i| ok(Value::Int(r_stirling(u(n), u(i), r))),
            )
        }
        Command::Lah { m, k } => {
            let (m, k) = (naturals(&cap, "m", m)?, optional_naturals(&cap, "k", k)?);
            grid(
                m,
                k,
                ("m", "k"),
                |m| m,
                |m, k| ok(Value::Int(lah(u(m), u(k)))),
            )
        }
        Command::Mstirling { m, rows, n, k, x } => {
            cap.check("m", m as i64)?;
            let k = optional_naturals(&cap, "k", k)?;
            let n = match (rows, n) {
                (Some(rows), None) => {
                    cap.check("rows", rows as i64)?;
                    if k.is_none() && x.is_none() {
                        let table = m_stirling_table(rows, m);
                        let rows_out = table
                            .rows()
                            .iter()
                            .map(|r| r.iter().cloned().map(Value::Int).collect())
                            .collect();
                        return Ok(Output::Table {
                            row_label: "n",
                            col_label: "k",
                            row_start: 0,
                            col_start: 0,
                            rows: rows_out,
                        });
                    }
                    Span {
                        lo: 0,
                        hi: rows as i64,
                    }
                }
                (None, Some(n)) => naturals(&cap, "n", n)?,
                _ => return Err(Failure::usage("mstirling needs --rows or --n")),
            };
            let m_i = m as i64;
            grid(
                n,
                k,
                ("n", "k"),
                |n| n + m_i,
                |n, k| {
                    Ok(match &x {
                        Some(x) => Value::Rat(weighted_m_stirling(u(n), u(k), x, m)),
                        None => Value::Int(m_stirling_explicit(u(n), u(k), m)?),
                    })
                },
            )
        }
        Command::Polybern {
            n,
            m,
            k,
            a,
            negative,
            algorithm,
        } => {
            validate_a(&a)?;
            let (n, m) = (naturals(&cap, "n", n)?, naturals(&cap, "m", m)?);
            cap.check("k", k)?;
            if negative && k < 0 {
                return Err(Failure::usage(
                    "--negative takes k >= 0 and uses upper index -k",
                ));
            }
            let route = algorithm.map(HpbRoute::from).unwrap_or(HpbRoute::Explicit);
            let matrix = match (negative, route) {
                (false, HpbRoute::Matrix) => Some(m_hpb_matrix(u(n.hi + m.hi), k, &a)?),
                _ => None,
            };
            let cell = |n: i64, m: i64| -> Result<Value, Failure> {
                let value = if negative {
                    m_hpb_negative(u(n), u(m), u(k), &a)?
                } else if let Some(matrix) = &matrix {
                    matrix
                        .get(u(n), u(m))
                        .cloned()
                        .expect("matrix covers the requested cells")
                } else {
                    m_hpb(u(n), u(m), k, &a, route)?
                };
                Ok(Value::Rat(value))
            };
            if n.is_single() && !m.is_single() {
                return Ok(Output::Sequence {
                    label: "m",
                    start: m.lo,
                    values: m.iter().map(|m| cell(n.lo, m)).collect::<Result<_, _>>()?,
                });
            }
            grid(n, Some(m), ("n", "m"), |_| 0, cell)
        }
        Command::Poly {
            n,
            m,
            k,
            a,
            negative,
            x,
        } => {
            validate_a(&a)?;
            let n = naturals(&cap, "n", n)?;
            cap.check("m", m as i64)?;
            cap.check("k", k)?;
            if negative && k < 0 {
                return Err(Failure::usage(
                    "--negative takes k >= 0 and uses upper index -k",
                ));
            }
            let value = |n: i64, _| -> Result<Value, Failure> {
                let p = if negative {
                    hpb_poly_negative(u(n), m, u(k), &a)?
                } else {
                    hpb_poly_convolution(u(n), m, k, &a)?
                };
                Ok(match &x {
                    Some(x) => Value::Rat(p.eval(x)),
                    None => Value::Poly(p.poly),
                })
            };
            grid(n, Some(Span::single(0)), ("n", "x"), |_| 0, value)
        }
        Command::Chromatic {
            graph,
            pbar: reflected,
            eval,
            bruteforce,
        } => {
            let text = std::fs::read_to_string(&graph)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", graph.display())))?;
            let g = SimpleGraph::parse_edge_list(&text)?;
            if let Some(x) = bruteforce {
                return Ok(Output::Single(Value::Int(pbar_bruteforce(&g, x)?.into())));
            }
            let p = if reflected {
                pbar(&g)?
            } else {
                chromatic_polynomial(&g)?
            };
            Ok(Output::Single(match eval {
                Some(x) => Value::Int(p.eval(&x.into())),
                None => Value::IntPoly(p),
            }))
        }
        Command::Verify { .. } => unreachable!("handled by run_verify"),
    }
}

fn run_verify(suite: &str, seed: u64, format: Format, out: Option<PathBuf>) -> Result<(), Failure> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(Failure::usage)?]
    };
    let report = verify::run(&suites, seed);
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Plain => report.suites.iter().map(|s| s.summary() + "\n").collect(),
        other => {
            return Err(Failure::usage(format!(
                "verify supports plain and json output, not {other:?}"
            )))
        }
    };
    emit(&text, out)?;
    match report
        .suites
        .iter()
        .find_map(|s| s.first_failure().map(|(c, f)| (s, c, f)))
    {
        None => Ok(()),
        Some((suite, check, failure)) => Err(Failure {
            code: 1,
            message: format!(
                "{} failed: {} at {}: expected {}, got {}",
                suite.suite, check.identity, failure.point, failure.expected, failure.got
            ),
        }),
    }
}
