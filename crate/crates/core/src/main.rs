use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use brauer::affine::AffineElement;
use brauer::coeffs::{format_rational, parse_rational, NPoly, Rational};
use brauer::diagrams::{verify_presentation, AlgebraElement, BrauerDiagram};
use brauer::error::Error;
use brauer::repform::{build_representation, half, q_series, z_series, PathBasis, RepMatrix};
use brauer::shapes::{path_counts, YoungDiagram};
use brauer::suites::{affine_checks, run_all, run_criterion, CRITERIA};
use brauer::tensor::{oracle_check, oracle_suite, ORACLE_CHECKS};

#[derive(Parser)]
#[command(name = "brauer", version, about = "Exact computations in the Brauer algebra B(n,N) and the affine Brauer algebra")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// RNG seed; BRAUER_SEED takes precedence.
    #[arg(long, default_value_t = 20_240_601, global = true)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Cmd {
    /// Product of diagrams given as generator words ("s1 sbar2") or edge lists ("1-2 1b-2b 3-3b").
    Mult {
        #[arg(long)]
        n: usize,
        /// Factors, multiplied left to right.
        #[arg(required = true)]
        factors: Vec<String>,
        /// Evaluate coefficients at this N.
        #[arg(long = "N")]
        big_n: Option<String>,
    },
    /// Check the defining relations of B(n,N) symbolically in N.
    Relations {
        #[arg(long)]
        n: usize,
    },
    /// List O(n,N) with the number of paths to each diagram.
    Shapes {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: u64,
    },
    /// List the up-down paths to a diagram.
    Paths(RepArgs),
    /// Matrices of the generators in the orthogonal form.
    Rep(RepArgs),
    /// Coefficients of the series Z(μ,u) and Q(μ,u).
    Central {
        /// Partition, e.g. "2,1"; "" or "0" for the empty one.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long = "N")]
        big_n: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Tensor-space oracle checks at integer N.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
        /// all, or a check name such as homomorphism, casimir, spectrum.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// The affine Brauer algebra.
    Affine {
        #[command(subcommand)]
        cmd: AffineCmd,
    },
    /// Run every acceptance criterion.
    VerifyAll {
        /// Comma-separated criterion numbers; default all.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Args)]
struct RepArgs {
    /// Partition, e.g. "2,1"; "" or "0" for the empty one.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long)]
    n: usize,
    /// Integer or rational "p/q".
    #[arg(long = "N")]
    big_n: String,
}

#[derive(Subcommand)]
enum AffineCmd {
    /// Normal form of a word.
    Nf {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        word: String,
        /// Evaluate coefficients at this N.
        #[arg(long = "N")]
        big_n: Option<String>,
    },
    /// Property suites: assoc, pi, faithful, hecke, w or all.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

enum Fail {
    Usage(String),
    Checks,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

type Run = Result<(), Fail>;

fn emit(format: Format, v: &Value, table: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).expect("json")),
        Format::Table => print!("{}", table()),
    }
}

fn verdict(ok: bool) -> Run {
    if ok {
        Ok(())
    } else {
        Err(Fail::Checks)
    }
}

fn npoly_json(c: &NPoly, at: Option<&Rational>) -> Value {
    match at {
        Some(q) => json!(format_rational(&c.eval(q))),
        None => json!(c.to_string()),
    }
}

fn mult(format: Format, n: usize, factors: &[String], big_n: Option<&str>) -> Run {
    let at = big_n.map(parse_rational).transpose()?;
    let mut acc = AlgebraElement::identity(n);
    for f in factors {
        acc = acc.multiply(&BrauerDiagram::parse_spec(n, f)?)?;
    }
    let terms: Vec<(&BrauerDiagram, Value)> =
        acc.terms().map(|(d, c)| (d, npoly_json(c, at.as_ref()))).filter(|(_, c)| c != &json!("0")).collect();
    let v: Vec<Value> = terms.iter().map(|(d, c)| json!({"coeff": c, "diagram": d})).collect();
    emit(format, &Value::Array(v), || {
        terms.iter().map(|(d, c)| format!("{:>16}  {d}\n", c.as_str().unwrap_or(""))).collect()
    });
    Ok(())
}

fn relations(format: Format, n: usize) -> Run {
    if n < 2 {
        return Err(Fail::Usage("relations need n ≥ 2".into()));
    }
    let r = verify_presentation(n);
    let ok = r.iter().all(|c| c.passed);
    emit(format, &json!({"n": n, "passed": ok, "instances": r}), || {
        r.iter().map(|c| format!("{:<6} {:<28} {}\n", if c.passed { "ok" } else { "FAIL" }, c.relation, c.instance)).collect()
    });
    verdict(ok)
}

fn shapes(format: Format, n: usize, big_n: u64) -> Run {
    let counts = path_counts(n, big_n);
    let total: u64 = counts.iter().map(|(_, c)| c * c).sum();
    let rows: Vec<Value> = counts.iter().map(|(l, c)| json!({"lambda": l, "paths": c})).collect();
    emit(format, &json!({"n": n, "N": big_n, "diagrams": rows, "sum_of_squares": total}), || {
        let mut s: String = counts.iter().map(|(l, c)| format!("{:<16} {c}\n", l.to_string())).collect();
        s.push_str(&format!("sum of squares {total}\n"));
        s
    });
    Ok(())
}

fn parse_rep_args(a: &RepArgs) -> Result<(YoungDiagram, Rational), Fail> {
    Ok((YoungDiagram::parse(&a.lambda)?, parse_rational(&a.big_n)?))
}

fn paths(format: Format, a: &RepArgs) -> Run {
    let (lambda, big_n) = parse_rep_args(a)?;
    let basis = PathBasis::new(&lambda, a.n, &big_n)?;
    emit(format, &json!({"lambda": lambda, "n": a.n, "N": format_rational(&big_n), "paths": basis.paths}), || {
        basis.paths.iter().map(|p| format!("{p}\n")).collect()
    });
    Ok(())
}

fn rep(format: Format, a: &RepArgs) -> Run {
    let (lambda, big_n) = parse_rep_args(a)?;
    if a.n == 0 {
        return Err(Fail::Usage("n must be positive".into()));
    }
    let r = match build_representation(&lambda, a.n, &big_n) {
        Ok(r) => r,
        Err(Error::RelationFailed(m)) => {
            eprintln!("relation failed: {m}");
            return Err(Fail::Checks);
        }
        Err(e) => return Err(e.into()),
    };
    let mut matrices = serde_json::Map::new();
    let gens: Vec<(String, &RepMatrix)> = r
        .s
        .iter()
        .enumerate()
        .map(|(k, m)| (format!("s{}", k + 1), m))
        .chain(r.sbar.iter().enumerate().map(|(k, m)| (format!("sbar{}", k + 1), m)))
        .collect();
    for (name, m) in &gens {
        matrices.insert(name.clone(), serde_json::to_value(*m).expect("json"));
    }
    let x: Vec<Vec<String>> = r.x.iter().map(|row| row.iter().map(format_rational).collect()).collect();
    matrices.insert("x".into(), json!(x));
    let v = json!({"lambda": lambda, "n": a.n, "N": format_rational(&big_n), "basis": r.basis.paths, "matrices": matrices});
    emit(format, &v, || {
        let mut s = String::new();
        for (i, p) in r.basis.paths.iter().enumerate() {
            let xs: Vec<String> = r.x.iter().map(|row| format_rational(&row[i])).collect();
            s.push_str(&format!("v{i}: {p}   x = ({})\n", xs.join(", ")));
        }
        for (name, m) in &gens {
            s.push_str(&format!("{name}:\n{m}"));
        }
        s
    });
    Ok(())
}

fn central(format: Format, mu: &str, big_n: &str, order: usize) -> Run {
    let mu = YoungDiagram::parse(mu)?;
    let big_n = parse_rational(big_n)?;
    let h = half(&big_n);
    let z = z_series(&mu, &h, order);
    let q = q_series(&mu, &h, order);
    let fmt = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>();
    let (zc, qc) = (fmt(z.coeffs()), fmt(q.coeffs()));
    emit(format, &json!({"mu": mu, "N": format_rational(&big_n), "order": order, "Z": zc, "Q": qc}), || {
        (0..=order).map(|i| format!("u^-{i:<3} Z {:>14}   Q {:>14}\n", zc[i], qc[i])).collect()
    });
    Ok(())
}

fn oracle(format: Format, n: usize, big_n: usize, suite: &str, seed: u64) -> Run {
    if n == 0 || big_n == 0 {
        return Err(Fail::Usage("n and N must be positive".into()));
    }
    if big_n.checked_pow(2 * n as u32).map_or(true, |x| x > 1 << 24) {
        return Err(Fail::Usage(format!("N^n = {big_n}^{n} is too large for the dense oracle")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let checks = if suite == "all" {
        oracle_suite(n, big_n, &mut rng)
    } else {
        oracle_check(suite, n, big_n, &mut rng).ok_or_else(|| {
            Fail::Usage(format!("unknown oracle suite {suite:?}; expected all or one of {}", ORACLE_CHECKS.join(", ")))
        })?
    };
    if checks.is_empty() {
        return Err(Fail::Usage(format!("{suite} does not apply at n={n}, N={big_n}")));
    }
    let ok = checks.iter().all(|c| c.passed);
    emit(format, &json!({"n": n, "N": big_n, "seed": seed, "passed": ok, "checks": checks}), || {
        checks
            .iter()
            .map(|c| format!("{:<6} {:<24} {:>8.3}s  {}\n", if c.passed { "ok" } else { "FAIL" }, c.name, c.seconds, c.detail))
            .collect()
    });
    verdict(ok)
}

fn affine(format: Format, cmd: &AffineCmd, seed: u64) -> Run {
    match cmd {
        AffineCmd::Nf { n, word, big_n } => {
            if *n == 0 {
                return Err(Fail::Usage("n must be positive".into()));
            }
            let at = big_n.as_deref().map(parse_rational).transpose()?;
            let x = AffineElement::parse(*n, word)?;
            let terms: Vec<Value> = x
                .terms()
                .map(|(m, c)| json!({"coeff": npoly_json(c, at.as_ref()), "monomial": m}))
                .filter(|t| t["coeff"] != json!("0"))
                .collect();
            emit(format, &json!({"n": n, "word": word, "normal_form": terms}), || {
                x.terms().map(|(m, c)| format!("{:>16}  {}\n", npoly_json(c, at.as_ref()).as_str().unwrap_or(""), m.to_string().trim_end())).collect()
            });
            Ok(())
        }
        AffineCmd::Check { suite } => {
            let checks = affine_checks(suite, seed).ok_or_else(|| Fail::Usage(format!("unknown affine suite {suite:?}")))?;
            let ok = checks.iter().all(|c| c.passed);
            emit(format, &json!({"suite": suite, "seed": seed, "passed": ok, "checks": checks}), || {
                checks.iter().map(|c| format!("{:<6} {:<26} {}\n", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail)).collect()
            });
            verdict(ok)
        }
    }
}

fn verify_all(format: Format, only: &[u8], seed: u64) -> Run {
    if let Some(bad) = only.iter().find(|i| !CRITERIA.iter().any(|c| c.0 == **i)) {
        return Err(Fail::Usage(format!("no criterion {bad}")));
    }
    let reports = if only.is_empty() { run_all(seed) } else { only.iter().map(|&i| run_criterion(i, seed)).collect() };
    let ok = reports.iter().all(|r| r.passed);
    emit(format, &json!({"seed": seed, "passed": ok, "criteria": reports}), || {
        reports.iter().map(|r| format!("{}\n", r.line())).collect()
    });
    verdict(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = match std::env::var("BRAUER_SEED") {
        Ok(s) => match s.trim().parse() {
            Ok(v) => v,
            Err(_) => {
                eprintln!("error: BRAUER_SEED must be an unsigned integer, got {s:?}");
                return ExitCode::from(2);
            }
        },
        Err(_) => cli.seed,
    };
    let f = cli.format;
    let res = match &cli.cmd {
        Cmd::Mult { n, factors, big_n } => mult(f, *n, factors, big_n.as_deref()),
        Cmd::Relations { n } => relations(f, *n),
        Cmd::Shapes { n, big_n } => shapes(f, *n, *big_n),
        Cmd::Paths(a) => paths(f, a),
        Cmd::Rep(a) => rep(f, a),
        Cmd::Central { mu, big_n, order } => central(f, mu, big_n, *order),
        Cmd::Oracle { n, big_n, suite } => oracle(f, *n, *big_n, suite, seed),
        Cmd::Affine { cmd } => affine(f, cmd, seed),
        Cmd::VerifyAll { only } => verify_all(f, only, seed),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Checks) => ExitCode::from(1),
        Err(Fail::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
