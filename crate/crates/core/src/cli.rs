//! Command line front end. Barred letters are negative integers everywhere.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};

use crate::admissibility::{is_admissible_column, is_coadmissible_column, split_letters};
use crate::column_maps::{phi_column, phi_tableau_traced, psi_column, psi_tableau_traced, Variant};
use crate::crystal::crystal_graph_dot;
use crate::error::Error;
use crate::lr::sweep::{identity_sweep, sample, stable_pairs, stable_sweep};
use crate::lr::{self, enumerate_lr, rectify_traced, CornerPolicy};
use crate::partition::Partition;
use crate::tableau::{tableau_from_json, tableau_to_json, Alphabet, Column, LieType, Tableau};

#[derive(Debug, Parser)]
#[command(name = "kncrystal", version, about = "KN tableau crystals, column splitting and LR crystals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    Topmost,
    Bottommost,
}

#[derive(Debug, clap::Args)]
struct Shapes {
    #[arg(long = "type", default_value = "C", value_parser = parse_type)]
    lie_type: LieType,
    /// Rank. Defaults to the smallest rank holding the given shapes.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    mu: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    nu: Option<Partition>,
}

#[derive(Debug, clap::Args)]
struct Sweep {
    /// Ranks to sweep.
    #[arg(long, value_delimiter = ',', default_value = "3,4,5")]
    ranks: Vec<usize>,
    /// Largest |μ| and |ν|.
    #[arg(long, default_value_t = 4)]
    max_size: usize,
    /// Check a random sample of this many pairs per rank.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print every triple, not only the summary.
    #[arg(long)]
    verbose: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List B(ν), or the LR crystal when λ and μ are given.
    Enumerate {
        #[command(flatten)]
        shapes: Shapes,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Print the report document {lhs, rhs, fibers, elements}.
        #[arg(long)]
        report: bool,
    },
    /// Compare the LR crystal size with the triple sum of LR coefficients.
    Branch {
        #[command(flatten)]
        shapes: Shapes,
    },
    /// Splitting data and the φ / ψ images of a column read from stdin.
    Split {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "second")]
        variant: VariantArg,
    },
    /// Φ of a tableau read from stdin as JSON.
    Phi {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Print every stage.
        #[arg(long)]
        trace: bool,
    },
    /// Ψ of a tableau read from stdin as JSON.
    Psi {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        trace: bool,
    },
    /// Rectify a barred skew tableau read from stdin as JSON.
    Rect {
        #[arg(long, value_enum, default_value = "topmost")]
        policy: PolicyArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        trace: bool,
    },
    /// DOT graph of B(λ).
    Graph {
        #[command(flatten)]
        shapes: Shapes,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Compare the B, C and D LR crystals over a range of triples.
    VerifyBd {
        #[command(flatten)]
        sweep: Sweep,
    },
    /// Check the branching identity, the tensor product oracle and Ψ∘Φ over a range of triples.
    VerifyIdentity {
        #[command(flatten)]
        sweep: Sweep,
    },
}

fn parse_type(s: &str) -> Result<LieType, String> {
    LieType::parse(s).map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Verification(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidPartition(_)
            | Error::InvalidAlphabet(_)
            | Error::LetterOutOfRange { .. }
            | Error::InvalidTableau(_)
            | Error::Json(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Run the command line; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdin = || {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s).map_err(|e| Failure::Usage(e.to_string()))
    };
    let (text, code) = match execute(&cli.command, stdin) {
        Ok(s) => (s, 0),
        Err(Failure::Verification(s)) => (s, 1),
        Err(Failure::Usage(s)) => {
            eprintln!("error: {s}");
            return 2;
        }
        Err(Failure::Runtime(s)) => {
            eprintln!("error: {s}");
            return 1;
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return 1;
            }
        }
        None => print!("{text}"),
    }
    code
}

/// Execute a command with input supplied by `stdin`; exposed for tests.
pub fn run_with_input(args: &[&str], input: &str) -> (i32, String) {
    let argv = std::iter::once("kncrystal").chain(args.iter().copied());
    match Cli::try_parse_from(argv) {
        Err(e) => (if e.use_stderr() { 2 } else { 0 }, e.to_string()),
        Ok(cli) => match execute(&cli.command, || Ok(input.to_string())) {
            Ok(s) => (0, s),
            Err(Failure::Verification(s)) => (1, s),
            Err(Failure::Usage(s)) => (2, s),
            Err(Failure::Runtime(s)) => (1, s),
        },
    }
}

fn rank_for(shapes: &Shapes) -> Result<usize, Failure> {
    let len = |p: &Option<Partition>| p.as_ref().map_or(0, Partition::len);
    let auto = (len(&shapes.mu) + len(&shapes.nu)).max(len(&shapes.lambda)).max(1);
    let n = shapes.n.unwrap_or(if shapes.lie_type == LieType::D { auto.max(2) } else { auto });
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    Ok(n)
}

fn required<'a>(p: &'a Option<Partition>, flag: &str) -> Result<&'a Partition, Failure> {
    p.as_ref().ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

fn tableau_lines(ts: &[Tableau], a: &Alphabet, format: Format) -> String {
    let mut s = String::new();
    for (k, t) in ts.iter().enumerate() {
        match format {
            Format::Table => {
                if k > 0 {
                    s.push('\n');
                }
                let _ = writeln!(s, "{t}");
            }
            _ => {
                let _ = writeln!(s, "{}", tableau_to_json(t, a));
            }
        }
    }
    s
}

fn values(c: &[usize]) -> String {
    format!("[{}]", c.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

fn parse_column(s: &str) -> Result<Column, Failure> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    let vals: Vec<i32> = t
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<i32>().map_err(|e| Failure::Usage(format!("bad letter {p:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    Ok(Column::from_values(&vals))
}

fn execute(cmd: &Command, stdin: impl Fn() -> Result<String, Failure>) -> Outcome {
    match cmd {
        Command::Enumerate { shapes, format, report } => {
            let n = rank_for(shapes)?;
            let nu = required(&shapes.nu, "nu")?;
            let a = Alphabet::new(shapes.lie_type, n)?;
            match (&shapes.lambda, &shapes.mu) {
                (Some(lambda), Some(mu)) => {
                    let crystal = enumerate_lr(shapes.lie_type, n, lambda, mu, nu)?;
                    if *report {
                        let doc = lr::report(&crystal)?;
                        return Ok(serde_json::to_string_pretty(&doc).expect("report serializes") + "\n");
                    }
                    Ok(tableau_lines(&crystal.elements, &a, *format))
                }
                (None, None) => Ok(tableau_lines(&lr::crystal_elements(nu, &a)?, &a, *format)),
                _ => Err(Failure::Usage("give both --lambda and --mu, or neither".into())),
            }
        }
        Command::Branch { shapes } => {
            let n = rank_for(shapes)?;
            let (lambda, mu) = (required(&shapes.lambda, "lambda")?, required(&shapes.mu, "mu")?);
            let nu = shapes.nu.clone().unwrap_or_default();
            let d = enumerate_lr(shapes.lie_type, n, lambda, mu, &nu)?.elements.len() as u64;
            let rhs = lr::branching_rhs(lambda, mu, &nu, n);
            let line = format!("d={d} rhs={rhs}");
            if !lr::is_stable(mu, &nu, n) {
                Ok(format!("{line} UNSTABLE\n"))
            } else if d == rhs {
                Ok(format!("{line} MATCH\n"))
            } else {
                Err(Failure::Verification(format!("{line} MISMATCH\n")))
            }
        }
        Command::Split { n, variant } => {
            let col = parse_column(&stdin()?)?;
            let data = split_letters(&col, *n)?;
            let v = match variant {
                VariantArg::First => Variant::First,
                VariantArg::Second => Variant::Second,
            };
            let opt = |o: &Option<Vec<usize>>| o.as_ref().map_or("none".to_string(), |x| values(x));
            let c = Alphabet::new(LieType::C, *n)?;
            let phi = if is_admissible_column(&col, &c) { phi_column(&col, *n, v)?.to_string() } else { "none".into() };
            let psi = if is_coadmissible_column(&col, *n) { psi_column(&col, *n, v)?.to_string() } else { "none".into() };
            Ok(format!(
                "L={} L*={} phi={} L†={} psi={}\n",
                values(&data.l),
                opt(&data.l_star),
                phi,
                opt(&data.l_dag),
                psi
            ))
        }
        Command::Phi { format, trace } | Command::Psi { format, trace } => {
            let (t, a) = tableau_from_json(&stdin()?)?;
            if a.lie_type() != LieType::C {
                return Err(Failure::Usage("Φ and Ψ act on type C tableaux".into()));
            }
            let forward = matches!(cmd, Command::Phi { .. });
            let (image, steps) =
                if forward { phi_tableau_traced(&t, a.rank())? } else { psi_tableau_traced(&t, a.rank())? };
            let mut ts: Vec<Tableau> = Vec::new();
            if *trace {
                ts.push(t);
                ts.extend(steps.into_iter().map(|s| s.tableau));
            } else {
                ts.push(image);
            }
            Ok(tableau_lines(&ts, &a, *format))
        }
        Command::Rect { policy, format, trace } => {
            let (t, a) = tableau_from_json(&stdin()?)?;
            let policy = match policy {
                PolicyArg::Topmost => CornerPolicy::Topmost,
                PolicyArg::Bottommost => CornerPolicy::Bottommost,
            };
            let mut steps = rectify_traced(&t, policy)?;
            if !*trace {
                steps = steps.split_off(steps.len() - 1);
            }
            Ok(tableau_lines(&steps, &a, *format))
        }
        Command::Graph { shapes, format } => {
            let n = rank_for(shapes)?;
            let lambda = required(&shapes.lambda, "lambda")?;
            let a = Alphabet::new(shapes.lie_type, n)?;
            match format {
                Format::Dot => Ok(crystal_graph_dot(lambda, &a)?),
                f => Ok(tableau_lines(&lr::crystal_elements(lambda, &a)?, &a, *f)),
            }
        }
        Command::VerifyIdentity { sweep } => {
            let rows = identity_sweep(&sweep.ranks, |n| sample(&stable_pairs(n, sweep.max_size), sweep.samples, sweep.seed), true)?;
            let mut s = String::new();
            let bad = rows.iter().filter(|r| !r.ok()).count();
            for r in &rows {
                if sweep.verbose || !r.ok() {
                    let _ = writeln!(
                        s,
                        "n={} lambda={} mu={} nu={} d={} rhs={} tensor={} roundtrip={} {}",
                        r.n,
                        r.lambda,
                        r.mu,
                        r.nu,
                        r.lhs,
                        r.rhs,
                        r.oracle,
                        r.roundtrip,
                        if r.ok() { "ok" } else { "FAIL" }
                    );
                }
            }
            summary(s, rows.len(), bad)
        }
        Command::VerifyBd { sweep } => {
            let rows = stable_sweep(&sweep.ranks, |n| sample(&stable_pairs(n, sweep.max_size), sweep.samples, sweep.seed))?;
            let mut s = String::new();
            let bad = rows.iter().filter(|r| !r.report.ok()).count();
            for r in &rows {
                let ok = r.report.ok();
                if sweep.verbose || !ok {
                    let _ = writeln!(
                        s,
                        "n={} lambda={} mu={} nu={} C={} B={} D={} {}",
                        r.n,
                        r.lambda,
                        r.mu,
                        r.nu,
                        r.report.size_c,
                        r.report.size_b,
                        r.report.size_d,
                        if ok { "ok" } else { "FAIL" }
                    );
                }
            }
            summary(s, rows.len(), bad)
        }
    }
}

fn summary(mut s: String, checked: usize, bad: usize) -> Outcome {
    let _ = writeln!(s, "checked={checked} failures={bad} {}", if bad == 0 { "PASS" } else { "FAIL" });
    if bad == 0 {
        Ok(s)
    } else {
        Err(Failure::Verification(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branch_golden() {
        let (code, out) = run_with_input(&["branch", "--type", "C", "--n", "6", "--lambda", "3,3,1", "--mu", "3,3", "--nu", "3,2,1,1"], "");
        assert_eq!((code, out.as_str()), (0, "d=4 rhs=4 MATCH\n"));
    }

    #[test]
    fn branch_empty_nu() {
        let (code, out) = run_with_input(&["branch", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--nu", ""], "");
        assert_eq!((code, out.as_str()), (0, "d=1 rhs=1 MATCH\n"));
    }

    #[test]
    fn split_golden() {
        let (code, out) = run_with_input(&["split", "--n", "7"], "[2,5,6,7,-7,-5,-4]\n");
        assert_eq!(code, 0);
        assert!(out.starts_with("L=[5,7] L*=[1,3] phi=[1,2,3,6,-4,-3,-1]"), "{out}");
    }

    #[test]
    fn parse_errors_exit_2() {
        assert_eq!(run_with_input(&["branch", "--lambda", "1,2", "--mu", "1"], "").0, 2);
        assert_eq!(run_with_input(&["frobnicate"], "").0, 2);
        assert_eq!(run_with_input(&["split", "--n", "3"], "[1,x]").0, 2);
    }
}
