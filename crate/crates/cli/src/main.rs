use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use circtrans::census::{run_census, CSV_HEADER};
use circtrans::generate::random_classes;
use circtrans::oracle::{exact_distance, MAX_ORACLE_LEN};
use circtrans::sequence::parse_moves;
use circtrans::solver::{best_upper_bound, lemma3_solve_traced, UpperProvenance};
use circtrans::{
    bound_report, canonicalize, exact_path, from_partition, parse_string, CircularBinaryString, CircularPartition,
    Error, TranspositionSequence, Verdict,
};

#[derive(Parser)]
#[command(name = "circtrans", version, about = "Transposition distances between circular binary strings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lower bound, constructive upper bound and diameter test for a pair.
    Dist {
        s: String,
        t: String,
        /// Also compute the exact distance by exhaustive search.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print a move sequence from S to T, one `i j k` triple per line.
    Solve {
        s: String,
        t: String,
        /// Use a shortest sequence from exhaustive search.
        #[arg(long)]
        optimal: bool,
        /// Annotate each move with the representative it produces.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Replay a move file from S and check that it ends on T.
    Verify {
        s: String,
        /// Move file, or `-` for standard input.
        moves: PathBuf,
        t: String,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check every class pair of every bucket up to length N_MAX.
    Census {
        n_max: usize,
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        json: bool,
    },
    /// Reproducible random rotation classes.
    Gen {
        n: usize,
        ones: usize,
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Parse(String),
    Incompatible,
    Solver(String),
    Verify,
    Census(usize),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 1,
            Failure::Incompatible => 2,
            Failure::Solver(_) => 3,
            Failure::Verify => 4,
            Failure::Census(_) => 5,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Incompatible => Failure::Incompatible,
            Error::ConstructionFailed(_) | Error::Precondition(_) => Failure::Solver(e.to_string()),
            other => Failure::Parse(other.to_string()),
        }
    }
}

/// A bit string such as `0011`, or partition text such as `p:2,1,1`.
fn parse_input(text: &str) -> Result<CircularBinaryString, Failure> {
    let parsed = if text.starts_with("p:") {
        text.parse::<CircularPartition>().map(|p| from_partition(&p))
    } else {
        parse_string(text)
    };
    parsed.map_err(|e| Failure::Parse(format!("{text:?}: {e}")))
}

fn parse_pair(s: &str, t: &str) -> Result<(CircularBinaryString, CircularBinaryString), Failure> {
    let (s, t) = (parse_input(s)?, parse_input(t)?);
    if !s.compatible_with(&t) {
        return Err(Failure::Incompatible);
    }
    Ok((s, t))
}

fn json_line<T: Serialize>(out: &mut String, value: &T) {
    out.push_str(&serde_json::to_string(value).expect("serializable output"));
    out.push('\n');
}

#[derive(Serialize)]
struct DistOutput<'a> {
    s: String,
    t: String,
    #[serde(flatten)]
    report: &'a circtrans::BoundReport,
}

fn cmd_dist(s: &str, t: &str, exact: bool, json: bool) -> Result<String, Failure> {
    let (s, t) = parse_pair(s, t)?;
    let r = bound_report(&s, &t, exact)?;
    let mut out = String::new();
    if json {
        json_line(&mut out, &DistOutput { s: s.to_string(), t: t.to_string(), report: &r });
    } else {
        write!(out, "lower={} upper={} provenance={}", r.lower, r.upper, r.upper_provenance).unwrap();
        if let Some(d) = r.exact {
            write!(out, " exact={d}").unwrap();
        }
        writeln!(out, " is_diameter={} k={}", r.is_diameter, r.k).unwrap();
    }
    Ok(out)
}

#[derive(Serialize)]
struct SolveOutput {
    start: String,
    end: String,
    method: &'static str,
    moves: Vec<[usize; 3]>,
    representatives: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<circtrans::solver::SolverTrace>,
}

fn bits_text(bits: &[u8]) -> String {
    bits.iter().map(|b| char::from(b'0' + b)).collect()
}

fn cmd_solve(s: &str, t: &str, optimal: bool, trace: bool, json: bool) -> Result<String, Failure> {
    let (s, t) = parse_pair(s, t)?;
    let (seq, method, solver_trace) = if optimal {
        (exact_path(&s, &t)?, "optimal", None)
    } else {
        let best = best_upper_bound(&s, &t)?;
        let solver_trace = if trace && best.provenance == UpperProvenance::Lemma3 {
            lemma3_solve_traced(&s, &t)?.1
        } else {
            None
        };
        let method = match best.provenance {
            UpperProvenance::Lemma3 => "lemma3",
            UpperProvenance::Greedy => "greedy",
            UpperProvenance::TrivialEqual => "trivial_equal",
        };
        (best.sequence, method, solver_trace)
    };
    if let verdict @ (Verdict::InvalidMove { .. } | Verdict::WrongEnd { .. }) = seq.verify() {
        return Err(Failure::Solver(format!("emitted sequence does not replay: {verdict}")));
    }
    let reps = seq.representatives()?;
    let mut out = String::new();
    if json {
        json_line(
            &mut out,
            &SolveOutput {
                start: s.to_string(),
                end: t.to_string(),
                method,
                moves: seq.moves.iter().map(|m| [m.i, m.j, m.k]).collect(),
                representatives: reps.iter().map(|r| bits_text(r)).collect(),
                trace: solver_trace,
            },
        );
        return Ok(out);
    }
    if trace {
        writeln!(out, "# method {method}").unwrap();
        writeln!(out, "# start {}", bits_text(&reps[0])).unwrap();
    }
    for (m, rep) in seq.moves.iter().zip(&reps[1..]) {
        if trace {
            writeln!(out, "{m} # {}", bits_text(rep)).unwrap();
        } else {
            writeln!(out, "{m}").unwrap();
        }
    }
    if let Some(tr) = solver_trace.filter(|_| trace) {
        writeln!(out, "# trace {}", serde_json::to_string(&tr).expect("serializable trace")).unwrap();
    }
    Ok(out)
}

#[derive(Serialize)]
struct VerifyOutput {
    pass: bool,
    moves: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    failing_move: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reached: Option<String>,
    message: String,
}

/// First state, counted in moves applied, from which `t` can no longer be
/// reached with the moves left. Needs the exhaustive oracle.
fn first_hopeless_state(seq: &TranspositionSequence) -> Option<usize> {
    if seq.start.len() > MAX_ORACLE_LEN {
        return None;
    }
    let reps = seq.representatives().ok()?;
    let m = seq.moves.len();
    (0..=m).find(|&i| {
        let here = canonicalize(&reps[i]).expect("non-empty representative");
        exact_distance(&here, &seq.claimed_end).is_ok_and(|d| d > m - i)
    })
}

fn read_moves(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map_err(|e| Failure::Parse(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn cmd_verify(s: &str, moves: &PathBuf, t: &str, json: bool) -> Result<(String, bool), Failure> {
    let (s, t) = parse_pair(s, t)?;
    let moves = parse_moves(&read_moves(moves)?).map_err(Failure::Parse)?;
    let count = moves.len();
    let seq = TranspositionSequence { start: s, moves, claimed_end: t };
    let verdict = seq.verify();
    let (failing_move, reached, message) = match &verdict {
        Verdict::Pass => (None, None, "PASS".to_string()),
        Verdict::InvalidMove { index } => (Some(index + 1), None, verdict.to_string()),
        Verdict::WrongEnd { reached } => match first_hopeless_state(&seq) {
            Some(0) => {
                let needed = exact_distance(&seq.start, &seq.claimed_end).unwrap_or(0);
                (None, Some(reached.to_string()), format!("{verdict}; at least {needed} moves are needed, the file has {count}"))
            }
            Some(i) => (Some(i), Some(reached.to_string()), format!("FAIL at move {i} (target out of reach afterwards); sequence ends at {reached}")),
            None => (None, Some(reached.to_string()), verdict.to_string()),
        },
    };
    let pass = verdict.is_pass();
    let mut out = String::new();
    if json {
        json_line(&mut out, &VerifyOutput { pass, moves: count, failing_move, reached, message });
    } else {
        writeln!(out, "{message}").unwrap();
    }
    Ok((out, pass))
}

fn cmd_census(n_max: usize, parallel: bool, json: bool) -> Result<(String, usize), Failure> {
    let records = run_census(n_max, parallel)?;
    let mut out = String::new();
    if !json {
        writeln!(out, "{CSV_HEADER}").unwrap();
    }
    for r in &records {
        if json {
            json_line(&mut out, r);
        } else {
            writeln!(out, "{}", r.csv_row()).unwrap();
        }
    }
    Ok((out, records.iter().map(|r| r.violations()).sum()))
}

fn cmd_gen(n: usize, ones: usize, count: usize, seed: u64, json: bool) -> Result<String, Failure> {
    let classes = random_classes(n, ones, count, seed).map_err(|e| Failure::Parse(e.to_string()))?;
    let mut out = String::new();
    for c in classes {
        if json {
            json_line(&mut out, &serde_json::json!({ "n": n, "ones": ones, "class": c.to_string() }));
        } else {
            writeln!(out, "{c}").unwrap();
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<String, (String, Failure)> {
    let plain = |r: Result<String, Failure>| r.map_err(|f| (String::new(), f));
    match cli.command {
        Command::Dist { s, t, exact, json } => plain(cmd_dist(&s, &t, exact, json)),
        Command::Solve { s, t, optimal, trace, json } => plain(cmd_solve(&s, &t, optimal, trace, json)),
        Command::Verify { s, moves, t, json } => match cmd_verify(&s, &moves, &t, json) {
            Ok((out, true)) => Ok(out),
            Ok((out, false)) => Err((out, Failure::Verify)),
            Err(f) => Err((String::new(), f)),
        },
        Command::Census { n_max, parallel, json } => match cmd_census(n_max, parallel, json) {
            Ok((out, 0)) => Ok(out),
            Ok((out, v)) => Err((out, Failure::Census(v))),
            Err(f) => Err((String::new(), f)),
        },
        Command::Gen { n, ones, count, seed, json } => plain(cmd_gen(n, ones, count, seed, json)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (out, failure) = match run(cli) {
        Ok(out) => (out, None),
        Err((out, f)) => (out, Some(f)),
    };
    let _ = io::stdout().lock().write_all(out.as_bytes());
    let Some(f) = failure else {
        return ExitCode::SUCCESS;
    };
    match &f {
        Failure::Parse(msg) => eprintln!("error: {msg}"),
        Failure::Incompatible => eprintln!("error: {}", Error::Incompatible),
        Failure::Solver(msg) => eprintln!("error: {msg}"),
        Failure::Verify => {}
        Failure::Census(v) => eprintln!("census: {v} violations"),
    }
    ExitCode::from(f.code())
}
