//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use splitfactor::corpus::{Corpus, CorpusSpec};
use splitfactor::extremal::{build_extremal, verify_extremal};
use splitfactor::sweep::{describe, sweep, SweepOptions};
use splitfactor::verify::{diameter_summary, Status, VerifyOptions};
use splitfactor::{
    build_by_formula, recognize_split, two_switch_degree, two_switches, verify_with, SimpleGraph,
    SplitGraph,
};

/// Environment variable capping the sweep worker count.
pub const THREADS_ENV: &str = "SPLITFACTOR_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "splitfactor",
    version,
    about = "Factor multigraphs of split graphs: construction, 2-switches and structural checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the multiplicity listing `u v σ` of the factor graph.
    Phi {
        file: PathBuf,
        /// Also print the factor graph in DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Run every structural check on one split graph.
    Verify {
        file: PathBuf,
        /// Longest induced path examined, in vertices (default |I|).
        #[arg(long)]
        max_len: Option<usize>,
        /// Only `CHECK <name> PASS|FAIL|N/A [witness]` lines.
        #[arg(long)]
        machine: bool,
    },
    /// Verify every instance of a generated corpus.
    Sweep {
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        imax: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Instances in random mode.
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Longest induced path examined, in vertices (default |I|).
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Print the extremal split graph S_n.
    Extremal {
        n: usize,
        /// Also print its factor graph in DOT.
        #[arg(long)]
        dot: bool,
        /// Also check the advertised properties of S_n.
        #[arg(long)]
        verify: bool,
    },
    /// List every 2-switch as `u x v y`.
    Moves { file: PathBuf },
    /// Find a clique/independent-set partition of an edge list.
    Recognize { file: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

enum Failure {
    /// Bad arguments, unreadable file or malformed input.
    Input(String),
    /// Input is fine but the answer is negative.
    Domain,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Domain => 2,
        }
    }
}

impl From<splitfactor::Error> for Failure {
    fn from(e: splitfactor::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Runs the CLI and returns its exit code: 0 success, 1 usage or input
/// error, 2 negative result (not split, or a check failed).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(f) => {
            if let Failure::Input(msg) = &f {
                let _ = writeln!(err, "error: {msg}");
            }
            f.code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Phi { file, dot } => phi(&file, dot, out, err),
        Command::Verify {
            file,
            max_len,
            machine,
        } => verify(&file, max_len, machine, out, err),
        Command::Sweep {
            kmax,
            imax,
            mode,
            count,
            seed,
            max_len,
        } => {
            let spec = match mode {
                Mode::Exhaustive => CorpusSpec::exhaustive(kmax, imax),
                Mode::Random => CorpusSpec::random(kmax, imax, count, seed),
            };
            run_sweep(spec, max_len, out, err)
        }
        Command::Extremal { n, dot, verify } => extremal(n, dot, verify, out),
        Command::Moves { file } => moves(&file, out, err),
        Command::Recognize { file } => recognize(&file, out),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

/// A file with `K:`/`I:` headers carries its own partition; anything else is
/// read as an edge list and partitioned by recognition.
fn has_partition(text: &str) -> bool {
    text.lines()
        .map(str::trim_start)
        .any(|l| l.starts_with("K:") || l.starts_with("I:"))
}

fn input_error(path: &Path, e: splitfactor::Error) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

fn load_split(path: &Path, err: &mut dyn Write) -> Result<SplitGraph, Failure> {
    let text = read(path)?;
    if has_partition(&text) {
        return SplitGraph::parse(&text).map_err(|e| input_error(path, e));
    }
    let g = SimpleGraph::parse_edge_list(&text).map_err(|e| input_error(path, e))?;
    match recognize_split(&g) {
        Some((s, _)) => Ok(s),
        None => {
            let _ = writeln!(err, "{}: NOT-SPLIT", path.display());
            Err(Failure::Domain)
        }
    }
}

fn phi(path: &Path, dot: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let s = load_split(path, err)?;
    let phi = build_by_formula(&s);
    writeln!(
        out,
        "# deg(S)={} diameter={}",
        two_switch_degree(&s),
        diameter_summary(&phi)
    )?;
    write!(out, "{}", phi.to_listing())?;
    if dot {
        write!(out, "{}", phi.to_dot())?;
    }
    Ok(())
}

fn verify(
    path: &Path,
    max_len: Option<usize>,
    machine: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let s = load_split(path, err)?;
    let report = verify_with(
        &s,
        &VerifyOptions {
            instance: path.display().to_string(),
            max_path_len: max_len,
        },
    );
    if machine {
        write!(out, "{}", report.machine_lines())?;
    } else {
        write!(out, "{}", report.human())?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Domain)
    }
}

fn threads_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(Some(t)),
            _ => Err(Failure::Input(format!(
                "{THREADS_ENV} must be a positive integer, found `{v}`"
            ))),
        },
        Err(_) => Ok(None),
    }
}

fn run_sweep(
    spec: CorpusSpec,
    max_len: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let corpus = Corpus::new(spec)?;
    let opts = SweepOptions {
        max_path_len: max_len,
        threads: threads_from_env()?,
    };
    writeln!(err, "sweeping {}", describe(&corpus))?;
    let summary = sweep(&corpus, &opts);
    write!(out, "{}", summary.render())?;
    if summary.passed() {
        Ok(())
    } else {
        Err(Failure::Domain)
    }
}

fn extremal(n: usize, dot: bool, verify: bool, out: &mut dyn Write) -> Outcome {
    let inst = build_extremal(n)?;
    write!(out, "{}", inst.graph.to_text())?;
    if dot {
        write!(out, "{}", build_by_formula(&inst.graph).to_dot())?;
    }
    if verify {
        let results = verify_extremal(&inst);
        for r in &results {
            writeln!(out, "CHECK {} {}", r.check, r.status.as_str())?;
        }
        if results.iter().any(|r| r.status == Status::Fail) {
            return Err(Failure::Domain);
        }
    }
    Ok(())
}

fn moves(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let s = load_split(path, err)?;
    for mv in two_switches(&s) {
        writeln!(out, "{}", mv.display(&s))?;
    }
    Ok(())
}

fn recognize(path: &Path, out: &mut dyn Write) -> Outcome {
    let text = read(path)?;
    let g = if has_partition(&text) {
        SimpleGraph::from(&SplitGraph::parse(&text).map_err(|e| input_error(path, e))?)
    } else {
        SimpleGraph::parse_edge_list(&text).map_err(|e| input_error(path, e))?
    };
    match recognize_split(&g) {
        Some((s, _)) => {
            write!(out, "{}", s.to_text())?;
            Ok(())
        }
        None => {
            writeln!(out, "NOT-SPLIT")?;
            Err(Failure::Domain)
        }
    }
}
