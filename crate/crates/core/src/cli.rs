//! Command-line front end.
//!
//! Every command prints `key=value` records, one per line. Exit codes:
//! 0 success, 2 semantic failure (mismatch, failed check), 3 malformed
//! input, 4 resource limit.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::basis::{bounds, Basis};
use crate::bfcore::{decrease_with, markov_from_decrease, parse_system, FunctionSystem};
use crate::circuit::{
    check_lemma1, parse_circuit, split_first_nonmonotone, write_circuit, Circuit,
};
use crate::error::Error;
use crate::exact::{ExactOutcome, ExactSearch};
use crate::limits::Limits;
use crate::synth::synthesize_with;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SEMANTIC: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "inversion",
    version,
    about = "Decrease, negation-optimal synthesis and exact inversion complexity"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Print bare key=value records only.
    #[arg(long, global = true)]
    pub machine: bool,

    /// Arity cap for the decrease computations.
    #[arg(long, global = true, default_value_t = Limits::default().arity_cap)]
    pub arity_cap: u32,

    /// Cap on distinct patterns when listing monotone signals of a pool.
    #[arg(long, global = true, default_value_t = Limits::default().pattern_limit)]
    pub pattern_limit: usize,

    /// Budget of generator evaluations for the exact search.
    #[arg(long, global = true, default_value_t = Limits::default().candidate_limit)]
    pub candidate_limit: u64,
}

#[derive(Debug, Args)]
pub struct BasisArg {
    /// Basis file (one generator per line); defaults to negation alone.
    #[arg(long)]
    pub basis: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print d(F) and a chain attaining it.
    Decrease {
        #[arg(long)]
        funcs: PathBuf,
    },
    /// Build a circuit with ⌈log₂(d+1)⌉ weighted gates.
    Synth {
        #[arg(long)]
        funcs: PathBuf,
        #[command(flatten)]
        basis: BasisArg,
        /// Circuit output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Annotate the circuit with the decomposition levels.
        #[arg(long)]
        trace: bool,
    },
    /// Check that a circuit realizes a system.
    Verify {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        funcs: PathBuf,
        #[command(flatten)]
        basis: BasisArg,
    },
    /// Print the two-sided bracket on the inversion complexity.
    Bounds {
        #[arg(long)]
        funcs: PathBuf,
        #[command(flatten)]
        basis: BasisArg,
    },
    /// Find the inversion complexity by exhaustive search.
    Exact {
        #[arg(long)]
        funcs: PathBuf,
        #[command(flatten)]
        basis: BasisArg,
        /// Deepest search; defaults to ⌈log₂(d+1)⌉.
        #[arg(long)]
        t_max: Option<u32>,
        /// Also emit an optimal circuit.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cut out the first weighted gate, exposing it as a new first input.
    Split {
        #[arg(long)]
        circuit: PathBuf,
        #[command(flatten)]
        basis: BasisArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test d(F) ≤ (2r+1)(2^I − 1) on a circuit.
    CheckLemma1 {
        #[arg(long)]
        circuit: PathBuf,
        #[command(flatten)]
        basis: BasisArg,
    },
}

/// A failed run: exit code plus message for stderr.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit { .. } => EXIT_RESOURCE,
        Error::Parse { .. }
        | Error::MalformedCircuit { .. }
        | Error::BitLength { .. }
        | Error::InvalidTable(_)
        | Error::EmptySystem
        | Error::ArityMismatch { .. }
        | Error::EmptyBasis
        | Error::MonotoneGenerator { .. } => EXIT_PARSE,
        Error::InvalidPair(_)
        | Error::InvalidChain(_)
        | Error::NoWeightedGate
        | Error::AlreadyMonotone
        | Error::NotExpressible
        | Error::Internal(_) => EXIT_SEMANTIC,
    }
}

struct Records {
    lines: Vec<(String, String)>,
}

impl Records {
    fn new() -> Self {
        Records { lines: Vec::new() }
    }

    fn push(&mut self, key: &str, value: impl ToString) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    fn render(&self) -> String {
        self.lines
            .iter()
            .map(|(k, v)| format!("{k}={v}\n"))
            .collect()
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(&config, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure {
        code: EXIT_SEMANTIC,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_system(path: &Path, limits: &Limits) -> Result<FunctionSystem, Failure> {
    let system = parse_system(&read(path)?)?;
    limits.require_arity("function arity", system.arity(), limits.arity_cap)?;
    Ok(system)
}

fn load_basis(arg: &BasisArg) -> Result<Basis, Failure> {
    match &arg.basis {
        Some(path) => Ok(Basis::parse(&read(path)?)?),
        None => Ok(Basis::negation()),
    }
}

fn load_circuit(path: &Path, basis: &Basis) -> Result<Circuit, Failure> {
    let circuit = parse_circuit(&read(path)?)?;
    circuit.validate(basis)?;
    Ok(circuit)
}

fn execute(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let limits = Limits {
        arity_cap: config.arity_cap,
        pattern_limit: config.pattern_limit,
        candidate_limit: config.candidate_limit,
        ..Limits::default()
    };
    limits.validate()?;
    let mut rec = Records::new();
    let mut code = EXIT_OK;
    // circuit text bound for stdout, printed after the records
    let mut trailer = String::new();

    match &config.command {
        Command::Decrease { funcs } => {
            let system = load_system(funcs, &limits)?;
            let d = decrease_with(&system, &limits)?;
            rec.push("d", d.value);
            rec.push("markov", markov_from_decrease(d.value as u64));
            if config.machine {
                rec.push("witness", d.witness.tuple_strings().join(","));
            } else {
                rec.push("witness", &d.witness);
            }
        }
        Command::Synth {
            funcs,
            basis,
            out: path,
            trace,
        } => {
            let system = load_system(funcs, &limits)?;
            let basis = load_basis(basis)?;
            let (circuit, tr) = synthesize_with(&system, &basis, &limits)?;
            let mut text = String::new();
            if *trace {
                text.push_str(&tr.to_comments(system.arity()));
            }
            text.push_str(&write_circuit(&circuit));
            rec.push("d", decrease_with(&system, &limits)?.value);
            rec.push("weight", circuit.inversion_weight());
            rec.push("verified", true);
            match path {
                Some(p) => write_file(p, &text)?,
                None => trailer = text,
            }
        }
        Command::Verify {
            circuit,
            funcs,
            basis,
        } => {
            let basis = load_basis(basis)?;
            let circuit = load_circuit(circuit, &basis)?;
            let system = load_system(funcs, &limits)?;
            if circuit.n_inputs() != system.arity() as usize
                || circuit.outputs().len() != system.len()
            {
                return Err(Failure {
                    code: EXIT_SEMANTIC,
                    message: format!(
                        "circuit has {} input(s) and {} output(s), system has arity {} and {} member(s)",
                        circuit.n_inputs(),
                        circuit.outputs().len(),
                        system.arity(),
                        system.len()
                    ),
                });
            }
            match circuit.verify(&basis, &system)? {
                None => {
                    rec.push("status", "ok");
                    rec.push("weight", circuit.inversion_weight());
                }
                Some((k, tuple)) => {
                    rec.push("status", "mismatch");
                    rec.push("output", k + 1);
                    rec.push("input", tuple);
                    code = EXIT_SEMANTIC;
                }
            }
        }
        Command::Bounds { funcs, basis } => {
            let system = load_system(funcs, &limits)?;
            let basis = load_basis(basis)?;
            let b = bounds(&system, &basis)?;
            rec.push("d", b.decrease);
            rec.push("r", basis.r());
            if config.machine {
                rec.push("c", b.c);
            } else {
                rec.push("c", format!("{:.4}", b.c));
            }
            rec.push("lower", b.lower);
            rec.push("upper", b.upper);
        }
        Command::Exact {
            funcs,
            basis,
            t_max,
            witness,
            out: path,
        } => {
            let system = load_system(funcs, &limits)?;
            let basis = load_basis(basis)?;
            let mut search = ExactSearch::new(&basis, system.arity(), limits)?;
            let (outcome, circuit) = search.solve(&system, *t_max)?;
            match outcome {
                ExactOutcome::Exact(v) => rec.push("exact", v),
                ExactOutcome::AboveLimit(t) => {
                    rec.push("exact", "above");
                    rec.push("t_max", t);
                }
            }
            rec.push("states", search.states());
            if let (true, Some(c)) = (*witness, circuit) {
                let text = write_circuit(&c);
                match path {
                    Some(p) => write_file(p, &text)?,
                    None => trailer = text,
                }
            }
        }
        Command::Split {
            circuit,
            basis,
            out: path,
        } => {
            let basis = load_basis(basis)?;
            let circuit = load_circuit(circuit, &basis)?;
            limits.require_arity(
                "circuit inputs",
                circuit.n_inputs() as u32 + 1,
                limits.arity_cap,
            )?;
            let split = split_first_nonmonotone(&circuit, &basis)?;
            rec.push("removed", &circuit.gates()[split.removed].name);
            rec.push("h", split.h.to_hex());
            rec.push("weight_before", circuit.inversion_weight());
            rec.push("weight_after", split.reduced.inversion_weight());
            let ok = split.check_composition(&circuit, &basis)?.is_none();
            rec.push("composition", if ok { "ok" } else { "failed" });
            if !ok {
                code = EXIT_SEMANTIC;
            }
            let text = write_circuit(&split.reduced);
            match path {
                Some(p) => write_file(p, &text)?,
                None => trailer = text,
            }
        }
        Command::CheckLemma1 { circuit, basis } => {
            let basis = load_basis(basis)?;
            let circuit = load_circuit(circuit, &basis)?;
            let report = check_lemma1(&circuit, &basis)?;
            rec.push("d", report.decrease);
            rec.push("r", report.r);
            rec.push("weight", report.weight);
            rec.push("bound", report.bound);
            rec.push("holds", report.holds);
            if !report.holds {
                code = EXIT_SEMANTIC;
            }
        }
    }

    // With a circuit on stdout, records move to stderr so stdout stays a
    // valid circuit file.
    let records = rec.render();
    let io = |e: std::io::Error| Failure {
        code: EXIT_SEMANTIC,
        message: e.to_string(),
    };
    if trailer.is_empty() {
        out.write_all(records.as_bytes()).map_err(io)?;
    } else {
        err.write_all(records.as_bytes()).map_err(io)?;
        out.write_all(trailer.as_bytes()).map_err(io)?;
    }
    Ok(code)
}
