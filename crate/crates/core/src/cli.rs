//! Command-line front end.
//!
//! [`run`] does all the work and returns the exit code together with the
//! stdout and stderr text, so the binary only has to print them. Exit codes:
//! `0` success, `1` domain error, `2` usage error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::circuit::{first_difference, Circuit};
use crate::classify::classify_all;
use crate::combinatorics::{
    factorial, involution_count, non_hermitian_fraction, register_dimension, render_percent,
};
use crate::optimizer::{optimize, DEFAULT_BUDGET};
use crate::perm::Permutation;
use crate::templates::{
    generate_templates_with_budget, GateLibrary, TemplateStore, DEFAULT_TEMPLATE_BUDGET,
};
use crate::{Error, SizeCap};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(exit_code: i32, message: impl std::fmt::Display) -> Self {
        CommandResult {
            exit_code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }

    fn domain(err: impl std::fmt::Display) -> Self {
        Self::fail(1, err)
    }

    fn usage(err: impl std::fmt::Display) -> Self {
        Self::fail(2, err)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "permgate",
    version,
    about = "Permutation-gate statistics, identity templates and reversible-circuit optimization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EnumerateFilter {
    All,
    Involution,
    NonInvolution,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact counts and the non-Hermitian percentage for n-qubit permutation gates
    Stats {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
        qubits: u32,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(0..=50))]
        decimals: u32,
    },
    /// List permutations of M points in one-line notation
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        dimension: u64,
        #[arg(long, value_enum, default_value_t = EnumerateFilter::All)]
        filter: EnumerateFilter,
        /// Lift the default size cap
        #[arg(long)]
        force: bool,
    },
    /// Hermitian and separable/entangled census of all n-qubit permutation gates
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
        qubits: u32,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(0..=50))]
        decimals: u32,
        /// Lift the default size cap
        #[arg(long)]
        force: bool,
    },
    /// Generate identity templates from the full symmetric group S_M
    Templates {
        #[arg(long)]
        dimension: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=6))]
        max_size: u64,
        /// Output file; the store is printed to stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TEMPLATE_BUDGET)]
        budget: usize,
    },
    /// Optimize a circuit file with cancellation and template rewriting
    Optimize {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        templates: Option<PathBuf>,
        /// Output file; the circuit is printed to stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Check whether two circuit files implement the same permutation
    Verify {
        #[arg(long = "circuit", num_args = 1, required = true)]
        circuits: Vec<PathBuf>,
    },
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                CommandResult {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandResult::ok(text)
            };
        }
    };
    match cli.command {
        Command::Stats { qubits, decimals } => cmd_stats(qubits, decimals as usize),
        Command::Enumerate {
            dimension,
            filter,
            force,
        } => cmd_enumerate(dimension, filter, cap(force)),
        Command::Classify {
            qubits,
            decimals,
            force,
        } => cmd_classify(qubits, decimals as usize, cap(force)),
        Command::Templates {
            dimension,
            max_size,
            out,
            budget,
        } => cmd_templates(dimension, max_size as usize, out.as_deref(), budget),
        Command::Optimize {
            circuit,
            templates,
            out,
            budget,
        } => cmd_optimize(&circuit, templates.as_deref(), out.as_deref(), budget),
        Command::Verify { circuits } => cmd_verify(&circuits),
    }
}

fn cap(force: bool) -> SizeCap {
    if force {
        SizeCap::Override
    } else {
        SizeCap::Default
    }
}

fn cmd_stats(qubits: u32, decimals: usize) -> CommandResult {
    let dimension = match register_dimension(qubits, SizeCap::Default) {
        Ok(d) => d,
        Err(e) => return CommandResult::domain(e),
    };
    let ratio = match non_hermitian_fraction(qubits) {
        Ok(r) => r,
        Err(e) => return CommandResult::domain(e),
    };
    let total = factorial(dimension);
    let hermitian = involution_count(dimension);
    let mut out = String::new();
    let _ = writeln!(out, "qubits={qubits}");
    let _ = writeln!(out, "dimension={dimension}");
    let _ = writeln!(out, "gates={total}");
    let _ = writeln!(out, "hermitian={hermitian}");
    let _ = writeln!(out, "non_hermitian={}", &total - &hermitian);
    let _ = writeln!(out, "r={}", render_percent(&ratio, decimals));
    CommandResult::ok(out)
}

fn cmd_enumerate(dimension: u64, filter: EnumerateFilter, cap: SizeCap) -> CommandResult {
    let Ok(dimension) = usize::try_from(dimension) else {
        return CommandResult::domain(format!("dimension {dimension} is too large"));
    };
    let stream = match Permutation::enumerate(dimension, cap) {
        Ok(s) => s,
        Err(e) => return CommandResult::domain(e),
    };
    let mut out = String::new();
    let mut count = 0u64;
    for p in stream {
        let keep = match filter {
            EnumerateFilter::All => true,
            EnumerateFilter::Involution => p.is_involution(),
            EnumerateFilter::NonInvolution => !p.is_involution(),
        };
        if keep {
            count += 1;
            let _ = writeln!(out, "{p}");
        }
    }
    CommandResult {
        exit_code: 0,
        stdout: out,
        stderr: format!("count={count}\n"),
    }
}

fn cmd_classify(qubits: u32, decimals: usize, cap: SizeCap) -> CommandResult {
    let report = match classify_all(qubits, cap) {
        Ok(r) => r,
        Err(e) => return CommandResult::domain(e),
    };
    let mut out = String::new();
    let _ = writeln!(out, "qubits={}", report.n_qubits);
    let _ = writeln!(out, "total={}", report.total);
    let _ = writeln!(out, "hermitian={}", report.hermitian_count);
    let _ = writeln!(out, "non_hermitian={}", report.non_hermitian_count);
    let _ = writeln!(out, "separable={}", report.separable_count);
    let _ = writeln!(out, "entangled={}", report.entangled_count);
    let _ = writeln!(
        out,
        "non_hermitian_percent={}",
        render_percent(&report.non_hermitian_fraction, decimals)
    );
    let _ = writeln!(
        out,
        "entangled_percent={}",
        render_percent(&report.entangled_fraction, decimals)
    );
    CommandResult::ok(out)
}

fn cmd_templates(
    dimension: usize,
    max_size: usize,
    out: Option<&Path>,
    budget: usize,
) -> CommandResult {
    if !dimension.is_power_of_two() {
        return CommandResult::usage(format!("dimension {dimension} is not a power of two"));
    }
    let generation = GateLibrary::symmetric_group(dimension, SizeCap::Default)
        .and_then(|lib| generate_templates_with_budget(&lib, max_size, budget));
    let generation = match generation {
        Ok(g) => g,
        Err(e) => return CommandResult::domain(e),
    };
    let text = generation.store.to_string();
    let mut result = match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                return CommandResult::domain(format!("writing {}: {e}", path.display()));
            }
            CommandResult::ok(format!("templates={}\n", generation.store.len()))
        }
        None => CommandResult {
            exit_code: 0,
            stdout: text,
            stderr: format!("templates={}\n", generation.store.len()),
        },
    };
    if generation.truncated {
        result
            .stderr
            .push_str("warning: template budget exhausted; the store is partial\n");
    }
    result
}

fn read_circuit(path: &Path) -> Result<Circuit, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    text.parse()
        .map_err(|e: Error| format!("{}: {e}", path.display()))
}

fn cmd_optimize(
    circuit_path: &Path,
    templates: Option<&Path>,
    out: Option<&Path>,
    budget: usize,
) -> CommandResult {
    let circuit = match read_circuit(circuit_path) {
        Ok(c) => c,
        Err(e) => return CommandResult::domain(e),
    };
    let store = match templates {
        Some(path) => {
            let parsed = std::fs::read_to_string(path)
                .map_err(|e| e.to_string())
                .and_then(|t| t.parse::<TemplateStore>().map_err(|e| e.to_string()));
            match parsed {
                Ok(s) => s,
                Err(e) => return CommandResult::domain(format!("{}: {e}", path.display())),
            }
        }
        None => TemplateStore::new(2).expect("nonzero dimension"),
    };
    let (optimized, report) = match optimize(&circuit, &store, budget) {
        Ok(r) => r,
        Err(e) => return CommandResult::domain(e),
    };
    if optimized.permutation() != circuit.permutation() {
        return CommandResult::domain(
            "optimized circuit failed the equivalence check; nothing written",
        );
    }
    let summary = format!(
        "before={} after={}\n{report}\n",
        report.gates_before, report.gates_after
    );
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, optimized.to_string()) {
                return CommandResult::domain(format!("writing {}: {e}", path.display()));
            }
            CommandResult::ok(summary)
        }
        None => CommandResult {
            exit_code: 0,
            stdout: optimized.to_string(),
            stderr: summary,
        },
    }
}

fn cmd_verify(paths: &[PathBuf]) -> CommandResult {
    if paths.len() != 2 {
        return CommandResult::usage(format!(
            "verify takes exactly two --circuit files, got {}",
            paths.len()
        ));
    }
    let (a, b) = match (read_circuit(&paths[0]), read_circuit(&paths[1])) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return CommandResult::usage(e),
    };
    match first_difference(&a, &b) {
        Err(_) => CommandResult::usage(format!(
            "wire counts differ: {} vs {}",
            a.n_wires(),
            b.n_wires()
        )),
        Ok(None) => CommandResult::ok("EQUIVALENT\n".into()),
        Ok(Some(index)) => CommandResult {
            exit_code: 1,
            stdout: "DIFFER\n".into(),
            stderr: format!("first differing basis index: {index}\n"),
        },
    }
}
