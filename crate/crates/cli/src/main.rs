//! `powerdom`: power domination numbers, connected power domination numbers
//! and propagation times of graph files.
//!
//! Exit codes: 0 on success, 2 when the instance is infeasible or a budget
//! is exceeded (or `check` rejects the set), 1 on usage and parse errors.

mod commands;
mod output;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{emit, OutputFormat};

#[derive(Parser, Debug)]
#[command(name = "powerdom", version, about = "Power domination and connected power domination of graphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub output: OutputFormat,
    /// Graph file format; guessed from the extension when omitted.
    #[arg(long = "input-format", global = true, value_enum)]
    pub input_format: Option<InputFormat>,
    /// Largest graph the exhaustive solvers accept (overrides POWERDOM_BUDGET_N).
    #[arg(long = "budget-n", global = true)]
    pub budget_n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Dimacs,
    Mtx,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    Pd,
    Cpd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Tree,
    Block,
    Cactus,
    Decompose,
    Brute,
    Milp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Lp,
    Mps,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpArg {
    DeleteVertex,
    DeleteEdge,
    ContractEdge,
    SubdivideEdge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Tree,
    Connected,
    Block,
    Cactus,
    CutVertex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimum (connected) power dominating set with a witness.
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "cpd")]
        problem: Problem,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Round limit: solve the T-round problem (brute or milp only).
        #[arg(long = "T")]
        t: Option<usize>,
        /// Print the propagation trace of the witness.
        #[arg(long)]
        trace: bool,
    },
    /// Power propagation time over minimum power dominating sets.
    Ppt {
        input: PathBuf,
        /// Minimise over minimum connected power dominating sets instead.
        #[arg(long)]
        connected: bool,
        #[arg(long, value_enum, default_value = "brute")]
        method: MethodArg,
        #[arg(long)]
        trace: bool,
    },
    /// Change in the connected power domination number under an operation.
    Spread {
        input: PathBuf,
        #[arg(long, value_enum)]
        op: OpArg,
        /// Vertex label, or two labels `u,v` for an edge.
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Write the integer programming model as LP or MPS.
    Model {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "pd")]
        problem: Problem,
        /// Horizon; defaults to the number of vertices.
        #[arg(long = "T")]
        t: Option<usize>,
        #[arg(long, value_enum, default_value = "lp")]
        format: FormatArg,
        /// Write the model here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Connected power domination through the nontrivial blocks.
    Decompose { input: PathBuf },
    /// Print a construction as an edge list.
    Gadget {
        #[command(subcommand)]
        kind: GadgetKind,
    },
    /// Verify that a vertex set is a (connected) power dominating set.
    Check {
        input: PathBuf,
        /// Comma-separated vertex labels.
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value = "cpd")]
        problem: Problem,
        #[arg(long)]
        trace: bool,
    },
    /// One table row per graph: order, size, both numbers and ppt.
    Batch {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Solver for the connected number.
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Add a wall-time column (not reproducible run to run).
        #[arg(long)]
        timing: bool,
        /// Worker threads; rows are printed in input order regardless.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum GadgetKind {
    /// The deletion gadget: γ_{P,c} = 1, and c + 1 without y or xy.
    Path {
        #[arg(long)]
        c: usize,
    },
    /// The contraction and subdivision gadget on a (2c+1)-cycle.
    Cycle {
        #[arg(long)]
        c: usize,
    },
    /// Zero forcing instance (G, k) mapped to connected power domination (G′, k+1).
    Reduction {
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Seeded random graph.
    Random {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra-edge probability for the connected and cut-vertex families.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// Largest clique (block) or cycle (cactus) glued in one step.
        #[arg(long = "max-piece", default_value_t = 4)]
        max_piece: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match commands::run(&cli) {
        Ok((output, code)) => {
            if let Err(e) = emit(&mut out, &output, cli.global.output).and_then(|_| out.flush()) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
