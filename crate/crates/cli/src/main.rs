//! `qedc`: compile, verify and analyze circuits for the `[[n, n−2, 2]]` code.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage,
//! parse or I/O errors.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use qedc::circuit;
use qedc::compiler::{self, EmitFormat, LowerOptions};
use qedc::faults::{
    self, p_grid, post_selection_rate, standard_variants, tally_orders, undetectable_probability,
    CountingMode, FaultModel, LocationKind, TallyOptions, VariantCircuit,
};
use qedc::gadgets::Rotation;
use qedc::oracle;
use qedc::{AncillaState, Circuit};

#[derive(Parser, Debug)]
#[command(name = "qedc", version, about = "Weakly fault-tolerant circuits for the [[n, n-2, 2]] code")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lower a logical program to a physical circuit.
    Compile(CompileArgs),
    /// Check that every single fault in a circuit is detectable or harmless.
    Verify(VerifyArgs),
    /// Tally fault orders of a circuit.
    Analyze(AnalyzeArgs),
    /// Undetectable-error probability and acceptance rate over a p grid, as CSV.
    Sweep(SweepArgs),
    /// Run the dense-simulation cross-checks.
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
struct CompileArgs {
    /// Logical program file.
    input: PathBuf,
    /// Replace every ZZ and XX by a weakly fault-tolerant gadget.
    #[arg(long)]
    wft: bool,
    /// Prepend initialization and append readout.
    #[arg(long)]
    init_readout: bool,
    /// Use the SWAP form of CNOT when n = 4.
    #[arg(long)]
    n4_special: bool,
    /// Write the circuit here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Print the resource summary as CSV instead of text.
    #[arg(long)]
    summary: bool,
}

#[derive(Args, Debug, Clone, Copy)]
struct ModelArgs {
    /// Count flips after |0> and |+> preparations as faults.
    #[arg(long)]
    include_preps: bool,
    /// Count Pauli frame gates as fault locations.
    #[arg(long)]
    include_paulis: bool,
}

impl ModelArgs {
    fn model(self) -> FaultModel {
        FaultModel {
            include_preps: self.include_preps,
            include_paulis: self.include_paulis,
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Circuit file.
    input: PathBuf,
    #[command(flatten)]
    model: ModelArgs,
    /// List every undetectable fault.
    #[arg(short, long)]
    verbose: bool,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// Circuit file.
    input: PathBuf,
    #[arg(long, default_value_t = 2)]
    k_max: usize,
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, env = "QEDC_WORKERS")]
    workers: Option<usize>,
    /// Also evaluate the probabilities at this p.
    #[arg(long)]
    p: Option<f64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CircuitName {
    Hadamard,
    Cnot,
    Rz,
}

impl From<CircuitName> for VariantCircuit {
    fn from(c: CircuitName) -> Self {
        match c {
            CircuitName::Hadamard => VariantCircuit::Hadamard,
            CircuitName::Cnot => VariantCircuit::Cnot,
            CircuitName::Rz => VariantCircuit::Rz,
        }
    }
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Built-in circuit; sweeps its physical, encoded and wft variants.
    #[arg(long, value_enum)]
    circuit: Vec<CircuitName>,
    /// Circuit files to sweep as well, labeled by file stem.
    #[arg(long)]
    file: Vec<PathBuf>,
    #[arg(long, default_value_t = 1e-5)]
    start: f64,
    #[arg(long, default_value_t = 1e-2)]
    stop: f64,
    #[arg(long, default_value_t = 40)]
    points: usize,
    #[arg(long, default_value_t = 3)]
    k_max: usize,
    #[arg(long, env = "QEDC_WORKERS")]
    workers: Option<usize>,
    /// Weigh fault combinations by their probability under uniform errors.
    #[arg(long)]
    exact_weights: bool,
    #[command(flatten)]
    model: ModelArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Verify a gadget circuit file (annotated `# gadget ZZ PhiPlus`) instead
    /// of running the built-in suite.
    #[arg(long)]
    gadget: Option<PathBuf>,
}

/// A verification that ran and failed, as opposed to an error.
#[derive(Debug)]
struct Failed;

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification failed")
    }
}

impl std::error::Error for Failed {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Compile(a) => run_compile(a),
        Command::Verify(a) => run_verify(a),
        Command::Analyze(a) => run_analyze(a),
        Command::Sweep(a) => run_sweep(a),
        Command::Oracle(a) => run_oracle(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Failed>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_circuit(path: &Path) -> Result<Circuit> {
    circuit::parse(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run_compile(a: CompileArgs) -> Result<()> {
    let opts = LowerOptions {
        wft: a.wft,
        init_readout: a.init_readout,
        n4_special: a.n4_special,
    };
    let r = compiler::compile(&read(&a.input)?, opts).with_context(|| format!("compiling {}", a.input.display()))?;
    let text = compiler::emit(&r, EmitFormat::CircuitText);
    let report = if a.summary {
        compiler::emit(&r, EmitFormat::CsvSummary)
    } else {
        let s = compiler::resource_report(&r);
        format!(
            "logical qubits {}\ncode qubits {}\nancillas {}\nphysical qubits {}\ngates {}\ntwo-qubit gates {}\n\
             pauli frame gates {}\nmeasurements {}\nlayers {}\ngadgets ZZ {} XX {}\ncode rate {:.4}\n",
            s.num_logical,
            s.n_code,
            s.n_ancillas,
            s.n_physical,
            s.gate_count,
            s.two_qubit_count,
            s.pauli_count,
            s.measurement_count,
            s.layer_count,
            s.gadgets_zz,
            s.gadgets_xx,
            s.code_rate()
        )
    };
    match &a.output {
        Some(p) => {
            write_out(Some(p), &text)?;
            print!("{report}");
        }
        // keep stdout a valid circuit
        None => {
            print!("{text}");
            eprint!("{report}");
        }
    }
    Ok(())
}

fn describe(loc: &faults::FaultLocation) -> String {
    let what = match &loc.kind {
        LocationKind::Gate(k) => format!("{k:?}"),
        LocationKind::Prep(s) => format!("prep {}", s.label()),
    };
    let qs: Vec<String> = loc.qubits.iter().map(|q| q.to_string()).collect();
    match loc.gate_index {
        Some(i) => format!("after gate {i} ({what} {})", qs.join(" ")),
        None => format!("after {what} on {}", qs.join(" ")),
    }
}

fn run_verify(a: VerifyArgs) -> Result<()> {
    let c = load_circuit(&a.input)?;
    let analysis = faults::FaultAnalysis::new(&c, None, a.model.model())?;
    let rep = faults::check_weak_ft_with(&analysis)?;
    println!("{} faults, {} undetectable", rep.total, rep.undetectable.len());
    if a.verbose {
        for u in &rep.undetectable {
            let finals: Vec<String> = u.finals.iter().map(|f| f.to_string()).collect();
            println!("  {}: {} -> {}", describe(&u.location), u.error, finals.join(" | "));
        }
    }
    if rep.is_weakly_fault_tolerant() {
        Ok(())
    } else {
        Err(Failed.into())
    }
}

fn run_analyze(a: AnalyzeArgs) -> Result<()> {
    let c = load_circuit(&a.input)?;
    let opts = TallyOptions {
        model: a.model.model(),
        workers: a.workers,
        ..Default::default()
    };
    let t = tally_orders(&c, None, a.k_max, opts)?;
    println!("{} fault locations", t.n_locations);
    println!("k,total,undetectable,detectable,flagged");
    for o in t.orders.iter().skip(1) {
        println!("{},{},{},{},{}", o.k, o.total, o.undetectable, o.detectable(), o.flagged);
    }
    if let Some(p) = a.p {
        for (mode, name) in [(CountingMode::Ratio, "ratio"), (CountingMode::Exact, "weighted")] {
            println!(
                "p={p:e} {name}: undetectable {:.6e}, acceptance {:.6}",
                undetectable_probability(&t, t.n_locations, &p, mode),
                post_selection_rate(&t, t.n_locations, &p, mode)
            );
        }
    }
    Ok(())
}

fn run_sweep(a: SweepArgs) -> Result<()> {
    let grid = p_grid(a.start, a.stop, a.points)?;
    let mut circuits = Vec::new();
    let names = if a.circuit.is_empty() && a.file.is_empty() {
        vec![CircuitName::Hadamard]
    } else {
        a.circuit.clone()
    };
    for c in names {
        circuits.extend(standard_variants(c.into())?);
    }
    for f in &a.file {
        let stem = f
            .file_stem()
            .and_then(|s| s.to_str())
            .ok_or_else(|| anyhow!("bad file name {}", f.display()))?;
        circuits.push(("file".to_string(), stem.to_string(), load_circuit(f)?));
    }
    let opts = TallyOptions {
        model: a.model.model(),
        workers: a.workers,
        ..Default::default()
    };
    let mode = if a.exact_weights { CountingMode::Exact } else { CountingMode::Ratio };
    let rows = faults::sweep(&circuits, &grid, a.k_max, opts, mode)?;
    write_out(a.output.as_deref(), &faults::sweep_csv(&rows))
}

/// Reads `# gadget <ZZ|XX> <PhiPlus|PlusPlus>` from a circuit's annotations.
fn gadget_header(c: &Circuit) -> Result<(Rotation, AncillaState)> {
    for (_, note) in c.annotations() {
        let w: Vec<&str> = note.split_whitespace().collect();
        if w.first() != Some(&"gadget") {
            continue;
        }
        let rot = match w.get(1).copied() {
            Some("ZZ") => Rotation::Zz,
            Some("XX") => Rotation::Xx,
            other => bail!("unknown gadget rotation {other:?}"),
        };
        let input = match w.get(2).copied() {
            Some("PhiPlus") => AncillaState::PhiPlus,
            Some("PlusPlus") => AncillaState::PlusPlus,
            other => bail!("unknown ancilla state {other:?}"),
        };
        return Ok((rot, input));
    }
    bail!("no `# gadget <ZZ|XX> <PhiPlus|PlusPlus>` line")
}

fn run_oracle(a: OracleArgs) -> Result<()> {
    let checks = match &a.gadget {
        Some(path) => {
            let c = load_circuit(path)?;
            let (rot, input) = gadget_header(&c).with_context(|| path.display().to_string())?;
            let name = format!("gadget {} {}", rot.name(), input);
            let unitary = oracle::verify_gadget_circuit(&c, rot, input)?;
            let ft = faults::check_weak_ft(&c, None)?;
            vec![
                oracle::SuiteCheck {
                    name: format!("{name} unitary"),
                    passed: unitary,
                    detail: format!("{} -> {}", input, input.flipped()),
                },
                oracle::SuiteCheck {
                    name: format!("{name} weakly fault-tolerant"),
                    passed: ft.is_weakly_fault_tolerant(),
                    detail: format!("{} faults, {} undetectable", ft.total, ft.undetectable.len()),
                },
            ]
        }
        None => oracle::run_suite(a.seed)?,
    };
    let mut failed = 0;
    for c in &checks {
        println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        failed += usize::from(!c.passed);
    }
    println!("{} checks, {} failed", checks.len(), failed);
    if failed == 0 {
        Ok(())
    } else {
        Err(Failed.into())
    }
}
