//! Logical-circuit compiler.
//!
//! A logical program over `k` logical qubits is lowered to the code with
//! `n = k + 2` physical code qubits (odd `k` is padded by one idle logical
//! qubit) plus four ancillas: the gadget pair at `n+1, n+2`, the
//! init/readout flag at `n+3` and the rotation ancilla at `n+4`.

mod layers;
mod program;

pub use layers::schedule_layers;
pub use program::{parse_program, Instruction, LogicalProgram};

use std::fmt::Write as _;

use crate::circuit::{self, Circuit, PrepState};
use crate::code::AncillaState;
use crate::error::Result;
use crate::gadgets::{self, wft, ReadoutDecoder, Rotation};
use crate::gate::{g, Gate, GateKind};

pub const ANCILLAS: usize = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LowerOptions {
    /// Replace every ZZ/XX by its weakly fault-tolerant gadget.
    pub wft: bool,
    /// Prefix the GHZ initialization and suffix the readout.
    pub init_readout: bool,
    /// At `n = 4`, use the SWAP-CNOT of the `[[4,2,2]]` logical basis.
    pub n4_special: bool,
}

/// Qubit layout of a compiled program.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Layout {
    /// Code length.
    pub n: usize,
    pub gadget_ancillas: (usize, usize),
    pub io_ancilla: usize,
    pub rz_ancilla: usize,
}

impl Layout {
    pub fn for_logical(k: usize) -> Self {
        let n = k + k % 2 + 2;
        Self {
            n,
            gadget_ancillas: (n + 1, n + 2),
            io_ancilla: n + 3,
            rz_ancilla: n + 4,
        }
    }

    pub fn total(&self) -> usize {
        self.n + ANCILLAS
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GadgetRecord {
    pub rotation: Rotation,
    pub input: AncillaState,
    pub targets: (usize, usize),
    /// Recovery Pauli on (ancilla 1, ancilla 2, target 1, target 2).
    pub recovery: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Resources {
    pub num_logical: usize,
    /// Code qubits.
    pub n_code: usize,
    pub n_ancillas: usize,
    /// Code qubits plus ancillas.
    pub n_physical: usize,
    /// Gates excluding Pauli frame updates and measurements.
    pub gate_count: usize,
    pub two_qubit_count: usize,
    pub pauli_count: usize,
    pub measurement_count: usize,
    pub layer_count: usize,
    pub gadgets_zz: usize,
    pub gadgets_xx: usize,
}

impl Resources {
    /// `(N − 6)/N` with `N` counting the ancillas.
    pub fn code_rate(&self) -> f64 {
        (self.n_physical as f64 - 6.0) / self.n_physical as f64
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompilationResult {
    pub program: LogicalProgram,
    pub options: LowerOptions,
    pub layout: Layout,
    pub physical: Circuit,
    /// Ancilla state consumed by each gadget, in order.
    pub ancilla_trace: Vec<AncillaState>,
    pub recovery_log: Vec<GadgetRecord>,
    pub readout: Option<ReadoutDecoder>,
}

fn lower_instruction(ins: &Instruction, lay: &Layout, opts: LowerOptions) -> Vec<Gate> {
    let n = lay.n;
    match *ins {
        Instruction::H(j) => {
            let mut v = vec![g::zz(j, n), g::xx(j, n - 1), g::zz(j, n)];
            v.extend(gadgets::hadamard_corrections(j, n));
            v
        }
        Instruction::S(j) => vec![g::zz(j, n)],
        Instruction::Cnot(j, k) if opts.n4_special && n == 4 => match (j, k) {
            (1, 2) => vec![g::swap(2, 3)],
            _ => vec![g::swap(1, 2)],
        },
        Instruction::Cnot(j, k) => vec![
            g::xx(k, n),
            g::xx(n - 1, n),
            g::zz(j, n),
            g::xx(n - 1, n),
            g::xx(k, n),
            g::zz(j, n),
            g::xx(k, n - 1),
        ],
        Instruction::Swap(j, k) => vec![g::swap(j, k)],
        Instruction::Rz(j, theta) => {
            let a = lay.rz_ancilla;
            vec![
                g::cnot(n, a),
                g::cnot(a, j),
                g::rz(j, theta),
                g::cnot(a, j),
                g::cnot(n, a),
            ]
        }
    }
}

/// Lowers a program to a physical circuit.
pub fn lower(program: &LogicalProgram, opts: LowerOptions) -> Result<CompilationResult> {
    let lay = Layout::for_logical(program.num_logical);
    let n = lay.n;
    let (a1, a2) = lay.gadget_ancillas;
    let data: Vec<usize> = (1..=n - 2).collect();
    let mut bare = Circuit::new(lay.total());
    bare.set_roles(&data, &[n - 1, n], &[a1, a2, lay.io_ancilla, lay.rz_ancilla])?;
    if opts.init_readout {
        let zeros: Vec<usize> = (1..=n - 2).chain([n, lay.io_ancilla]).collect();
        bare.add_prep(&zeros, PrepState::Zero)?;
        bare.add_prep(&[n - 1], PrepState::Plus)?;
    } else {
        bare.add_prep(&(1..=n).collect::<Vec<_>>(), PrepState::Code)?;
        bare.add_prep(&[lay.io_ancilla], PrepState::Zero)?;
    }
    bare.add_prep(&[lay.rz_ancilla], PrepState::Zero)?;
    let io_map: Vec<usize> = (1..=n).chain([lay.io_ancilla]).collect();
    if opts.init_readout {
        bare.annotate(format!("init n={n}"));
        bare.append_mapped(&gadgets::init_circuit(n)?, &io_map)?;
    }
    for ins in &program.instructions {
        bare.annotate(format!("logical {ins}"));
        bare.extend(lower_instruction(ins, &lay, opts))?;
    }
    let mut ancilla_trace = Vec::new();
    let mut recovery_log = Vec::new();
    let mut state = AncillaState::PhiPlus;
    for gate in bare.gates() {
        if let Some(r) = Rotation::of_kind(gate.kind()) {
            let gd = wft(r, state);
            ancilla_trace.push(state);
            recovery_log.push(GadgetRecord {
                rotation: r,
                input: state,
                targets: (gate.targets()[0], gate.targets()[1]),
                recovery: gd.recovery.letters(),
            });
            state = gd.output();
        }
    }
    let mut physical = if opts.wft {
        gadgets::make_weakly_fault_tolerant(&bare, a1, a2)?.0
    } else {
        ancilla_trace.clear();
        recovery_log.clear();
        bare
    };
    let readout = if opts.init_readout {
        let (r, dec) = gadgets::readout_circuit(n)?;
        physical.annotate(format!("readout n={n}"));
        physical.append_mapped(&r, &io_map)?;
        Some(dec)
    } else {
        None
    };
    Ok(CompilationResult {
        program: program.clone(),
        options: opts,
        layout: lay,
        physical,
        ancilla_trace,
        recovery_log,
        readout,
    })
}

/// Parses and lowers in one step.
pub fn compile(text: &str, opts: LowerOptions) -> Result<CompilationResult> {
    lower(&parse_program(text)?, opts)
}

pub fn resource_report(r: &CompilationResult) -> Resources {
    let c = &r.physical;
    let count = |rot| r.recovery_log.iter().filter(|g| g.rotation == rot).count();
    Resources {
        num_logical: r.program.num_logical,
        n_code: r.layout.n,
        n_ancillas: ANCILLAS,
        n_physical: r.layout.total(),
        gate_count: c.operation_count(),
        two_qubit_count: c.two_qubit_count(),
        pauli_count: c.count_where(|g| g.kind().is_pauli()),
        measurement_count: c.count_where(|g| g.kind().is_measurement()),
        layer_count: schedule_layers(c).len(),
        gadgets_zz: count(Rotation::Zz),
        gadgets_xx: count(Rotation::Xx),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmitFormat {
    CircuitText,
    CsvSummary,
}

pub const SUMMARY_HEADER: &str = "num_logical,n_code,n_ancillas,n_physical,gates,two_qubit_gates,paulis,measurements,layers,gadgets_zz,gadgets_xx,code_rate";

pub fn emit(r: &CompilationResult, format: EmitFormat) -> String {
    match format {
        EmitFormat::CircuitText => circuit::emit(&r.physical),
        EmitFormat::CsvSummary => {
            let s = resource_report(r);
            let mut out = String::from(SUMMARY_HEADER);
            let _ = writeln!(
                out,
                "\n{},{},{},{},{},{},{},{},{},{},{},{:.6}",
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
            );
            out
        }
    }
}

/// Ideal unitary circuit of a program on its logical qubits (`S` as `RZ(π/2)`).
pub fn logical_circuit(p: &LogicalProgram) -> Result<Circuit> {
    let mut c = Circuit::new(p.num_logical);
    for ins in &p.instructions {
        c.push(match *ins {
            Instruction::H(j) => g::h(j),
            Instruction::S(j) => g::rz(j, std::f64::consts::FRAC_PI_2),
            Instruction::Cnot(j, k) => g::cnot(j, k),
            Instruction::Swap(j, k) => g::swap(j, k),
            Instruction::Rz(j, t) => Gate::new(GateKind::Rz(t), &[j])?,
        })?;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faults::check_weak_ft;

    fn wft() -> LowerOptions {
        LowerOptions {
            wft: true,
            ..Default::default()
        }
    }

    #[test]
    fn cnot_counts() {
        let r = compile("CNOT 1 2", wft()).unwrap();
        let s = resource_report(&r);
        assert_eq!((s.gate_count, s.layer_count), (63, 56));
        assert_eq!(s.n_physical, 8);
        let bare = compile("CNOT 1 2", LowerOptions::default()).unwrap();
        assert_eq!(resource_report(&bare).two_qubit_count, 7);
        let big = compile("qubits 4\nCNOT 1 2", wft()).unwrap();
        assert_eq!(resource_report(&big).gate_count, 63);
        let h = compile("H 1", wft()).unwrap();
        assert_eq!(resource_report(&h).gate_count, 27);
    }

    #[test]
    fn trace_alternates() {
        let r = compile("H 1\nCNOT 2 1\nS 2", wft()).unwrap();
        assert_eq!(r.ancilla_trace.len(), 3 + 7 + 1);
        for w in r.ancilla_trace.windows(2) {
            assert_eq!(w[1], w[0].flipped());
        }
        assert_eq!(r.ancilla_trace[0], AncillaState::PhiPlus);
    }

    #[test]
    fn rate_and_padding() {
        let r = compile("qubits 10\nH 1", LowerOptions::default()).unwrap();
        let s = resource_report(&r);
        assert_eq!(s.n_physical, 16);
        assert!((s.code_rate() - 10.0 / 16.0).abs() < 1e-15);
        assert_eq!(Layout::for_logical(3).n, 6);
        let e = compile("", LowerOptions::default()).unwrap();
        assert_eq!(resource_report(&e).gate_count, 0);
    }

    #[test]
    fn compiled_clifford_program_is_weakly_fault_tolerant() {
        let r = compile("H 1\nCNOT 1 2\nS 2\nSWAP 1 2", wft()).unwrap();
        let rep = check_weak_ft(&r.physical, None).unwrap();
        assert!(rep.is_weakly_fault_tolerant(), "{:?}", rep.undetectable.first());
        let bare = compile("H 1", LowerOptions::default()).unwrap();
        assert!(!check_weak_ft(&bare.physical, None).unwrap().is_weakly_fault_tolerant());
    }

    #[test]
    fn with_init_and_readout() {
        let opts = LowerOptions {
            wft: true,
            init_readout: true,
            n4_special: false,
        };
        let r = compile("CNOT 1 2", opts).unwrap();
        assert!(r.readout.is_some());
        let rep = check_weak_ft(&r.physical, None).unwrap();
        assert!(rep.is_weakly_fault_tolerant(), "{:?}", rep.undetectable.first());
    }

    #[test]
    fn rz_exceptions_per_instance() {
        let r = compile("RZ 1 0.3\nH 2\nRZ 2 0.5", wft()).unwrap();
        let rep = check_weak_ft(&r.physical, None).unwrap();
        assert_eq!(rep.undetectable.len(), 6);
    }

    #[test]
    fn emit_round_trips() {
        let r = compile("CNOT 1 2", wft()).unwrap();
        let text = emit(&r, EmitFormat::CircuitText);
        assert!(text.contains("# gadget ZZ PhiPlus") || text.contains("# gadget XX PhiPlus"));
        let back = crate::circuit::parse(&text).unwrap();
        assert_eq!(back, r.physical);
        assert_eq!(emit(&r, EmitFormat::CircuitText), text);
        assert!(emit(&r, EmitFormat::CsvSummary).lines().nth(1).unwrap().starts_with("2,4,4,8,63,"));
    }
}
