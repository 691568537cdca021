//! Pauli fault insertion, propagation and detectability.
//!
//! A fault is a Pauli inserted right after a gate (or right after a state
//! preparation). It is pushed to the end of the circuit and compared with the
//! final check set. A silent final error is harmless when it lies in the
//! stabilizer group of the output (or, for measured qubits, only multiplies
//! measured observables); otherwise it is undetectable.

mod prob;
mod sweep;
mod tally;

pub use prob::{post_selection_rate, rejection_rate, undetectable_probability, CountingMode};
pub use sweep::{
    p_grid, standard_variants, sweep, sweep_csv, SweepRow, Variant, VariantCircuit, CSV_HEADER,
};
pub use tally::{tally_orders, FaultTally, OrderTally, TallyOptions};

use crate::circuit::{Circuit, PrepState};
use crate::code::CheckSet;
use crate::error::{Error, Result};
use crate::gate::{Basis, GateKind};
use crate::symplectic::{
    conjugate_signed, gf2, BitRow, Gf2Basis, Letter, SignedPauli,
};

/// Which operations count as fault locations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FaultModel {
    /// Flip errors right after `|0⟩`/`|+⟩` preparations.
    pub include_preps: bool,
    /// Single-qubit Pauli-frame gates (recoveries, corrections) as locations.
    pub include_paulis: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LocationKind {
    Gate(GateKind),
    Prep(PrepState),
}

/// Where a fault can strike.
#[derive(Clone, Debug, PartialEq)]
pub struct FaultLocation {
    /// Index of the gate the error follows; `None` for preparations.
    pub gate_index: Option<usize>,
    /// The error is propagated through `gates[slot..]`.
    pub slot: usize,
    /// 1-based qubits the error acts on.
    pub qubits: Vec<usize>,
    pub kind: LocationKind,
}

impl FaultLocation {
    pub fn arity(&self) -> usize {
        self.qubits.len()
    }

    /// 15 for two-qubit gates, 3 for single-qubit gates, 1 for preparations.
    pub fn alphabet_size(&self) -> usize {
        self.errors(self.qubits.iter().copied().max().unwrap_or(0)).len()
    }

    /// The non-identity errors at this location as `n`-qubit Paulis.
    pub fn errors(&self, n: usize) -> Vec<SignedPauli> {
        let pos: Vec<usize> = self.qubits.iter().map(|q| q - 1).collect();
        match &self.kind {
            LocationKind::Prep(PrepState::Zero) => vec![SignedPauli::single(n, pos[0], Letter::X)],
            LocationKind::Prep(PrepState::Plus) => vec![SignedPauli::single(n, pos[0], Letter::Z)],
            LocationKind::Prep(_) => Vec::new(),
            LocationKind::Gate(_) => SignedPauli::all(pos.len())
                .skip(1)
                .map(|p| p.embed(n, &pos))
                .collect(),
        }
    }
}

/// Fault locations of a circuit under `model`.
///
/// SWAPs are relabelings and measurements are perfect, so neither is a location.
pub fn fault_locations(circuit: &Circuit, model: FaultModel) -> Vec<FaultLocation> {
    let mut out = Vec::new();
    if model.include_preps {
        for p in circuit.preps() {
            if matches!(p.state, PrepState::Zero | PrepState::Plus) {
                for &q in &p.qubits {
                    out.push(FaultLocation {
                        gate_index: None,
                        slot: 0,
                        qubits: vec![q],
                        kind: LocationKind::Prep(p.state),
                    });
                }
            }
        }
    }
    for (i, g) in circuit.gates().iter().enumerate() {
        let k = g.kind();
        let skip = matches!(k, GateKind::Swap | GateKind::Measure(_))
            || (k.is_pauli() && !model.include_paulis);
        if !skip {
            out.push(FaultLocation {
                gate_index: Some(i),
                slot: i + 1,
                qubits: g.targets().to_vec(),
                kind: LocationKind::Gate(k),
            });
        }
    }
    out
}

/// Stabilizers of the declared preparations.
pub fn initial_stabilizers(circuit: &Circuit) -> Vec<SignedPauli> {
    let n = circuit.num_qubits();
    circuit
        .preps()
        .iter()
        .flat_map(|p| {
            let pos: Vec<usize> = p.qubits.iter().map(|q| q - 1).collect();
            p.state.stabilizers(n, &pos)
        })
        .collect()
}

/// Pushes a stabilizer group through the circuit. At an RZ only the
/// subgroup commuting with its `Z` survives.
pub fn push_group(circuit: &Circuit, gens: Vec<SignedPauli>) -> Result<Vec<SignedPauli>> {
    let n = circuit.num_qubits();
    let mut gens = gens;
    for g in circuit.gates() {
        match g.kind() {
            GateKind::Measure(_) => continue,
            GateKind::Rz(_) => {
                let z = SignedPauli::single(n, g.targets()[0] - 1, Letter::Z);
                let (anti, mut keep): (Vec<_>, Vec<_>) =
                    gens.into_iter().partition(|s| !s.commutes_with(&z));
                if let Some((first, rest)) = anti.split_first() {
                    for r in rest {
                        keep.push(r.mul(first)?);
                    }
                }
                gens = keep;
            }
            _ => {
                gens = gens
                    .iter()
                    .map(|s| conjugate_signed(g, s))
                    .collect::<Result<_>>()?;
            }
        }
    }
    Ok(gens)
}

/// Observables read out by the terminal measurements.
pub fn measured_observables(circuit: &Circuit) -> Vec<SignedPauli> {
    let n = circuit.num_qubits();
    let mut out = Vec::new();
    for g in circuit.gates() {
        let t: Vec<usize> = g.targets().iter().map(|q| q - 1).collect();
        match g.kind() {
            GateKind::Measure(Basis::Z) => out.push(SignedPauli::single(n, t[0], Letter::Z)),
            GateKind::Measure(Basis::X) => out.push(SignedPauli::single(n, t[0], Letter::X)),
            GateKind::Measure(Basis::Bell) => {
                out.push(SignedPauli::on(n, &t, &[Letter::X, Letter::X]));
                out.push(SignedPauli::on(n, &t, &[Letter::Z, Letter::Z]));
            }
            _ => {}
        }
    }
    out
}

/// Generators of everything that could be measured at the end: the measured
/// observables, the code stabilizers of every code block and any Pauli on an
/// unmeasured ancilla.
fn measurable_group(circuit: &Circuit) -> Vec<SignedPauli> {
    let n = circuit.num_qubits();
    let mut out = measured_observables(circuit);
    let measured: Vec<usize> = circuit
        .gates()
        .iter()
        .filter(|g| g.kind().is_measurement())
        .flat_map(|g| g.targets().to_vec())
        .collect();
    let mut blocks: Vec<Vec<usize>> = circuit
        .preps()
        .iter()
        .filter(|p| p.state == PrepState::Code)
        .map(|p| p.qubits.clone())
        .collect();
    if !circuit.check_qubits().is_empty() {
        let mut b: Vec<usize> = circuit.data_qubits().to_vec();
        b.extend_from_slice(circuit.check_qubits());
        blocks.push(b);
    }
    for b in blocks {
        let pos: Vec<usize> = b.iter().map(|q| q - 1).collect();
        for l in [Letter::X, Letter::Z] {
            out.push(SignedPauli::on(n, &pos, &vec![l; pos.len()]));
        }
    }
    for &a in circuit.ancilla_qubits() {
        if !measured.contains(&a) {
            out.push(SignedPauli::single(n, a - 1, Letter::X));
            out.push(SignedPauli::single(n, a - 1, Letter::Z));
        }
    }
    out
}

/// The check set measured at the end: explicit `stab` lines if present,
/// otherwise the final stabilizers that are measurable.
pub fn derive_checks(circuit: &Circuit) -> Result<CheckSet> {
    let n = circuit.num_qubits();
    if !circuit.explicit_checks().is_empty() {
        return CheckSet::new(n, circuit.explicit_checks().to_vec());
    }
    let fin = push_group(circuit, initial_stabilizers(circuit))?;
    let a: Vec<BitRow> = fin.iter().map(|s| s.symplectic()).collect();
    let b: Vec<BitRow> = measurable_group(circuit).iter().map(|s| s.symplectic()).collect();
    let gens = gf2::intersection(2 * n, &a, &b)
        .iter()
        .map(SignedPauli::from_symplectic)
        .collect();
    CheckSet::new(n, gens)
}

/// `true` iff `final_error` anticommutes with at least one check.
pub fn is_detectable(final_error: &SignedPauli, checks: &CheckSet) -> bool {
    checks
        .generators()
        .iter()
        .any(|c| !c.commutes_with(final_error))
}

/// Signed propagation of `pauli`, inserted right after gate `after`
/// (or before the first gate when `None`), to the end of the circuit.
pub fn propagate(circuit: &Circuit, after: Option<usize>, pauli: &SignedPauli) -> Result<SignedPauli> {
    if pauli.num_qubits() != circuit.num_qubits() {
        return Err(Error::DimensionMismatch {
            expected: circuit.num_qubits(),
            found: pauli.num_qubits(),
        });
    }
    let start = after.map_or(0, |i| i + 1);
    circuit.gates()[start.min(circuit.len())..]
        .iter()
        .filter(|g| !g.kind().is_measurement())
        .try_fold(pauli.clone(), |acc, g| conjugate_signed(g, &acc))
}

/// Outcome of one fault (or fault combination).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FaultClass {
    /// Some check fires.
    Detectable,
    /// Silent and harmless: acts as a stabilizer or a measured observable.
    Benign,
    /// Silent and harmful.
    Undetectable,
}

pub(crate) type Op = (GateKind, [usize; 2]);

/// Precomputed data for classifying faults in one circuit.
#[derive(Clone, Debug)]
pub struct FaultAnalysis {
    n: usize,
    ops: Vec<Op>,
    checks: CheckSet,
    check_masks: Vec<(u128, u128)>,
    benign: Gf2Basis,
    free: Vec<usize>,
    locations: Vec<FaultLocation>,
    final_stabilizers: Vec<SignedPauli>,
    clifford: bool,
}

pub(crate) fn masks(p: &SignedPauli) -> (u128, u128) {
    (p.x().to_u128(), p.z().to_u128())
}

pub(crate) fn from_masks(n: usize, x: u128, z: u128) -> SignedPauli {
    SignedPauli::from_xz(BitRow::from_u128(n, x), BitRow::from_u128(n, z), 0)
        .expect("equal lengths")
}

impl FaultAnalysis {
    /// Builds the analysis; `checks` defaults to [`derive_checks`].
    pub fn new(circuit: &Circuit, checks: Option<&CheckSet>, model: FaultModel) -> Result<Self> {
        let n = circuit.num_qubits();
        if n > 128 {
            return Err(Error::TooLarge(format!("{n} qubits; fault analysis supports 128")));
        }
        let checks = match checks {
            Some(c) => {
                if c.num_qubits() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: c.num_qubits(),
                    });
                }
                c.clone()
            }
            None => derive_checks(circuit)?,
        };
        if checks.len() > 64 {
            return Err(Error::TooLarge(format!("{} checks; at most 64", checks.len())));
        }
        let final_stabilizers = push_group(circuit, initial_stabilizers(circuit))?;
        let mut benign = Gf2Basis::new(2 * n);
        for s in final_stabilizers
            .iter()
            .chain(&measured_observables(circuit))
            .chain(checks.generators())
        {
            benign.insert(&s.symplectic());
        }
        let mut pivots = vec![false; 2 * n];
        for r in benign.rows() {
            let p = r.ones().next().expect("nonzero basis row");
            pivots[p] = true;
        }
        let free: Vec<usize> = (0..2 * n).filter(|&i| !pivots[i]).collect();
        if free.len() > 128 {
            return Err(Error::TooLarge(format!(
                "residual space of dimension {}",
                free.len()
            )));
        }
        let ops = circuit
            .gates()
            .iter()
            .map(|g| {
                let t = g.targets();
                (g.kind(), [t[0] - 1, t.get(1).map_or(0, |q| q - 1)])
            })
            .collect();
        Ok(Self {
            n,
            ops,
            check_masks: checks.generators().iter().map(masks).collect(),
            checks,
            benign,
            free,
            locations: fault_locations(circuit, model),
            final_stabilizers,
            clifford: circuit.is_clifford(),
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn checks(&self) -> &CheckSet {
        &self.checks
    }

    pub fn final_stabilizers(&self) -> &[SignedPauli] {
        &self.final_stabilizers
    }

    pub fn locations(&self) -> &[FaultLocation] {
        &self.locations
    }

    /// Whether every fault propagates to a single Pauli (no RZ branching).
    pub fn is_clifford(&self) -> bool {
        self.clifford
    }

    pub(crate) fn ops(&self) -> &[Op] {
        &self.ops
    }

    /// Bitmask of checks anticommuting with `(x, z)`.
    #[inline]
    pub fn syndrome(&self, x: u128, z: u128) -> u64 {
        let mut s = 0u64;
        for (i, &(cx, cz)) in self.check_masks.iter().enumerate() {
            let par = ((x & cz).count_ones() + (z & cx).count_ones()) & 1;
            s |= (par as u64) << i;
        }
        s
    }

    /// Coordinates of `(x, z)` modulo the harmless span; zero iff harmless.
    /// Linear, so residuals of products are XORs of residuals.
    pub fn residual(&self, x: u128, z: u128) -> u128 {
        let n = self.n;
        let mut v = BitRow::zeros(2 * n);
        for q in 0..n {
            v.set(q, (x >> q) & 1 == 1);
            v.set(n + q, (z >> q) & 1 == 1);
        }
        let r = self.benign.reduce(&v);
        self.free
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, &c)| acc | ((r.get(c) as u128) << i))
    }

    /// Propagates `(x, z)` through `ops[slot..]`. An RZ hit by an
    /// anticommuting error splits it into `P` and `Z_q P`.
    pub fn propagate_masks(&self, slot: usize, x: u128, z: u128) -> Vec<(u128, u128)> {
        let mut cur = vec![(x, z)];
        self.advance(&mut cur, slot, self.ops.len());
        cur
    }

    /// Applies `ops[from..to]` to every branch in place.
    pub(crate) fn advance(&self, branches: &mut Vec<(u128, u128)>, from: usize, to: usize) {
        for &(kind, t) in &self.ops[from..to] {
            match kind {
                GateKind::Measure(_) => {}
                GateKind::Rz(_) => {
                    let bit = 1u128 << t[0];
                    let extra: Vec<_> = branches
                        .iter()
                        .filter(|(x, _)| x & bit != 0)
                        .map(|&(x, z)| (x, z ^ bit))
                        .collect();
                    if !extra.is_empty() {
                        branches.extend(extra);
                        branches.sort_unstable();
                        branches.dedup();
                    }
                }
                _ => {
                    let ar = kind.arity();
                    for b in branches.iter_mut() {
                        *b = crate::symplectic::conjugate::conjugate_masks(kind, &t[..ar], b.0, b.1)
                            .expect("Clifford op");
                    }
                }
            }
        }
    }

    /// Classifies a set of final branches.
    pub fn classify_branches(&self, branches: &[(u128, u128)]) -> FaultClass {
        let mut all_flagged = true;
        for &(x, z) in branches {
            if self.syndrome(x, z) == 0 {
                all_flagged = false;
                if self.residual(x, z) != 0 {
                    return FaultClass::Undetectable;
                }
            }
        }
        if all_flagged {
            FaultClass::Detectable
        } else {
            FaultClass::Benign
        }
    }

    /// `(x, z)` masks of the errors at location `i`, before propagation.
    pub fn error_masks(&self, i: usize) -> Vec<(u128, u128)> {
        self.locations[i].errors(self.n).iter().map(masks).collect()
    }
}

/// One single fault that escapes detection.
#[derive(Clone, Debug, PartialEq)]
pub struct UndetectableFault {
    pub location: FaultLocation,
    /// The inserted error.
    pub error: SignedPauli,
    /// Final error branches (one unless an RZ split it).
    pub finals: Vec<SignedPauli>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeakFtReport {
    pub total: usize,
    pub detectable: usize,
    pub benign: usize,
    pub undetectable: Vec<UndetectableFault>,
}

impl WeakFtReport {
    pub fn is_weakly_fault_tolerant(&self) -> bool {
        self.undetectable.is_empty()
    }
}

/// Exhaustive single-fault check.
pub fn check_weak_ft(circuit: &Circuit, checks: Option<&CheckSet>) -> Result<WeakFtReport> {
    check_weak_ft_with(&FaultAnalysis::new(circuit, checks, FaultModel::default())?)
}

pub fn check_weak_ft_with(a: &FaultAnalysis) -> Result<WeakFtReport> {
    let mut rep = WeakFtReport {
        total: 0,
        detectable: 0,
        benign: 0,
        undetectable: Vec::new(),
    };
    for (i, loc) in a.locations().iter().enumerate() {
        for (err, (x, z)) in loc.errors(a.n).into_iter().zip(a.error_masks(i)) {
            rep.total += 1;
            let branches = a.propagate_masks(loc.slot, x, z);
            match a.classify_branches(&branches) {
                FaultClass::Detectable => rep.detectable += 1,
                FaultClass::Benign => rep.benign += 1,
                FaultClass::Undetectable => rep.undetectable.push(UndetectableFault {
                    location: loc.clone(),
                    error: err,
                    finals: branches.iter().map(|&(x, z)| from_masks(a.n, x, z)).collect(),
                }),
            }
        }
    }
    Ok(rep)
}
