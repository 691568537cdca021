//! Gate lists over indexed qubits, with qubit roles and preparations.

mod text;

pub use text::{emit, parse};

use std::fmt;

use crate::error::{Error, Result};
use crate::gate::{Gate, GateKind};
use crate::symplectic::{Letter, SignedPauli};

/// Declared initial state of a group of qubits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PrepState {
    /// `|0⟩` on each listed qubit.
    Zero,
    /// `|+⟩` on each listed qubit.
    Plus,
    /// `(|00⟩ + |11⟩)/√2` on exactly two qubits.
    PhiPlus,
    /// `|++⟩` on exactly two qubits.
    PlusPlus,
    /// Some code state of `X^⊗m`, `Z^⊗m` on an even number of qubits.
    Code,
    /// The resource state `(e^{iθ/2}|0⟩ + e^{−iθ/2}|1⟩)/√2` on one qubit.
    Phi(f64),
}

impl PrepState {
    pub fn label(&self) -> String {
        match self {
            PrepState::Zero => "Zero".into(),
            PrepState::Plus => "Plus".into(),
            PrepState::PhiPlus => "PhiPlus".into(),
            PrepState::PlusPlus => "PlusPlus".into(),
            PrepState::Code => "Code".into(),
            PrepState::Phi(t) => format!("Phi {t}"),
        }
    }

    fn check_size(&self, m: usize) -> Result<()> {
        let ok = match self {
            PrepState::Zero | PrepState::Plus => m >= 1,
            PrepState::PhiPlus | PrepState::PlusPlus => m == 2,
            PrepState::Code => m >= 2 && m.is_multiple_of(2),
            PrepState::Phi(_) => m == 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "{} cannot be prepared on {m} qubit(s)",
                self.label()
            )))
        }
    }

    /// Stabilizer generators on 0-based positions `qs` of an `n`-qubit register.
    pub fn stabilizers(&self, n: usize, qs: &[usize]) -> Vec<SignedPauli> {
        let all = |l: Letter| SignedPauli::on(n, qs, &vec![l; qs.len()]);
        match self {
            PrepState::Zero => qs.iter().map(|&q| SignedPauli::single(n, q, Letter::Z)).collect(),
            PrepState::Plus | PrepState::PlusPlus => {
                qs.iter().map(|&q| SignedPauli::single(n, q, Letter::X)).collect()
            }
            PrepState::PhiPlus | PrepState::Code => vec![all(Letter::X), all(Letter::Z)],
            PrepState::Phi(_) => Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Prep {
    pub qubits: Vec<usize>,
    pub state: PrepState,
}

/// An ordered gate list with qubit roles.
///
/// Qubits are 1-based. Full-line comments are kept as annotations attached
/// before the gate at the stored index.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Circuit {
    n: usize,
    gates: Vec<Gate>,
    data: Vec<usize>,
    check_qubits: Vec<usize>,
    ancillas: Vec<usize>,
    preps: Vec<Prep>,
    stabs: Vec<SignedPauli>,
    annotations: Vec<(usize, String)>,
}

impl Circuit {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            ..Default::default()
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn data_qubits(&self) -> &[usize] {
        &self.data
    }

    pub fn check_qubits(&self) -> &[usize] {
        &self.check_qubits
    }

    pub fn ancilla_qubits(&self) -> &[usize] {
        &self.ancillas
    }

    pub fn preps(&self) -> &[Prep] {
        &self.preps
    }

    /// Explicit final check generators; empty means "derive".
    pub fn explicit_checks(&self) -> &[SignedPauli] {
        &self.stabs
    }

    pub fn annotations(&self) -> &[(usize, String)] {
        &self.annotations
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q == 0 || q > self.n {
            return Err(Error::QubitOutOfRange { qubit: q, n: self.n });
        }
        Ok(())
    }

    fn check_disjoint(&self, qs: &[usize]) -> Result<()> {
        for &q in qs {
            self.check_qubit(q)?;
            if self.data.contains(&q) || self.check_qubits.contains(&q) || self.ancillas.contains(&q) {
                return Err(Error::InvalidArgument(format!(
                    "qubit {q} is assigned two roles"
                )));
            }
        }
        Ok(())
    }

    pub fn set_roles(&mut self, data: &[usize], checks: &[usize], ancillas: &[usize]) -> Result<()> {
        self.data.clear();
        self.check_qubits.clear();
        self.ancillas.clear();
        self.check_disjoint(data)?;
        self.data = data.to_vec();
        self.check_disjoint(checks)?;
        self.check_qubits = checks.to_vec();
        self.check_disjoint(ancillas)?;
        self.ancillas = ancillas.to_vec();
        Ok(())
    }

    pub fn with_roles(mut self, data: &[usize], checks: &[usize], ancillas: &[usize]) -> Result<Self> {
        self.set_roles(data, checks, ancillas)?;
        Ok(self)
    }

    pub fn add_prep(&mut self, qubits: &[usize], state: PrepState) -> Result<()> {
        state.check_size(qubits.len())?;
        for &q in qubits {
            self.check_qubit(q)?;
            if self.preps.iter().any(|p| p.qubits.contains(&q)) {
                return Err(Error::InvalidArgument(format!("qubit {q} prepared twice")));
            }
        }
        self.preps.push(Prep {
            qubits: qubits.to_vec(),
            state,
        });
        Ok(())
    }

    pub fn with_prep(mut self, qubits: &[usize], state: PrepState) -> Result<Self> {
        self.add_prep(qubits, state)?;
        Ok(self)
    }

    pub fn set_explicit_checks(&mut self, stabs: Vec<SignedPauli>) -> Result<()> {
        if let Some(s) = stabs.iter().find(|s| s.num_qubits() != self.n) {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: s.num_qubits(),
            });
        }
        self.stabs = stabs;
        Ok(())
    }

    /// Appends a gate. Gates may not act on a qubit after it was measured.
    pub fn push(&mut self, gate: Gate) -> Result<()> {
        for &q in gate.targets() {
            self.check_qubit(q)?;
            if self.is_measured(q) {
                return Err(Error::InvalidArgument(format!(
                    "gate {gate} acts on qubit {q} after its measurement"
                )));
            }
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) -> Result<()> {
        for g in gates {
            self.push(g)?;
        }
        Ok(())
    }

    /// Appends `other`'s gates with qubit `q` of `other` mapped to `map[q − 1]`.
    /// Annotations are carried over.
    pub fn append_mapped(&mut self, other: &Circuit, map: &[usize]) -> Result<()> {
        if map.len() < other.n {
            return Err(Error::DimensionMismatch {
                expected: other.n,
                found: map.len(),
            });
        }
        let offset = self.gates.len();
        for (i, text) in &other.annotations {
            self.annotations.push((offset + i, text.clone()));
        }
        for g in &other.gates {
            self.push(g.relabel(|q| map[q - 1]))?;
        }
        Ok(())
    }

    /// Attaches a comment before the next gate to be pushed.
    pub fn annotate(&mut self, text: impl Into<String>) {
        self.annotations.push((self.gates.len(), text.into()));
    }

    fn is_measured(&self, q: usize) -> bool {
        self.gates
            .iter()
            .any(|g| g.kind().is_measurement() && g.targets().contains(&q))
    }

    pub fn count_where(&self, f: impl Fn(&Gate) -> bool) -> usize {
        self.gates.iter().filter(|g| f(g)).count()
    }

    pub fn two_qubit_count(&self) -> usize {
        self.count_where(|g| g.kind().arity() == 2 && !g.kind().is_measurement())
    }

    /// Gates other than Pauli-frame corrections and measurements.
    pub fn operation_count(&self) -> usize {
        self.count_where(|g| !g.kind().is_pauli() && !g.kind().is_measurement())
    }

    pub fn has_measurements(&self) -> bool {
        self.gates.iter().any(|g| g.kind().is_measurement())
    }

    pub fn is_clifford(&self) -> bool {
        self.gates.iter().all(|g| g.kind().is_clifford() || g.kind().is_measurement())
    }

    /// Copy of the circuit without its measurement gates.
    pub fn without_measurements(&self) -> Circuit {
        let mut out = self.clone();
        out.gates.retain(|g| !g.kind().is_measurement());
        out.annotations.clear();
        out
    }

    /// Copy with gate `index` removed; annotations are dropped.
    pub fn without_gate(&self, index: usize) -> Circuit {
        let mut out = self.clone();
        out.gates.remove(index);
        out.annotations.clear();
        out
    }

    /// The same circuit on a register of `m >= n` qubits.
    pub fn widened(&self, m: usize) -> Result<Circuit> {
        if m < self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: m,
            });
        }
        let mut out = self.clone();
        out.n = m;
        for s in &mut out.stabs {
            *s = s.embed(m, &(0..self.n).collect::<Vec<_>>());
        }
        Ok(out)
    }

    /// Appends a signed Pauli as single-qubit Pauli gates (the sign is a
    /// global phase and is dropped).
    pub fn push_pauli(&mut self, p: &SignedPauli) -> Result<()> {
        for q in 0..p.num_qubits() {
            match p.letter(q) {
                Letter::I => {}
                Letter::X => self.push(crate::gate::g::x(q + 1))?,
                Letter::Y => self.push(crate::gate::g::y(q + 1))?,
                Letter::Z => self.push(crate::gate::g::z(q + 1))?,
            }
        }
        Ok(())
    }

    /// Copy with every RZ angle replaced.
    pub fn with_rz_angle(&self, theta: f64) -> Circuit {
        let mut out = self.clone();
        for g in &mut out.gates {
            if let GateKind::Rz(_) = g.kind() {
                *g = Gate::new(GateKind::Rz(theta), g.targets()).expect("same targets");
            }
        }
        out
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::g;

    #[test]
    fn rejects_out_of_range_and_post_measurement_gates() {
        let mut c = Circuit::new(2);
        assert!(c.push(g::zz(1, 3)).is_err());
        c.push(g::mz(1)).unwrap();
        assert!(c.push(g::h(1)).is_err());
        c.push(g::h(2)).unwrap();
    }

    #[test]
    fn roles_are_disjoint() {
        assert!(Circuit::new(4).with_roles(&[1, 2], &[2], &[]).is_err());
        assert!(Circuit::new(4).with_roles(&[1, 2], &[3, 4], &[]).is_ok());
    }

    #[test]
    fn prep_sizes() {
        let c = Circuit::new(4);
        assert!(c.clone().with_prep(&[1], PrepState::PhiPlus).is_err());
        assert!(c.clone().with_prep(&[1, 2, 3], PrepState::Code).is_err());
        let c = c.with_prep(&[1, 2], PrepState::PhiPlus).unwrap();
        assert!(c.with_prep(&[2, 3], PrepState::PlusPlus).is_err());
    }

    #[test]
    fn append_mapped_relabels() {
        let mut inner = Circuit::new(2);
        inner.annotate("hello");
        inner.push(g::cnot(1, 2)).unwrap();
        let mut outer = Circuit::new(5);
        outer.push(g::h(1)).unwrap();
        outer.append_mapped(&inner, &[5, 3]).unwrap();
        assert_eq!(outer.gates()[1], g::cnot(5, 3));
        assert_eq!(outer.annotations(), &[(1, "hello".to_string())]);
    }
}
