//! Weakly fault-tolerant ZZ and XX gadgets.
//!
//! Each gadget acts on four qubits: ancillas 1, 2 and data 3, 4. It flips the
//! ancilla pair between `|Φ+⟩` and `|++⟩` and needs a Pauli recovery after it.

use crate::circuit::{Circuit, PrepState};
use crate::code::AncillaState;
use crate::error::{Error, Result};
use crate::gate::{g, Gate, GateKind};
use crate::symplectic::{Letter, SignedPauli};

/// The two-qubit rotation a gadget implements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rotation {
    Zz,
    Xx,
}

impl Rotation {
    pub fn gate(self, a: usize, b: usize) -> Gate {
        match self {
            Rotation::Zz => g::zz(a, b),
            Rotation::Xx => g::xx(a, b),
        }
    }

    pub fn of_kind(kind: GateKind) -> Option<Self> {
        match kind {
            GateKind::Zz => Some(Rotation::Zz),
            GateKind::Xx => Some(Rotation::Xx),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Rotation::Zz => "ZZ",
            Rotation::Xx => "XX",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Gadget {
    pub rotation: Rotation,
    pub input: AncillaState,
    /// Nine gates, recovery not included.
    pub gates: Vec<Gate>,
    /// Recovery Pauli on qubits 1–4.
    pub recovery: SignedPauli,
}

impl Gadget {
    pub fn output(&self) -> AncillaState {
        self.input.flipped()
    }

    /// Recovery as single-qubit Pauli gates on gadget qubits.
    pub fn recovery_gates(&self) -> Vec<Gate> {
        (0..4)
            .filter_map(|q| match self.recovery.letter(q) {
                Letter::I => None,
                Letter::X => Some(g::x(q + 1)),
                Letter::Y => Some(g::y(q + 1)),
                Letter::Z => Some(g::z(q + 1)),
            })
            .collect()
    }

    fn frame(&self) -> Circuit {
        Circuit::new(4)
            .with_roles(&[3, 4], &[], &[1, 2])
            .and_then(|c| c.with_prep(&[1, 2], self.input.prep_state()))
            .and_then(|c| c.with_prep(&[3, 4], PrepState::Code))
            .expect("fixed gadget frame")
    }

    /// The nine-gate circuit with ancilla and data preparations declared.
    pub fn circuit(&self) -> Circuit {
        let mut c = self.frame();
        c.annotate(format!("gadget {} {}", self.rotation.name(), self.input));
        c.extend(self.gates.iter().cloned()).expect("gadget gates in range");
        c
    }

    /// [`Gadget::circuit`] followed by the recovery Paulis.
    pub fn circuit_with_recovery(&self) -> Circuit {
        let mut c = self.circuit();
        c.annotate(format!("recovery {}", self.recovery.letters()));
        c.extend(self.recovery_gates()).expect("recovery in range");
        c
    }
}

fn table(rotation: Rotation, input: AncillaState) -> (Vec<Gate>, &'static str) {
    use AncillaState::*;
    match (rotation, input) {
        (Rotation::Zz, PhiPlus) => (
            vec![
                g::zz(1, 4),
                g::xx(1, 3),
                g::zz(1, 2),
                g::yy(2, 3),
                g::xx(1, 3),
                g::rx(2),
                g::zz(1, 2),
                g::zz(1, 4),
                g::yy(2, 3),
            ],
            "ZIZI",
        ),
        (Rotation::Zz, PlusPlus) => (
            vec![
                g::zz(1, 2),
                g::rx(2),
                g::zz(1, 3),
                g::zz(1, 4),
                g::xx(1, 3),
                g::yy(2, 3),
                g::xx(1, 2),
                g::xx(1, 3),
                g::zz(1, 4),
            ],
            "XIXI",
        ),
        (Rotation::Xx, PhiPlus) => (
            vec![
                g::xx(1, 4),
                g::zz(1, 3),
                g::xx(1, 3),
                g::yy(2, 3),
                g::zz(1, 2),
                g::zz(1, 3),
                g::rx(2),
                g::xx(1, 4),
                g::zz(1, 2),
            ],
            "IZYI",
        ),
        (Rotation::Xx, PlusPlus) => (
            vec![
                g::zz(1, 2),
                g::xx(1, 3),
                g::rx(2),
                g::xx(1, 4),
                g::zz(1, 3),
                g::yy(2, 3),
                g::zz(1, 2),
                g::zz(1, 3),
                g::xx(1, 4),
            ],
            "YIYI",
        ),
    }
}

pub fn wft(rotation: Rotation, input: AncillaState) -> Gadget {
    let (gates, rec) = table(rotation, input);
    Gadget {
        rotation,
        input,
        gates,
        recovery: rec.parse().expect("recovery literal"),
    }
}

pub fn wft_zz(input: AncillaState) -> Gadget {
    wft(Rotation::Zz, input)
}

pub fn wft_xx(input: AncillaState) -> Gadget {
    wft(Rotation::Xx, input)
}

/// All four gadgets.
pub fn all_gadgets() -> Vec<Gadget> {
    let mut out = Vec::new();
    for r in [Rotation::Zz, Rotation::Xx] {
        for s in [AncillaState::PhiPlus, AncillaState::PlusPlus] {
            out.push(wft(r, s));
        }
    }
    out
}

/// Replaces every `ZZ`/`XX` of a bare circuit by its gadget plus recovery,
/// using qubits `a1`, `a2` as the ancilla pair (starting in `|Φ+⟩`).
///
/// Returns the new circuit and the final ancilla state.
pub fn make_weakly_fault_tolerant(c: &Circuit, a1: usize, a2: usize) -> Result<(Circuit, AncillaState)> {
    for g in c.gates() {
        if g.targets().contains(&a1) || g.targets().contains(&a2) {
            return Err(Error::InvalidArgument(format!("gate {g} uses a gadget ancilla")));
        }
    }
    let mut out = Circuit::new(c.num_qubits());
    let mut anc = c.ancilla_qubits().to_vec();
    for a in [a1, a2] {
        if !anc.contains(&a) {
            anc.push(a);
        }
    }
    out.set_roles(c.data_qubits(), c.check_qubits(), &anc)?;
    for p in c.preps() {
        out.add_prep(&p.qubits, p.state)?;
    }
    out.add_prep(&[a1, a2], PrepState::PhiPlus)?;
    let mut state = AncillaState::PhiPlus;
    let notes = c.annotations();
    let note = |out: &mut Circuit, i: usize| {
        for (_, t) in notes.iter().filter(|(j, _)| *j == i) {
            out.annotate(t.clone());
        }
    };
    for (i, g) in c.gates().iter().enumerate() {
        note(&mut out, i);
        match Rotation::of_kind(g.kind()) {
            Some(r) => {
                let gd = wft(r, state);
                let t = g.targets();
                out.append_mapped(&gd.circuit_with_recovery(), &[a1, a2, t[0], t[1]])?;
                state = gd.output();
            }
            None => out.push(g.clone())?,
        }
    }
    note(&mut out, c.len());
    if !c.explicit_checks().is_empty() {
        let mut stabs = c.explicit_checks().to_vec();
        stabs.extend(state.stabilizers(c.num_qubits(), a1 - 1, a2 - 1));
        out.set_explicit_checks(stabs)?;
    }
    Ok((out, state))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::{conjugate_through, gf2::Gf2Basis, pauli};

    #[test]
    fn nine_gates_one_rx() {
        for gd in all_gadgets() {
            assert_eq!(gd.gates.len(), 9);
            assert_eq!(gd.gates.iter().filter(|g| g.kind() == GateKind::Rx).count(), 1);
        }
    }

    #[test]
    fn ancilla_stabilizers_flip() {
        for gd in all_gadgets() {
            let c = gd.circuit_with_recovery();
            let out: Vec<_> = gd
                .output()
                .stabilizers(4, 0, 1)
                .iter()
                .map(|s| s.symplectic())
                .collect();
            let span = Gf2Basis::from_rows(8, &out);
            for s in gd.input.stabilizers(4, 0, 1) {
                let img = conjugate_through(c.gates(), &s).unwrap();
                assert!(img.is_hermitian());
                assert!(span.contains(&img.symplectic()), "{:?} {s} -> {img}", gd.rotation);
            }
        }
    }

    #[test]
    fn wft_hadamard_has_27_gates() {
        let bare = crate::gadgets::encoded_hadamard(1, 4).unwrap();
        let mut wide = Circuit::new(6).with_roles(&[1, 2], &[3, 4], &[]).unwrap();
        wide.add_prep(&[1, 2, 3, 4], PrepState::Code).unwrap();
        wide.append_mapped(&bare, &[1, 2, 3, 4]).unwrap();
        let (c, end) = make_weakly_fault_tolerant(&wide, 5, 6).unwrap();
        assert_eq!(c.operation_count(), 27);
        assert_eq!(end, AncillaState::PlusPlus);
        assert!(make_weakly_fault_tolerant(&c, 5, 6).is_err());
    }

    #[test]
    fn recovery_letters() {
        assert_eq!(wft_zz(AncillaState::PhiPlus).recovery, pauli("ZIZI"));
        assert_eq!(wft_xx(AncillaState::PlusPlus).recovery, pauli("YIYI"));
        assert_eq!(
            wft_xx(AncillaState::PhiPlus).recovery_gates(),
            vec![g::z(2), g::y(3)]
        );
    }
}
