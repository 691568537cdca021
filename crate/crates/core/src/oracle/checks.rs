//! Dense cross-checks of the symplectic constructions.

use num_complex::Complex;
use num_traits::Zero;

use super::{unitary_of, vectors_equal_up_to_phase, Operator, StateVector, Unitary};
use crate::circuit::Circuit;
use crate::code::{logical_operators, AncillaState, LogicalBasis};
use crate::error::{Error, Result};
use crate::gadgets::{self, Gadget, Rotation};
use crate::gate::{g, Gate, GateKind};
use crate::scalar::Real;
use crate::symplectic::{conjugate_signed, SignedPauli};

/// `U P U†` for a gate acting on `p`'s qubits (numbered from 1), if it is a
/// Pauli. `p` must have as many qubits as the gate has targets.
pub fn dense_conjugate(kind: GateKind, p: &SignedPauli) -> Result<Option<SignedPauli>> {
    let k = kind.arity();
    if p.num_qubits() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: p.num_qubits(),
        });
    }
    let mut c = Circuit::new(k);
    c.push(Gate::new(kind, &(1..=k).collect::<Vec<_>>())?)?;
    let u = unitary_of::<f64>(&c)?;
    let m = u.mul(&Operator::pauli(p)?)?.mul(&u.adjoint())?;
    Ok(identify_pauli(&m))
}

/// The signed Pauli equal to `m`, if any.
fn identify_pauli(m: &Operator<f64>) -> Option<SignedPauli> {
    let n = m.num_qubits();
    let d = m.dim() as f64;
    for q in SignedPauli::all(n) {
        let qm = Operator::pauli(&q).ok()?;
        // Tr(Q M)/d is the coefficient of Q since Q is Hermitian
        let coeff = qm.mul(m).ok()?.trace() / d;
        if coeff.norm() > 0.5 {
            let e = [
                Complex::new(1.0, 0.0),
                Complex::new(0.0, 1.0),
                Complex::new(-1.0, 0.0),
                Complex::new(0.0, -1.0),
            ]
            .iter()
            .position(|z| (z - coeff).norm() < 1e-9)?;
            let cand = q.with_phase(e as u8);
            let back = Operator::pauli(&cand).ok()?;
            return (back.max_abs_diff(m) < 1e-9).then_some(cand);
        }
    }
    None
}

/// Exhaustive comparison of `conjugate_signed` with dense conjugation for one
/// gate kind, over every Pauli on its qubits with both signs.
pub fn dense_conjugation_agrees(kind: GateKind) -> Result<bool> {
    if kind.is_measurement() {
        return Ok(true);
    }
    let k = kind.arity();
    let gate = Gate::new(kind, &(1..=k).collect::<Vec<_>>())?;
    for p in SignedPauli::all(k) {
        for p in [p.clone(), p.negated()] {
            let dense = dense_conjugate(kind, &p)?;
            let symp = conjugate_signed(&gate, &p).ok();
            if dense != symp {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn ancilla_state(s: AncillaState) -> StateVector<f64> {
    let c = Circuit::new(2)
        .with_prep(&[1, 2], s.prep_state())
        .expect("two-qubit prep");
    StateVector::from_preps(&c).expect("small state")
}

/// Checks that the gadget followed by `recovery` acts as
/// `|out⟩⟨in| ⊗ U` on ancillas ⊗ data, up to one global phase.
pub fn verify_gadget(gadget: &Gadget, recovery: &SignedPauli) -> Result<bool> {
    let mut c = gadget.circuit();
    c.push_pauli(recovery)?;
    verify_gadget_circuit(&c, gadget.rotation, gadget.input)
}

/// As [`verify_gadget`] for an arbitrary 4-qubit circuit (ancillas 1, 2;
/// data 3, 4) that already contains its recovery.
pub fn verify_gadget_circuit(c: &Circuit, rotation: Rotation, input: AncillaState) -> Result<bool> {
    if c.num_qubits() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: c.num_qubits(),
        });
    }
    let mut ideal = Circuit::new(2);
    ideal.push(rotation.gate(1, 2))?;
    let u = unitary_of::<f64>(&ideal)?;
    let (a_in, a_out) = (ancilla_state(input), ancilla_state(input.flipped()));
    let mut got = Vec::new();
    let mut want = Vec::new();
    for d in 0..4 {
        let data = StateVector::basis(2, d)?;
        let mut s = a_in.tensor(&data)?;
        s.apply_circuit(c)?;
        got.extend_from_slice(s.amplitudes());
        want.extend_from_slice(a_out.tensor(&u.apply(&data)?)?.amplitudes());
    }
    Ok(vectors_equal_up_to_phase(&got, &want, 1e-10))
}

/// Ideal unitary of a logical gate on `k` logical qubits. `S` is
/// `diag(1, i)`.
pub fn ideal_logical_unitary(k: usize, gates: &[Gate]) -> Result<Unitary<f64>> {
    let mut c = Circuit::new(k);
    c.extend(gates.iter().cloned())?;
    unitary_of(&c)
}

/// Encoding isometry columns `|a⟩_L` for every logical basis state `a`.
pub fn logical_codewords(n: usize, basis: LogicalBasis) -> Result<Vec<StateVector<f64>>> {
    let ops = logical_operators(n, basis)?;
    let stabs = crate::code::qedc_stabilizers(n)?;
    let mut proj: Vec<SignedPauli> = stabs.generators().to_vec();
    proj.extend(ops.iter().map(|(_, z)| z.clone()));
    let project = |s: &StateVector<f64>| -> Result<StateVector<f64>> {
        let mut acc = s.clone();
        for gen in &proj {
            let mut t = acc.clone();
            t.apply_pauli(gen)?;
            let amps: Vec<_> = acc
                .amplitudes()
                .iter()
                .zip(t.amplitudes())
                .map(|(a, b)| (a + b) * 0.5)
                .collect();
            acc = StateVector { n: acc.n, amps };
        }
        Ok(acc)
    };
    let mut zero = None;
    for i in 0..1usize << n {
        let p = project(&StateVector::basis(n, i)?)?;
        if p.norm_sqr() > 1e-6 {
            zero = Some(StateVector::from_amplitudes(p.amps)?);
            break;
        }
    }
    let zero = zero.ok_or_else(|| Error::InvalidArgument("empty code space".into()))?;
    let k = ops.len();
    (0..1usize << k)
        .map(|a| {
            let mut s = zero.clone();
            for (j, (x, _)) in ops.iter().enumerate() {
                if (a >> (k - 1 - j)) & 1 == 1 {
                    s.apply_pauli(x)?;
                }
            }
            Ok(s)
        })
        .collect()
}

/// Checks `C |a⟩_L = e^{iφ} Σ_b U_{ba} |b⟩_L` for all logical basis states.
pub fn encoded_equivalence(circuit: &Circuit, ideal: &Unitary<f64>, basis: LogicalBasis) -> Result<bool> {
    let n = circuit.num_qubits();
    let words = logical_codewords(n, basis)?;
    if words.len() != ideal.dim() {
        return Err(Error::DimensionMismatch {
            expected: words.len(),
            found: ideal.dim(),
        });
    }
    let mut got = Vec::new();
    let mut want = Vec::new();
    for (a, w) in words.iter().enumerate() {
        let mut s = w.clone();
        s.apply_circuit(circuit)?;
        got.extend_from_slice(s.amplitudes());
        let mut e = vec![Complex::zero(); 1 << n];
        for (b, wb) in words.iter().enumerate() {
            let coeff = ideal.entry(b, a);
            for (slot, amp) in e.iter_mut().zip(wb.amplitudes()) {
                *slot += coeff * amp;
            }
        }
        want.extend(e);
    }
    Ok(vectors_equal_up_to_phase(&got, &want, 1e-10))
}

/// `|⟨GHZ_n ⊗ 0|ψ⟩|²` for the output of the initialization circuit.
pub fn ghz_fidelity<T: Real>(n: usize) -> Result<T> {
    let c = gadgets::init_circuit(n)?;
    let mut s = StateVector::<T>::from_preps(&c)?;
    s.apply_circuit(&c)?;
    let target = StateVector::<T>::ghz(n)?.tensor(&StateVector::zero(1)?)?;
    Ok(target.fidelity(&s))
}

/// One named oracle check.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl SuiteCheck {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// The full dense-oracle suite. `seed` drives the Monte Carlo checks.
pub fn run_suite(seed: u64) -> Result<Vec<SuiteCheck>> {
    let mut out = Vec::new();
    let kinds = [
        GateKind::Swap,
        GateKind::Zz,
        GateKind::Xx,
        GateKind::Yy,
        GateKind::Rx,
        GateKind::Cnot,
        GateKind::H,
        GateKind::X,
        GateKind::Y,
        GateKind::Z,
        GateKind::Rz(0.3),
    ];
    for k in kinds {
        let ok = dense_conjugation_agrees(k)?;
        out.push(SuiteCheck::new(format!("conjugation {}", k.mnemonic()), ok, ""));
    }
    for gd in gadgets::all_gadgets() {
        let ok = verify_gadget(&gd, &gd.recovery)?;
        out.push(SuiteCheck::new(
            format!("gadget {} {}", gd.rotation.name(), gd.input),
            ok,
            format!("recovery {}", gd.recovery.letters()),
        ));
    }
    let s_gate = || g::rz(1, std::f64::consts::FRAC_PI_2);
    let encoded: Vec<(&str, Circuit, Vec<Gate>, LogicalBasis)> = vec![
        ("encoded CNOT 1->2", gadgets::encoded_cnot(1, 2, 4)?, vec![g::cnot(1, 2)], LogicalBasis::Standard),
        ("encoded CNOT 2->1", gadgets::encoded_cnot(2, 1, 4)?, vec![g::cnot(2, 1)], LogicalBasis::Standard),
        ("encoded H 1", gadgets::encoded_hadamard(1, 4)?, vec![g::h(1)], LogicalBasis::Standard),
        ("encoded H 2", gadgets::encoded_hadamard(2, 4)?, vec![g::h(2)], LogicalBasis::Standard),
        ("encoded S 1", gadgets::encoded_phase(1, 4)?, vec![s_gate()], LogicalBasis::Standard),
        ("[[4,2,2]] CNOT 1->2", gadgets::encoded_cnot_422(1, 2)?, vec![g::cnot(1, 2)], LogicalBasis::Special422),
        ("[[4,2,2]] CNOT 2->1", gadgets::encoded_cnot_422(2, 1)?, vec![g::cnot(2, 1)], LogicalBasis::Special422),
    ];
    for (name, c, gates, basis) in encoded {
        let ideal = ideal_logical_unitary(2, &gates)?;
        out.push(SuiteCheck::new(name, encoded_equivalence(&c, &ideal, basis)?, ""));
    }
    for n in [4, 6] {
        let f = ghz_fidelity::<f64>(n)?;
        out.push(SuiteCheck::new(
            format!("GHZ initialization n={n}"),
            (1.0 - f).abs() < 1e-12,
            format!("fidelity {f:.15}"),
        ));
    }
    for sigma in [0.01, 0.02, 0.05] {
        let p = super::analog_channel_estimate(0.4, sigma, 100_000, seed, super::AnalogNoise::Gaussian);
        let target = sigma * sigma / 4.0;
        out.push(SuiteCheck::new(
            format!("analog sigma={sigma}"),
            ((p - target) / target).abs() < 0.2,
            format!("p_hat {p:.4e} target {target:.4e}"),
        ));
    }
    let psi = StateVector::qubit(Complex::new(0.6, 0.0), Complex::new(0.0, 0.8))?;
    let branches = super::resource_rotation_sim(&psi, 0.7)?;
    let ok = branches.iter().all(|b| {
        let mut want = psi.clone();
        want.apply_gate(&g::rz(1, b.angle)).is_ok()
            && (b.probability - 0.5).abs() < 1e-12
            && b.state.equal_up_to_phase(&want, 1e-12)
    });
    out.push(SuiteCheck::new("resource rotation", ok, ""));
    for nn in [2, 3] {
        let p = 0.02;
        let r = super::symmetrize(nn, p)?;
        let dev = (r.fidelity - (1.0 - p / nn as f64)).abs();
        out.push(SuiteCheck::new(
            format!("symmetrization N={nn}"),
            dev < 2.0 * p * p,
            format!("fidelity {:.6} acceptance {:.6}", r.fidelity, r.acceptance),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::pauli;

    #[test]
    fn phase_transformations_agree() {
        let cases = [
            (GateKind::Zz, "XI", "YZ"),
            (GateKind::Xx, "ZI", "YX"),
            (GateKind::Xx, "YX", "-ZI"),
            (GateKind::Zz, "YZ", "-XI"),
        ];
        for (k, a, b) in cases {
            assert_eq!(dense_conjugate(k, &pauli(a)).unwrap(), Some(pauli(b)));
        }
    }

    #[test]
    fn all_kinds_agree() {
        for k in [GateKind::Zz, GateKind::Xx, GateKind::Yy, GateKind::Rx, GateKind::Cnot, GateKind::H, GateKind::Rz(1.1)] {
            assert!(dense_conjugation_agrees(k).unwrap(), "{k:?}");
        }
    }

    #[test]
    fn gadgets_verify_and_wrong_recovery_fails() {
        for gd in gadgets::all_gadgets() {
            assert!(verify_gadget(&gd, &gd.recovery).unwrap(), "{:?} {}", gd.rotation, gd.input);
        }
        let gd = gadgets::wft_zz(AncillaState::PhiPlus);
        assert!(!verify_gadget(&gd, &pauli("XIXI")).unwrap());
    }

    #[test]
    fn encoded_constructions() {
        for chk in run_suite(1).unwrap().iter().filter(|c| c.name.contains("CNOT") || c.name.starts_with("encoded")) {
            assert!(chk.passed, "{}", chk.name);
        }
    }

    #[test]
    fn ghz() {
        for n in [4, 6] {
            assert!((1.0 - ghz_fidelity::<f64>(n).unwrap()).abs() < 1e-12);
        }
    }
}
