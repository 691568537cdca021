//! Initialization, readout and Bell-basis measurement.

use crate::circuit::{Circuit, PrepState};
use crate::code::qedc_stabilizers;
use crate::error::{Error, Result};
use crate::gate::{g, Gate};

/// `CNOT(n−1→a) CNOT(a→n) CNOT(a→n−2) … CNOT(a→1) CNOT(n−1→a)`.
fn ladder(n: usize, a: usize) -> Vec<Gate> {
    let mut v = vec![g::cnot(n - 1, a), g::cnot(a, n)];
    v.extend((1..=n - 2).rev().map(|i| g::cnot(a, i)));
    v.push(g::cnot(n - 1, a));
    v
}

fn frame(n: usize) -> Result<Circuit> {
    qedc_stabilizers(n)?;
    let data: Vec<usize> = (1..=n - 2).collect();
    Circuit::new(n + 1).with_roles(&data, &[n - 1, n], &[n + 1])
}

/// Encodes `|0…0⟩ ⊗ |+⟩ ⊗ |0⟩` into the GHZ state using ancilla `n + 1`.
pub fn init_circuit(n: usize) -> Result<Circuit> {
    let mut c = frame(n)?;
    let zeros: Vec<usize> = (1..=n - 2).chain([n, n + 1]).collect();
    c.add_prep(&zeros, PrepState::Zero)?;
    c.add_prep(&[n - 1], PrepState::Plus)?;
    c.extend(ladder(n, n + 1))?;
    Ok(c)
}

/// The inverse ladder followed by the terminal measurements.
pub fn readout_circuit(n: usize) -> Result<(Circuit, ReadoutDecoder)> {
    let mut c = frame(n)?;
    c.add_prep(&(1..=n).collect::<Vec<_>>(), PrepState::Code)?;
    c.add_prep(&[n + 1], PrepState::Zero)?;
    c.extend(ladder(n, n + 1))?;
    c.extend((1..=n - 2).map(g::mz))?;
    c.extend([g::mx(n - 1), g::mz(n), g::mz(n + 1)])?;
    Ok((c, ReadoutDecoder { n }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Readout {
    pub accept: bool,
    /// Logical Z-basis bits, `true` for `|1̄⟩`.
    pub logical: Vec<bool>,
}

/// The classical post-processing of the readout circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReadoutDecoder {
    n: usize,
}

impl ReadoutDecoder {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    /// `outcomes[q − 1]` is `true` when qubit `q` gave the `−1` outcome;
    /// `n + 1` entries including the ancilla.
    pub fn decode(&self, outcomes: &[bool]) -> Result<Readout> {
        let n = self.n;
        if outcomes.len() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                found: outcomes.len(),
            });
        }
        let parity = outcomes[..n - 2].iter().fold(outcomes[n - 1], |acc, &b| acc ^ b);
        let accept = !parity && !outcomes[n - 2] && !outcomes[n];
        let logical = outcomes[..n - 2].iter().map(|&b| b ^ outcomes[n - 1]).collect();
        Ok(Readout { accept, logical })
    }
}

/// Bell-basis measurement of qubits 1, 2 with a `|0⟩` flag ancilla on 3.
/// Declared input is `|Φ+⟩` on the measured pair.
pub fn bell_measurement() -> Circuit {
    let mut c = Circuit::new(3)
        .with_roles(&[1, 2], &[], &[3])
        .and_then(|c| c.with_prep(&[1, 2], PrepState::PhiPlus))
        .and_then(|c| c.with_prep(&[3], PrepState::Zero))
        .expect("fixed frame");
    c.extend([
        g::cnot(1, 3),
        g::cnot(3, 2),
        g::cnot(1, 3),
        g::mx(1),
        g::mz(2),
        g::mz(3),
    ])
    .expect("fixed gates");
    c
}

/// Outcome of [`bell_measurement`] from its three bits `(X₁, Z₂, Z_a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BellOutcome {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
    Flagged,
}

impl BellOutcome {
    pub fn from_bits(x1: bool, z2: bool, za: bool) -> Self {
        match (za, x1, z2) {
            (true, _, _) => BellOutcome::Flagged,
            (false, false, false) => BellOutcome::PhiPlus,
            (false, true, false) => BellOutcome::PhiMinus,
            (false, false, true) => BellOutcome::PsiPlus,
            (false, true, true) => BellOutcome::PsiMinus,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let c = init_circuit(6).unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(c.gates()[0], g::cnot(5, 7));
        assert_eq!(c.gates()[2], g::cnot(7, 4));
        assert!(init_circuit(5).is_err());
        let (r, _) = readout_circuit(4).unwrap();
        assert_eq!(r.len(), 5 + 5);
        assert_eq!(bell_measurement().len(), 6);
    }

    #[test]
    fn decoder_rule() {
        let d = ReadoutDecoder::new(4);
        let ok = d.decode(&[false; 5]).unwrap();
        assert!(ok.accept);
        assert_eq!(ok.logical, vec![false, false]);
        // data bit 1 flipped alone: odd parity
        assert!(!d.decode(&[true, false, false, false, false]).unwrap().accept);
        // data bit 1 and check bit n: even parity, logical 1 = 0, logical 2 = 1
        let r = d.decode(&[true, false, false, true, false]).unwrap();
        assert!(r.accept);
        assert_eq!(r.logical, vec![false, true]);
        assert!(!d.decode(&[false, false, true, false, false]).unwrap().accept);
        assert!(!d.decode(&[false, false, false, false, true]).unwrap().accept);
    }
}
