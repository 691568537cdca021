//! Z rotations: physical, bare encoded, ancilla-assisted and resource-state driven.

use crate::circuit::{Circuit, PrepState};
use crate::error::{Error, Result};
use crate::gate::g;

use super::encoded::code_frame;

fn check(j: usize, n: usize, theta: f64) -> Result<()> {
    if j == 0 || j + 2 > n {
        return Err(Error::LogicalIndex { index: j, k: n.saturating_sub(2) });
    }
    if !theta.is_finite() {
        return Err(Error::InvalidArgument(format!("non-finite angle {theta}")));
    }
    Ok(())
}

/// Logical `R_Z(θ)` on logical qubit `j` using one `|0⟩` ancilla at `n + 1`:
/// `CNOT(n→a) CNOT(a→j) RZ(j) CNOT(a→j) CNOT(n→a)`.
pub fn logical_rz(j: usize, n: usize, theta: f64) -> Result<Circuit> {
    let base = code_frame(n)?;
    check(j, n, theta)?;
    let a = n + 1;
    let mut c = Circuit::new(n + 1).with_roles(base.data_qubits(), base.check_qubits(), &[a])?;
    c.add_prep(&(1..=n).collect::<Vec<_>>(), PrepState::Code)?;
    c.add_prep(&[a], PrepState::Zero)?;
    c.extend([
        g::cnot(n, a),
        g::cnot(a, j),
        g::rz(j, theta),
        g::cnot(a, j),
        g::cnot(n, a),
    ])?;
    Ok(c)
}

/// The unprotected encoded rotation `CNOT(n→j) RZ(j) CNOT(n→j)`.
pub fn naive_encoded_rz(j: usize, n: usize, theta: f64) -> Result<Circuit> {
    let mut c = code_frame(n)?;
    check(j, n, theta)?;
    c.extend([g::cnot(n, j), g::rz(j, theta), g::cnot(n, j)])?;
    Ok(c)
}

/// A single physical rotation on an unencoded qubit.
pub fn physical_rz(theta: f64) -> Result<Circuit> {
    let mut c = Circuit::new(1).with_roles(&[1], &[], &[])?;
    c.push(crate::gate::Gate::new(crate::gate::GateKind::Rz(theta), &[1])?)?;
    Ok(c)
}

/// Rotation of qubit 1 by `±θ` consuming the resource state `|φ_θ⟩` on
/// qubit 2: `CNOT(1→2)` then `MZ(2)`. Outcome `1` means `+θ`.
pub fn resource_rotation(theta: f64) -> Result<Circuit> {
    if !theta.is_finite() {
        return Err(Error::InvalidArgument(format!("non-finite angle {theta}")));
    }
    let mut c = Circuit::new(2)
        .with_roles(&[1], &[], &[2])?
        .with_prep(&[2], PrepState::Phi(theta))?;
    c.extend([g::cnot(1, 2), g::mz(2)])?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let c = logical_rz(1, 4, 0.3).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c.num_qubits(), 5);
        assert_eq!(c.ancilla_qubits(), &[5]);
        assert!(logical_rz(3, 4, 0.3).is_err());
        assert!(logical_rz(1, 4, f64::INFINITY).is_err());
        assert_eq!(naive_encoded_rz(2, 6, 1.0).unwrap().len(), 3);
        assert_eq!(resource_rotation(0.5).unwrap().len(), 2);
    }
}
