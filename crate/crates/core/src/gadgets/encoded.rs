//! Bare encoded Clifford gates built from SWAP, XX and ZZ.

use crate::circuit::{Circuit, PrepState};
use crate::code::qedc_stabilizers;
use crate::error::{Error, Result};
use crate::gate::{g, Gate};

/// Empty `n`-qubit code circuit with data `1..=n−2`, checks `n−1, n`.
pub fn code_frame(n: usize) -> Result<Circuit> {
    qedc_stabilizers(n)?;
    let data: Vec<usize> = (1..=n - 2).collect();
    Circuit::new(n)
        .with_roles(&data, &[n - 1, n], &[])?
        .with_prep(&(1..=n).collect::<Vec<_>>(), PrepState::Code)
}

fn check_logical(j: usize, n: usize) -> Result<()> {
    if j == 0 || j > n - 2 {
        return Err(Error::LogicalIndex { index: j, k: n - 2 });
    }
    Ok(())
}

/// Logical CNOT from `j` to `k` in the standard basis: seven two-qubit gates.
pub fn encoded_cnot(j: usize, k: usize, n: usize) -> Result<Circuit> {
    let mut c = code_frame(n)?;
    check_logical(j, n)?;
    check_logical(k, n)?;
    if j == k {
        return Err(Error::RepeatedTarget(j));
    }
    c.extend(cnot_gates(j, k, n))?;
    Ok(c)
}

pub(crate) fn cnot_gates(j: usize, k: usize, n: usize) -> Vec<Gate> {
    vec![
        g::xx(k, n),
        g::xx(n - 1, n),
        g::zz(j, n),
        g::xx(n - 1, n),
        g::xx(k, n),
        g::zz(j, n),
        g::xx(k, n - 1),
    ]
}

/// Logical CNOT in the `[[4,2,2]]` basis: a single relabeling SWAP.
pub fn encoded_cnot_422(control: usize, target: usize) -> Result<Circuit> {
    let mut c = code_frame(4)?;
    let swap = match (control, target) {
        (1, 2) => g::swap(2, 3),
        (2, 1) => g::swap(1, 2),
        (a, b) if a == b => return Err(Error::RepeatedTarget(a)),
        (a, _) => return Err(Error::LogicalIndex { index: a.max(target), k: 2 }),
    };
    c.push(swap)?;
    Ok(c)
}

/// Logical phase gate: `ZZ(j, n)`.
pub fn encoded_phase(j: usize, n: usize) -> Result<Circuit> {
    let mut c = code_frame(n)?;
    check_logical(j, n)?;
    c.push(g::zz(j, n))?;
    Ok(c)
}

/// The three rotation gates of the logical Hadamard.
pub(crate) fn hadamard_gates(j: usize, n: usize) -> Vec<Gate> {
    vec![g::zz(j, n), g::xx(j, n - 1), g::zz(j, n)]
}

/// Phase corrections `Z_j Z_n` then `X_j X_{n−1}` as single-qubit Paulis.
pub fn hadamard_corrections(j: usize, n: usize) -> Vec<Gate> {
    vec![g::z(j), g::z(n), g::x(j), g::x(n - 1)]
}

/// Logical Hadamard with its phase corrections appended.
pub fn encoded_hadamard(j: usize, n: usize) -> Result<Circuit> {
    let mut c = encoded_hadamard_uncorrected(j, n)?;
    c.extend(hadamard_corrections(j, n))?;
    Ok(c)
}

/// Logical Hadamard without the sign corrections.
pub fn encoded_hadamard_uncorrected(j: usize, n: usize) -> Result<Circuit> {
    let mut c = code_frame(n)?;
    check_logical(j, n)?;
    c.extend(hadamard_gates(j, n))?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{logical_operators, LogicalBasis};
    use crate::symplectic::{conjugate_through, pauli, SignedPauli};

    fn push(c: &Circuit, p: &SignedPauli) -> SignedPauli {
        conjugate_through(c.gates(), p).unwrap()
    }

    #[test]
    fn cnot_pushforward_n6() {
        let c = encoded_cnot(1, 2, 6).unwrap();
        assert_eq!(c.two_qubit_count(), 7);
        let ops = logical_operators(6, LogicalBasis::Standard).unwrap();
        let (x1, z1) = &ops[0];
        let (x2, z2) = &ops[1];
        let (x3, z3) = &ops[2];
        assert_eq!(push(&c, x1).unsigned(), x1.mul(x2).unwrap().unsigned());
        assert_eq!(push(&c, z2).unsigned(), z1.mul(z2).unwrap().unsigned());
        assert_eq!(push(&c, z1).unsigned(), *z1);
        assert_eq!(push(&c, x2).unsigned(), *x2);
        assert_eq!(push(&c, x3).unsigned(), *x3);
        assert_eq!(push(&c, z3).unsigned(), *z3);
        assert_eq!(push(&c, &pauli("XXXXXX")), pauli("XXXXXX"));
        assert_eq!(push(&c, &pauli("ZZZZZZ")), pauli("ZZZZZZ"));
    }

    #[test]
    fn special_cnot_is_a_swap() {
        let c = encoded_cnot_422(1, 2).unwrap();
        assert_eq!(c.gates(), &[g::swap(2, 3)]);
        let ops = logical_operators(4, LogicalBasis::Special422).unwrap();
        // X̄1 -> X̄1 X̄2, Z̄2 -> Z̄1 Z̄2
        assert_eq!(push(&c, &ops[0].0), ops[0].0.mul(&ops[1].0).unwrap());
        assert_eq!(push(&c, &ops[1].1).unsigned(), ops[0].1.mul(&ops[1].1).unwrap().unsigned());
        assert_eq!(encoded_cnot_422(2, 1).unwrap().gates(), &[g::swap(1, 2)]);
        assert!(encoded_cnot_422(1, 3).is_err());
    }

    #[test]
    fn phase_maps_x_to_y() {
        let c = encoded_phase(1, 4).unwrap();
        assert_eq!(push(&c, &pauli("XIXI")).unsigned(), pauli("YIXZ"));
        assert_eq!(push(&c, &pauli("ZIIZ")), pauli("ZIIZ"));
        assert_eq!(push(&c, &pauli("XXXX")), pauli("XXXX"));
        assert!(encoded_phase(3, 4).is_err());
    }

    #[test]
    fn hadamard_signs() {
        let bare = encoded_hadamard_uncorrected(1, 4).unwrap();
        assert_eq!(push(&bare, &pauli("XIXI")), pauli("-ZIIZ"));
        assert_eq!(push(&bare, &pauli("ZIIZ")), pauli("-XIXI"));
        let fixed = encoded_hadamard(1, 4).unwrap();
        assert_eq!(push(&fixed, &pauli("XIXI")), pauli("ZIIZ"));
        assert_eq!(push(&fixed, &pauli("ZIIZ")), pauli("XIXI"));
        assert_eq!(push(&fixed, &pauli("IXXI")), pauli("IXXI"));
        for s in ["XXXX", "ZZZZ"] {
            let mut p = pauli(s);
            for gate in bare.gates() {
                p = crate::symplectic::conjugate_signed(gate, &p).unwrap();
                assert_eq!(p, pauli(s));
            }
            assert_eq!(push(&fixed, &pauli(s)), pauli(s));
        }
    }
}
