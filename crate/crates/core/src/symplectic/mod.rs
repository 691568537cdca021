//! Binary symplectic representation of Paulis and Cliffords.

pub mod bits;
pub mod conjugate;
pub mod gf2;
pub mod pauli;
pub mod tableau;

pub use bits::BitRow;
pub use conjugate::{conjugate_signed, conjugate_through};
pub use gf2::Gf2Basis;
pub use pauli::{pauli, Letter, SignedPauli};
pub use tableau::{two_qubit, CliffordTableau, GeneratorSet};

use crate::error::Result;

/// `x_a·z_b + z_a·x_b mod 2`.
pub fn symplectic_inner_product(a: &SignedPauli, b: &SignedPauli) -> Result<bool> {
    a.inner_product(b)
}

/// Symplectic tableau of a Clifford gate embedded in an `n`-qubit register.
pub fn gate_tableau(gate: &crate::gate::Gate, n: usize) -> Result<CliffordTableau> {
    let rows = GeneratorSet::canonical(n)
        .rows()
        .iter()
        .map(|p| conjugate_signed(gate, p).map(|q| q.symplectic()))
        .collect::<Result<Vec<_>>>()?;
    CliffordTableau::from_rows(rows)
}

/// Tableau of a gate sequence; measurements and RZ are rejected.
pub fn circuit_tableau(gates: &[crate::gate::Gate], n: usize) -> Result<CliffordTableau> {
    gates.iter().try_fold(CliffordTableau::identity(n), |acc, g| {
        acc.then(&gate_tableau(g, n)?)
    })
}
