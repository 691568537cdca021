//! The `[[n, n−2, 2]]` code, check sets and ancilla-pair states.

use std::fmt;

use crate::error::{Error, Result};
use crate::symplectic::{Letter, SignedPauli};

/// Mutually commuting generators measured at the end of a circuit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSet {
    n: usize,
    generators: Vec<SignedPauli>,
}

impl CheckSet {
    pub fn new(n: usize, generators: Vec<SignedPauli>) -> Result<Self> {
        for g in &generators {
            if g.num_qubits() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.num_qubits(),
                });
            }
        }
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                if !a.commutes_with(b) {
                    return Err(Error::InvalidArgument(format!(
                        "check generators {a} and {b} anticommute"
                    )));
                }
            }
        }
        Ok(Self { n, generators })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            generators: Vec::new(),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[SignedPauli] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Appends generators (checked for commutation).
    pub fn extended(&self, more: impl IntoIterator<Item = SignedPauli>) -> Result<Self> {
        let mut g = self.generators.clone();
        g.extend(more);
        Self::new(self.n, g)
    }
}

/// `X^⊗n` and `Z^⊗n`.
pub fn qedc_stabilizers(n: usize) -> Result<CheckSet> {
    if !n.is_multiple_of(2) {
        return Err(Error::OddCodeLength(n));
    }
    if n < 4 {
        return Err(Error::CodeTooSmall(n));
    }
    let all = |l: Letter| SignedPauli::on(n, &(0..n).collect::<Vec<_>>(), &vec![l; n]);
    CheckSet::new(n, vec![all(Letter::X), all(Letter::Z)])
}

/// Which logical basis to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LogicalBasis {
    /// `X̄_i = X_i X_{n−1}`, `Z̄_i = Z_i Z_n`.
    #[default]
    Standard,
    /// The `[[4,2,2]]` basis `(XXII, IZZI)`, `(IXXI, ZZII)`.
    Special422,
}

/// Logical `(X̄_i, Z̄_i)` pairs, `i = 1 … n−2`.
pub fn logical_operators(n: usize, basis: LogicalBasis) -> Result<Vec<(SignedPauli, SignedPauli)>> {
    qedc_stabilizers(n)?;
    match basis {
        LogicalBasis::Standard => Ok((0..n - 2)
            .map(|i| {
                (
                    SignedPauli::on(n, &[i, n - 2], &[Letter::X, Letter::X]),
                    SignedPauli::on(n, &[i, n - 1], &[Letter::Z, Letter::Z]),
                )
            })
            .collect()),
        LogicalBasis::Special422 => {
            if n != 4 {
                return Err(Error::InvalidArgument(format!(
                    "the [[4,2,2]] logical basis needs n = 4, got {n}"
                )));
            }
            let p = |s: &str| s.parse::<SignedPauli>().expect("literal");
            Ok(vec![(p("XXII"), p("IZZI")), (p("IXXI"), p("ZZII"))])
        }
    }
}

/// State of the shared gadget ancilla pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AncillaState {
    PhiPlus,
    PlusPlus,
}

impl AncillaState {
    pub fn flipped(self) -> Self {
        match self {
            AncillaState::PhiPlus => AncillaState::PlusPlus,
            AncillaState::PlusPlus => AncillaState::PhiPlus,
        }
    }

    /// Stabilizer generators on 0-based positions `(a, b)` of an `n`-qubit register.
    pub fn stabilizers(self, n: usize, a: usize, b: usize) -> Vec<SignedPauli> {
        match self {
            AncillaState::PhiPlus => vec![
                SignedPauli::on(n, &[a, b], &[Letter::X, Letter::X]),
                SignedPauli::on(n, &[a, b], &[Letter::Z, Letter::Z]),
            ],
            AncillaState::PlusPlus => vec![
                SignedPauli::single(n, a, Letter::X),
                SignedPauli::single(n, b, Letter::X),
            ],
        }
    }

    pub fn prep_state(self) -> crate::circuit::PrepState {
        match self {
            AncillaState::PhiPlus => crate::circuit::PrepState::PhiPlus,
            AncillaState::PlusPlus => crate::circuit::PrepState::PlusPlus,
        }
    }
}

impl fmt::Display for AncillaState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AncillaState::PhiPlus => "PhiPlus",
            AncillaState::PlusPlus => "PlusPlus",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::pauli;

    #[test]
    fn stabilizers_by_length() {
        let s = qedc_stabilizers(4).unwrap();
        assert_eq!(s.generators(), &[pauli("XXXX"), pauli("ZZZZ")]);
        assert_eq!(qedc_stabilizers(6).unwrap().generators()[1], pauli("ZZZZZZ"));
        assert_eq!(qedc_stabilizers(5), Err(Error::OddCodeLength(5)));
        assert_eq!(qedc_stabilizers(2), Err(Error::CodeTooSmall(2)));
    }

    #[test]
    fn logical_pairs_are_partners() {
        for (n, basis) in [
            (4, LogicalBasis::Standard),
            (6, LogicalBasis::Standard),
            (8, LogicalBasis::Standard),
            (4, LogicalBasis::Special422),
        ] {
            let ops = logical_operators(n, basis).unwrap();
            let stabs = qedc_stabilizers(n).unwrap();
            for (i, (xi, zi)) in ops.iter().enumerate() {
                for s in stabs.generators() {
                    assert!(xi.commutes_with(s) && zi.commutes_with(s));
                }
                for (j, (xj, zj)) in ops.iter().enumerate() {
                    assert_eq!(!xi.commutes_with(zj), i == j);
                    assert!(xi.commutes_with(xj) && zi.commutes_with(zj));
                }
            }
        }
        let ops = logical_operators(4, LogicalBasis::Standard).unwrap();
        assert_eq!(ops[0], (pauli("XIXI"), pauli("ZIIZ")));
    }

    #[test]
    fn check_sets_must_commute() {
        assert!(CheckSet::new(2, vec![pauli("XI"), pauli("ZI")]).is_err());
        assert!(CheckSet::new(2, vec![pauli("XX"), pauli("ZZ")]).is_ok());
    }
}
