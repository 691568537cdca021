//! The fixed gate alphabet.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Measurement basis of a terminal measurement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Z,
    X,
    /// Two-qubit measurement of `XX` and `ZZ`.
    Bell,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GateKind {
    Swap,
    /// `(I − iZZ)/√2`
    Zz,
    /// `(I + iXX)/√2`
    Xx,
    /// `(I − iYY)/√2`
    Yy,
    /// `(I − iX)/√2`
    Rx,
    Cnot,
    H,
    X,
    Y,
    Z,
    /// `exp(−iθZ/2)`
    Rz(f64),
    Measure(Basis),
}

impl GateKind {
    pub fn arity(self) -> usize {
        match self {
            GateKind::Swap
            | GateKind::Zz
            | GateKind::Xx
            | GateKind::Yy
            | GateKind::Cnot
            | GateKind::Measure(Basis::Bell) => 2,
            _ => 1,
        }
    }

    pub fn mnemonic(self) -> &'static str {
        match self {
            GateKind::Swap => "SWAP",
            GateKind::Zz => "ZZ",
            GateKind::Xx => "XX",
            GateKind::Yy => "YY",
            GateKind::Rx => "RX",
            GateKind::Cnot => "CNOT",
            GateKind::H => "H",
            GateKind::X => "X",
            GateKind::Y => "Y",
            GateKind::Z => "Z",
            GateKind::Rz(_) => "RZ",
            GateKind::Measure(Basis::Z) => "MZ",
            GateKind::Measure(Basis::X) => "MX",
            GateKind::Measure(Basis::Bell) => "MBELL",
        }
    }

    pub fn is_pauli(self) -> bool {
        matches!(self, GateKind::X | GateKind::Y | GateKind::Z)
    }

    pub fn is_measurement(self) -> bool {
        matches!(self, GateKind::Measure(_))
    }

    /// Clifford unitaries; RZ and measurements are not.
    pub fn is_clifford(self) -> bool {
        !matches!(self, GateKind::Rz(_) | GateKind::Measure(_))
    }
}

impl FromStr for GateKind {
    type Err = Error;

    /// Parses a mnemonic. `RZ` comes back with angle 0; callers fill it in.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "SWAP" => GateKind::Swap,
            "ZZ" => GateKind::Zz,
            "XX" => GateKind::Xx,
            "YY" => GateKind::Yy,
            "RX" => GateKind::Rx,
            "CNOT" => GateKind::Cnot,
            "H" => GateKind::H,
            "X" => GateKind::X,
            "Y" => GateKind::Y,
            "Z" => GateKind::Z,
            "RZ" => GateKind::Rz(0.0),
            "MZ" => GateKind::Measure(Basis::Z),
            "MX" => GateKind::Measure(Basis::X),
            "MBELL" => GateKind::Measure(Basis::Bell),
            other => return Err(Error::InvalidArgument(format!("unknown gate {other:?}"))),
        })
    }
}

/// A gate with 1-based targets. For CNOT the first target is the control.
#[derive(Clone, Debug, PartialEq)]
pub struct Gate {
    kind: GateKind,
    targets: [usize; 2],
}

impl Gate {
    pub fn new(kind: GateKind, targets: &[usize]) -> Result<Self> {
        if targets.len() != kind.arity() {
            return Err(Error::WrongArity {
                kind: kind.mnemonic(),
                expected: kind.arity(),
                found: targets.len(),
            });
        }
        if targets.contains(&0) {
            return Err(Error::InvalidArgument("qubit indices are 1-based".into()));
        }
        if let GateKind::Rz(theta) = kind {
            if !theta.is_finite() {
                return Err(Error::InvalidArgument(format!("non-finite angle {theta}")));
            }
        }
        if targets.len() == 2 && targets[0] == targets[1] {
            return Err(Error::RepeatedTarget(targets[0]));
        }
        let mut t = [0; 2];
        t[..targets.len()].copy_from_slice(targets);
        Ok(Self { kind, targets: t })
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    /// 1-based targets.
    pub fn targets(&self) -> &[usize] {
        &self.targets[..self.kind.arity()]
    }

    /// The same gate with every target mapped through `f`.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Gate {
        let t: Vec<usize> = self.targets().iter().map(|&q| f(q)).collect();
        Gate::new(self.kind, &t).expect("relabeling keeps targets distinct")
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.mnemonic())?;
        for q in self.targets() {
            write!(f, " {q}")?;
        }
        if let GateKind::Rz(theta) = self.kind {
            write!(f, " {theta}")?;
        }
        Ok(())
    }
}

/// Shorthand constructors, panicking on bad targets. Used for the fixed
/// circuit tables.
pub mod g {
    use super::{Basis, Gate, GateKind};

    fn mk(kind: GateKind, t: &[usize]) -> Gate {
        Gate::new(kind, t).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn swap(a: usize, b: usize) -> Gate {
        mk(GateKind::Swap, &[a, b])
    }
    pub fn zz(a: usize, b: usize) -> Gate {
        mk(GateKind::Zz, &[a, b])
    }
    pub fn xx(a: usize, b: usize) -> Gate {
        mk(GateKind::Xx, &[a, b])
    }
    pub fn yy(a: usize, b: usize) -> Gate {
        mk(GateKind::Yy, &[a, b])
    }
    pub fn rx(a: usize) -> Gate {
        mk(GateKind::Rx, &[a])
    }
    pub fn cnot(c: usize, t: usize) -> Gate {
        mk(GateKind::Cnot, &[c, t])
    }
    pub fn h(a: usize) -> Gate {
        mk(GateKind::H, &[a])
    }
    pub fn x(a: usize) -> Gate {
        mk(GateKind::X, &[a])
    }
    pub fn y(a: usize) -> Gate {
        mk(GateKind::Y, &[a])
    }
    pub fn z(a: usize) -> Gate {
        mk(GateKind::Z, &[a])
    }
    pub fn rz(a: usize, theta: f64) -> Gate {
        mk(GateKind::Rz(theta), &[a])
    }
    pub fn mz(a: usize) -> Gate {
        mk(GateKind::Measure(Basis::Z), &[a])
    }
    pub fn mx(a: usize) -> Gate {
        mk(GateKind::Measure(Basis::X), &[a])
    }
    pub fn mbell(a: usize, b: usize) -> Gate {
        mk(GateKind::Measure(Basis::Bell), &[a, b])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arity_is_enforced() {
        assert!(Gate::new(GateKind::Zz, &[1]).is_err());
        assert!(Gate::new(GateKind::H, &[1, 2]).is_err());
        assert_eq!(
            Gate::new(GateKind::Cnot, &[2, 2]),
            Err(Error::RepeatedTarget(2))
        );
        assert!(Gate::new(GateKind::Rz(f64::NAN), &[1]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(g::zz(1, 4).to_string(), "ZZ 1 4");
        assert_eq!(g::rz(2, 0.5).to_string(), "RZ 2 0.5");
        assert_eq!(g::mbell(1, 2).to_string(), "MBELL 1 2");
    }

    #[test]
    fn mnemonics_round_trip() {
        for k in [
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
            GateKind::Rz(0.0),
            GateKind::Measure(Basis::Z),
            GateKind::Measure(Basis::X),
            GateKind::Measure(Basis::Bell),
        ] {
            assert_eq!(k.mnemonic().parse::<GateKind>().unwrap(), k);
        }
    }
}
