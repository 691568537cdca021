//! Signed Pauli operators in binary symplectic form.

use std::fmt;
use std::str::FromStr;

use super::bits::BitRow;
use crate::error::{Error, Result};

/// Single-qubit Pauli letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::I, Letter::X, Letter::Y, Letter::Z];

    pub fn from_xz(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn xz(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }
}

/// Phase exponent picked up when multiplying single-qubit Paulis:
/// `σ(x1,z1) σ(x2,z2) = i^g σ(x1^x2, z1^z2)` with Y written as the Hermitian Y.
#[inline]
fn product_exponent(x1: bool, z1: bool, x2: bool, z2: bool) -> i32 {
    let (x2i, z2i) = (x2 as i32, z2 as i32);
    match (x1, z1) {
        (false, false) => 0,
        (true, true) => z2i - x2i,
        (true, false) => z2i * (2 * x2i - 1),
        (false, true) => x2i * (1 - 2 * z2i),
    }
}

/// An `n`-qubit Pauli `i^phase_exp · P_1 ⊗ … ⊗ P_n` with each `P_k` in
/// {I, X, Y, Z} and Y Hermitian, so Hermitian operators have even exponent.
///
/// Positions are 0-based here: position `k` is qubit `k + 1` of a circuit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPauli {
    x: BitRow,
    z: BitRow,
    phase_exp: u8,
}

impl SignedPauli {
    pub fn identity(n: usize) -> Self {
        Self {
            x: BitRow::zeros(n),
            z: BitRow::zeros(n),
            phase_exp: 0,
        }
    }

    pub fn from_xz(x: BitRow, z: BitRow, phase_exp: u8) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::DimensionMismatch {
                expected: x.len(),
                found: z.len(),
            });
        }
        Ok(Self {
            x,
            z,
            phase_exp: phase_exp % 4,
        })
    }

    /// Builds from a symplectic row vector `(x | z)` of length `2n`, phase 0.
    pub fn from_symplectic(v: &BitRow) -> Self {
        let n = v.len() / 2;
        Self {
            x: v.slice(0, n),
            z: v.slice(n, 2 * n),
            phase_exp: 0,
        }
    }

    /// Pauli acting as `letters[k]` on 0-based position `qubits[k]`.
    pub fn on(n: usize, qubits: &[usize], letters: &[Letter]) -> Self {
        let mut p = Self::identity(n);
        for (&q, &l) in qubits.iter().zip(letters) {
            p.set_letter(q, l);
        }
        p
    }

    pub fn single(n: usize, position: usize, letter: Letter) -> Self {
        Self::on(n, &[position], &[letter])
    }

    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &BitRow {
        &self.x
    }

    pub fn z(&self) -> &BitRow {
        &self.z
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn with_phase(mut self, phase_exp: u8) -> Self {
        self.phase_exp = phase_exp % 4;
        self
    }

    /// Same operator with the phase dropped.
    pub fn unsigned(&self) -> Self {
        self.clone().with_phase(0)
    }

    pub fn negated(&self) -> Self {
        self.clone().with_phase(self.phase_exp + 2)
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase_exp.is_multiple_of(2)
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn letter(&self, position: usize) -> Letter {
        Letter::from_xz(self.x.get(position), self.z.get(position))
    }

    pub fn set_letter(&mut self, position: usize, letter: Letter) {
        let (x, z) = letter.xz();
        self.x.set(position, x);
        self.z.set(position, z);
    }

    pub fn weight(&self) -> usize {
        (0..self.num_qubits())
            .filter(|&q| self.x.get(q) || self.z.get(q))
            .count()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.num_qubits())
            .filter(|&q| self.x.get(q) || self.z.get(q))
            .collect()
    }

    /// `(x | z)` as one row vector of length `2n`.
    pub fn symplectic(&self) -> BitRow {
        self.x.concat(&self.z)
    }

    fn check_dims(&self, other: &SignedPauli) -> Result<()> {
        if self.num_qubits() != other.num_qubits() {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits(),
                found: other.num_qubits(),
            });
        }
        Ok(())
    }

    /// `x·z' + z·x' mod 2`; zero iff the operators commute.
    pub fn inner_product(&self, other: &SignedPauli) -> Result<bool> {
        self.check_dims(other)?;
        Ok(self.x.dot(&other.z) ^ self.z.dot(&other.x))
    }

    pub fn commutes_with(&self, other: &SignedPauli) -> bool {
        !self
            .inner_product(other)
            .expect("commutes_with on equal dimensions")
    }

    /// Operator product `self · other` with exact phase.
    pub fn mul(&self, other: &SignedPauli) -> Result<SignedPauli> {
        self.check_dims(other)?;
        let mut exp = self.phase_exp as i32 + other.phase_exp as i32;
        let mut out = self.clone();
        for q in 0..self.num_qubits() {
            let (x1, z1) = (self.x.get(q), self.z.get(q));
            let (x2, z2) = (other.x.get(q), other.z.get(q));
            exp += product_exponent(x1, z1, x2, z2);
            out.x.set(q, x1 ^ x2);
            out.z.set(q, z1 ^ z2);
        }
        out.phase_exp = exp.rem_euclid(4) as u8;
        Ok(out)
    }

    /// In-place XOR of the symplectic parts, ignoring phase.
    pub fn xor_assign_unsigned(&mut self, other: &SignedPauli) {
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    /// Restriction to the given 0-based positions, in that order.
    pub fn restrict(&self, positions: &[usize]) -> SignedPauli {
        let x = BitRow::from_bits(positions.iter().map(|&q| self.x.get(q)));
        let z = BitRow::from_bits(positions.iter().map(|&q| self.z.get(q)));
        SignedPauli {
            x,
            z,
            phase_exp: self.phase_exp,
        }
    }

    /// Places this operator on positions `positions` of an `n`-qubit register.
    pub fn embed(&self, n: usize, positions: &[usize]) -> SignedPauli {
        let mut out = SignedPauli::identity(n).with_phase(self.phase_exp);
        for (k, &q) in positions.iter().enumerate() {
            out.set_letter(q, self.letter(k));
        }
        out
    }

    /// Letters only, e.g. `XIXI`.
    pub fn letters(&self) -> String {
        (0..self.num_qubits())
            .map(|q| self.letter(q).as_char())
            .collect()
    }

    /// Iterates all `4^n` unsigned Paulis on `n` qubits, identity first.
    pub fn all(n: usize) -> impl Iterator<Item = SignedPauli> {
        assert!(n <= 12, "enumerating 4^{n} Paulis");
        (0..(1usize << (2 * n))).map(move |code| {
            let mut p = SignedPauli::identity(n);
            for q in 0..n {
                let l = Letter::ALL[(code >> (2 * (n - 1 - q))) & 3];
                p.set_letter(q, l);
            }
            p
        })
    }
}

impl fmt::Display for SignedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.phase_exp {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{prefix}{}", self.letters())
    }
}

impl fmt::Debug for SignedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SignedPauli {
    type Err = Error;

    /// Accepts `[sign][i]LETTERS` where sign is `+`, `-` or `−`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::PauliLiteral(s.to_string());
        let t = s.trim();
        let (negative, rest) = if let Some(r) = t.strip_prefix('+') {
            (false, r)
        } else if let Some(r) = t.strip_prefix('-') {
            (true, r)
        } else if let Some(r) = t.strip_prefix('\u{2212}') {
            (true, r)
        } else {
            (false, t)
        };
        let (imag, rest) = match rest.strip_prefix('i') {
            Some(r) => (true, r),
            None => (false, rest),
        };
        if rest.is_empty() {
            return Err(bad());
        }
        let letters = rest
            .chars()
            .map(Letter::from_char)
            .collect::<Option<Vec<_>>>()
            .ok_or_else(bad)?;
        let mut p = SignedPauli::identity(letters.len());
        for (q, l) in letters.into_iter().enumerate() {
            p.set_letter(q, l);
        }
        let exp = 2 * negative as u8 + imag as u8;
        Ok(p.with_phase(exp))
    }
}

/// Parses a literal, panicking on malformed input. For constants and tests.
pub fn pauli(s: &str) -> SignedPauli {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inner_product_examples() {
        assert!(pauli("X").inner_product(&pauli("Z")).unwrap());
        assert!(!pauli("X").inner_product(&pauli("X")).unwrap());
        assert!(pauli("XIXI").inner_product(&pauli("ZIIZ")).unwrap());
        assert_eq!(
            pauli("XI").inner_product(&pauli("XII")),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn products_carry_phase() {
        // XZ = -iY, ZX = iY, XY = iZ
        assert_eq!(pauli("X").mul(&pauli("Z")).unwrap(), pauli("-iY"));
        assert_eq!(pauli("Z").mul(&pauli("X")).unwrap(), pauli("iY"));
        assert_eq!(pauli("X").mul(&pauli("Y")).unwrap(), pauli("iZ"));
        assert_eq!(pauli("YY").mul(&pauli("YY")).unwrap(), pauli("II"));
        assert_eq!(pauli("ZZ").mul(&pauli("XI")).unwrap(), pauli("iYZ"));
    }

    #[test]
    fn literal_round_trip() {
        for s in ["+XIXI", "-ZIIZ", "+iY", "-iXZ"] {
            assert_eq!(pauli(s).to_string(), s);
        }
        assert_eq!(pauli("\u{2212}XIXI"), pauli("-XIXI"));
        assert_eq!(pauli("XY").phase_exp(), 0);
        assert!("XQ".parse::<SignedPauli>().is_err());
        assert!("-".parse::<SignedPauli>().is_err());
    }

    #[test]
    fn identity_is_neutral() {
        let p = pauli("-iXYZ");
        let id = SignedPauli::identity(3);
        assert_eq!(id.mul(&p).unwrap(), p);
        assert_eq!(p.mul(&id).unwrap(), p);
    }

    #[test]
    fn all_enumerates_each_once() {
        let all: Vec<_> = SignedPauli::all(2).collect();
        assert_eq!(all.len(), 16);
        assert!(all[0].is_identity());
        let set: std::collections::HashSet<_> = all.into_iter().collect();
        assert_eq!(set.len(), 16);
    }
}
