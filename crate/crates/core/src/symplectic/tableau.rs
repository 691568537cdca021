//! Clifford operators as `2n × 2n` binary symplectic matrices.
//!
//! Row vectors are transformed by right multiplication, `g ↦ g·C`, so the
//! rows of `C` are the images of `X_1 … X_n, Z_1 … Z_n`.

use std::fmt;

use super::bits::BitRow;
use super::pauli::SignedPauli;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CliffordTableau {
    n: usize,
    rows: Vec<BitRow>,
}

/// The symplectic form `J = [[0, I], [I, 0]]` entry at `(i, j)`.
fn j_entry(n: usize, i: usize, j: usize) -> bool {
    (i < n && j == i + n) || (i >= n && j + n == i)
}

impl CliffordTableau {
    pub fn identity(n: usize) -> Self {
        let rows = (0..2 * n)
            .map(|i| {
                let mut r = BitRow::zeros(2 * n);
                r.set(i, true);
                r
            })
            .collect();
        Self { n, rows }
    }

    pub fn from_rows(rows: Vec<BitRow>) -> Result<Self> {
        let dim = rows.len();
        if !dim.is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "tableau needs an even number of rows, got {dim}"
            )));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        Ok(Self { n: dim / 2, rows })
    }

    /// Builds from `0`/`1` strings, one per row.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| BitRow::from_str01(r)).collect())
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set_row(&mut self, i: usize, row: BitRow) {
        assert_eq!(row.len(), 2 * self.n);
        self.rows[i] = row;
    }

    /// `true` iff `C J Cᵀ = J` over GF(2).
    pub fn is_symplectic(&self) -> bool {
        let n = self.n;
        (0..2 * n).all(|i| {
            (0..2 * n).all(|j| {
                let ri = &self.rows[i];
                let rj = &self.rows[j];
                symplectic_form(ri, rj, n) == j_entry(n, i, j)
            })
        })
    }

    /// `v · C` for a row vector of length `2n`.
    pub fn apply_vec(&self, v: &BitRow) -> BitRow {
        let mut out = BitRow::zeros(2 * self.n);
        for i in v.ones() {
            out.xor_assign(&self.rows[i]);
        }
        out
    }

    /// Image of `g` as a row vector; the phase is not tracked and is set to 0.
    pub fn apply(&self, g: &SignedPauli) -> Result<SignedPauli> {
        if g.num_qubits() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: g.num_qubits(),
            });
        }
        Ok(SignedPauli::from_symplectic(
            &self.apply_vec(&g.symplectic()),
        ))
    }

    /// Tableau applying `self` first and then `next`, i.e. the product `self · next`.
    pub fn then(&self, next: &CliffordTableau) -> Result<CliffordTableau> {
        if self.n != next.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: next.n,
            });
        }
        Ok(CliffordTableau {
            n: self.n,
            rows: self.rows.iter().map(|r| next.apply_vec(r)).collect(),
        })
    }

    /// Embeds a two-qubit tableau on 0-based positions `(a, b)` of an
    /// `n`-qubit register, identity elsewhere.
    pub fn embed_two_qubit(c4: &CliffordTableau, a: usize, b: usize, n: usize) -> Result<Self> {
        if c4.n != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: c4.n,
            });
        }
        for q in [a, b] {
            if q >= n {
                return Err(Error::QubitOutOfRange { qubit: q + 1, n });
            }
        }
        if a == b {
            return Err(Error::RepeatedTarget(a + 1));
        }
        // small index k in (x_a, x_b, z_a, z_b) -> big index
        let map = [a, b, n + a, n + b];
        let mut out = Self::identity(n);
        for (small_row, &big_row) in map.iter().enumerate() {
            let mut row = BitRow::zeros(2 * n);
            for (small_col, &big_col) in map.iter().enumerate() {
                row.set(big_col, c4.entry(small_row, small_col));
            }
            out.rows[big_row] = row;
        }
        Ok(out)
    }
}

/// Symplectic inner product of two length-`2n` row vectors.
pub fn symplectic_form(a: &BitRow, b: &BitRow, n: usize) -> bool {
    let mut acc = false;
    for q in 0..n {
        acc ^= (a.get(q) & b.get(n + q)) ^ (a.get(n + q) & b.get(q));
    }
    acc
}

impl fmt::Debug for CliffordTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CliffordTableau(n={})", self.n)?;
        for r in &self.rows {
            let s = format!("{r:?}");
            writeln!(f, "  {} | {}", &s[..self.n], &s[self.n..])?;
        }
        Ok(())
    }
}

/// Two-qubit tableaux of the code-preserving generators.
pub mod two_qubit {
    use super::CliffordTableau;

    pub fn swap() -> CliffordTableau {
        CliffordTableau::from_strs(&["0100", "1000", "0001", "0010"]).unwrap()
    }

    pub fn zz() -> CliffordTableau {
        CliffordTableau::from_strs(&["1011", "0111", "0010", "0001"]).unwrap()
    }

    pub fn xx() -> CliffordTableau {
        CliffordTableau::from_strs(&["1000", "0100", "1110", "1101"]).unwrap()
    }
}

/// A list of generators, optionally a full canonical set of `2n` rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    n: usize,
    rows: Vec<SignedPauli>,
}

impl GeneratorSet {
    pub fn new(n: usize, rows: Vec<SignedPauli>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.num_qubits() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.num_qubits(),
            });
        }
        Ok(Self { n, rows })
    }

    /// `X_1 … X_n, Z_1 … Z_n`.
    pub fn canonical(n: usize) -> Self {
        use super::pauli::Letter;
        let rows = (0..n)
            .map(|q| SignedPauli::single(n, q, Letter::X))
            .chain((0..n).map(|q| SignedPauli::single(n, q, Letter::Z)))
            .collect();
        Self { n, rows }
    }

    pub fn rows(&self) -> &[SignedPauli] {
        &self.rows
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// `M J Mᵀ = J` with `2n` rows: the rows pair up as symplectic partners.
    pub fn is_canonical(&self) -> bool {
        if self.rows.len() != 2 * self.n {
            return false;
        }
        let vecs: Vec<BitRow> = self.rows.iter().map(|r| r.symplectic()).collect();
        (0..2 * self.n).all(|i| {
            (0..2 * self.n)
                .all(|j| symplectic_form(&vecs[i], &vecs[j], self.n) == j_entry(self.n, i, j))
        })
    }

    /// `M ↦ M C`, phases dropped.
    pub fn transform(&self, c: &CliffordTableau) -> Result<GeneratorSet> {
        let rows = self
            .rows
            .iter()
            .map(|r| c.apply(r))
            .collect::<Result<Vec<_>>>()?;
        GeneratorSet::new(self.n, rows)
    }

    /// Rows as `0`/`1` strings, for comparisons against printed matrices.
    pub fn matrix_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| format!("{:?}", r.symplectic()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::pauli::pauli;

    #[test]
    fn generators_are_symplectic() {
        assert!(CliffordTableau::identity(3).is_symplectic());
        assert!(two_qubit::swap().is_symplectic());
        assert!(two_qubit::zz().is_symplectic());
        assert!(two_qubit::xx().is_symplectic());
    }

    #[test]
    fn zeroed_row_is_not_symplectic() {
        let mut c = two_qubit::zz();
        c.set_row(1, BitRow::zeros(4));
        assert!(!c.is_symplectic());
    }

    #[test]
    fn zz_squares_to_identity_over_gf2() {
        let zz = two_qubit::zz();
        assert_eq!(zz.then(&zz).unwrap(), CliffordTableau::identity(2));
    }

    #[test]
    fn identity_is_neutral() {
        let c = two_qubit::xx();
        assert_eq!(c.then(&CliffordTableau::identity(2)).unwrap(), c);
        let g = pauli("XZ");
        assert_eq!(CliffordTableau::identity(2).apply(&g).unwrap(), g);
    }

    #[test]
    fn embed_at_12_of_2_is_itself() {
        let c = two_qubit::zz();
        assert_eq!(CliffordTableau::embed_two_qubit(&c, 0, 1, 2).unwrap(), c);
        assert!(CliffordTableau::embed_two_qubit(&c, 1, 1, 2).is_err());
        assert!(CliffordTableau::embed_two_qubit(&c, 0, 4, 4).is_err());
    }

    #[test]
    fn canonical_set_is_canonical() {
        assert!(GeneratorSet::canonical(3).is_canonical());
        let g = GeneratorSet::new(2, vec![pauli("XI"), pauli("XI"), pauli("ZI"), pauli("IZ")]).unwrap();
        assert!(!g.is_canonical());
    }
}
