//! Row reduction over GF(2).

use super::bits::BitRow;

/// An incrementally built row-echelon basis of a subspace of `GF(2)^len`.
#[derive(Clone, Debug, Default)]
pub struct Gf2Basis {
    len: usize,
    rows: Vec<BitRow>,
    pivots: Vec<usize>,
}

impl Gf2Basis {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<'a>(len: usize, rows: impl IntoIterator<Item = &'a BitRow>) -> Self {
        let mut b = Self::new(len);
        for r in rows {
            b.insert(r);
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Independent rows, in insertion order.
    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    /// Canonical representative of `v` modulo the span. Linear in `v`.
    pub fn reduce(&self, v: &BitRow) -> BitRow {
        debug_assert_eq!(v.len(), self.len);
        let mut out = v.clone();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if out.get(p) {
                out.xor_assign(r);
            }
        }
        out
    }

    pub fn contains(&self, v: &BitRow) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &BitRow) -> bool {
        let r = self.reduce(v);
        let pivot = r.ones().next();
        match pivot {
            Some(p) => {
                self.rows.push(r);
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }
}

/// Basis of `span(a) ∩ span(b)` (Zassenhaus).
pub fn intersection(len: usize, a: &[BitRow], b: &[BitRow]) -> Vec<BitRow> {
    let zero = BitRow::zeros(len);
    let mut basis = Gf2Basis::new(2 * len);
    for r in a {
        basis.insert(&r.concat(r));
    }
    for r in b {
        basis.insert(&r.concat(&zero));
    }
    // Re-reduce into full echelon form so rows whose left half vanishes are
    // exactly the intersection.
    let mut rows: Vec<BitRow> = basis.rows().to_vec();
    echelon(&mut rows);
    let mut out = Gf2Basis::new(len);
    for r in rows {
        if r.slice(0, len).is_zero() {
            out.insert(&r.slice(len, 2 * len));
        }
    }
    out.rows().to_vec()
}

/// In-place reduced row echelon form; zero rows are removed.
pub fn echelon(rows: &mut Vec<BitRow>) {
    let Some(width) = rows.first().map(|r| r.len()) else {
        return;
    };
    let mut lead = 0;
    for col in 0..width {
        let Some(pos) = (lead..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(lead, pos);
        let pivot = rows[lead].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if i != lead && r.get(col) {
                r.xor_assign(&pivot);
            }
        }
        lead += 1;
        if lead == rows.len() {
            break;
        }
    }
    rows.retain(|r| !r.is_zero());
}
