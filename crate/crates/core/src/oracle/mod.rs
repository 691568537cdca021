//! Small dense state-vector and operator simulator.
//!
//! Qubit 1 is the most significant bit of a basis index. Everything is
//! generic over [`Real`]; tolerances below assume `f64` unless a caller
//! widens them.

mod analog;
mod checks;
mod symmetry;

pub use analog::{
    analog_channel_estimate, repeat_until_success, resource_rotation_sim, rus_mean_attempts,
    AnalogNoise, RotationBranch,
};
pub use checks::{
    dense_conjugate, dense_conjugation_agrees, encoded_equivalence, ghz_fidelity, logical_codewords,
    ideal_logical_unitary, run_suite, verify_gadget, verify_gadget_circuit, SuiteCheck,
};
pub use symmetry::{
    swap_symmetry_measure, symmetric_projector, symmetric_state, symmetrize, DensityLikeMixture,
    SwapMeasurement, SymmetrizeResult,
};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::circuit::{Circuit, PrepState};
use crate::error::{Error, Result};
use crate::gate::{Gate, GateKind};
use crate::scalar::Real;
use crate::symplectic::{Letter, SignedPauli};

pub const MAX_STATE_QUBITS: usize = 12;
pub const MAX_UNITARY_QUBITS: usize = 10;

fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

/// Row-major `2^k × 2^k` matrix of a gate kind.
pub fn gate_matrix<T: Real>(kind: GateKind) -> Result<Vec<Complex<T>>> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let o = c::<T>(0.0, 0.0);
    // (I − i s G)/√2 for a two-qubit Pauli G given by its diagonal-free form
    let rot2 = |g: [[Complex<T>; 4]; 4], s: f64| -> Vec<Complex<T>> {
        let mut m = Vec::with_capacity(16);
        for (r, row) in g.iter().enumerate() {
            for (col, &v) in row.iter().enumerate() {
                let id = if r == col { c::<T>(h, 0.0) } else { o };
                m.push(id + c::<T>(0.0, -s * h) * v);
            }
        }
        m
    };
    let one = c::<T>(1.0, 0.0);
    let m = match kind {
        GateKind::X => vec![o, one, one, o],
        GateKind::Y => vec![o, c(0.0, -1.0), c(0.0, 1.0), o],
        GateKind::Z => vec![one, o, o, -one],
        GateKind::H => vec![c(h, 0.0), c(h, 0.0), c(h, 0.0), c(-h, 0.0)],
        GateKind::Rx => vec![c(h, 0.0), c(0.0, -h), c(0.0, -h), c(h, 0.0)],
        GateKind::Rz(t) => vec![
            Complex::from_polar(T::one(), T::lit(-t / 2.0)),
            o,
            o,
            Complex::from_polar(T::one(), T::lit(t / 2.0)),
        ],
        GateKind::Swap => {
            let mut m = vec![o; 16];
            for (r, col) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
                m[r * 4 + col] = one;
            }
            m
        }
        GateKind::Cnot => {
            let mut m = vec![o; 16];
            for (r, col) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
                m[r * 4 + col] = one;
            }
            m
        }
        GateKind::Zz => rot2(kron2(&pauli_2x2(Letter::Z), &pauli_2x2(Letter::Z)), 1.0),
        GateKind::Xx => rot2(kron2(&pauli_2x2(Letter::X), &pauli_2x2(Letter::X)), -1.0),
        GateKind::Yy => rot2(kron2(&pauli_2x2(Letter::Y), &pauli_2x2(Letter::Y)), 1.0),
        GateKind::Measure(_) => {
            return Err(Error::InvalidArgument("measurements have no unitary".into()))
        }
    };
    Ok(m)
}

fn pauli_2x2<T: Real>(l: Letter) -> [[Complex<T>; 2]; 2] {
    let (o, one) = (c::<T>(0.0, 0.0), c::<T>(1.0, 0.0));
    match l {
        Letter::I => [[one, o], [o, one]],
        Letter::X => [[o, one], [one, o]],
        Letter::Y => [[o, c(0.0, -1.0)], [c(0.0, 1.0), o]],
        Letter::Z => [[one, o], [o, -one]],
    }
}

fn kron2<T: Real>(a: &[[Complex<T>; 2]; 2], b: &[[Complex<T>; 2]; 2]) -> [[Complex<T>; 4]; 4] {
    let mut m = [[c::<T>(0.0, 0.0); 4]; 4];
    for r in 0..4 {
        for col in 0..4 {
            m[r][col] = a[r >> 1][col >> 1] * b[r & 1][col & 1];
        }
    }
    m
}

/// Pure state of up to [`MAX_STATE_QUBITS`] qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T> {
    n: usize,
    amps: Vec<Complex<T>>,
}

impl<T: Real> StateVector<T> {
    fn check_size(n: usize) -> Result<()> {
        if n > MAX_STATE_QUBITS {
            return Err(Error::SizeCap {
                qubits: n,
                cap: MAX_STATE_QUBITS,
            });
        }
        Ok(())
    }

    pub fn basis(n: usize, index: usize) -> Result<Self> {
        Self::check_size(n)?;
        if index >= 1 << n {
            return Err(Error::InvalidArgument(format!("basis index {index} on {n} qubits")));
        }
        let mut amps = vec![Complex::zero(); 1 << n];
        amps[index] = Complex::one();
        Ok(Self { n, amps })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::basis(n, 0)
    }

    /// Normalized state from raw amplitudes; length must be a power of two.
    pub fn from_amplitudes(amps: Vec<Complex<T>>) -> Result<Self> {
        if !amps.len().is_power_of_two() {
            return Err(Error::InvalidArgument(format!("{} amplitudes", amps.len())));
        }
        let n = amps.len().trailing_zeros() as usize;
        Self::check_size(n)?;
        let mut s = Self { n, amps };
        let norm = s.norm_sqr().sqrt();
        if norm <= T::epsilon() {
            return Err(Error::InvalidArgument("zero vector".into()));
        }
        s.scale(Complex::new(T::one() / norm, T::zero()));
        Ok(s)
    }

    /// `α|0⟩ + β|1⟩`, normalized.
    pub fn qubit(alpha: Complex<T>, beta: Complex<T>) -> Result<Self> {
        Self::from_amplitudes(vec![alpha, beta])
    }

    /// `(e^{iθ/2}|0⟩ + e^{−iθ/2}|1⟩)/√2`.
    pub fn phi_theta(theta: T) -> Self {
        let h = T::lit(std::f64::consts::FRAC_1_SQRT_2);
        let half = theta / T::lit(2.0);
        Self {
            n: 1,
            amps: vec![Complex::from_polar(h, half), Complex::from_polar(h, -half)],
        }
    }

    /// The state orthogonal to [`StateVector::phi_theta`].
    pub fn phi_theta_bar(theta: T) -> Self {
        let h = T::lit(std::f64::consts::FRAC_1_SQRT_2);
        let half = theta / T::lit(2.0);
        Self {
            n: 1,
            amps: vec![Complex::from_polar(h, half), -Complex::from_polar(h, -half)],
        }
    }

    /// `(|0…0⟩ + |1…1⟩)/√2`.
    pub fn ghz(n: usize) -> Result<Self> {
        Self::check_size(n)?;
        let h = T::lit(std::f64::consts::FRAC_1_SQRT_2);
        let mut amps = vec![Complex::zero(); 1 << n];
        amps[0] = Complex::new(h, T::zero());
        amps[(1 << n) - 1] = Complex::new(h, T::zero());
        Ok(Self { n, amps })
    }

    /// Initial state from a circuit's declared preparations; other qubits
    /// start in `|0⟩`. A `Code` block starts in `(|0…0⟩ + |1…1⟩)/√2`.
    pub fn from_preps(circuit: &Circuit) -> Result<Self> {
        let n = circuit.num_qubits();
        let mut s = Self::zero(n)?;
        for p in circuit.preps() {
            let q0 = p.qubits[0];
            match p.state {
                PrepState::Zero => {}
                PrepState::Plus | PrepState::PlusPlus => {
                    for &q in &p.qubits {
                        s.apply_gate(&Gate::new(GateKind::H, &[q])?)?;
                    }
                }
                PrepState::PhiPlus | PrepState::Code => {
                    s.apply_gate(&Gate::new(GateKind::H, &[q0])?)?;
                    for &q in &p.qubits[1..] {
                        s.apply_gate(&Gate::new(GateKind::Cnot, &[q0, q])?)?;
                    }
                }
                PrepState::Phi(t) => {
                    s.apply_gate(&Gate::new(GateKind::H, &[q0])?)?;
                    s.apply_gate(&Gate::new(GateKind::Rz(-t), &[q0])?)?;
                }
            }
        }
        Ok(s)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> T {
        self.amps.iter().fold(T::zero(), |a, z| a + z.norm_sqr())
    }

    pub fn scale(&mut self, f: Complex<T>) {
        for a in &mut self.amps {
            *a = *a * f;
        }
    }

    /// `|self⟩ ⊗ |other⟩`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        Self::check_size(self.n + other.n)?;
        let mut amps = Vec::with_capacity(self.amps.len() * other.amps.len());
        for a in &self.amps {
            for b in &other.amps {
                amps.push(*a * *b);
            }
        }
        Ok(Self {
            n: self.n + other.n,
            amps,
        })
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.amps
            .iter()
            .zip(&other.amps)
            .fold(Complex::zero(), |acc, (a, b)| acc + a.conj() * b)
    }

    pub fn fidelity(&self, other: &Self) -> T {
        self.inner(other).norm_sqr()
    }

    /// Applies a `2^k × 2^k` matrix to 1-based qubits `qs`; `qs[0]` is the
    /// most significant local bit.
    pub fn apply_matrix(&mut self, qs: &[usize], m: &[Complex<T>]) -> Result<()> {
        let k = qs.len();
        if m.len() != 1 << (2 * k) {
            return Err(Error::DimensionMismatch {
                expected: 1 << (2 * k),
                found: m.len(),
            });
        }
        for &q in qs {
            if q == 0 || q > self.n {
                return Err(Error::QubitOutOfRange { qubit: q, n: self.n });
            }
        }
        let shifts: Vec<usize> = qs.iter().map(|q| self.n - q).collect();
        let mask: usize = shifts.iter().map(|s| 1 << s).sum();
        let local = 1 << k;
        let offsets: Vec<usize> = (0..local)
            .map(|l| {
                (0..k)
                    .filter(|i| (l >> (k - 1 - i)) & 1 == 1)
                    .map(|i| 1 << shifts[i])
                    .sum()
            })
            .collect();
        let mut buf = vec![Complex::zero(); local];
        for base in (0..self.amps.len()).filter(|b| b & mask == 0) {
            for (l, off) in offsets.iter().enumerate() {
                buf[l] = self.amps[base | off];
            }
            for (r, off) in offsets.iter().enumerate() {
                let mut acc = Complex::zero();
                for (col, b) in buf.iter().enumerate() {
                    acc = acc + m[r * local + col] * b;
                }
                self.amps[base | off] = acc;
            }
        }
        Ok(())
    }

    pub fn apply_gate(&mut self, gate: &Gate) -> Result<()> {
        let m = gate_matrix::<T>(gate.kind())?;
        self.apply_matrix(gate.targets(), &m)
    }

    /// Applies every gate; measurements are rejected.
    pub fn apply_circuit(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.num_qubits() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: circuit.num_qubits(),
            });
        }
        for g in circuit.gates() {
            self.apply_gate(g)?;
        }
        Ok(())
    }

    pub fn apply_pauli(&mut self, p: &SignedPauli) -> Result<()> {
        if p.num_qubits() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.num_qubits(),
            });
        }
        for q in 0..self.n {
            let l = p.letter(q);
            if l != Letter::I {
                let m = pauli_2x2::<T>(l);
                self.apply_matrix(&[q + 1], &[m[0][0], m[0][1], m[1][0], m[1][1]])?;
            }
        }
        self.scale(phase_of::<T>(p.phase_exp()));
        Ok(())
    }

    /// Probability of finding qubit `q` in `|v⟩` (1-qubit `v`).
    pub fn qubit_overlap(&self, q: usize, v: &Self) -> T {
        let shift = self.n - q;
        let (a, b) = (v.amps[0].conj(), v.amps[1].conj());
        let mut acc = T::zero();
        for i in (0..self.amps.len()).filter(|i| (i >> shift) & 1 == 0) {
            acc = acc + (a * self.amps[i] + b * self.amps[i | (1 << shift)]).norm_sqr();
        }
        acc
    }

    /// Z measurement of qubit `q`: for each outcome, its probability and the
    /// normalized state of the remaining qubits (`None` if impossible).
    pub fn measure_z(&self, q: usize) -> Result<[(T, Option<Self>); 2]> {
        if q == 0 || q > self.n {
            return Err(Error::QubitOutOfRange { qubit: q, n: self.n });
        }
        let shift = self.n - q;
        let branch = |bit: usize| -> (T, Option<Self>) {
            let amps: Vec<Complex<T>> = (0..self.amps.len())
                .filter(|i| (i >> shift) & 1 == bit)
                .map(|i| self.amps[i])
                .collect();
            let prob = amps.iter().fold(T::zero(), |a, z| a + z.norm_sqr());
            let state = if prob > T::epsilon() {
                Self::from_amplitudes(amps).ok()
            } else {
                None
            };
            (prob, state)
        };
        Ok([branch(0), branch(1)])
    }

    /// Equality up to a global phase, aligned on the largest entry of `other`.
    pub fn equal_up_to_phase(&self, other: &Self, tol: T) -> bool {
        self.n == other.n && vectors_equal_up_to_phase(&self.amps, &other.amps, tol)
    }
}

pub(crate) fn phase_of<T: Real>(e: u8) -> Complex<T> {
    match e % 4 {
        0 => c(1.0, 0.0),
        1 => c(0.0, 1.0),
        2 => c(-1.0, 0.0),
        _ => c(0.0, -1.0),
    }
}

pub(crate) fn vectors_equal_up_to_phase<T: Real>(a: &[Complex<T>], b: &[Complex<T>], tol: T) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some((i, _)) = b
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.norm_sqr().partial_cmp(&y.1.norm_sqr()).expect("finite"))
    else {
        return true;
    };
    if b[i].norm() <= tol {
        return a.iter().all(|z| z.norm() <= tol);
    }
    let ph = a[i] / b[i];
    if (ph.norm() - T::one()).abs() > tol {
        return false;
    }
    let ph = ph / ph.norm();
    a.iter().zip(b).all(|(x, y)| (*x - ph * y).norm() <= tol)
}

/// Dense square operator on `n` qubits, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator<T> {
    n: usize,
    m: Vec<Complex<T>>,
}

pub type Unitary<T> = Operator<T>;

impl<T: Real> Operator<T> {
    pub fn identity(n: usize) -> Result<Self> {
        if n > MAX_UNITARY_QUBITS {
            return Err(Error::SizeCap {
                qubits: n,
                cap: MAX_UNITARY_QUBITS,
            });
        }
        let d = 1 << n;
        let mut m = vec![Complex::zero(); d * d];
        for i in 0..d {
            m[i * d + i] = Complex::one();
        }
        Ok(Self { n, m })
    }

    pub fn from_columns(cols: &[StateVector<T>]) -> Result<Self> {
        let d = cols.len();
        if !d.is_power_of_two() || cols.iter().any(|c| c.amps.len() != d) {
            return Err(Error::InvalidArgument("columns do not form a square matrix".into()));
        }
        let mut m = vec![Complex::zero(); d * d];
        for (j, col) in cols.iter().enumerate() {
            for (i, a) in col.amps.iter().enumerate() {
                m[i * d + j] = *a;
            }
        }
        Ok(Self {
            n: d.trailing_zeros() as usize,
            m,
        })
    }

    pub fn from_row_major(n: usize, m: Vec<Complex<T>>) -> Result<Self> {
        if m.len() != 1 << (2 * n) {
            return Err(Error::DimensionMismatch {
                expected: 1 << (2 * n),
                found: m.len(),
            });
        }
        Ok(Self { n, m })
    }

    pub fn pauli(p: &SignedPauli) -> Result<Self> {
        let n = p.num_qubits();
        let cols = (0..1usize << n)
            .map(|j| {
                let mut s = StateVector::basis(n, j)?;
                s.apply_pauli(p)?;
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_columns(&cols)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn entry(&self, r: usize, col: usize) -> Complex<T> {
        self.m[r * self.dim() + col]
    }

    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.dim()).map(|i| self.entry(i, j)).collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let d = self.dim();
        let mut m = vec![Complex::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.m[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    m[i * d + j] = m[i * d + j] + a * other.m[k * d + j];
                }
            }
        }
        Ok(Self { n: self.n, m })
    }

    pub fn adjoint(&self) -> Self {
        let d = self.dim();
        let mut m = vec![Complex::zero(); d * d];
        for i in 0..d {
            for j in 0..d {
                m[j * d + i] = self.m[i * d + j].conj();
            }
        }
        Self { n: self.n, m }
    }

    pub fn apply(&self, s: &StateVector<T>) -> Result<StateVector<T>> {
        if s.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: s.n,
            });
        }
        let d = self.dim();
        let amps = (0..d)
            .map(|i| {
                (0..d).fold(Complex::zero(), |acc, j| acc + self.m[i * d + j] * s.amps[j])
            })
            .collect();
        Ok(StateVector { n: self.n, amps })
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim()).fold(Complex::zero(), |a, i| a + self.entry(i, i))
    }

    /// Entrywise distance after removing a global phase.
    pub fn equal_up_to_phase(&self, other: &Self, tol: T) -> bool {
        self.n == other.n && vectors_equal_up_to_phase(&self.m, &other.m, tol)
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.m
            .iter()
            .zip(&other.m)
            .fold(T::zero(), |a, (x, y)| a.max((*x - y).norm()))
    }
}

/// Product of the circuit's gate matrices in circuit order.
pub fn unitary_of<T: Real>(circuit: &Circuit) -> Result<Unitary<T>> {
    let n = circuit.num_qubits();
    if n > MAX_UNITARY_QUBITS {
        return Err(Error::SizeCap {
            qubits: n,
            cap: MAX_UNITARY_QUBITS,
        });
    }
    if circuit.has_measurements() {
        return Err(Error::InvalidArgument("circuit contains measurements".into()));
    }
    let cols = (0..1usize << n)
        .map(|j| {
            let mut s = StateVector::basis(n, j)?;
            s.apply_circuit(circuit)?;
            Ok(s)
        })
        .collect::<Result<Vec<_>>>()?;
    Operator::from_columns(&cols)
}
