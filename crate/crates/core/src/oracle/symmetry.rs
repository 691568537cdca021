//! Resource-state symmetrization.

use num_complex::Complex;
use num_traits::Zero;

use super::{Operator, StateVector};
use crate::error::{Error, Result};
use crate::gate::{Gate, GateKind};
use crate::scalar::Real;

/// Outcome probabilities and post-measurement states of the SWAP-eigenvalue
/// measurement.
#[derive(Clone, Debug, PartialEq)]
pub struct SwapMeasurement<T> {
    pub p_plus: T,
    pub p_minus: T,
    pub post_plus: Option<StateVector<T>>,
    pub post_minus: Option<StateVector<T>>,
}

fn toffoli<T: Real>() -> Vec<Complex<T>> {
    let mut m = vec![Complex::zero(); 64];
    for i in 0..8 {
        let j = if i >= 6 { i ^ 1 } else { i };
        m[i * 8 + j] = Complex::new(T::one(), T::zero());
    }
    m
}

/// Measures the SWAP eigenvalue of a two-qubit state with an ancilla in
/// `|0⟩`: CNOT(1,2), H(1), Toffoli(1,2→3), H(1), CNOT(1,2), then Z on the
/// ancilla. Outcome 0 means `+1`.
pub fn swap_symmetry_measure<T: Real>(state: &StateVector<T>) -> Result<SwapMeasurement<T>> {
    if state.num_qubits() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: state.num_qubits(),
        });
    }
    let mut s = state.tensor(&StateVector::zero(1)?)?;
    s.apply_gate(&Gate::new(GateKind::Cnot, &[1, 2])?)?;
    s.apply_gate(&Gate::new(GateKind::H, &[1])?)?;
    s.apply_matrix(&[1, 2, 3], &toffoli::<T>())?;
    s.apply_gate(&Gate::new(GateKind::H, &[1])?)?;
    s.apply_gate(&Gate::new(GateKind::Cnot, &[1, 2])?)?;
    let [(p0, s0), (p1, s1)] = s.measure_z(3)?;
    Ok(SwapMeasurement {
        p_plus: p0,
        p_minus: p1,
        post_plus: s0,
        post_minus: s1,
    })
}

/// `|Φ^N_{+,j}⟩`: the normalized symmetric sum of products with `j` copies
/// of `|φ̄_θ⟩` and `N − j` copies of `|φ_θ⟩`.
pub fn symmetric_state<T: Real>(n: usize, j: usize, theta: T) -> Result<StateVector<T>> {
    if j > n || n == 0 {
        return Err(Error::InvalidArgument(format!("j = {j} with N = {n}")));
    }
    let (good, bad) = (StateVector::phi_theta(theta), StateVector::phi_theta_bar(theta));
    let mut acc = vec![Complex::zero(); 1 << n];
    for mask in (0..1usize << n).filter(|m| m.count_ones() as usize == j) {
        let prod = product(n, mask, &good, &bad)?;
        for (a, b) in acc.iter_mut().zip(prod.amplitudes()) {
            *a = *a + b;
        }
    }
    StateVector::from_amplitudes(acc)
}

/// Product state with `|φ̄⟩` on the qubits set in `mask` (bit `n−q` for qubit `q`).
fn product<T: Real>(n: usize, mask: usize, good: &StateVector<T>, bad: &StateVector<T>) -> Result<StateVector<T>> {
    let mut s: Option<StateVector<T>> = None;
    for q in 1..=n {
        let f = if (mask >> (n - q)) & 1 == 1 { bad } else { good };
        s = Some(match s {
            None => f.clone(),
            Some(s) => s.tensor(f)?,
        });
    }
    Ok(s.expect("n > 0"))
}

/// Projector onto the completely symmetric subspace, `Σ_j |Φ_j⟩⟨Φ_j|`.
pub fn symmetric_projector<T: Real>(n: usize, theta: T) -> Result<Operator<T>> {
    let d = 1usize << n;
    let mut m = vec![Complex::zero(); d * d];
    for j in 0..=n {
        let v = symmetric_state(n, j, theta)?;
        let a = v.amplitudes();
        for r in 0..d {
            for c in 0..d {
                m[r * d + c] = m[r * d + c] + a[r] * a[c].conj();
            }
        }
    }
    Operator::from_row_major(n, m)
}

/// A finite mixture of pure states.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityLikeMixture<T> {
    terms: Vec<(T, StateVector<T>)>,
}

impl<T: Real> DensityLikeMixture<T> {
    pub fn new(terms: Vec<(T, StateVector<T>)>) -> Result<Self> {
        let total = terms.iter().fold(T::zero(), |a, (w, _)| a + *w);
        if terms.iter().any(|(w, _)| *w < T::zero()) || (total - T::one()).abs() > T::lit(1e-12).max(T::epsilon() * T::lit(16.0)) {
            return Err(Error::InvalidArgument("mixture weights must be nonnegative and sum to 1".into()));
        }
        if terms.windows(2).any(|w| w[0].1.num_qubits() != w[1].1.num_qubits()) {
            return Err(Error::InvalidArgument("mixture terms differ in size".into()));
        }
        Ok(Self { terms })
    }

    /// `N` independent copies of `(1−p)|φ_θ⟩⟨φ_θ| + p|φ̄_θ⟩⟨φ̄_θ|`, expanded
    /// into its `2^N` product terms.
    pub fn noisy_resource_states(n: usize, theta: T, p: T) -> Result<Self> {
        let (good, bad) = (StateVector::phi_theta(theta), StateVector::phi_theta_bar(theta));
        let terms = (0..1usize << n)
            .map(|mask| {
                let j = mask.count_ones() as i32;
                let w = p.powi(j) * (T::one() - p).powi(n as i32 - j);
                Ok((w, product(n, mask, &good, &bad)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(terms)
    }

    pub fn terms(&self) -> &[(T, StateVector<T>)] {
        &self.terms
    }

    /// Probability that `proj` accepts, and the fidelity of qubit `q` with
    /// `target` in the accepted state.
    pub fn project(&self, proj: &Operator<T>, q: usize, target: &StateVector<T>) -> Result<(T, T)> {
        let mut acc = T::zero();
        let mut good = T::zero();
        for (w, s) in &self.terms {
            let ps = proj.apply(s)?;
            acc = acc + *w * ps.norm_sqr();
            good = good + *w * ps.qubit_overlap(q, target);
        }
        let fid = if acc > T::zero() { good / acc } else { T::zero() };
        Ok((acc, fid))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymmetrizeResult {
    pub acceptance: f64,
    /// Fidelity of one copy with `|φ_θ⟩` after a successful projection.
    pub fidelity: f64,
}

/// Symmetrizes `N ∈ {2, 3}` noisy resource states with flip probability `p`.
pub fn symmetrize(n: usize, p: f64) -> Result<SymmetrizeResult> {
    if !(2..=3).contains(&n) {
        return Err(Error::InvalidArgument(format!("N = {n}; supported N are 2 and 3")));
    }
    if !(0.0..1.0 / n as f64).contains(&p) {
        return Err(Error::InvalidArgument(format!("p = {p} must lie in [0, 1/N)")));
    }
    let theta = 0.7;
    let mix = DensityLikeMixture::noisy_resource_states(n, theta, p)?;
    let proj = symmetric_projector(n, theta)?;
    let (acceptance, fidelity) = mix.project(&proj, 1, &StateVector::phi_theta(theta))?;
    Ok(SymmetrizeResult { acceptance, fidelity })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_eigenvalues() {
        let phi = StateVector::<f64>::phi_theta(0.4);
        let m = swap_symmetry_measure(&phi.tensor(&phi).unwrap()).unwrap();
        assert!((m.p_plus - 1.0).abs() < 1e-12);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let singlet = StateVector::from_amplitudes(vec![
            Complex::zero(),
            Complex::new(h, 0.0),
            Complex::new(-h, 0.0),
            Complex::zero(),
        ])
        .unwrap();
        let m = swap_symmetry_measure(&singlet).unwrap();
        assert!((m.p_minus - 1.0).abs() < 1e-12);
        assert!(m.post_minus.unwrap().equal_up_to_phase(&singlet, 1e-12));
        let m = swap_symmetry_measure(&StateVector::<f64>::basis(2, 1).unwrap()).unwrap();
        assert!((m.p_plus - 0.5).abs() < 1e-12);
    }

    #[test]
    fn projector_rank_and_symmetry() {
        for n in [2, 3] {
            let p = symmetric_projector::<f64>(n, 0.7).unwrap();
            assert!((p.trace().re - (n + 1) as f64).abs() < 1e-12);
            assert!(p.mul(&p).unwrap().max_abs_diff(&p) < 1e-12);
        }
    }

    #[test]
    fn n3_j1_state() {
        let t = 0.7;
        let (g, b) = (StateVector::<f64>::phi_theta(t), StateVector::phi_theta_bar(t));
        let terms = [
            b.tensor(&g).unwrap().tensor(&g).unwrap(),
            g.tensor(&b).unwrap().tensor(&g).unwrap(),
            g.tensor(&g).unwrap().tensor(&b).unwrap(),
        ];
        let amps = (0..8)
            .map(|i| terms.iter().map(|s| s.amplitudes()[i]).sum::<Complex<f64>>() / 3f64.sqrt())
            .collect();
        let want = StateVector { n: 3, amps };
        assert!((want.norm_sqr() - 1.0).abs() < 1e-12);
        assert!(symmetric_state(3, 1, t).unwrap().equal_up_to_phase(&want, 1e-12));
    }

    #[test]
    fn clean_preparation() {
        let r = symmetrize(3, 0.0).unwrap();
        assert!((r.acceptance - 1.0).abs() < 1e-12 && (r.fidelity - 1.0).abs() < 1e-12);
        assert!(symmetrize(2, 0.6).is_err());
        assert!(symmetrize(4, 0.01).is_err());
    }
}
