//! Analog rotation errors and the resource-state rotation.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal, Uniform};
use rayon::prelude::*;

use super::StateVector;
use crate::error::{Error, Result};
use crate::gate::{Gate, GateKind};
use crate::scalar::Real;

/// Distribution of the angle error `δθ`. Both have mean 0 and standard
/// deviation `σ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AnalogNoise {
    #[default]
    Gaussian,
    Uniform,
}

const BLOCK: usize = 8192;

/// Estimates the dephasing weight of `ρ ↦ E[R_Z(θ+δθ) ρ R_Z(θ+δθ)†]`.
///
/// Each sample rotates `|+⟩` by `θ + δθ`. Relative to the ideal rotation
/// the coherence is multiplied by `1 − 2p`, which gives `p`. Samples are
/// drawn in fixed-size blocks, each from its own ChaCha stream, so the
/// result does not depend on the number of threads.
pub fn analog_channel_estimate(theta: f64, sigma: f64, samples: usize, seed: u64, noise: AnalogNoise) -> f64 {
    let plus = StateVector::<f64>::from_amplitudes(vec![Complex::new(1.0, 0.0); 2]).expect("|+>");
    let rotate = |angle: f64| {
        let mut s = plus.clone();
        s.apply_gate(&Gate::new(GateKind::Rz(angle), &[1]).expect("valid"))
            .expect("1 qubit");
        let a = s.amplitudes();
        a[0] * a[1].conj()
    };
    let ideal = rotate(theta);
    let blocks = samples.div_ceil(BLOCK);
    let sums: Vec<f64> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b as u64);
            let count = BLOCK.min(samples - b * BLOCK);
            let mut draw = delta_sampler(sigma, noise);
            (0..count)
                .map(|_| (rotate(theta + draw(&mut rng)) / ideal).re)
                .sum()
        })
        .collect();
    let mean = sums.iter().sum::<f64>() / samples as f64;
    (1.0 - mean) / 2.0
}

fn delta_sampler(sigma: f64, noise: AnalogNoise) -> Box<dyn FnMut(&mut ChaCha8Rng) -> f64> {
    if sigma == 0.0 {
        return Box::new(|_| 0.0);
    }
    match noise {
        AnalogNoise::Gaussian => {
            let d = Normal::new(0.0, sigma).expect("sigma finite");
            Box::new(move |r| d.sample(r))
        }
        AnalogNoise::Uniform => {
            let w = sigma * 3f64.sqrt();
            let d = Uniform::new_inclusive(-w, w).expect("ordered bounds");
            Box::new(move |r| d.sample(r))
        }
    }
}

/// One measurement outcome of the resource-state rotation.
#[derive(Clone, Debug, PartialEq)]
pub struct RotationBranch<T> {
    pub outcome: bool,
    pub probability: T,
    /// Rotation actually applied: `+θ` for outcome 1, `−θ` for outcome 0.
    pub angle: T,
    pub state: StateVector<T>,
}

/// Runs `CNOT(ψ → φ_θ)` and measures the resource qubit in Z.
pub fn resource_rotation_sim<T: Real>(psi: &StateVector<T>, theta: T) -> Result<[RotationBranch<T>; 2]> {
    if psi.num_qubits() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: psi.num_qubits(),
        });
    }
    let mut s = psi.tensor(&StateVector::phi_theta(theta))?;
    s.apply_gate(&Gate::new(GateKind::Cnot, &[1, 2])?)?;
    let [(p0, s0), (p1, s1)] = s.measure_z(2)?;
    let s0 = s0.ok_or_else(|| Error::InvalidArgument("outcome 0 impossible".into()))?;
    let s1 = s1.ok_or_else(|| Error::InvalidArgument("outcome 1 impossible".into()))?;
    Ok([
        RotationBranch {
            outcome: false,
            probability: p0,
            angle: -theta,
            state: s0,
        },
        RotationBranch {
            outcome: true,
            probability: p1,
            angle: theta,
            state: s1,
        },
    ])
}

/// Repeat-until-success rotation by `θ`. After a failure the state has been
/// rotated by `−r`, so the next attempt targets `2r`. Returns the number of
/// resource states consumed and the final state.
pub fn repeat_until_success<R: Rng>(
    psi: &StateVector<f64>,
    theta: f64,
    rng: &mut R,
    max_attempts: usize,
) -> Result<(usize, StateVector<f64>)> {
    let mut state = psi.clone();
    let mut remaining = theta;
    for attempt in 1..=max_attempts {
        let [b0, b1] = resource_rotation_sim(&state, remaining)?;
        if rng.random::<f64>() < b1.probability {
            return Ok((attempt, b1.state));
        }
        state = b0.state;
        remaining *= 2.0;
    }
    Err(Error::InvalidArgument(format!("no success within {max_attempts} attempts")))
}

/// Mean number of resource states consumed over `trials` runs.
pub fn rus_mean_attempts(theta: f64, trials: usize, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let psi = StateVector::qubit(Complex::new(0.6, 0.0), Complex::new(0.0, 0.8))?;
    let mut total = 0usize;
    for _ in 0..trials {
        total += repeat_until_success(&psi, theta, &mut rng, 64)?.0;
    }
    Ok(total as f64 / trials as f64)
}
