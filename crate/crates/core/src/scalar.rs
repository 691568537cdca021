//! Scalar abstractions shared by the numeric modules.
//!
//! The dense oracle runs over any [`Real`] (f32 or f64). The undetectable
//! probability formulas only need field arithmetic, so they accept any
//! [`Probability`], which includes exact rationals.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, Num};

/// Floating point scalar usable by the dense simulator.
pub trait Real:
    Float + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Field element usable in the order-k probability formulas.
pub trait Probability: Num + Clone + FromPrimitive + PartialOrd + Debug {}

impl<T> Probability for T where T: Num + Clone + FromPrimitive + PartialOrd + Debug {}

/// `base^exp` by repeated squaring; works for rationals as well as floats.
pub fn powi<P: Probability>(base: &P, exp: usize) -> P {
    num_traits::pow::pow(base.clone(), exp)
}

/// Exact binomial coefficient. Panics on overflow of `u128`, which needs
/// circuits far beyond anything enumerable.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub(crate) fn from_u128<P: Probability>(v: u128) -> P {
    P::from_u128(v).expect("integer representable in probability type")
}
