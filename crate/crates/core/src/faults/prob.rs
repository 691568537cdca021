//! Order-k probability formulas.
//!
//! With `N` fault locations each failing independently with probability `p`,
//! exactly `k` of them fail with probability `C(N,k)(1−p)^{N−k}p^k`. Within an
//! order the fraction of undetectable (or flagged) assignments is taken from a
//! [`FaultTally`]. Orders above the tally's `k_max` are counted as
//! undetectable, which makes the result an upper bound.

use super::tally::{FaultTally, OrderTally};
use crate::scalar::{from_u128, powi, Probability};

/// How assignments within one order are weighted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CountingMode {
    /// Every error assignment at order `k` counts the same.
    #[default]
    Ratio,
    /// A location with alphabet `a` produces each of its errors with
    /// probability `p/a`.
    Exact,
}

fn ratio<P: Probability>(num: u128, den: u128) -> P {
    if den == 0 {
        P::zero()
    } else {
        from_u128::<P>(num) / from_u128::<P>(den)
    }
}

fn undetectable_fraction<P: Probability>(o: &OrderTally, mode: CountingMode) -> P {
    match mode {
        CountingMode::Ratio => ratio(o.undetectable, o.total),
        CountingMode::Exact => ratio(o.weighted_undetectable, o.weighted_total),
    }
}

fn rejected_fraction<P: Probability>(o: &OrderTally, mode: CountingMode) -> P {
    match mode {
        CountingMode::Ratio => ratio(o.total - o.undetectable, o.total),
        CountingMode::Exact => ratio(o.weighted_flagged, o.weighted_total),
    }
}

/// `C(N,k)(1−p)^{N−k}p^k` for `k = 0..=N`, computed in `P`.
fn order_weights<P: Probability>(n: usize, p: &P) -> Vec<P> {
    let q = P::one() - p.clone();
    let mut c = P::one();
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        out.push(c.clone() * powi(&q, n - k) * powi(p, k));
        c = c * P::from_usize(n - k).expect("usize") / P::from_usize(k + 1).expect("usize");
    }
    out
}

/// Probability of an undetectable error after running the circuit once.
pub fn undetectable_probability<P: Probability>(
    tally: &FaultTally,
    n_gates: usize,
    p: &P,
    mode: CountingMode,
) -> P {
    let w = order_weights(n_gates, p);
    let mut acc = P::zero();
    for (k, wk) in w.into_iter().enumerate().skip(1) {
        acc = acc
            + match tally.order(k) {
                Some(o) => wk * undetectable_fraction::<P>(o, mode),
                None => wk,
            };
    }
    acc
}

/// Acceptance probability: one minus the probability that, at some order
/// up to `k_max`, the fault is caught.
pub fn post_selection_rate<P: Probability>(
    tally: &FaultTally,
    n_gates: usize,
    p: &P,
    mode: CountingMode,
) -> P {
    P::one() - rejection_rate(tally, n_gates, p, mode)
}

pub fn rejection_rate<P: Probability>(tally: &FaultTally, n_gates: usize, p: &P, mode: CountingMode) -> P {
    let w = order_weights(n_gates, p);
    let mut acc = P::zero();
    for (k, wk) in w.into_iter().enumerate().skip(1).take(tally.k_max()) {
        if let Some(o) = tally.order(k) {
            acc = acc + wk * rejected_fraction::<P>(o, mode);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn toy() -> FaultTally {
        let o = |k, total, undetectable| OrderTally {
            k,
            total,
            undetectable,
            flagged: total - undetectable,
            weighted_total: total,
            weighted_undetectable: undetectable,
            weighted_flagged: total - undetectable,
        };
        FaultTally {
            n_locations: 27,
            orders: vec![o(0, 1, 0), o(1, 369, 0), o(2, 65_367, 3_108)],
        }
    }

    #[test]
    fn matches_displayed_formula() {
        let t = toy();
        let p = 1e-3f64;
        let q: f64 = 1.0 - p;
        let det2 = 351.0 * (62_259.0 / 65_367.0) * q.powi(25) * p * p;
        let det1 = 27.0 * q.powi(26) * p;
        let expect = 1.0 - q.powi(27) - det1 - det2;
        let got = undetectable_probability(&t, 27, &p, CountingMode::Ratio);
        assert!((got - expect).abs() < 1e-15, "{got} {expect}");
        let acc = post_selection_rate(&t, 27, &p, CountingMode::Ratio);
        assert!((acc - (1.0 - det1 - det2)).abs() < 1e-15);
    }

    #[test]
    fn rational_agrees_with_float() {
        let t = toy();
        let p = BigRational::new(1.into(), 1000.into());
        let exact = undetectable_probability(&t, 27, &p, CountingMode::Ratio);
        let approx = undetectable_probability(&t, 27, &1e-3f64, CountingMode::Ratio);
        let e: f64 = num_traits::ToPrimitive::to_f64(&exact).unwrap();
        assert!((e - approx).abs() / e < 1e-12);
        let f = undetectable_probability(&t, 27, &1e-3f32, CountingMode::Ratio);
        assert!(((f as f64) - e).abs() / e < 1e-3);
    }

    #[test]
    fn weights_sum_to_one() {
        let w = order_weights(10, &0.3f64);
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-14);
    }
}
