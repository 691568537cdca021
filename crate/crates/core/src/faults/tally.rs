//! Order-k enumeration of fault combinations.

use rayon::prelude::*;

use super::{FaultAnalysis, FaultClass, FaultModel};
use crate::circuit::Circuit;
use crate::code::CheckSet;
use crate::error::{Error, Result};

/// Knobs for [`tally_orders`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TallyOptions {
    pub model: FaultModel,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    /// Refuse to enumerate more error combinations than this.
    pub max_combinations: u128,
}

impl Default for TallyOptions {
    fn default() -> Self {
        Self {
            model: FaultModel::default(),
            workers: None,
            max_combinations: 20_000_000_000,
        }
    }
}

/// Counts for one fault order.
///
/// Plain counts treat every error assignment alike. Weighted counts weigh an
/// assignment by `Π 15/a_i`, where `a_i` is the alphabet size at each chosen
/// location, i.e. its probability under uniform per-location errors times `15^k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OrderTally {
    pub k: usize,
    pub total: u128,
    pub undetectable: u128,
    /// Assignments for which some check fires on every branch.
    pub flagged: u128,
    pub weighted_total: u128,
    pub weighted_undetectable: u128,
    pub weighted_flagged: u128,
}

impl OrderTally {
    /// `total − undetectable`: everything that is caught or harmless.
    pub fn detectable(&self) -> u128 {
        self.total - self.undetectable
    }

    fn add(mut self, o: &OrderTally) -> Self {
        self.total += o.total;
        self.undetectable += o.undetectable;
        self.flagged += o.flagged;
        self.weighted_total += o.weighted_total;
        self.weighted_undetectable += o.weighted_undetectable;
        self.weighted_flagged += o.weighted_flagged;
        self
    }
}

/// Per-order tallies; `orders[k]` is order `k`, starting at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaultTally {
    pub n_locations: usize,
    pub orders: Vec<OrderTally>,
}

impl FaultTally {
    pub fn k_max(&self) -> usize {
        self.orders.len() - 1
    }

    pub fn order(&self, k: usize) -> Option<&OrderTally> {
        self.orders.get(k)
    }
}

/// Exact number of error assignments of each order, saturating.
fn combination_counts(alphabets: &[usize], k_max: usize) -> Vec<u128> {
    let mut e = vec![0u128; k_max + 1];
    e[0] = 1;
    for &a in alphabets {
        for k in (1..=k_max).rev() {
            e[k] = e[k].saturating_add(e[k - 1].saturating_mul(a as u128));
        }
    }
    e
}

/// Tallies all fault orders `0..=k_max`.
///
/// Clifford circuits use a linear shortcut: each single fault is reduced to
/// its syndrome and its residue modulo the harmless span, and a combination
/// is undetectable iff the syndromes cancel while the residues do not.
/// Circuits with RZ gates propagate every combination jointly.
pub fn tally_orders(
    circuit: &Circuit,
    checks: Option<&CheckSet>,
    k_max: usize,
    opts: TallyOptions,
) -> Result<FaultTally> {
    let a = FaultAnalysis::new(circuit, checks, opts.model)?;
    tally_analysis(&a, k_max, opts)
}

pub(crate) fn tally_analysis(a: &FaultAnalysis, k_max: usize, opts: TallyOptions) -> Result<FaultTally> {
    let alphabets: Vec<usize> = (0..a.locations().len()).map(|i| a.error_masks(i).len()).collect();
    let counts = combination_counts(&alphabets, k_max);
    let work: u128 = counts.iter().fold(0u128, |s, c| s.saturating_add(*c));
    if work > opts.max_combinations {
        return Err(Error::TooLarge(format!(
            "{work} fault combinations up to order {k_max} (cap {})",
            opts.max_combinations
        )));
    }
    let run = || -> Vec<OrderTally> {
        (0..=k_max)
            .map(|k| {
                if k == 0 {
                    OrderTally {
                        k,
                        total: 1,
                        weighted_total: 1,
                        ..Default::default()
                    }
                } else if a.is_clifford() {
                    linear_order(a, k)
                } else {
                    joint_order(a, k)
                }
            })
            .collect()
    };
    let orders = match opts.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run),
        None => run(),
    };
    Ok(FaultTally {
        n_locations: a.locations().len(),
        orders,
    })
}

#[derive(Clone, Copy)]
struct Entry {
    s: u64,
    r: u128,
    w: u128,
}

fn linear_order(a: &FaultAnalysis, k: usize) -> OrderTally {
    let table: Vec<Vec<Entry>> = (0..a.locations().len())
        .map(|i| {
            let masks = a.error_masks(i);
            let w = (15 / masks.len().max(1)) as u128;
            let slot = a.locations()[i].slot;
            masks
                .into_iter()
                .map(|(x, z)| {
                    let (fx, fz) = a.propagate_masks(slot, x, z)[0];
                    Entry {
                        s: a.syndrome(fx, fz),
                        r: a.residual(fx, fz),
                        w,
                    }
                })
                .collect()
        })
        .collect();
    let n = table.len();
    (0..n)
        .into_par_iter()
        .map(|first| {
            let mut acc = OrderTally { k, ..Default::default() };
            for e in &table[first] {
                linear_rec(&table, first + 1, k - 1, e.s, e.r, e.w, &mut acc);
            }
            acc
        })
        .reduce(|| OrderTally { k, ..Default::default() }, |x, y| x.add(&y))
}

fn linear_rec(t: &[Vec<Entry>], start: usize, left: usize, s: u64, r: u128, w: u128, acc: &mut OrderTally) {
    if left == 0 {
        acc.total += 1;
        acc.weighted_total += w;
        if s != 0 {
            acc.flagged += 1;
            acc.weighted_flagged += w;
        } else if r != 0 {
            acc.undetectable += 1;
            acc.weighted_undetectable += w;
        }
        return;
    }
    if left == 1 {
        // innermost level unrolled
        for loc in &t[start..] {
            for e in loc {
                let ww = w * e.w;
                acc.total += 1;
                acc.weighted_total += ww;
                if s != e.s {
                    acc.flagged += 1;
                    acc.weighted_flagged += ww;
                } else if r != e.r {
                    acc.undetectable += 1;
                    acc.weighted_undetectable += ww;
                }
            }
        }
        return;
    }
    for l in start..t.len() {
        for e in &t[l] {
            linear_rec(t, l + 1, left - 1, s ^ e.s, r ^ e.r, w * e.w, acc);
        }
    }
}

fn joint_order(a: &FaultAnalysis, k: usize) -> OrderTally {
    let n = a.locations().len();
    let errs: Vec<Vec<(u128, u128)>> = (0..n).map(|i| a.error_masks(i)).collect();
    (0..n)
        .into_par_iter()
        .map(|first| {
            let mut acc = OrderTally { k, ..Default::default() };
            let slot = a.locations()[first].slot;
            let w = (15 / errs[first].len().max(1)) as u128;
            for &(x, z) in &errs[first] {
                let mut b = vec![(0u128, 0u128)];
                a.advance(&mut b, 0, slot);
                for v in b.iter_mut() {
                    v.0 ^= x;
                    v.1 ^= z;
                }
                joint_rec(a, &errs, first + 1, k - 1, slot, b, w, &mut acc);
            }
            acc
        })
        .reduce(|| OrderTally { k, ..Default::default() }, |x, y| x.add(&y))
}

#[allow(clippy::too_many_arguments)]
fn joint_rec(
    a: &FaultAnalysis,
    errs: &[Vec<(u128, u128)>],
    start: usize,
    left: usize,
    pos: usize,
    branches: Vec<(u128, u128)>,
    w: u128,
    acc: &mut OrderTally,
) {
    if left == 0 {
        let mut b = branches;
        a.advance(&mut b, pos, a.ops().len());
        acc.total += 1;
        acc.weighted_total += w;
        match a.classify_branches(&b) {
            FaultClass::Detectable => {
                acc.flagged += 1;
                acc.weighted_flagged += w;
            }
            FaultClass::Undetectable => {
                acc.undetectable += 1;
                acc.weighted_undetectable += w;
            }
            FaultClass::Benign => {}
        }
        return;
    }
    for l in start..errs.len() {
        let slot = a.locations()[l].slot;
        let mut base = branches.clone();
        a.advance(&mut base, pos, slot);
        let lw = (15 / errs[l].len().max(1)) as u128;
        for &(x, z) in &errs[l] {
            let mut b = base.clone();
            for v in b.iter_mut() {
                v.0 ^= x;
                v.1 ^= z;
            }
            joint_rec(a, errs, l + 1, left - 1, slot, b, w * lw, acc);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets;

    #[test]
    fn counts_match_elementary_symmetric() {
        assert_eq!(combination_counts(&[15, 15, 3], 3), vec![1, 33, 315, 675]);
    }

    #[test]
    fn single_gadget_order_one_is_clean() {
        let gd = gadgets::wft_xx(crate::AncillaState::PlusPlus);
        let t = tally_orders(&gd.circuit(), None, 1, TallyOptions::default()).unwrap();
        assert_eq!(t.n_locations, 9);
        assert_eq!(t.orders[1].total, 123);
        assert_eq!(t.orders[1].undetectable, 0);
        assert_eq!(t.orders[0].total, 1);
    }

    #[test]
    fn joint_path_agrees_with_linear_path_on_clifford_circuits() {
        let c = gadgets::encoded_cnot(1, 2, 4).unwrap();
        let a = FaultAnalysis::new(&c, None, FaultModel::default()).unwrap();
        for k in 1..=2 {
            assert_eq!(linear_order(&a, k), joint_order(&a, k));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let c = gadgets::encoded_cnot(1, 2, 4).unwrap();
        let opts = TallyOptions {
            max_combinations: 100,
            ..Default::default()
        };
        assert!(matches!(tally_orders(&c, None, 2, opts), Err(Error::TooLarge(_))));
    }
}
