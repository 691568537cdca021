//! Probability sweeps over physical, bare encoded and weakly fault-tolerant
//! versions of a gate, written as CSV.

use std::fmt;
use std::str::FromStr;

use super::prob::{post_selection_rate, undetectable_probability, CountingMode};
use super::tally::{tally_orders, TallyOptions};
use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gadgets;
use crate::gate::g;

pub const CSV_HEADER: &str = "p,variant,circuit,undetectable_prob,acceptance_rate,k_max,n_gates";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Physical,
    Encoded,
    Wft,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Physical, Variant::Encoded, Variant::Wft];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Physical => "physical",
            Variant::Encoded => "encoded",
            Variant::Wft => "wft",
        }
    }
}

/// The gates with a built-in physical / encoded / WFT triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VariantCircuit {
    Hadamard,
    Cnot,
    Rz,
}

impl VariantCircuit {
    pub const ALL: [VariantCircuit; 3] = [VariantCircuit::Hadamard, VariantCircuit::Cnot, VariantCircuit::Rz];

    pub fn name(self) -> &'static str {
        match self {
            VariantCircuit::Hadamard => "hadamard",
            VariantCircuit::Cnot => "cnot",
            VariantCircuit::Rz => "rz",
        }
    }

    /// The circuit of one variant, at `n = 4`.
    pub fn build(self, v: Variant) -> Result<Circuit> {
        const THETA: f64 = std::f64::consts::FRAC_PI_4;
        let phys = |gate| -> Result<Circuit> {
            let mut c = Circuit::new(match self {
                VariantCircuit::Cnot => 2,
                _ => 1,
            });
            c.push(gate)?;
            Ok(c)
        };
        match (self, v) {
            (VariantCircuit::Hadamard, Variant::Physical) => phys(g::h(1)),
            (VariantCircuit::Cnot, Variant::Physical) => phys(g::cnot(1, 2)),
            (VariantCircuit::Rz, Variant::Physical) => gadgets::physical_rz(THETA),
            (VariantCircuit::Hadamard, Variant::Encoded) => gadgets::encoded_hadamard(1, 4),
            (VariantCircuit::Cnot, Variant::Encoded) => gadgets::encoded_cnot(1, 2, 4),
            (VariantCircuit::Rz, Variant::Encoded) => gadgets::naive_encoded_rz(1, 4, THETA),
            (VariantCircuit::Rz, Variant::Wft) => gadgets::logical_rz(1, 4, THETA),
            (c, Variant::Wft) => {
                let bare = c.build(Variant::Encoded)?.widened(6)?;
                Ok(gadgets::make_weakly_fault_tolerant(&bare, 5, 6)?.0)
            }
        }
    }
}

impl fmt::Display for VariantCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VariantCircuit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hadamard" | "h" => Ok(VariantCircuit::Hadamard),
            "cnot" => Ok(VariantCircuit::Cnot),
            "rz" | "rotation" => Ok(VariantCircuit::Rz),
            _ => Err(Error::InvalidArgument(format!("unknown circuit `{s}`"))),
        }
    }
}

/// `(variant name, circuit name, circuit)` for the three variants of `c`.
pub fn standard_variants(c: VariantCircuit) -> Result<Vec<(String, String, Circuit)>> {
    Variant::ALL
        .iter()
        .map(|&v| Ok((v.name().to_string(), c.name().to_string(), c.build(v)?)))
        .collect()
}

/// `points` log-spaced values from `start` to `stop` inclusive.
pub fn p_grid(start: f64, stop: f64, points: usize) -> Result<Vec<f64>> {
    if !(start > 0.0 && start < stop && stop < 0.5) {
        return Err(Error::InvalidArgument(format!(
            "p grid [{start}, {stop}] must satisfy 0 < start < stop < 0.5"
        )));
    }
    if points < 2 {
        return Err(Error::InvalidArgument("p grid needs at least 2 points".into()));
    }
    let (a, b) = (start.ln(), stop.ln());
    let step = (b - a) / (points - 1) as f64;
    Ok((0..points)
        .map(|i| if i + 1 == points { stop } else { (a + step * i as f64).exp() })
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub p: f64,
    pub variant: String,
    pub circuit: String,
    pub undetectable_prob: f64,
    pub acceptance_rate: f64,
    pub k_max: usize,
    pub n_gates: usize,
}

impl SweepRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{:.11e},{},{},{:.11e},{:.11e},{},{}",
            self.p,
            self.variant,
            self.circuit,
            self.undetectable_prob,
            self.acceptance_rate,
            self.k_max,
            self.n_gates
        )
    }
}

/// Tallies every circuit once and evaluates it on the whole grid.
/// Rows are grouped by circuit, then ordered by `p`.
pub fn sweep(
    circuits: &[(String, String, Circuit)],
    grid: &[f64],
    k_max: usize,
    opts: TallyOptions,
    mode: CountingMode,
) -> Result<Vec<SweepRow>> {
    if grid.windows(2).any(|w| w[0] >= w[1]) || grid.iter().any(|&p| p <= 0.0) {
        return Err(Error::InvalidArgument("p grid must be positive and increasing".into()));
    }
    let mut rows = Vec::with_capacity(circuits.len() * grid.len());
    for (variant, name, c) in circuits {
        let t = tally_orders(c, None, k_max, opts)?;
        let n = t.n_locations;
        for &p in grid {
            rows.push(SweepRow {
                p,
                variant: variant.clone(),
                circuit: name.clone(),
                undetectable_prob: undetectable_probability(&t, n, &p, mode),
                acceptance_rate: post_selection_rate(&t, n, &p, mode),
                k_max,
                n_gates: n,
            });
        }
    }
    Ok(rows)
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&r.csv_line());
        s.push('\n');
    }
    s
}
