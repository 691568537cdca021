//! Weakly fault-tolerant circuits for the `[[n, n−2, 2]]` error-detecting code.
//!
//! * [`symplectic`]: Paulis with exact phases, tableaux, GF(2) algebra.
//! * [`gadgets`]: encoded gates, the ZZ/XX gadgets, rotations, init/readout.
//! * [`faults`]: propagation, weak-FT checks, order-k tallies, sweeps.
//! * [`oracle`]: dense state-vector checks and non-Clifford analyses.
//! * [`compiler`]: logical programs to physical circuits.

pub mod circuit;
pub mod code;
pub mod compiler;
pub mod error;
pub mod faults;
pub mod gadgets;
pub mod gate;
pub mod oracle;
pub mod scalar;
pub mod symplectic;

pub use circuit::{Circuit, PrepState};
pub use code::{AncillaState, CheckSet};
pub use error::{Error, ParseError, Result};
pub use gate::{Basis, Gate, GateKind};
pub use scalar::{Probability, Real};
pub use symplectic::{CliffordTableau, GeneratorSet, Letter, SignedPauli};

pub type StateVector64 = oracle::StateVector<f64>;
pub type StateVector32 = oracle::StateVector<f32>;
pub type Unitary64 = oracle::Unitary<f64>;
pub type Unitary32 = oracle::Unitary<f32>;
/// Exact scalar for the order-k probability formulas.
pub type ExactProbability = num_rational::BigRational;
