//! Circuit constructions for the code.

pub mod encoded;
pub mod io;
pub mod rotation;
pub mod wft;

pub use encoded::{
    code_frame, encoded_cnot, encoded_cnot_422, encoded_hadamard, encoded_hadamard_uncorrected,
    encoded_phase, hadamard_corrections,
};
pub use io::{bell_measurement, init_circuit, readout_circuit, BellOutcome, Readout, ReadoutDecoder};
pub use rotation::{logical_rz, naive_encoded_rz, physical_rz, resource_rotation};
pub use wft::{all_gadgets, make_weakly_fault_tolerant, wft, wft_xx, wft_zz, Gadget, Rotation};
