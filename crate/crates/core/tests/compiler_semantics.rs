//! Compiled programs act on the code space as their logical circuits do.

use num_complex::Complex;
use proptest::prelude::*;

use qedc::code::LogicalBasis;
use qedc::compiler::{self, logical_circuit, LogicalProgram, LowerOptions};
use qedc::compiler::Instruction as I;
use qedc::oracle::{logical_codewords, unitary_of, StateVector};
use qedc::{AncillaState, Circuit, PrepState};

fn pair(s: AncillaState) -> StateVector<f64> {
    let c = Circuit::new(2).with_prep(&[1, 2], s.prep_state()).unwrap();
    StateVector::from_preps(&c).unwrap()
}

/// Runs every logical basis state through the compiled circuit and compares
/// with the ideal unitary, allowing one global phase. Ancillas must end in
/// the state the trace predicts.
fn check(program: &LogicalProgram, wft: bool) {
    let opts = LowerOptions { wft, ..Default::default() };
    let r = compiler::lower(program, opts).unwrap();
    let n = r.layout.n;
    let words = logical_codewords(n, LogicalBasis::Standard).unwrap();
    // the padding logical qubit is left alone
    let padded = LogicalProgram { num_logical: n - 2, ..program.clone() };
    let ideal = unitary_of::<f64>(&logical_circuit(&padded).unwrap()).unwrap();
    let flips = r.ancilla_trace.len();
    let a_out = if flips.is_multiple_of(2) { AncillaState::PhiPlus } else { AncillaState::PlusPlus };
    let rest = StateVector::zero(2).unwrap();
    let mut phase: Option<Complex<f64>> = None;
    for (a, word) in words.iter().enumerate() {
        let mut got = word.tensor(&pair(AncillaState::PhiPlus)).unwrap().tensor(&rest).unwrap();
        got.apply_circuit(&r.physical).unwrap();
        let mut want = vec![Complex::new(0.0, 0.0); 1 << n];
        for (b, wb) in words.iter().enumerate() {
            let u = ideal.entry(b, a);
            for (w, x) in want.iter_mut().zip(wb.amplitudes()) {
                *w += u * x;
            }
        }
        let want = StateVector::from_amplitudes(want)
            .unwrap()
            .tensor(&pair(a_out))
            .unwrap()
            .tensor(&rest)
            .unwrap();
        let ov = want.inner(&got);
        assert!((ov.norm() - 1.0).abs() < 1e-10, "{program}basis {a}: overlap {ov}");
        let ph = *phase.get_or_insert(ov);
        assert!((ov - ph).norm() < 1e-10, "{program}basis {a}: relative phase");
    }
}

#[test]
fn single_instructions() {
    let t = 0.37;
    for ins in [I::H(1), I::H(2), I::S(1), I::S(2), I::Cnot(1, 2), I::Cnot(2, 1), I::Swap(1, 2), I::Rz(1, t), I::Rz(2, -t)] {
        let p = LogicalProgram { num_logical: 2, instructions: vec![ins] };
        check(&p, false);
        check(&p, true);
    }
}

#[test]
fn three_logical_qubits_pad_to_six() {
    let p = compiler::parse_program("qubits 3\nH 3\nCNOT 3 1\nS 2\nCNOT 2 3\n").unwrap();
    let r = compiler::lower(&p, LowerOptions::default()).unwrap();
    assert_eq!((r.layout.n, r.layout.total()), (6, 10));
    check(&p, true);
}

#[test]
fn init_circuit_starts_from_zero_preps() {
    let r = compiler::compile("qubits 2\nH 1", LowerOptions { wft: true, init_readout: true, ..Default::default() }).unwrap();
    assert!(r.physical.preps().iter().all(|p| matches!(p.state, PrepState::Zero | PrepState::Plus | PrepState::PhiPlus)));
    assert!(r.readout.is_some());
}

fn arb_instruction() -> impl Strategy<Value = I> {
    let q = 1usize..=2;
    prop_oneof![
        q.clone().prop_map(I::H),
        q.clone().prop_map(I::S),
        Just(I::Cnot(1, 2)),
        Just(I::Cnot(2, 1)),
        Just(I::Swap(1, 2)),
        (q, -3.0f64..3.0).prop_map(|(j, t)| I::Rz(j, t)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_programs_preserve_semantics(
        instructions in prop::collection::vec(arb_instruction(), 1..=5),
        wft in any::<bool>(),
    ) {
        check(&LogicalProgram { num_logical: 2, instructions }, wft);
    }
}
