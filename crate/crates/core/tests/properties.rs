use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use qedc::circuit;
use qedc::code::{qedc_stabilizers, CheckSet};
use qedc::compiler::{self, parse_program, LogicalProgram, LowerOptions};
use qedc::faults::{
    check_weak_ft, is_detectable, post_selection_rate, propagate, rejection_rate, tally_orders,
    undetectable_probability, CountingMode, TallyOptions,
};
use qedc::gadgets;
use qedc::gate::g;
use qedc::symplectic::{circuit_tableau, conjugate_through};
use qedc::{ExactProbability, Gate, GateKind, Letter, SignedPauli};

const N: usize = 4;

fn arb_pauli(n: usize) -> impl Strategy<Value = SignedPauli> {
    (prop::collection::vec(0u8..4, n), 0u8..4).prop_map(move |(ls, ph)| {
        let letters: Vec<Letter> = ls
            .into_iter()
            .map(|l| [Letter::I, Letter::X, Letter::Y, Letter::Z][l as usize])
            .collect();
        SignedPauli::on(n, &(0..n).collect::<Vec<_>>(), &letters).with_phase(ph)
    })
}

fn arb_clifford(n: usize) -> impl Strategy<Value = Gate> {
    let pair = (1..=n, 1..=n).prop_filter("distinct", |(a, b)| a != b);
    prop_oneof![
        pair.clone().prop_map(|(a, b)| g::zz(a, b)),
        pair.clone().prop_map(|(a, b)| g::xx(a, b)),
        pair.clone().prop_map(|(a, b)| g::yy(a, b)),
        pair.clone().prop_map(|(a, b)| g::cnot(a, b)),
        pair.prop_map(|(a, b)| g::swap(a, b)),
        (1..=n).prop_map(g::rx),
        (1..=n).prop_map(g::h),
        (1..=n).prop_map(g::x),
        (1..=n).prop_map(g::y),
    ]
}

fn arb_program() -> impl Strategy<Value = LogicalProgram> {
    use compiler::Instruction as I;
    let ins = prop_oneof![
        (1usize..=2).prop_map(I::H),
        (1usize..=2).prop_map(I::S),
        Just(I::Cnot(1, 2)),
        Just(I::Cnot(2, 1)),
        Just(I::Swap(1, 2)),
    ];
    prop::collection::vec(ins, 1..=3).prop_map(|instructions| LogicalProgram { num_logical: 2, instructions })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn circuits_are_symplectic(gates in prop::collection::vec(arb_clifford(N), 0..12)) {
        prop_assert!(circuit_tableau(&gates, N).unwrap().is_symplectic());
    }

    #[test]
    fn conjugation_is_a_homomorphism(
        gates in prop::collection::vec(arb_clifford(N), 0..12),
        a in arb_pauli(N),
        b in arb_pauli(N),
    ) {
        let ab = conjugate_through(&gates, &a.mul(&b).unwrap()).unwrap();
        let (ca, cb) = (conjugate_through(&gates, &a).unwrap(), conjugate_through(&gates, &b).unwrap());
        prop_assert_eq!(ab, ca.mul(&cb).unwrap());
        prop_assert_eq!(a.commutes_with(&b), ca.commutes_with(&cb));
        let t = circuit_tableau(&gates, N).unwrap();
        prop_assert_eq!(t.apply(&a).unwrap().unsigned(), ca.unsigned());
    }

    #[test]
    fn propagation_is_linear(
        gates in prop::collection::vec(arb_clifford(N), 1..10),
        after in 0usize..10,
        a in arb_pauli(N),
        b in arb_pauli(N),
    ) {
        let mut c = gadgets::code_frame(N).unwrap();
        c.extend(gates).unwrap();
        let after = Some(after % c.len());
        let pa = propagate(&c, after, &a).unwrap();
        let pb = propagate(&c, after, &b).unwrap();
        prop_assert_eq!(propagate(&c, after, &a.mul(&b).unwrap()).unwrap(), pa.mul(&pb).unwrap());
    }

    #[test]
    fn detectability_ignores_generator_choice(e in arb_pauli(6), extra in arb_pauli(6), i in 0usize..3, j in 0usize..3) {
        let mut gens = qedc_stabilizers(6).unwrap().generators().to_vec();
        // keep the set commuting
        if gens.iter().all(|s| s.commutes_with(&extra)) {
            gens.push(extra);
        }
        let base = CheckSet::new(6, gens.clone()).unwrap();
        let (i, j) = (i % gens.len(), j % gens.len());
        if i != j {
            gens[i] = gens[i].mul(&gens[j]).unwrap();
        }
        let swapped = CheckSet::new(6, gens).unwrap();
        prop_assert_eq!(is_detectable(&e, &base), is_detectable(&e, &swapped));
        prop_assert_eq!(is_detectable(&e, &base), is_detectable(&e.negated(), &base));
    }

    #[test]
    fn text_round_trip(gates in prop::collection::vec(arb_clifford(N), 0..12), theta in -4.0f64..4.0) {
        let mut c = gadgets::code_frame(N).unwrap();
        c.extend(gates).unwrap();
        c.push(Gate::new(GateKind::Rz(theta), &[2]).unwrap()).unwrap();
        let text = circuit::emit(&c);
        let back = circuit::parse(&text).unwrap();
        prop_assert_eq!(circuit::emit(&back), text);
        prop_assert_eq!(back, c);
    }

    #[test]
    fn program_round_trip(p in arb_program()) {
        prop_assert_eq!(parse_program(&p.to_string()).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn order_one_tally_matches_weak_ft(p in arb_program(), wft in any::<bool>()) {
        let r = compiler::lower(&p, LowerOptions { wft, ..Default::default() }).unwrap();
        let rep = check_weak_ft(&r.physical, None).unwrap();
        let t = tally_orders(&r.physical, None, 1, TallyOptions::default()).unwrap();
        let o = t.order(1).unwrap();
        prop_assert_eq!(o.total, rep.total as u128);
        prop_assert_eq!(o.undetectable, rep.undetectable.len() as u128);
        prop_assert_eq!(rep.total, rep.detectable + rep.benign + rep.undetectable.len());
        if wft {
            prop_assert!(rep.is_weakly_fault_tolerant());
        }
    }

    #[test]
    fn tallies_do_not_depend_on_workers(p in arb_program(), w in 2usize..6) {
        let r = compiler::lower(&p, LowerOptions { wft: true, ..Default::default() }).unwrap();
        let run = |w| tally_orders(&r.physical, None, 2, TallyOptions { workers: Some(w), ..Default::default() }).unwrap();
        prop_assert_eq!(run(1), run(w));
    }

    #[test]
    fn probabilities_are_exact_and_bounded(num in 1i64..400, mode_exact in any::<bool>()) {
        let c = gadgets::encoded_hadamard(1, 4).unwrap();
        let t = tally_orders(&c, None, 3, TallyOptions::default()).unwrap();
        let n = t.n_locations;
        let mode = if mode_exact { CountingMode::Exact } else { CountingMode::Ratio };
        let exact: ExactProbability = BigRational::new(num.into(), 1000.into());
        let p = num as f64 / 1000.0;
        let pu = undetectable_probability(&t, n, &exact, mode);
        let acc = post_selection_rate(&t, n, &exact, mode);
        let rej = rejection_rate(&t, n, &exact, mode);
        let one = BigRational::from_integer(1.into());
        prop_assert_eq!(&acc + &rej, one.clone());
        prop_assert!(pu >= BigRational::from_integer(0.into()) && pu <= one);
        let f = undetectable_probability(&t, n, &p, mode);
        prop_assert!((pu.to_f64().unwrap() - f).abs() <= 1e-12 * f.max(1e-300).max(1.0));
    }
}
