//! Order-1 and order-2 tallies against a direct enumeration that inserts
//! every error pair into the circuit and conjugates gate by gate.

use proptest::prelude::*;

use qedc::compiler::{self, LowerOptions};
use qedc::faults::{derive_checks, initial_stabilizers, tally_orders, TallyOptions, Variant, VariantCircuit};
use qedc::gadgets;
use qedc::gate::g;
use qedc::symplectic::conjugate_signed;
use qedc::{Circuit, Gate, GateKind, SignedPauli};

fn bits(p: &SignedPauli) -> u128 {
    let n = p.num_qubits();
    p.x().to_u128() | (p.z().to_u128() << n)
}

/// Row-reduced basis keyed by leading bit.
struct Span(Vec<u128>);

impl Span {
    fn new(vs: impl IntoIterator<Item = u128>) -> Self {
        let mut s = Span(Vec::new());
        for v in vs {
            let r = s.reduce(v);
            if r != 0 {
                s.0.push(r);
                s.0.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        s
    }

    fn reduce(&self, mut v: u128) -> u128 {
        for &b in &self.0 {
            let top = 127 - b.leading_zeros();
            if v >> top & 1 == 1 {
                v ^= b;
            }
        }
        v
    }
}

fn is_location(gate: &Gate) -> bool {
    let k = gate.kind();
    !(k == GateKind::Swap || k.is_pauli() || k.is_measurement())
}

fn errors(gate: &Gate, n: usize) -> Vec<SignedPauli> {
    let pos: Vec<usize> = gate.targets().iter().map(|q| q - 1).collect();
    SignedPauli::all(pos.len()).skip(1).map(|p| p.embed(n, &pos)).collect()
}

/// `(total, undetectable)` for orders 1 and 2.
fn enumerate(c: &Circuit) -> [(u128, u128); 2] {
    let n = c.num_qubits();
    let gates = c.gates();
    let run = |inserts: &[(usize, &SignedPauli)]| {
        let mut p = SignedPauli::identity(n);
        for (t, gate) in gates.iter().enumerate() {
            p = conjugate_signed(gate, &p).expect("clifford");
            for (at, e) in inserts {
                if *at == t {
                    p = p.mul(e).expect("same size");
                }
            }
        }
        p
    };
    let mut finals = initial_stabilizers(c);
    for gate in gates {
        finals = finals.iter().map(|s| conjugate_signed(gate, s).expect("clifford")).collect();
    }
    let harmless = Span::new(finals.iter().map(bits));
    let checks = derive_checks(c).expect("checks");
    let undetectable = |p: &SignedPauli| {
        checks.generators().iter().all(|s| p.commutes_with(s)) && harmless.reduce(bits(p)) != 0
    };

    let locs: Vec<(usize, Vec<SignedPauli>)> = gates
        .iter()
        .enumerate()
        .filter(|(_, gate)| is_location(gate))
        .map(|(i, gate)| (i, errors(gate, n)))
        .collect();
    let mut out = [(0, 0); 2];
    for (a, (i, ei)) in locs.iter().enumerate() {
        for e in ei {
            out[0].0 += 1;
            out[0].1 += u128::from(undetectable(&run(&[(*i, e)])));
        }
        for (j, ej) in &locs[a + 1..] {
            for e in ei {
                for f in ej {
                    out[1].0 += 1;
                    out[1].1 += u128::from(undetectable(&run(&[(*i, e), (*j, f)])));
                }
            }
        }
    }
    out
}

fn assert_agrees(c: &Circuit) -> [(u128, u128); 2] {
    let brute = enumerate(c);
    let t = tally_orders(c, None, 2, TallyOptions::default()).unwrap();
    for k in 1..=2 {
        let o = t.order(k).unwrap();
        assert_eq!((o.total, o.undetectable), brute[k - 1], "order {k}\n{c}");
    }
    brute
}

#[test]
fn gadgets_agree() {
    for gadget in gadgets::all_gadgets() {
        let [one, _] = assert_agrees(&gadget.circuit());
        assert_eq!(one, (123, 0));
    }
}

#[test]
fn bare_constructions_agree() {
    let [one, _] = assert_agrees(&gadgets::encoded_hadamard(1, 4).unwrap());
    assert_eq!(one, (45, 9));
    assert_agrees(&gadgets::encoded_cnot(1, 2, 4).unwrap());
    assert_agrees(&gadgets::encoded_cnot(2, 1, 6).unwrap());
    assert_agrees(&gadgets::encoded_phase(1, 4).unwrap());
}

#[test]
fn wft_hadamard_agrees() {
    let c = VariantCircuit::Hadamard.build(Variant::Wft).unwrap();
    let [one, two] = assert_agrees(&c);
    assert_eq!(one, (369, 0));
    assert_eq!(two, (65_367, 3_108));
}

#[test]
fn wft_cnot_agrees() {
    let r = compiler::compile("CNOT 1 2", LowerOptions { wft: true, ..Default::default() }).unwrap();
    let [one, two] = assert_agrees(&r.physical);
    assert_eq!(one.1, 0);
    assert_eq!(two, (364_329, 19_983));
}

#[test]
fn order_two_total_decomposes_by_arity() {
    let c = VariantCircuit::Hadamard.build(Variant::Wft).unwrap();
    let two = c.gates().iter().filter(|gate| is_location(gate) && gate.targets().len() == 2).count();
    let one = c.gates().iter().filter(|gate| is_location(gate) && gate.targets().len() == 1).count();
    assert_eq!((two, one), (24, 3));
    let pairs = |m: usize| m * (m.saturating_sub(1)) / 2;
    let total = pairs(two) * 225 + two * one * 45 + pairs(one) * 9;
    assert_eq!(total, 276 * 225 + 72 * 45 + 3 * 9);
    assert_eq!(total, 65_367);
}

fn arb_gate(n: usize) -> impl Strategy<Value = Gate> {
    let pair = (1..=n, 1..=n).prop_filter("distinct", |(a, b)| a != b);
    prop_oneof![
        pair.clone().prop_map(|(a, b)| g::zz(a, b)),
        pair.clone().prop_map(|(a, b)| g::xx(a, b)),
        pair.clone().prop_map(|(a, b)| g::yy(a, b)),
        pair.clone().prop_map(|(a, b)| g::cnot(a, b)),
        pair.prop_map(|(a, b)| g::swap(a, b)),
        (1..=n).prop_map(g::rx),
        (1..=n).prop_map(g::h),
        (1..=n).prop_map(g::z),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_code_circuits_agree(gates in prop::collection::vec(arb_gate(4), 1..=6)) {
        let mut c = gadgets::code_frame(4).unwrap();
        c.extend(gates).unwrap();
        assert_agrees(&c);
    }
}
