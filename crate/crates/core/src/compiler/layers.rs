//! Greedy layer packing.

use crate::circuit::Circuit;

/// Groups gate indices into layers. Every gate goes to the first layer after
/// the last one touching its qubits; two-qubit gates additionally run one per
/// layer in program order. So a single-qubit gate can share a layer with a
/// disjoint two-qubit gate. Pauli frame updates and measurements are not
/// scheduled.
pub fn schedule_layers(c: &Circuit) -> Vec<Vec<usize>> {
    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut last = vec![None::<usize>; c.num_qubits() + 1];
    let mut last_two = None::<usize>;
    for (i, g) in c.gates().iter().enumerate() {
        let k = g.kind();
        if k.is_pauli() || k.is_measurement() {
            continue;
        }
        let after = |l: Option<usize>| l.map_or(0, |l| l + 1);
        let mut slot = g.targets().iter().map(|&q| after(last[q])).max().unwrap_or(0);
        if k.arity() == 2 {
            slot = slot.max(after(last_two));
            last_two = Some(slot);
        }
        while slot >= layers.len() {
            layers.push(Vec::new());
        }
        layers[slot].push(i);
        for &q in g.targets() {
            last[q] = Some(slot);
        }
    }
    layers
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::g;

    #[test]
    fn rx_shares_a_layer() {
        let mut c = Circuit::new(4);
        c.extend([g::zz(1, 2), g::zz(3, 4), g::rx(1), g::zz(1, 3)]).unwrap();
        assert_eq!(schedule_layers(&c), vec![vec![0], vec![1, 2], vec![3]]);
        let mut d = Circuit::new(3);
        d.extend([g::zz(1, 2), g::rx(2), g::zz(1, 3), g::x(2)]).unwrap();
        assert_eq!(schedule_layers(&d), vec![vec![0], vec![1, 2]]);
    }
}
