//! Exact signed conjugation `U P U†` for the gate alphabet.

use super::pauli::{Letter, SignedPauli};
use crate::error::{Error, Result};
use crate::gate::{Gate, GateKind};

/// The Pauli `G` and sign `s` of a gate written as `(I − i s G)/√2`.
fn rotation_generator(kind: GateKind, n: usize, t: &[usize]) -> Option<(SignedPauli, bool)> {
    let on = |l: Letter| SignedPauli::on(n, t, &[l, l]);
    match kind {
        GateKind::Zz => Some((on(Letter::Z), true)),
        GateKind::Yy => Some((on(Letter::Y), true)),
        GateKind::Xx => Some((on(Letter::X), false)),
        GateKind::Rx => Some((SignedPauli::single(n, t[0], Letter::X), true)),
        _ => None,
    }
}

fn check_targets(gate: &Gate, n: usize) -> Result<Vec<usize>> {
    gate.targets()
        .iter()
        .map(|&q| {
            if q == 0 || q > n {
                Err(Error::QubitOutOfRange { qubit: q, n })
            } else {
                Ok(q - 1)
            }
        })
        .collect()
}

/// Returns `U p U†` with exact phase.
///
/// RZ is accepted only when `p` commutes with `Z` on its target; measurements
/// are rejected.
pub fn conjugate_signed(gate: &Gate, p: &SignedPauli) -> Result<SignedPauli> {
    let n = p.num_qubits();
    let t = check_targets(gate, n)?;
    let kind = gate.kind();

    if let Some((g, plus)) = rotation_generator(kind, n, &t) {
        if p.commutes_with(&g) {
            return Ok(p.clone());
        }
        // U P U† = U² P = −i s G P
        let gp = g.mul(p)?;
        let shift = if plus { 3 } else { 1 };
        return Ok(gp.clone().with_phase(gp.phase_exp() + shift));
    }

    let mut out = p.clone();
    let mut flip = false;
    match kind {
        GateKind::Swap => {
            let (a, b) = (p.letter(t[0]), p.letter(t[1]));
            out.set_letter(t[0], b);
            out.set_letter(t[1], a);
        }
        GateKind::Cnot => {
            let (c, tg) = (t[0], t[1]);
            let (xc, zc) = (p.x().get(c), p.z().get(c));
            let (xt, zt) = (p.x().get(tg), p.z().get(tg));
            flip = xc && zt && !(xt ^ zc);
            out.set_letter(tg, Letter::from_xz(xt ^ xc, zt));
            out.set_letter(c, Letter::from_xz(xc, zc ^ zt));
        }
        GateKind::H => {
            let (x, z) = (p.x().get(t[0]), p.z().get(t[0]));
            flip = x && z;
            out.set_letter(t[0], Letter::from_xz(z, x));
        }
        GateKind::X | GateKind::Y | GateKind::Z => {
            let l = match kind {
                GateKind::X => Letter::X,
                GateKind::Y => Letter::Y,
                _ => Letter::Z,
            };
            flip = !p.commutes_with(&SignedPauli::single(n, t[0], l));
        }
        GateKind::Rz(theta) => {
            if !p.commutes_with(&SignedPauli::single(n, t[0], Letter::Z)) {
                return Err(Error::NonClifford(format!(
                    "RZ({theta}) acting on {p}"
                )));
            }
        }
        GateKind::Measure(_) => {
            return Err(Error::NonClifford(format!(
                "{} is a measurement",
                kind.mnemonic()
            )))
        }
        GateKind::Zz | GateKind::Xx | GateKind::Yy | GateKind::Rx => unreachable!(),
    }
    if flip {
        out = out.negated();
    }
    Ok(out)
}

/// Conjugates through every gate of a slice in order.
pub fn conjugate_through(gates: &[Gate], p: &SignedPauli) -> Result<SignedPauli> {
    gates
        .iter()
        .try_fold(p.clone(), |acc, g| conjugate_signed(g, &acc))
}

/// Unsigned conjugation acting directly on `(x, z)` bitmasks, bit `q` for
/// 0-based qubit `q`. The hot path of fault enumeration.
///
/// Returns `None` for RZ on an anticommuting operand and for measurements.
#[inline]
pub fn conjugate_masks(kind: GateKind, t: &[usize], x: u128, z: u128) -> Option<(u128, u128)> {
    let bit = |q: usize| 1u128 << q;
    let flip_if = |gx: u128, gz: u128| {
        let anti = ((x & gz).count_ones() + (z & gx).count_ones()) & 1 == 1;
        if anti {
            (x ^ gx, z ^ gz)
        } else {
            (x, z)
        }
    };
    Some(match kind {
        GateKind::Zz => flip_if(0, bit(t[0]) | bit(t[1])),
        GateKind::Xx => flip_if(bit(t[0]) | bit(t[1]), 0),
        GateKind::Yy => {
            let m = bit(t[0]) | bit(t[1]);
            flip_if(m, m)
        }
        GateKind::Rx => flip_if(bit(t[0]), 0),
        GateKind::Swap => {
            let sw = |v: u128| {
                let (a, b) = ((v >> t[0]) & 1, (v >> t[1]) & 1);
                if a != b {
                    v ^ bit(t[0]) ^ bit(t[1])
                } else {
                    v
                }
            };
            (sw(x), sw(z))
        }
        GateKind::Cnot => {
            let (c, tg) = (t[0], t[1]);
            let mut x2 = x;
            let mut z2 = z;
            if x & bit(c) != 0 {
                x2 ^= bit(tg);
            }
            if z & bit(tg) != 0 {
                z2 ^= bit(c);
            }
            (x2, z2)
        }
        GateKind::H => {
            let q = t[0];
            let (xb, zb) = (x & bit(q), z & bit(q));
            ((x & !bit(q)) | zb, (z & !bit(q)) | xb)
        }
        GateKind::X | GateKind::Y | GateKind::Z => (x, z),
        GateKind::Rz(_) => {
            if x & bit(t[0]) != 0 {
                return None;
            }
            (x, z)
        }
        GateKind::Measure(_) => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::g;
    use crate::symplectic::pauli::pauli;

    #[test]
    fn zz_phase_transformations() {
        let zz = g::zz(1, 2);
        assert_eq!(conjugate_signed(&zz, &pauli("+XI")).unwrap(), pauli("+YZ"));
        assert_eq!(conjugate_signed(&zz, &pauli("+ZI")).unwrap(), pauli("+ZI"));
        assert_eq!(conjugate_signed(&zz, &pauli("+YZ")).unwrap(), pauli("-XI"));
        assert_eq!(conjugate_signed(&zz, &pauli("+IX")).unwrap(), pauli("+ZY"));
    }

    #[test]
    fn zz_twice_negates_xi() {
        let zz = g::zz(1, 2);
        let once = conjugate_signed(&zz, &pauli("XI")).unwrap();
        assert_eq!(conjugate_signed(&zz, &once).unwrap(), pauli("-XI"));
    }

    #[test]
    fn cnot_and_h_signs() {
        let c = g::cnot(1, 2);
        assert_eq!(conjugate_signed(&c, &pauli("XI")).unwrap(), pauli("XX"));
        assert_eq!(conjugate_signed(&c, &pauli("IZ")).unwrap(), pauli("ZZ"));
        assert_eq!(conjugate_signed(&c, &pauli("YY")).unwrap(), pauli("-XZ"));
        assert_eq!(conjugate_signed(&g::h(1), &pauli("Y")).unwrap(), pauli("-Y"));
        assert_eq!(conjugate_signed(&g::z(1), &pauli("X")).unwrap(), pauli("-X"));
    }

    #[test]
    fn rz_and_measurements() {
        let r = g::rz(1, 0.3);
        assert_eq!(conjugate_signed(&r, &pauli("ZX")).unwrap(), pauli("ZX"));
        assert!(matches!(
            conjugate_signed(&r, &pauli("XI")),
            Err(Error::NonClifford(_))
        ));
        assert!(conjugate_signed(&g::mz(1), &pauli("Z")).is_err());
        assert!(conjugate_signed(&g::h(3), &pauli("ZZ")).is_err());
    }

    #[test]
    fn masks_agree_with_signed() {
        let gates = [
            g::zz(1, 2),
            g::xx(1, 2),
            g::yy(2, 1),
            g::rx(2),
            g::swap(1, 2),
            g::cnot(2, 1),
            g::h(1),
            g::y(2),
        ];
        for gate in &gates {
            for p in SignedPauli::all(2) {
                let signed = conjugate_signed(gate, &p).unwrap();
                let xm = p.x().low_word() as u128;
                let zm = p.z().low_word() as u128;
                let t: Vec<usize> = gate.targets().iter().map(|q| q - 1).collect();
                let (x, z) = conjugate_masks(gate.kind(), &t, xm, zm).unwrap();
                assert_eq!(x, signed.x().low_word() as u128, "{gate} {p}");
                assert_eq!(z, signed.z().low_word() as u128, "{gate} {p}");
            }
        }
    }
}
