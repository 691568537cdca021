//! Line-oriented circuit text format.
//!
//! ```text
//! n 6
//! data 3 4
//! ancilla 1 2
//! prep 1 2 PhiPlus
//! prep 3 4 Code
//! # gadget ZZ PhiPlus
//! ZZ 1 4
//! RZ 2 0.5
//! ```

use std::fmt::Write as _;

use super::{Circuit, PrepState};
use crate::error::{Error, ParseError, Result};
use crate::gate::{Gate, GateKind};
use crate::symplectic::SignedPauli;

struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    col: line[..s].chars().count() + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            col: line[..s].chars().count() + 1,
        });
    }
    out
}

fn parse_index(t: &Token, line: usize) -> std::result::Result<usize, ParseError> {
    match t.text.parse::<usize>() {
        Ok(q) if q >= 1 => Ok(q),
        _ => Err(ParseError::new(
            line,
            t.col,
            format!("expected a qubit index >= 1, found {:?}", t.text),
        )),
    }
}

fn parse_angle(t: &Token, line: usize) -> std::result::Result<f64, ParseError> {
    match t.text.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(ParseError::new(
            line,
            t.col,
            format!("malformed angle {:?}", t.text),
        )),
    }
}

enum Item {
    Gate(Gate),
    Prep(Vec<usize>, PrepState),
    Stab(SignedPauli),
    Note(String),
}

/// Parses the circuit text format.
pub fn parse(text: &str) -> Result<Circuit> {
    let mut n: Option<usize> = None;
    let mut roles: [Option<Vec<usize>>; 3] = [None, None, None];
    let mut items: Vec<(usize, usize, Item)> = Vec::new();
    let mut max_q = 0;
    let mut seen_gate = false;

    for (li, raw) in text.lines().enumerate() {
        let line_no = li + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(note) = trimmed.strip_prefix('#') {
            items.push((line_no, 1, Item::Note(note.trim().to_string())));
            continue;
        }
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokenize(content);
        let head = &toks[0];
        let rest = &toks[1..];
        let err = |col: usize, msg: String| Error::from(ParseError::new(line_no, col, msg));

        let header_after_gates = |what: &str| {
            err(head.col, format!("{what} header must precede the first gate"))
        };
        match head.text {
            "n" => {
                if seen_gate {
                    return Err(header_after_gates("n"));
                }
                if rest.len() != 1 || n.is_some() {
                    return Err(err(head.col, "expected exactly one `n <count>` line".into()));
                }
                n = Some(rest[0].text.parse().map_err(|_| {
                    err(rest[0].col, format!("malformed qubit count {:?}", rest[0].text))
                })?);
            }
            "data" | "checks" | "ancilla" => {
                if seen_gate {
                    return Err(header_after_gates(head.text));
                }
                let slot = match head.text {
                    "data" => 0,
                    "checks" => 1,
                    _ => 2,
                };
                if roles[slot].is_some() {
                    return Err(err(head.col, format!("duplicate `{}` line", head.text)));
                }
                let qs = rest
                    .iter()
                    .map(|t| parse_index(t, line_no))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                max_q = max_q.max(qs.iter().copied().max().unwrap_or(0));
                roles[slot] = Some(qs);
            }
            "prep" => {
                if seen_gate {
                    return Err(header_after_gates("prep"));
                }
                let split = rest
                    .iter()
                    .position(|t| t.text.parse::<usize>().is_err())
                    .ok_or_else(|| err(head.col, "prep line needs a state label".into()))?;
                let qs = rest[..split]
                    .iter()
                    .map(|t| parse_index(t, line_no))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                let label = &rest[split];
                let tail = &rest[split + 1..];
                let state = match label.text {
                    "Zero" => PrepState::Zero,
                    "Plus" => PrepState::Plus,
                    "PhiPlus" => PrepState::PhiPlus,
                    "PlusPlus" => PrepState::PlusPlus,
                    "Code" => PrepState::Code,
                    "Phi" => {
                        let t = tail
                            .first()
                            .ok_or_else(|| err(label.col, "Phi needs an angle".into()))?;
                        PrepState::Phi(parse_angle(t, line_no)?)
                    }
                    other => return Err(err(label.col, format!("unknown state {other:?}"))),
                };
                let expected_tail = usize::from(matches!(state, PrepState::Phi(_)));
                if tail.len() != expected_tail {
                    return Err(err(label.col, "trailing tokens after state".into()));
                }
                max_q = max_q.max(qs.iter().copied().max().unwrap_or(0));
                items.push((line_no, head.col, Item::Prep(qs, state)));
            }
            "stab" => {
                if rest.len() != 1 {
                    return Err(err(head.col, "expected `stab <pauli>`".into()));
                }
                let p: SignedPauli = rest[0]
                    .text
                    .parse()
                    .map_err(|e: Error| err(rest[0].col, e.to_string()))?;
                max_q = max_q.max(p.num_qubits());
                items.push((line_no, head.col, Item::Stab(p)));
            }
            mnemonic => {
                let kind: GateKind = mnemonic
                    .parse()
                    .map_err(|_| err(head.col, format!("unknown gate {mnemonic:?}")))?;
                let arity = kind.arity();
                let want = arity + usize::from(matches!(kind, GateKind::Rz(_)));
                if rest.len() != want {
                    return Err(err(
                        head.col,
                        format!("{mnemonic} takes {want} operand(s), found {}", rest.len()),
                    ));
                }
                let qs = rest[..arity]
                    .iter()
                    .map(|t| parse_index(t, line_no))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                let kind = match kind {
                    GateKind::Rz(_) => GateKind::Rz(parse_angle(&rest[arity], line_no)?),
                    k => k,
                };
                let gate = Gate::new(kind, &qs).map_err(|e| err(head.col, e.to_string()))?;
                max_q = max_q.max(qs.iter().copied().max().unwrap_or(0));
                seen_gate = true;
                items.push((line_no, head.col, Item::Gate(gate)));
            }
        }
    }

    let n = n.unwrap_or(max_q);
    let mut c = Circuit::new(n);
    let [data, checks, anc] = roles;
    c.set_roles(
        &data.unwrap_or_default(),
        &checks.unwrap_or_default(),
        &anc.unwrap_or_default(),
    )
    .map_err(|e| ParseError::new(1, 1, e.to_string()))?;
    let mut stabs = Vec::new();
    for (line, col, item) in items {
        let at = |e: Error| Error::from(ParseError::new(line, col, e.to_string()));
        match item {
            Item::Gate(g) => c.push(g).map_err(at)?,
            Item::Prep(qs, st) => c.add_prep(&qs, st).map_err(at)?,
            Item::Stab(p) => {
                if p.num_qubits() != n {
                    return Err(at(Error::DimensionMismatch {
                        expected: n,
                        found: p.num_qubits(),
                    }));
                }
                stabs.push(p);
            }
            Item::Note(t) => c.annotate(t),
        }
    }
    c.set_explicit_checks(stabs)?;
    Ok(c)
}

fn join(qs: &[usize]) -> String {
    qs.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(" ")
}

/// Canonical serialization; `parse(&emit(c)) == c` for circuits whose
/// annotations are trimmed single lines.
pub fn emit(c: &Circuit) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n {}", c.num_qubits());
    for (name, qs) in [
        ("data", c.data_qubits()),
        ("checks", c.check_qubits()),
        ("ancilla", c.ancilla_qubits()),
    ] {
        if !qs.is_empty() {
            let _ = writeln!(s, "{name} {}", join(qs));
        }
    }
    for p in c.preps() {
        let _ = writeln!(s, "prep {} {}", join(&p.qubits), p.state.label());
    }
    for st in c.explicit_checks() {
        let _ = writeln!(s, "stab {st}");
    }
    let notes = c.annotations();
    let mut ni = 0;
    for (i, g) in c.gates().iter().enumerate() {
        while ni < notes.len() && notes[ni].0 <= i {
            let _ = writeln!(s, "# {}", notes[ni].1);
            ni += 1;
        }
        let _ = writeln!(s, "{g}");
    }
    for (_, t) in &notes[ni..] {
        let _ = writeln!(s, "# {t}");
    }
    s
}
