//! The logical-program text format.
//!
//! One instruction per line: `H j`, `S j`, `CNOT j k`, `SWAP j k` or
//! `RZ j θ` with θ in radians. `#` starts a comment. An optional
//! `qubits N` line fixes the number of logical qubits; otherwise it is the
//! largest index used.

use std::fmt;

use crate::error::{Error, ParseError, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Instruction {
    H(usize),
    S(usize),
    Cnot(usize, usize),
    Swap(usize, usize),
    Rz(usize, f64),
}

impl Instruction {
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Instruction::H(j) | Instruction::S(j) | Instruction::Rz(j, _) => vec![j],
            Instruction::Cnot(j, k) | Instruction::Swap(j, k) => vec![j, k],
        }
    }
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instruction::H(j) => write!(f, "H {j}"),
            Instruction::S(j) => write!(f, "S {j}"),
            Instruction::Cnot(j, k) => write!(f, "CNOT {j} {k}"),
            Instruction::Swap(j, k) => write!(f, "SWAP {j} {k}"),
            Instruction::Rz(j, t) => write!(f, "RZ {j} {t}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct LogicalProgram {
    pub num_logical: usize,
    pub instructions: Vec<Instruction>,
}

impl fmt::Display for LogicalProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qubits {}", self.num_logical)?;
        for i in &self.instructions {
            writeln!(f, "{i}")?;
        }
        Ok(())
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse(ParseError {
        line,
        column,
        message: message.into(),
    })
}

pub fn parse_program(text: &str) -> Result<LogicalProgram> {
    let mut declared: Option<(usize, usize)> = None;
    let mut parsed: Vec<(Instruction, usize, usize)> = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let line_no = li + 1;
        let body = raw.split('#').next().unwrap_or("");
        // (column, token) pairs, columns 1-based
        let mut toks = Vec::new();
        let mut start = None;
        for (i, ch) in body.char_indices().chain([(body.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    toks.push((body[..s].chars().count() + 1, &body[s..i]));
                    start = None;
                }
                _ => {}
            }
        }
        let Some(&(col0, head)) = toks.first() else {
            continue;
        };
        let index = |k: usize| -> Result<usize> {
            let (c, t) = *toks
                .get(k)
                .ok_or_else(|| err(line_no, body.chars().count() + 1, format!("{head} expects more operands")))?;
            match t.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v),
                _ => Err(err(line_no, c, format!("invalid qubit index `{t}`"))),
            }
        };
        let arity = |n: usize| -> Result<()> {
            if toks.len() > n + 1 {
                let (c, t) = toks[n + 1];
                return Err(err(line_no, c, format!("unexpected operand `{t}`")));
            }
            Ok(())
        };
        let ins = match head.to_ascii_uppercase().as_str() {
            "QUBITS" => {
                arity(1)?;
                if declared.is_some() || !parsed.is_empty() {
                    return Err(err(line_no, col0, "`qubits` must come first and only once"));
                }
                declared = Some((index(1)?, line_no));
                continue;
            }
            "H" => {
                arity(1)?;
                Instruction::H(index(1)?)
            }
            "S" => {
                arity(1)?;
                Instruction::S(index(1)?)
            }
            "CNOT" | "SWAP" => {
                arity(2)?;
                let (j, k) = (index(1)?, index(2)?);
                if j == k {
                    return Err(err(line_no, toks[2].0, format!("{head} needs two distinct qubits")));
                }
                if head.eq_ignore_ascii_case("CNOT") {
                    Instruction::Cnot(j, k)
                } else {
                    Instruction::Swap(j, k)
                }
            }
            "RZ" => {
                arity(2)?;
                let j = index(1)?;
                let (c, t) = *toks
                    .get(2)
                    .ok_or_else(|| err(line_no, body.chars().count() + 1, "RZ expects an angle"))?;
                match t.parse::<f64>() {
                    Ok(v) if v.is_finite() => Instruction::Rz(j, v),
                    _ => return Err(err(line_no, c, format!("malformed angle `{t}`"))),
                }
            }
            _ => return Err(err(line_no, col0, format!("unknown mnemonic `{head}`"))),
        };
        parsed.push((ins, line_no, col0));
    }
    let max = parsed
        .iter()
        .flat_map(|(i, _, _)| i.qubits())
        .max()
        .unwrap_or(0);
    let num_logical = match declared {
        Some((k, _)) => {
            if let Some((_, l, c)) = parsed.iter().find(|(i, _, _)| i.qubits().iter().any(|&q| q > k)) {
                return Err(err(*l, *c, format!("qubit index out of range 1..={k}")));
            }
            k
        }
        None => max,
    };
    Ok(LogicalProgram {
        num_logical,
        instructions: parsed.into_iter().map(|(i, _, _)| i).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perr(text: &str) -> ParseError {
        match parse_program(text) {
            Err(Error::Parse(e)) => e,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn basic() {
        let p = parse_program("H 1\nCNOT 1 2").unwrap();
        assert_eq!(p.instructions, vec![Instruction::H(1), Instruction::Cnot(1, 2)]);
        assert_eq!(p.num_logical, 2);
        let r = parse_program("  rz 1   0.5   # half radian\n").unwrap();
        assert_eq!(r.instructions, vec![Instruction::Rz(1, 0.5)]);
    }

    #[test]
    fn errors_have_positions() {
        let e = perr("H 1\nCNOT 1 1");
        assert_eq!((e.line, e.column), (2, 8));
        let e = perr("H 1\n  T 2");
        assert_eq!((e.line, e.column), (2, 3));
        let e = perr("RZ 1 abc");
        assert_eq!((e.line, e.column), (1, 6));
        let e = perr("qubits 2\nH 3");
        assert_eq!(e.line, 2);
        let e = perr("H 0");
        assert_eq!(e.column, 3);
    }

    #[test]
    fn display_reparses() {
        let p = parse_program("qubits 3\nH 1\nS 2\nSWAP 1 3\nRZ 2 -0.5").unwrap();
        assert_eq!(parse_program(&p.to_string()).unwrap(), p);
    }
}
