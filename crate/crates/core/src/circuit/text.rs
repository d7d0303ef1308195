//! Line-oriented circuit files.
//!
//! ```text
//! inputs 3
//! gate n basis 1 x1 const0 const0
//! gate m mono 2 0x8 n x3
//! outputs m n
//! ```
//!
//! Generators are numbered from 1 in the order of the basis file. `const0`
//! and `const1` are always in scope. `#` starts a comment.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::bfcore::TruthTable;
use crate::circuit::{Circuit, Gate, GateKind, Signal};
use crate::error::{Error, Result};

pub fn write_circuit(circuit: &Circuit) -> String {
    let name = |s: &Signal| match *s {
        Signal::Input(i) => format!("x{}", i + 1),
        Signal::Gate(g) => circuit.gates()[g].name.clone(),
        Signal::Const(false) => "const0".to_string(),
        Signal::Const(true) => "const1".to_string(),
    };
    let mut out = String::new();
    writeln!(out, "inputs {}", circuit.n_inputs()).unwrap();
    for gate in circuit.gates() {
        write!(out, "gate {} ", gate.name).unwrap();
        match &gate.kind {
            GateKind::Monotone(t) => write!(out, "mono {} {}", t.arity(), t.to_hex()),
            GateKind::Basis(i) => write!(out, "basis {}", i + 1),
        }
        .unwrap();
        for a in &gate.args {
            write!(out, " {}", name(a)).unwrap();
        }
        out.push('\n');
    }
    out.push_str("outputs");
    for s in circuit.outputs() {
        write!(out, " {}", name(s)).unwrap();
    }
    out.push('\n');
    out
}

pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let mut n_inputs: Option<usize> = None;
    let mut gates: Vec<Gate> = Vec::new();
    let mut outputs: Option<Vec<Signal>> = None;
    let mut names: HashMap<String, usize> = HashMap::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if outputs.is_some() {
            return Err(Error::parse(line, "nothing may follow the outputs line"));
        }
        match fields[0] {
            "inputs" => {
                if n_inputs.is_some() {
                    return Err(Error::parse(line, "inputs declared twice"));
                }
                let [_, k] = fields[..] else {
                    return Err(Error::parse(line, "expected `inputs <k>`"));
                };
                let k = k
                    .parse()
                    .map_err(|_| Error::parse(line, format!("bad input count {k:?}")))?;
                n_inputs = Some(k);
            }
            "gate" => {
                let n = n_inputs.ok_or_else(|| Error::parse(line, "gate before inputs"))?;
                if fields.len() < 4 {
                    return Err(Error::parse(line, "incomplete gate line"));
                }
                let name = fields[1];
                if is_reserved(name) || names.contains_key(name) {
                    return Err(Error::parse(
                        line,
                        format!("gate name {name:?} already in use"),
                    ));
                }
                let (kind, arg_fields) = match fields[2] {
                    "mono" => {
                        let arity: u32 = fields[3].parse().map_err(|_| {
                            Error::parse(line, format!("bad arity {:?}", fields[3]))
                        })?;
                        let hex = fields
                            .get(4)
                            .ok_or_else(|| Error::parse(line, "missing monotone table"))?;
                        let table =
                            TruthTable::from_hex(arity, hex).map_err(|m| Error::parse(line, m))?;
                        let args = &fields[5..];
                        if args.len() != arity as usize {
                            return Err(Error::parse(
                                line,
                                format!(
                                    "arity mismatch: table takes {arity} argument(s), got {}",
                                    args.len()
                                ),
                            ));
                        }
                        (GateKind::Monotone(table), args)
                    }
                    "basis" => {
                        let index: usize = fields[3].parse().map_err(|_| {
                            Error::parse(line, format!("bad generator index {:?}", fields[3]))
                        })?;
                        if index == 0 {
                            return Err(Error::parse(line, "generators are numbered from 1"));
                        }
                        (GateKind::Basis(index - 1), &fields[4..])
                    }
                    other => {
                        return Err(Error::parse(
                            line,
                            format!("unknown gate kind {other:?}, expected mono or basis"),
                        ))
                    }
                };
                let args = arg_fields
                    .iter()
                    .map(|a| resolve(a, n, &names).map_err(|m| Error::parse(line, m)))
                    .collect::<Result<Vec<_>>>()?;
                names.insert(name.to_string(), gates.len());
                gates.push(Gate {
                    name: name.to_string(),
                    kind,
                    args,
                });
            }
            "outputs" => {
                let n = n_inputs.ok_or_else(|| Error::parse(line, "outputs before inputs"))?;
                let outs = fields[1..]
                    .iter()
                    .map(|a| resolve(a, n, &names).map_err(|m| Error::parse(line, m)))
                    .collect::<Result<Vec<_>>>()?;
                outputs = Some(outs);
            }
            other => return Err(Error::parse(line, format!("unknown directive {other:?}"))),
        }
    }
    let n_inputs = n_inputs.ok_or_else(|| Error::parse(0, "missing inputs line"))?;
    let outputs = outputs.ok_or_else(|| Error::parse(0, "missing outputs line"))?;
    Ok(Circuit::from_parts(n_inputs, gates, outputs))
}

fn is_reserved(name: &str) -> bool {
    name == "const0" || name == "const1" || input_index(name).is_some()
}

fn input_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

fn resolve(
    name: &str,
    n_inputs: usize,
    names: &HashMap<String, usize>,
) -> std::result::Result<Signal, String> {
    match name {
        "const0" => return Ok(Signal::Const(false)),
        "const1" => return Ok(Signal::Const(true)),
        _ => {}
    }
    if let Some(i) = input_index(name) {
        return if i <= n_inputs {
            Ok(Signal::Input(i - 1))
        } else {
            Err(format!("input {name} exceeds the {n_inputs} declared"))
        };
    }
    names
        .get(name)
        .map(|&g| Signal::Gate(g))
        .ok_or_else(|| format!("unknown signal {name:?}"))
}
