//! Circuits over a basis `M ∪ {ω₁, …, ω_p}`.
//!
//! Gates are kept in topological order: every argument names an input, a
//! constant, or a strictly earlier gate. Monotone gates carry their own truth
//! table and cost nothing; basis gates refer to a generator by index and cost
//! one each.

mod split;
mod text;

pub use split::{check_lemma1, split_first_nonmonotone, Lemma1Report, SplitResult};
pub use text::{parse_circuit, write_circuit};

use crate::basis::Basis;
use crate::bfcore::truth_table::tuple_string;
use crate::bfcore::{FunctionSystem, TruthTable};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A reference to a value inside a circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Signal {
    /// Zero-based circuit input; `Input(0)` is `x1` in the text format.
    Input(usize),
    /// Output of the gate at this position.
    Gate(usize),
    /// A free constant.
    Const(bool),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GateKind {
    Monotone(TruthTable),
    /// Zero-based generator index into the basis.
    Basis(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gate {
    pub name: String,
    pub kind: GateKind,
    pub args: Vec<Signal>,
}

impl Gate {
    pub fn is_weighted(&self) -> bool {
        matches!(self.kind, GateKind::Basis(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    n_inputs: usize,
    gates: Vec<Gate>,
    outputs: Vec<Signal>,
}

impl Circuit {
    pub fn new(n_inputs: usize) -> Self {
        Circuit {
            n_inputs,
            gates: Vec::new(),
            outputs: Vec::new(),
        }
    }

    /// Assembles a circuit without checking it; see [`Circuit::validate`].
    pub fn from_parts(n_inputs: usize, gates: Vec<Gate>, outputs: Vec<Signal>) -> Self {
        Circuit {
            n_inputs,
            gates,
            outputs,
        }
    }

    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn outputs(&self) -> &[Signal] {
        &self.outputs
    }

    pub fn input(&self, i: usize) -> Signal {
        assert!(i < self.n_inputs);
        Signal::Input(i)
    }

    pub fn push(&mut self, gate: Gate) -> Signal {
        self.gates.push(gate);
        Signal::Gate(self.gates.len() - 1)
    }

    /// Appends a monotone gate named `g<index>`.
    pub fn add_monotone(&mut self, table: TruthTable, args: Vec<Signal>) -> Signal {
        let name = format!("g{}", self.gates.len());
        self.push(Gate {
            name,
            kind: GateKind::Monotone(table),
            args,
        })
    }

    /// Appends a weighted gate named `g<index>`.
    pub fn add_basis(&mut self, omega_index: usize, args: Vec<Signal>) -> Signal {
        let name = format!("g{}", self.gates.len());
        self.push(Gate {
            name,
            kind: GateKind::Basis(omega_index),
            args,
        })
    }

    pub fn set_outputs(&mut self, outputs: Vec<Signal>) {
        self.outputs = outputs;
    }

    /// Number of weighted gates.
    pub fn inversion_weight(&self) -> usize {
        self.gates.iter().filter(|g| g.is_weighted()).count()
    }

    /// Checks topological order, arities, gate monotonicity and generator
    /// indices, reporting the first offending gate.
    pub fn validate(&self, basis: &Basis) -> Result<()> {
        for (k, gate) in self.gates.iter().enumerate() {
            for arg in &gate.args {
                self.check_signal(*arg, k)
                    .map_err(|m| Error::gate(k, format!("{}: {m}", gate.name)))?;
            }
            let arity = match &gate.kind {
                GateKind::Monotone(t) => {
                    if !t.is_monotone() {
                        return Err(Error::gate(
                            k,
                            format!("{}: table {} is not monotone", gate.name, t.to_hex()),
                        ));
                    }
                    t.arity() as usize
                }
                GateKind::Basis(i) => match basis.omega(*i) {
                    Some(omega) => omega.arity() as usize,
                    None => {
                        return Err(Error::gate(
                            k,
                            format!(
                                "{}: generator {} does not exist in a basis of {}",
                                gate.name,
                                i + 1,
                                basis.len()
                            ),
                        ))
                    }
                },
            };
            if gate.args.len() != arity {
                return Err(Error::gate(
                    k,
                    format!(
                        "{}: function takes {arity} argument(s), got {}",
                        gate.name,
                        gate.args.len()
                    ),
                ));
            }
        }
        for out in &self.outputs {
            self.check_signal(*out, self.gates.len())
                .map_err(|m| Error::gate(self.gates.len(), format!("outputs: {m}")))?;
        }
        Ok(())
    }

    fn check_signal(&self, s: Signal, before: usize) -> std::result::Result<(), String> {
        match s {
            Signal::Input(i) if i >= self.n_inputs => {
                Err(format!("input x{} is not declared", i + 1))
            }
            Signal::Gate(j) if j >= before => Err(format!("forward reference to gate {j}")),
            _ => Ok(()),
        }
    }

    /// Evaluates every gate on one input tuple; returns the output tuple.
    pub fn evaluate(&self, basis: &Basis, x: &[bool]) -> Result<Vec<bool>> {
        self.validate(basis)?;
        if x.len() != self.n_inputs {
            return Err(Error::ArityMismatch {
                expected: self.n_inputs as u32,
                found: x.len() as u32,
            });
        }
        let mut values = Vec::with_capacity(self.gates.len());
        for gate in &self.gates {
            let point = gate.args.iter().enumerate().fold(0usize, |acc, (j, s)| {
                let v = match *s {
                    Signal::Input(i) => x[i],
                    Signal::Gate(g) => values[g],
                    Signal::Const(b) => b,
                };
                acc | (v as usize) << j
            });
            values.push(gate_function(gate, basis).get(point));
        }
        Ok(self
            .outputs
            .iter()
            .map(|s| match *s {
                Signal::Input(i) => x[i],
                Signal::Gate(g) => values[g],
                Signal::Const(b) => b,
            })
            .collect())
    }

    /// Truth table of every gate output, over the circuit inputs.
    pub fn gate_tables(&self, basis: &Basis) -> Result<Vec<TruthTable>> {
        self.gate_tables_with(basis, &Limits::default())
    }

    pub fn gate_tables_with(&self, basis: &Basis, limits: &Limits) -> Result<Vec<TruthTable>> {
        self.validate(basis)?;
        let n = self.n_inputs as u32;
        limits.require_arity("circuit inputs", n, limits.arity_cap)?;
        let mut tables: Vec<TruthTable> = Vec::with_capacity(self.gates.len());
        for gate in &self.gates {
            let f = gate_function(gate, basis);
            let table = TruthTable::from_index_fn(n, |x| {
                let point = gate.args.iter().enumerate().fold(0usize, |acc, (j, s)| {
                    acc | (signal_value(*s, x, &tables) as usize) << j
                });
                f.get(point)
            });
            tables.push(table);
        }
        Ok(tables)
    }

    /// The system realized at the outputs, found by exhaustive evaluation.
    pub fn realized_system(&self, basis: &Basis) -> Result<FunctionSystem> {
        self.realized_system_with(basis, &Limits::default())
    }

    pub fn realized_system_with(&self, basis: &Basis, limits: &Limits) -> Result<FunctionSystem> {
        let tables = self.gate_tables_with(basis, limits)?;
        let n = self.n_inputs as u32;
        let members = self
            .outputs
            .iter()
            .map(|&s| match s {
                Signal::Gate(g) => tables[g].clone(),
                _ => TruthTable::from_index_fn(n, |x| signal_value(s, x, &tables)),
            })
            .collect();
        FunctionSystem::new(members)
    }

    /// Compares the realized system with `expected`; on mismatch returns the
    /// first differing `(output index, input tuple)` in index order.
    pub fn verify(
        &self,
        basis: &Basis,
        expected: &FunctionSystem,
    ) -> Result<Option<(usize, String)>> {
        let got = self.realized_system(basis)?;
        if got.arity() != expected.arity() || got.len() != expected.len() {
            return Err(Error::Internal(format!(
                "circuit realizes {} function(s) of arity {}, expected {} of arity {}",
                got.len(),
                got.arity(),
                expected.len(),
                expected.arity()
            )));
        }
        let n = expected.arity();
        for x in 0..1usize << n {
            for (k, (a, b)) in got.members().iter().zip(expected.members()).enumerate() {
                if a.get(x) != b.get(x) {
                    return Ok(Some((k, tuple_string(x, n))));
                }
            }
        }
        Ok(None)
    }
}

fn gate_function<'a>(gate: &'a Gate, basis: &'a Basis) -> &'a TruthTable {
    match &gate.kind {
        GateKind::Monotone(t) => t,
        GateKind::Basis(i) => &basis.omegas()[*i],
    }
}

#[inline]
fn signal_value(s: Signal, x: usize, tables: &[TruthTable]) -> bool {
    match s {
        Signal::Input(i) => (x >> i) & 1 == 1,
        Signal::Gate(g) => tables[g].get(x),
        Signal::Const(b) => b,
    }
}
