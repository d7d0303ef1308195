use crate::basis::Basis;
use crate::bfcore::{decrease, TruthTable};
use crate::circuit::{Circuit, Gate, Signal};
use crate::error::{Error, Result};

/// The circuit with its first weighted gate cut out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult {
    /// One input more than the original: `Input(0)` is the new variable `y`
    /// and the original `x_j` moves to `Input(j)` (one-based `j`).
    pub reduced: Circuit,
    /// Function computed at the removed gate, over the original inputs.
    pub h: TruthTable,
    /// Position of the removed gate in the original circuit.
    pub removed: usize,
}

/// Replaces the first weighted gate (in topological order) by a fresh input
/// `y` placed ahead of the original inputs.
///
/// The reduced circuit computes `g_i(y, x)` with `f_i(x) = g_i(h(x), x)` for
/// every output `i` and has one weighted gate fewer.
pub fn split_first_nonmonotone(circuit: &Circuit, basis: &Basis) -> Result<SplitResult> {
    let removed = circuit
        .gates()
        .iter()
        .position(Gate::is_weighted)
        .ok_or(Error::NoWeightedGate)?;
    let tables = circuit.gate_tables(basis)?;
    let h = tables[removed].clone();

    let remap = |s: Signal| match s {
        Signal::Input(i) => Signal::Input(i + 1),
        Signal::Gate(g) if g == removed => Signal::Input(0),
        Signal::Gate(g) if g > removed => Signal::Gate(g - 1),
        other => other,
    };
    let gates = circuit
        .gates()
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != removed)
        .map(|(_, g)| Gate {
            name: g.name.clone(),
            kind: g.kind.clone(),
            args: g.args.iter().copied().map(remap).collect(),
        })
        .collect();
    let outputs = circuit.outputs().iter().copied().map(remap).collect();
    Ok(SplitResult {
        reduced: Circuit::from_parts(circuit.n_inputs() + 1, gates, outputs),
        h,
        removed,
    })
}

impl SplitResult {
    /// Checks `f_i(x) = g_i(h(x), x)` on every input; returns the first
    /// failing input index if any.
    pub fn check_composition(&self, original: &Circuit, basis: &Basis) -> Result<Option<usize>> {
        let f = original.realized_system(basis)?;
        let g = self.reduced.realized_system(basis)?;
        let n = original.n_inputs();
        Ok((0..1usize << n).find(|&x| {
            let yx = self.h.get(x) as usize | x << 1;
            f.members()
                .iter()
                .zip(g.members())
                .any(|(fi, gi)| fi.get(x) != gi.get(yx))
        }))
    }
}

/// Outcome of testing `d(F) ≤ (2r(B) + 1)(2^I − 1)` on a circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma1Report {
    pub decrease: u32,
    pub r: u32,
    pub weight: usize,
    /// Saturates at `u128::MAX`.
    pub bound: u128,
    pub holds: bool,
}

pub fn check_lemma1(circuit: &Circuit, basis: &Basis) -> Result<Lemma1Report> {
    let system = circuit.realized_system(basis)?;
    let d = decrease(&system)?.value;
    let weight = circuit.inversion_weight();
    let r = basis.r();
    let pow = if weight >= 128 {
        u128::MAX
    } else {
        (1u128 << weight) - 1
    };
    let bound = pow.saturating_mul(2 * r as u128 + 1);
    Ok(Lemma1Report {
        decrease: d,
        r,
        weight,
        bound,
        holds: d as u128 <= bound,
    })
}
