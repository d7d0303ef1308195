//! Circuits with exactly `⌈log₂(d(F)+1)⌉` weighted gates.
//!
//! Each level takes the current system `F` (over the original inputs and the
//! negations produced so far) with `d = d(F) ≥ 1`, sets `k = ⌈log₂(d+1)⌉`
//! and `h = 2^(k−1)`, and splits the cube with the monotone separator
//! `m = [ν ≥ h]`. One negation `y = ¬m` is spent and the system is replaced
//! by
//!
//! ```text
//! g_i(x, y) = (f_i ∨ m)(x) ∧ ((f_i ∧ m)(x) ∨ y)
//! ```
//!
//! which gives back `f_i` at `y = ¬m(x)` and has decrease at most `h − 1`:
//! on `y = 0` it is `f_i ∧ m` and only sees jumps above the separator, on
//! `y = 1` it is `f_i ∨ m` and only sees jumps below it. Every level checks
//! both facts, and the finished circuit is verified against `F`.

use std::fmt::Write as _;

use crate::basis::{Basis, GadgetInput};
use crate::bfcore::{
    decrease_with, markov_from_decrease, nu_profile_with, FunctionSystem, TruthTable,
};
use crate::circuit::{Circuit, Signal};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisLevel {
    /// `⌈log₂(d+1)⌉` for the system entering this level.
    pub k: u32,
    pub threshold: u32,
    /// Monotone separator over the variables available at this level.
    pub separator: TruthTable,
    /// The system after the split; its last variable is the new negation.
    pub transformed: FunctionSystem,
    pub transformed_decrease: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SynthesisTrace {
    pub levels: Vec<SynthesisLevel>,
}

impl SynthesisTrace {
    /// The trace as `#` comment lines for a circuit file.
    pub fn to_comments(&self, n_inputs: u32) -> String {
        let mut out = String::new();
        writeln!(out, "# synthesis trace: {} level(s)", self.levels.len()).unwrap();
        for (i, level) in self.levels.iter().enumerate() {
            let vars = n_inputs + i as u32;
            writeln!(
                out,
                "# level {}: k={} threshold={} separator={} over {} variable(s)",
                i + 1,
                level.k,
                level.threshold,
                level.separator.to_hex(),
                vars
            )
            .unwrap();
            let members: Vec<String> = level
                .transformed
                .members()
                .iter()
                .map(TruthTable::to_hex)
                .collect();
            writeln!(
                out,
                "#   transformed={} decrease={}",
                members.join(","),
                level.transformed_decrease
            )
            .unwrap();
        }
        out
    }
}

/// One level of the decomposition: the separator `m` and the system `G'`
/// over one extra variable (placed last).
pub fn decompose_step(system: &FunctionSystem) -> Result<(TruthTable, FunctionSystem)> {
    decompose_step_with(system, &Limits::default())
}

pub fn decompose_step_with(
    system: &FunctionSystem,
    limits: &Limits,
) -> Result<(TruthTable, FunctionSystem)> {
    let profile = nu_profile_with(system, limits)?;
    let d = profile.max();
    if d == 0 {
        return Err(Error::AlreadyMonotone);
    }
    let k = markov_from_decrease(d as u64);
    let separator = profile.at_least(1 << (k - 1));
    let transformed = split_system(system, &separator);
    Ok((separator, transformed))
}

fn split_system(system: &FunctionSystem, m: &TruthTable) -> FunctionSystem {
    let n = system.arity();
    let size = 1usize << n;
    let members = system
        .members()
        .iter()
        .map(|f| {
            TruthTable::from_index_fn(n + 1, |i| {
                let x = i & (size - 1);
                let y = i >= size;
                let (fx, mx) = (f.get(x), m.get(x));
                (fx || mx) && ((fx && mx) || y)
            })
        })
        .collect();
    FunctionSystem::new(members).expect("same arity by construction")
}

pub fn synthesize(system: &FunctionSystem, basis: &Basis) -> Result<(Circuit, SynthesisTrace)> {
    synthesize_with(system, basis, &Limits::default())
}

/// Builds and verifies a circuit for `system` with `⌈log₂(d+1)⌉` weighted
/// gates, all of them copies of the basis' negation gadget.
pub fn synthesize_with(
    system: &FunctionSystem,
    basis: &Basis,
    limits: &Limits,
) -> Result<(Circuit, SynthesisTrace)> {
    let n = system.arity();
    let target = decrease_with(system, limits)?.value;
    let levels = markov_from_decrease(target as u64);
    limits.require_arity("inputs plus pseudo-inputs", n + levels, limits.arity_cap)?;

    let gadget = basis.negation_gadget();
    let mut circuit = Circuit::new(n as usize);
    let mut pool: Vec<Signal> = (0..n as usize).map(Signal::Input).collect();
    let mut current = system.clone();
    let mut trace = SynthesisTrace::default();

    loop {
        let d = decrease_with(&current, limits)?.value;
        if d == 0 {
            break;
        }
        let k = markov_from_decrease(d as u64);
        let threshold = 1u32 << (k - 1);
        let (separator, transformed) = decompose_step_with(&current, limits)?;
        if !separator.is_monotone() {
            return Err(Error::Internal(format!(
                "separator {} is not monotone",
                separator.to_hex()
            )));
        }
        let next_d = decrease_with(&transformed, limits)?.value;
        if next_d > threshold - 1 {
            return Err(Error::Internal(format!(
                "decrease {next_d} after split exceeds {}",
                threshold - 1
            )));
        }
        check_reconstruction(&current, &separator, &transformed)?;

        let m = circuit.add_monotone(separator.clone(), pool.clone());
        let args = gadget
            .inputs
            .iter()
            .map(|input| match input {
                GadgetInput::Pin => m,
                GadgetInput::Const(b) => Signal::Const(*b),
            })
            .collect();
        let y = circuit.add_basis(gadget.omega_index, args);
        pool.push(y);

        trace.levels.push(SynthesisLevel {
            k,
            threshold,
            separator,
            transformed: transformed.clone(),
            transformed_decrease: next_d,
        });
        current = transformed;
    }

    let outputs = current
        .members()
        .iter()
        .map(|g| circuit.add_monotone(g.clone(), pool.clone()))
        .collect();
    circuit.set_outputs(outputs);

    if circuit.inversion_weight() != levels as usize {
        return Err(Error::Internal(format!(
            "used {} weighted gates, expected {levels}",
            circuit.inversion_weight()
        )));
    }
    if let Some((k, tuple)) = circuit.verify(basis, system)? {
        return Err(Error::Internal(format!(
            "output {k} differs from the target at {tuple}"
        )));
    }
    Ok((circuit, trace))
}

/// `g_i(x, ¬m(x)) = f_i(x)` for every `x`.
fn check_reconstruction(
    system: &FunctionSystem,
    m: &TruthTable,
    transformed: &FunctionSystem,
) -> Result<()> {
    let size = 1usize << system.arity();
    for (f, g) in system.members().iter().zip(transformed.members()) {
        for x in 0..size {
            let y = !m.get(x) as usize;
            if g.get(x | (y * size)) != f.get(x) {
                return Err(Error::Internal(format!(
                    "reconstruction fails at index {x}"
                )));
            }
        }
    }
    Ok(())
}
