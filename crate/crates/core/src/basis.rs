//! Bases of the form `M ∪ {ω₁, …, ω_p}`: every monotone function is free and
//! each non-monotone generator `ω_i` costs one unit.

use std::fmt::Write as _;

use crate::bfcore::truth_table::tuple_lex_cmp;
use crate::bfcore::{decrease, markov_from_decrease, parse_functions, FunctionSystem, TruthTable};
use crate::error::{Error, Result};

/// The weighted generators of a basis together with `r(B)` and `c(B)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Basis {
    omegas: Vec<TruthTable>,
    names: Vec<String>,
    r: u32,
    c: f64,
}

impl Basis {
    /// Builds a basis, rejecting an empty list or any monotone generator.
    pub fn new(omegas: Vec<TruthTable>) -> Result<Self> {
        let names = (1..=omegas.len()).map(|i| format!("w{i}")).collect();
        Self::with_names(omegas, names)
    }

    pub fn with_names(omegas: Vec<TruthTable>, names: Vec<String>) -> Result<Self> {
        assert_eq!(omegas.len(), names.len(), "one name per generator");
        if omegas.is_empty() {
            return Err(Error::EmptyBasis);
        }
        let mut r = 0;
        for (index, omega) in omegas.iter().enumerate() {
            if omega.is_monotone() {
                return Err(Error::MonotoneGenerator { index });
            }
            r = r.max(decrease(&FunctionSystem::single(omega.clone()))?.value);
        }
        debug_assert!(r >= 1);
        let c = ((2 * r + 1) as f64).log2() + 1.0;
        Ok(Basis {
            omegas,
            names,
            r,
            c,
        })
    }

    /// `M ∪ {¬x}`, the classical setting.
    pub fn negation() -> Self {
        Self::with_names(
            vec![TruthTable::from_bit_string("10").unwrap()],
            vec!["not".into()],
        )
        .unwrap()
    }

    /// Reads a basis file: one generator per line in the function format.
    pub fn parse(text: &str) -> Result<Self> {
        let funcs = parse_functions(text)?;
        let (names, omegas) = funcs.into_iter().map(|f| (f.name, f.table)).unzip();
        Self::with_names(omegas, names)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, omega) in self.names.iter().zip(&self.omegas) {
            writeln!(out, "{name} {} {}", omega.arity(), omega.to_hex()).unwrap();
        }
        out
    }

    pub fn omegas(&self) -> &[TruthTable] {
        &self.omegas
    }

    pub fn omega(&self, index: usize) -> Option<&TruthTable> {
        self.omegas.get(index)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.omegas.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `r(B)`: the largest decrease among the generators.
    pub fn r(&self) -> u32 {
        self.r
    }

    /// `c(B) = log₂(2r(B) + 1) + 1`.
    pub fn c(&self) -> f64 {
        self.c
    }

    /// Constant substitution turning one generator into negation.
    ///
    /// Picks the first generator, then the lexicographically smallest lower
    /// point `γ` (with `x₁` leading) of a covering jump `γ ≺ γ'`, then the
    /// smallest pin.
    pub fn negation_gadget(&self) -> NegationGadget {
        for (index, omega) in self.omegas.iter().enumerate() {
            let a = omega.arity();
            let mut lowers: Vec<usize> = (0..omega.len()).collect();
            lowers.sort_by(|&x, &y| tuple_lex_cmp(x, y, a));
            for gamma in lowers {
                if !omega.get(gamma) {
                    continue;
                }
                let pin =
                    (0..a as usize).find(|&j| gamma >> j & 1 == 0 && !omega.get(gamma | 1 << j));
                if let Some(pin) = pin {
                    let inputs = (0..a as usize)
                        .map(|j| {
                            if j == pin {
                                GadgetInput::Pin
                            } else {
                                GadgetInput::Const(gamma >> j & 1 == 1)
                            }
                        })
                        .collect();
                    return NegationGadget {
                        omega_index: index,
                        inputs,
                    };
                }
            }
        }
        unreachable!("every generator is non-monotone and so has a covering jump")
    }
}

/// What feeds one input of a negation gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetInput {
    Pin,
    Const(bool),
}

/// `ω_i` with every input but one fixed to a constant, computing `¬x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegationGadget {
    pub omega_index: usize,
    pub inputs: Vec<GadgetInput>,
}

impl NegationGadget {
    /// Zero-based position of the variable input.
    pub fn pin(&self) -> usize {
        self.inputs
            .iter()
            .position(|i| *i == GadgetInput::Pin)
            .expect("gadget has a pin")
    }

    /// The one-variable function the gadget computes over `basis`.
    pub fn function(&self, basis: &Basis) -> TruthTable {
        let omega = &basis.omegas()[self.omega_index];
        TruthTable::from_index_fn(1, |x| {
            let point = self
                .inputs
                .iter()
                .enumerate()
                .fold(0usize, |acc, (j, input)| {
                    let bit = match input {
                        GadgetInput::Pin => x == 1,
                        GadgetInput::Const(b) => *b,
                    };
                    acc | (bit as usize) << j
                });
            omega.get(point)
        })
    }
}

/// The two-sided bracket on `I_B(F)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bounds {
    pub decrease: u32,
    pub lower: u32,
    pub upper: u32,
    pub c: f64,
}

pub fn bounds(system: &FunctionSystem, basis: &Basis) -> Result<Bounds> {
    let d = decrease(system)?.value;
    let (lower, upper) = bounds_from_decrease(d as u64, basis.c());
    Ok(Bounds {
        decrease: d,
        lower,
        upper,
        c: basis.c(),
    })
}

/// `upper = ⌈log₂(d+1)⌉`, `lower = max(0, ⌈upper − c⌉)`.
pub fn bounds_from_decrease(d: u64, c: f64) -> (u32, u32) {
    let upper = markov_from_decrease(d);
    let lower = (upper as f64 - c).ceil().max(0.0) as u32;
    (lower, upper)
}
