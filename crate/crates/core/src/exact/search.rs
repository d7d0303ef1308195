use std::collections::{HashMap, HashSet};

use crate::basis::Basis;
use crate::bfcore::{markov_complexity, FunctionSystem, TruthTable};
use crate::circuit::{Circuit, Signal};
use crate::error::{Error, Result};
use crate::exact::pool::{upsets, PatternPool};
use crate::limits::Limits;

/// Result of an exact search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactOutcome {
    /// `I_B(F)`.
    Exact(u32),
    /// No circuit with at most this many weighted gates exists.
    AboveLimit(u32),
}

impl ExactOutcome {
    pub fn value(self) -> Option<u32> {
        match self {
            ExactOutcome::Exact(v) => Some(v),
            ExactOutcome::AboveLimit(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
struct Step {
    omega: usize,
    feeds: Vec<u64>,
}

#[derive(Clone, Debug)]
struct State {
    signals: Vec<u64>,
    /// Monotone functions of the pool, sorted.
    feeds: Vec<u64>,
    /// Membership bitset over all `2^(2^n)` functions.
    closure: Vec<u64>,
    parent: Option<usize>,
    step: Option<Step>,
}

impl State {
    fn contains(&self, f: u64) -> bool {
        (self.closure[(f >> 6) as usize] >> (f & 63)) & 1 == 1
    }
}

/// Iterative deepening over sequences of weighted-gate outputs.
///
/// Layer `t` holds every pool reachable with `t` weighted gates whose
/// signature was not reachable with fewer. Layers are built on demand and
/// kept, so one searcher answers many queries for the same arity and basis.
pub struct ExactSearch<'b> {
    basis: &'b Basis,
    arity: u32,
    limits: Limits,
    omegas: Vec<Vec<bool>>,
    states: Vec<State>,
    layers: Vec<Vec<usize>>,
    seen: HashMap<Vec<u64>, usize>,
    evaluations: u64,
}

impl std::fmt::Debug for ExactSearch<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ExactSearch")
            .field("arity", &self.arity)
            .field("generators", &self.omegas.len())
            .field("layers", &self.layers.len())
            .field("states", &self.states.len())
            .field("evaluations", &self.evaluations)
            .finish()
    }
}

impl<'b> ExactSearch<'b> {
    pub fn new(basis: &'b Basis, arity: u32, limits: Limits) -> Result<Self> {
        limits.validate()?;
        limits.require_arity("arity for exact search", arity, limits.exact_arity_cap)?;
        let omegas = basis
            .omegas()
            .iter()
            .map(|w| w.bits().iter().map(|b| *b).collect())
            .collect();
        let root = PatternPool::new(arity)?;
        let mut search = ExactSearch {
            basis,
            arity,
            limits,
            omegas,
            states: Vec::new(),
            layers: Vec::new(),
            seen: HashMap::new(),
            evaluations: 0,
        };
        let id = search
            .make_state(root.words().to_vec(), None, None)?
            .expect("root is new");
        search.layers.push(vec![id]);
        Ok(search)
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    /// Generator evaluations spent so far.
    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    /// Number of distinct pool signatures discovered so far.
    pub fn states(&self) -> usize {
        self.states.len()
    }

    fn make_state(
        &mut self,
        signals: Vec<u64>,
        parent: Option<usize>,
        step: Option<Step>,
    ) -> Result<Option<usize>> {
        let mut pool = PatternPool::new(self.arity)?;
        for &s in &signals[self.arity as usize..] {
            pool.push_word(s)?;
        }
        let signature = pool.signature();
        if self.seen.contains_key(&signature) {
            return Ok(None);
        }
        let feeds = upsets(&signature, self.limits.pattern_limit)?;
        let functions = 1usize << (1usize << self.arity);
        let mut closure = vec![0u64; functions.div_ceil(64)];
        for &f in &feeds {
            closure[(f >> 6) as usize] |= 1 << (f & 63);
        }
        let id = self.states.len();
        self.seen.insert(signature, id);
        self.states.push(State {
            signals,
            feeds,
            closure,
            parent,
            step,
        });
        Ok(Some(id))
    }

    fn apply(&self, omega: usize, feeds: &[u64]) -> u64 {
        let table = &self.omegas[omega];
        (0..1usize << self.arity)
            .filter(|&a| {
                let point = feeds
                    .iter()
                    .enumerate()
                    .fold(0usize, |acc, (l, &u)| acc | (((u >> a) & 1) as usize) << l);
                table[point]
            })
            .fold(0u64, |acc, a| acc | 1 << a)
    }

    fn build_layer(&mut self) -> Result<()> {
        let previous = self.layers.last().cloned().unwrap_or_default();
        let mut layer = Vec::new();
        for sid in previous {
            let state = self.states[sid].clone();
            let mut produced: HashSet<u64> = HashSet::new();
            for omega in 0..self.omegas.len() {
                let a = self.basis.omegas()[omega].arity() as usize;
                let count = state.feeds.len();
                if count == 0 && a > 0 {
                    continue;
                }
                let mut idx = vec![0usize; a];
                loop {
                    self.evaluations += 1;
                    if self.evaluations > self.limits.candidate_limit {
                        return Err(Error::ResourceLimit {
                            what: "generator evaluations",
                            value: self.evaluations,
                            limit: self.limits.candidate_limit,
                        });
                    }
                    let feeds: Vec<u64> = idx.iter().map(|&i| state.feeds[i]).collect();
                    let z = self.apply(omega, &feeds);
                    if !state.contains(z) && produced.insert(z) {
                        let mut signals = state.signals.clone();
                        signals.push(z);
                        let step = Step { omega, feeds };
                        if let Some(id) = self.make_state(signals, Some(sid), Some(step))? {
                            layer.push(id);
                        }
                    }
                    // odometer over feed tuples
                    let mut pos = 0;
                    while pos < a {
                        idx[pos] += 1;
                        if idx[pos] < count {
                            break;
                        }
                        idx[pos] = 0;
                        pos += 1;
                    }
                    if pos == a {
                        break;
                    }
                }
            }
        }
        self.layers.push(layer);
        Ok(())
    }

    fn words_of(&self, system: &FunctionSystem) -> Result<Vec<u64>> {
        if system.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: system.arity(),
            });
        }
        Ok(system
            .members()
            .iter()
            .map(|f| f.to_word().expect("arity at most 4"))
            .collect())
    }

    /// Smallest-depth state whose pool expresses every member, searching at
    /// most `t_max` weighted gates deep.
    fn find(
        &mut self,
        system: &FunctionSystem,
        t_max: u32,
    ) -> Result<(ExactOutcome, Option<usize>)> {
        let targets = self.words_of(system)?;
        for t in 0..=t_max as usize {
            while self.layers.len() <= t {
                self.build_layer()?;
            }
            let hit = self.layers[t]
                .iter()
                .copied()
                .find(|&sid| targets.iter().all(|&f| self.states[sid].contains(f)));
            if let Some(sid) = hit {
                return Ok((ExactOutcome::Exact(t as u32), Some(sid)));
            }
            if self.layers[t].is_empty() {
                break;
            }
        }
        Ok((ExactOutcome::AboveLimit(t_max), None))
    }

    /// `I_B(F)`, or [`ExactOutcome::AboveLimit`] if it exceeds `t_max`
    /// (default `⌈log₂(d(F)+1)⌉`, which always suffices).
    pub fn complexity(
        &mut self,
        system: &FunctionSystem,
        t_max: Option<u32>,
    ) -> Result<ExactOutcome> {
        let t_max = match t_max {
            Some(t) => t,
            None => markov_complexity(system)?,
        };
        Ok(self.find(system, t_max)?.0)
    }

    /// Like [`ExactSearch::complexity`], also returning a circuit that
    /// attains the optimum.
    pub fn solve(
        &mut self,
        system: &FunctionSystem,
        t_max: Option<u32>,
    ) -> Result<(ExactOutcome, Option<Circuit>)> {
        let t_max = match t_max {
            Some(t) => t,
            None => markov_complexity(system)?,
        };
        let (outcome, sid) = self.find(system, t_max)?;
        let Some(sid) = sid else {
            return Ok((outcome, None));
        };
        let circuit = self.witness(sid, system)?;
        Ok((outcome, Some(circuit)))
    }

    fn witness(&self, sid: usize, system: &FunctionSystem) -> Result<Circuit> {
        let mut steps = Vec::new();
        let mut cur = sid;
        while let Some(parent) = self.states[cur].parent {
            steps.push(self.states[cur].step.clone().expect("non-root has a step"));
            cur = parent;
        }
        steps.reverse();
        let final_signals = &self.states[sid].signals;
        let n = self.arity;
        let mut circuit = Circuit::new(n as usize);
        let mut pool = PatternPool::new(n)?;
        let mut wires: Vec<Signal> = (0..n as usize).map(Signal::Input).collect();
        let full = if n >= 6 {
            u64::MAX
        } else {
            (1u64 << (1u32 << n)) - 1
        };

        let wire_for = |circuit: &mut Circuit,
                        pool: &PatternPool,
                        wires: &[Signal],
                        f: u64|
         -> Result<Signal> {
            if f == 0 {
                return Ok(Signal::Const(false));
            }
            if f == full {
                return Ok(Signal::Const(true));
            }
            if let Some(k) = pool.words().iter().position(|&s| s == f) {
                return Ok(wires[k]);
            }
            let table = TruthTable::from_word(n, f)?;
            let ext = pool.monotone_extension(&table)?;
            Ok(circuit.add_monotone(ext, wires.to_vec()))
        };

        for (j, step) in steps.iter().enumerate() {
            let args = step
                .feeds
                .iter()
                .map(|&u| wire_for(&mut circuit, &pool, &wires, u))
                .collect::<Result<Vec<_>>>()?;
            let z = circuit.add_basis(step.omega, args);
            pool.push_word(final_signals[n as usize + j])?;
            wires.push(z);
        }
        let outputs = system
            .members()
            .iter()
            .map(|f| wire_for(&mut circuit, &pool, &wires, f.to_word().unwrap()))
            .collect::<Result<Vec<_>>>()?;
        circuit.set_outputs(outputs);

        if let Some((k, tuple)) = circuit.verify(self.basis, system)? {
            return Err(Error::Internal(format!(
                "witness output {k} differs at {tuple}"
            )));
        }
        Ok(circuit)
    }
}

/// `I_B(F)` by exhaustive search. `t_max` defaults to `⌈log₂(d(F)+1)⌉`.
pub fn exact_inversion_complexity(
    system: &FunctionSystem,
    basis: &Basis,
    t_max: Option<u32>,
) -> Result<ExactOutcome> {
    ExactSearch::new(basis, system.arity(), Limits::default())?.complexity(system, t_max)
}

/// `I_B(F)` with a circuit attaining it.
pub fn exact_with_witness(
    system: &FunctionSystem,
    basis: &Basis,
    t_max: Option<u32>,
    limits: &Limits,
) -> Result<(ExactOutcome, Option<Circuit>)> {
    ExactSearch::new(basis, system.arity(), *limits)?.solve(system, t_max)
}
