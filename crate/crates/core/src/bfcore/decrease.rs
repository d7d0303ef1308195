//! The decrease `d(F)` and the per-terminal profile `ν`.
//!
//! Any jump pair `α < β` refines through intermediate points into a path of
//! covering steps at least one of which is a jump, so the longest path in the
//! covering graph (weight 1 on jump edges) has the same value as the maximum
//! over arbitrary chains. [`crate::bfcore::oracle`] computes the latter
//! directly and the tests hold the two against each other.

use crate::bfcore::chain::{strictly_below, Chain};
use crate::bfcore::truth_table::{tuple_lex_cmp, tuple_string};
use crate::bfcore::{FunctionSystem, TruthTable};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// `ν(β)`: the largest jump count over chains ending at `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecreaseProfile {
    arity: u32,
    nu: Vec<u32>,
}

impl DecreaseProfile {
    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn get(&self, point: usize) -> u32 {
        self.nu[point]
    }

    pub fn values(&self) -> &[u32] {
        &self.nu
    }

    pub fn max(&self) -> u32 {
        self.nu.iter().copied().max().unwrap_or(0)
    }

    /// The monotone function `[ν(x) ≥ threshold]`.
    pub fn at_least(&self, threshold: u32) -> TruthTable {
        TruthTable::from_index_fn(self.arity, |i| self.nu[i] >= threshold)
    }
}

/// `d(F)` together with a chain attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decrease {
    pub value: u32,
    pub witness: Chain,
}

/// Checks whether `(α, β)` is a jump for the system.
///
/// Both points are input indices; the pair must satisfy `α ≤ β`, `α ≠ β`.
pub fn is_jump(system: &FunctionSystem, alpha: usize, beta: usize) -> Result<bool> {
    let n = system.arity();
    let size = 1usize << n;
    if alpha >= size || beta >= size {
        return Err(Error::InvalidPair(format!(
            "points must lie in the {n}-cube"
        )));
    }
    if !strictly_below(alpha, beta) {
        return Err(Error::InvalidPair(format!(
            "{} is not strictly below {}",
            tuple_string(alpha, n),
            tuple_string(beta, n)
        )));
    }
    Ok(system.drops(alpha, beta))
}

pub fn nu_profile(system: &FunctionSystem) -> Result<DecreaseProfile> {
    nu_profile_with(system, &Limits::default())
}

pub fn nu_profile_with(system: &FunctionSystem, limits: &Limits) -> Result<DecreaseProfile> {
    let n = system.arity();
    limits.require_arity("arity for decrease", n, limits.arity_cap)?;
    let size = 1usize << n;
    let mut nu = vec![0u32; size];
    // Index order is a linear extension of the cube order.
    for beta in 1..size {
        let mut best = 0;
        let mut rest = beta;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            let alpha = beta ^ bit;
            best = best.max(nu[alpha] + system.drops(alpha, beta) as u32);
        }
        nu[beta] = best;
    }
    Ok(DecreaseProfile { arity: n, nu })
}

/// `μ(α)`: the largest jump count over chains starting at `α`.
fn tail_profile(system: &FunctionSystem) -> Vec<u32> {
    let n = system.arity();
    let size = 1usize << n;
    let mut mu = vec![0u32; size];
    for alpha in (0..size).rev() {
        let mut best = 0;
        for j in 0..n {
            let beta = alpha | 1 << j;
            if beta != alpha {
                best = best.max(mu[beta] + system.drops(alpha, beta) as u32);
            }
        }
        mu[alpha] = best;
    }
    mu
}

pub fn decrease(system: &FunctionSystem) -> Result<Decrease> {
    decrease_with(system, &Limits::default())
}

/// Computes `d(F)` and the lexicographically smallest chain attaining it.
///
/// Chains compare point by point, tuples compare with `x₁` leading, and a
/// proper prefix precedes its extensions. The witness therefore starts at
/// `0ⁿ` and ends as soon as it has collected `d(F)` jumps.
pub fn decrease_with(system: &FunctionSystem, limits: &Limits) -> Result<Decrease> {
    let n = system.arity();
    let profile = nu_profile_with(system, limits)?;
    let value = profile.max();
    let mu = tail_profile(system);
    debug_assert_eq!(mu[0], value);

    let size = 1usize << n;
    let mut lex_order: Vec<usize> = (0..size).collect();
    lex_order.sort_by(|&a, &b| tuple_lex_cmp(a, b, n));

    let mut points = vec![0usize];
    let mut collected = 0u32;
    while collected < value {
        let current = *points.last().unwrap();
        let next = lex_order
            .iter()
            .copied()
            .find(|&g| {
                strictly_below(current, g)
                    && collected + system.drops(current, g) as u32 + mu[g] == value
            })
            .ok_or_else(|| Error::Internal("witness reconstruction stalled".into()))?;
        collected += system.drops(current, next) as u32;
        points.push(next);
    }
    Ok(Decrease {
        value,
        witness: Chain::new(n, points)?,
    })
}

/// Smallest `k` with `2^k ≥ x`.
pub fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// `⌈log₂(d(F) + 1)⌉`, the number of negations a circuit over
/// `M ∪ {¬}` needs for `F`.
pub fn markov_complexity(system: &FunctionSystem) -> Result<u32> {
    Ok(markov_from_decrease(nu_profile(system)?.max() as u64))
}

pub fn markov_from_decrease(d: u64) -> u32 {
    ceil_log2(d + 1)
}
