//! Independent routes to `d(F)` that maximize over arbitrary chains rather
//! than covering chains.

use crate::bfcore::chain::strictly_below;
use crate::bfcore::FunctionSystem;
use crate::error::Result;
use crate::limits::Limits;

/// `d(F)` by longest path over the full comparability DAG: one edge for
/// every pair `α < β`. Runs in `O(3ⁿ · m)`.
pub fn decrease_oracle(system: &FunctionSystem) -> Result<u32> {
    decrease_oracle_with(system, &Limits::default())
}

pub fn decrease_oracle_with(system: &FunctionSystem, limits: &Limits) -> Result<u32> {
    let n = system.arity();
    limits.require_arity("arity for decrease", n, limits.arity_cap)?;
    let size = 1usize << n;
    let mut best = vec![0u32; size];
    for beta in 1..size {
        // proper submasks of beta, from beta - 1 down to 0
        let mut alpha = (beta - 1) & beta;
        let mut value = 0;
        loop {
            value = value.max(best[alpha] + system.drops(alpha, beta) as u32);
            if alpha == 0 {
                break;
            }
            alpha = (alpha - 1) & beta;
        }
        best[beta] = value;
    }
    Ok(best.into_iter().max().unwrap_or(0))
}

/// `d(F)` by walking every increasing chain of the cube.
pub fn decrease_by_enumeration(system: &FunctionSystem) -> Result<u32> {
    decrease_by_enumeration_with(system, &Limits::default())
}

pub fn decrease_by_enumeration_with(system: &FunctionSystem, limits: &Limits) -> Result<u32> {
    let n = system.arity();
    limits.require_arity("arity for chain enumeration", n, limits.enumeration_cap)?;
    let size = 1usize << n;

    fn walk(system: &FunctionSystem, size: usize, last: usize, jumps: u32, best: &mut u32) {
        *best = (*best).max(jumps);
        for next in 0..size {
            if strictly_below(last, next) {
                walk(
                    system,
                    size,
                    next,
                    jumps + system.drops(last, next) as u32,
                    best,
                );
            }
        }
    }

    let mut best = 0;
    for start in 0..size {
        walk(system, size, start, 0, &mut best);
    }
    Ok(best)
}

/// Number of increasing chains (of any length ≥ 1) in the `n`-cube; used to
/// sanity-check the enumeration.
pub fn count_chains(n: u32) -> u64 {
    let size = 1usize << n;
    // chains ending at each point
    let mut ending = vec![0u64; size];
    for b in 0..size {
        ending[b] = 1
            + (0..size)
                .filter(|&a| strictly_below(a, b))
                .map(|a| ending[a])
                .sum::<u64>();
    }
    ending.iter().sum()
}
