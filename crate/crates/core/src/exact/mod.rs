//! Exact inversion complexity for small arities.
//!
//! Monotone glue is free, so a circuit is determined (up to cost) by the
//! sequence of functions its weighted gates compute. The search grows pools
//! of signals one weighted gate at a time; each new signal is a generator
//! applied to monotone functions of the current pool.

mod pool;
mod search;

pub use pool::{PatternPool, MAX_POOL_ARITY, MAX_POOL_SIGNALS};
pub use search::{exact_inversion_complexity, exact_with_witness, ExactOutcome, ExactSearch};
