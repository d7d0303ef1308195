//! Truth tables, function systems and the chain/jump/decrease combinatorics.

pub mod chain;
pub mod decrease;
pub mod oracle;
pub mod system;
pub mod truth_table;

pub use chain::Chain;
pub use decrease::{
    ceil_log2, decrease, decrease_with, is_jump, markov_complexity, markov_from_decrease,
    nu_profile, nu_profile_with, Decrease, DecreaseProfile,
};
pub use oracle::{decrease_by_enumeration, decrease_oracle};
pub use system::{parse_functions, parse_system, write_functions, FunctionSystem, NamedFunction};
pub use truth_table::TruthTable;
