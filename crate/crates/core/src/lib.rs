//! Inversion complexity of Boolean function systems.
//!
//! A basis here consists of every monotone function at weight zero plus a
//! finite list of non-monotone generators at weight one. The crate computes
//! the decrease `d(F)` of a system, builds circuits using exactly
//! `⌈log₂(d(F)+1)⌉` weighted gates, brackets the true optimum with a
//! basis-dependent lower bound, and finds that optimum exactly for small
//! arities.
//!
//! The guide under `book/` walks through each piece; its code listings are
//! compiled and run as doctests of this crate.

pub mod basis;
pub mod bfcore;
pub mod circuit;
pub mod cli;
mod error;
pub mod exact;
mod limits;
pub mod synth;

pub use basis::{bounds, Basis, Bounds, NegationGadget};
pub use bfcore::{
    decrease, decrease_oracle, is_jump, markov_complexity, nu_profile, Chain, Decrease,
    DecreaseProfile, FunctionSystem, TruthTable,
};
pub use circuit::{Circuit, Gate, GateKind, Signal};
pub use error::{Error, Result};
pub use exact::{exact_inversion_complexity, ExactOutcome, PatternPool};
pub use limits::*;
pub use synth::{synthesize, SynthesisTrace};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/decrease.md")]
    mod decrease {}
    #[doc = include_str!("../../../book/src/bases.md")]
    mod bases {}
    #[doc = include_str!("../../../book/src/circuits.md")]
    mod circuits {}
    #[doc = include_str!("../../../book/src/synthesis.md")]
    mod synthesis {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
