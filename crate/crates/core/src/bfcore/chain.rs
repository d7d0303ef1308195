use std::fmt;

use crate::bfcore::truth_table::tuple_string;
use crate::bfcore::FunctionSystem;
use crate::error::{Error, Result};

/// An increasing chain of tuples, stored as input indices.
///
/// Consecutive points are strictly increasing under the componentwise
/// order, i.e. each index is a proper bit superset of the previous one.
/// A single point is a valid chain carrying no jumps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain {
    arity: u32,
    points: Vec<usize>,
}

impl Chain {
    pub fn new(arity: u32, points: Vec<usize>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidChain("a chain has at least one point".into()));
        }
        let size = 1usize << arity;
        if let Some(&p) = points.iter().find(|&&p| p >= size) {
            return Err(Error::InvalidChain(format!(
                "point {p} is outside the {arity}-cube"
            )));
        }
        for w in points.windows(2) {
            if !strictly_below(w[0], w[1]) {
                return Err(Error::InvalidChain(format!(
                    "{} is not strictly below {}",
                    tuple_string(w[0], arity),
                    tuple_string(w[1], arity)
                )));
            }
        }
        Ok(Chain { arity, points })
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn initial(&self) -> usize {
        self.points[0]
    }

    pub fn terminal(&self) -> usize {
        *self.points.last().unwrap()
    }

    /// Number of consecutive pairs that are jumps for `system`.
    pub fn jumps(&self, system: &FunctionSystem) -> u32 {
        assert_eq!(system.arity(), self.arity, "arity mismatch");
        self.points
            .windows(2)
            .filter(|w| system.drops(w[0], w[1]))
            .count() as u32
    }

    /// Tuples rendered with `x₁` first.
    pub fn tuple_strings(&self) -> Vec<String> {
        self.points
            .iter()
            .map(|&p| tuple_string(p, self.arity))
            .collect()
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.tuple_strings().join(","))
    }
}

/// `a ≤ b` componentwise.
#[inline]
pub fn below(a: usize, b: usize) -> bool {
    a & !b == 0
}

#[inline]
pub fn strictly_below(a: usize, b: usize) -> bool {
    a != b && below(a, b)
}
