//! Truth tables of Boolean functions.
//!
//! A function of arity `n` is stored as `2^n` bits. The bit at index `i` is
//! the value at the tuple `α` with `α_j = (i >> (j - 1)) & 1`, so `x₁` is the
//! least significant index bit. Every module and file format in the crate
//! uses this convention.

use std::fmt;

use bitvec::prelude::*;

use crate::error::{Error, Result};

/// Largest arity a truth table may be allocated with.
pub const MAX_TABLE_ARITY: u32 = 24;

/// A Boolean function `f: E₂ⁿ → E₂` as an explicit table of values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthTable {
    arity: u32,
    bits: BitVec<u64, Lsb0>,
}

impl TruthTable {
    /// Wraps a bit vector; fails unless it has exactly `2^arity` entries.
    pub fn new(arity: u32, bits: BitVec<u64, Lsb0>) -> Result<Self> {
        check_arity(arity)?;
        let expected = 1usize << arity;
        if bits.len() != expected {
            return Err(Error::BitLength {
                arity,
                expected,
                actual: bits.len(),
            });
        }
        Ok(TruthTable { arity, bits })
    }

    /// Builds a table from a predicate on the input index.
    ///
    /// # Panics
    ///
    /// Panics if `arity` exceeds [`MAX_TABLE_ARITY`].
    pub fn from_index_fn(arity: u32, mut f: impl FnMut(usize) -> bool) -> Self {
        assert!(arity <= MAX_TABLE_ARITY, "arity {arity} is too large");
        let bits = (0..1usize << arity).map(&mut f).collect();
        TruthTable { arity, bits }
    }

    /// Builds a table from a predicate on the input tuple `[x₁, …, xₙ]`.
    ///
    /// ```
    /// use inversion::TruthTable;
    ///
    /// let and2 = TruthTable::from_tuple_fn(2, |x| x[0] && x[1]);
    /// assert_eq!(and2.bit_string(), "0001");
    /// ```
    pub fn from_tuple_fn(arity: u32, mut f: impl FnMut(&[bool]) -> bool) -> Self {
        let mut tuple = vec![false; arity as usize];
        Self::from_index_fn(arity, |i| {
            for (j, v) in tuple.iter_mut().enumerate() {
                *v = (i >> j) & 1 == 1;
            }
            f(&tuple)
        })
    }

    /// Builds a table of arity at most 6 from the low `2^arity` bits of a word.
    pub fn from_word(arity: u32, word: u64) -> Result<Self> {
        if arity > 6 {
            return Err(Error::ResourceLimit {
                what: "word-packed arity",
                value: arity as u64,
                limit: 6,
            });
        }
        let len = 1usize << arity;
        if len < 64 && word >> len != 0 {
            return Err(Error::BitLength {
                arity,
                expected: len,
                actual: 64 - word.leading_zeros() as usize,
            });
        }
        Ok(Self::from_index_fn(arity, |i| (word >> i) & 1 == 1))
    }

    /// The table packed into a word, for arity at most 6.
    pub fn to_word(&self) -> Option<u64> {
        if self.arity > 6 {
            return None;
        }
        Some(self.bits.iter_ones().fold(0u64, |w, i| w | 1 << i))
    }

    /// Parses a table from a bit string listing index 0 first, e.g. `"0001"`.
    pub fn from_bit_string(s: &str) -> Result<Self> {
        let len = s.len();
        if !len.is_power_of_two() {
            return Err(Error::InvalidTable(format!(
                "bit string length {len} is not a power of two"
            )));
        }
        let arity = len.trailing_zeros();
        let mut bits = BitVec::with_capacity(len);
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(Error::InvalidTable(format!("bad bit character {c:?}"))),
            }
        }
        Self::new(arity, bits)
    }

    pub fn constant(arity: u32, value: bool) -> Self {
        Self::from_index_fn(arity, |_| value)
    }

    /// The projection onto the variable `x_{var+1}` (`var` is zero-based).
    pub fn projection(arity: u32, var: u32) -> Self {
        assert!(var < arity, "projection onto x{} of arity {arity}", var + 1);
        Self::from_index_fn(arity, |i| (i >> var) & 1 == 1)
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    /// Number of entries, `2^arity`.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> &BitSlice<u64, Lsb0> {
        &self.bits
    }

    /// Value at the input index `i`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    /// Value at the input tuple `[x₁, …, xₙ]`.
    pub fn eval(&self, tuple: &[bool]) -> bool {
        assert_eq!(tuple.len(), self.arity as usize, "tuple length");
        self.get(index_of(tuple))
    }

    pub fn count_ones(&self) -> usize {
        self.bits.count_ones()
    }

    /// True iff `f(α) ≤ f(β)` on every covering pair `α ≺ β`.
    pub fn is_monotone(&self) -> bool {
        (0..self.len()).all(|i| {
            !self.get(i) || (0..self.arity).all(|j| (i >> j) & 1 == 1 || self.get(i | 1 << j))
        })
    }

    pub fn negate(&self) -> Self {
        TruthTable {
            arity: self.arity,
            bits: !self.bits.clone(),
        }
    }

    pub fn and(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn or(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    fn zip(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        Self::from_index_fn(self.arity, |i| op(self.get(i), other.get(i)))
    }

    /// Extends the table with one extra variable placed after the existing
    /// ones; the result does not depend on it.
    pub fn extend_arity(&self) -> Self {
        let mask = self.len() - 1;
        Self::from_index_fn(self.arity + 1, |i| self.get(i & mask))
    }

    /// Bits listed from index 0 upwards, e.g. `"0001"` for AND₂.
    pub fn bit_string(&self) -> String {
        self.bits
            .iter()
            .map(|b| if *b { '1' } else { '0' })
            .collect()
    }

    /// Hex encoding used by the text formats: digits run from the least
    /// significant nibble (indices 0..=3) to the most significant one, and
    /// within a digit bit `4k + b` has value `2^b`.
    ///
    /// ```
    /// use inversion::TruthTable;
    ///
    /// // x ⊕ y ⊕ z ⊕ 1 is 1 exactly on even-weight inputs.
    /// let f = TruthTable::from_tuple_fn(3, |x| x.iter().filter(|&&b| b).count() % 2 == 0);
    /// assert_eq!(f.to_hex(), "0x96");
    /// ```
    pub fn to_hex(&self) -> String {
        let digits = self.len().div_ceil(4);
        let mut out = String::with_capacity(digits + 2);
        out.push_str("0x");
        for k in 0..digits {
            let nibble = (0..4)
                .filter(|b| {
                    let i = 4 * k + b;
                    i < self.len() && self.get(i)
                })
                .fold(0u32, |acc, b| acc | 1 << b);
            out.push(char::from_digit(nibble, 16).expect("nibble"));
        }
        out
    }

    /// Inverse of [`TruthTable::to_hex`]. The `0x` prefix is required.
    pub fn from_hex(arity: u32, text: &str) -> std::result::Result<Self, String> {
        if arity > MAX_TABLE_ARITY {
            return Err(format!("arity {arity} exceeds {MAX_TABLE_ARITY}"));
        }
        let digits = text
            .strip_prefix("0x")
            .or_else(|| text.strip_prefix("0X"))
            .ok_or_else(|| format!("table {text:?} must start with 0x"))?;
        let len = 1usize << arity;
        let expected = len.div_ceil(4);
        if digits.len() != expected {
            return Err(format!(
                "arity {arity} needs {expected} hex digit(s), got {}",
                digits.len()
            ));
        }
        let mut bits = BitVec::with_capacity(len);
        for (k, c) in digits.chars().enumerate() {
            let nibble = c
                .to_digit(16)
                .ok_or_else(|| format!("bad hex digit {c:?}"))?;
            for b in 0..4 {
                let i = 4 * k + b;
                let set = (nibble >> b) & 1 == 1;
                if i < len {
                    bits.push(set);
                } else if set {
                    return Err(format!(
                        "bit {i} is set but arity {arity} has {len} entries"
                    ));
                }
            }
        }
        Ok(TruthTable { arity, bits })
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable({}, {})", self.arity, self.bit_string())
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub(crate) fn check_arity(arity: u32) -> Result<()> {
    if arity > MAX_TABLE_ARITY {
        return Err(Error::ResourceLimit {
            what: "table arity",
            value: arity as u64,
            limit: MAX_TABLE_ARITY as u64,
        });
    }
    Ok(())
}

/// Index of the tuple `[x₁, …, xₙ]`.
pub fn index_of(tuple: &[bool]) -> usize {
    tuple
        .iter()
        .enumerate()
        .fold(0, |acc, (j, &b)| acc | (b as usize) << j)
}

/// Tuple `[x₁, …, xₙ]` at index `i`.
pub fn tuple_of(i: usize, arity: u32) -> Vec<bool> {
    (0..arity).map(|j| (i >> j) & 1 == 1).collect()
}

/// Renders the tuple at index `i` as a string with `x₁` first, e.g. `"100"`.
pub fn tuple_string(i: usize, arity: u32) -> String {
    (0..arity)
        .map(|j| if (i >> j) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Parses a tuple string written with `x₁` first.
pub fn parse_tuple(s: &str) -> Option<usize> {
    s.chars()
        .enumerate()
        .try_fold(0usize, |acc, (j, c)| match c {
            '0' => Some(acc),
            '1' => Some(acc | 1 << j),
            _ => None,
        })
}

/// Compares tuples lexicographically with `x₁` as the leading coordinate.
pub fn tuple_lex_cmp(a: usize, b: usize, arity: u32) -> std::cmp::Ordering {
    let reverse = |i: usize| (0..arity).fold(0usize, |acc, j| acc << 1 | (i >> j) & 1);
    reverse(a).cmp(&reverse(b))
}
