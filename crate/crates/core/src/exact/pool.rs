//! Signal pools and the preorder their value patterns induce on the cube.
//!
//! With every monotone function free, a function `g` can be produced from a
//! pool of signals at zero cost iff it is a monotone function of those
//! signals, i.e. iff `pattern(α) ≤ pattern(β)` implies `g(α) ≤ g(β)`.
//! Everything here works on tables packed into a `u64` (arity ≤ 6).

use crate::bfcore::TruthTable;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Largest arity a pool can be built over.
pub const MAX_POOL_ARITY: u32 = 6;
/// Largest number of signals in a pool (patterns are packed into a word).
pub const MAX_POOL_SIGNALS: usize = 20;

/// A list of available signals over `n` variables, starting with the `n`
/// projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternPool {
    arity: u32,
    signals: Vec<u64>,
}

impl PatternPool {
    /// The pool of projections `x₁, …, xₙ`.
    pub fn new(arity: u32) -> Result<Self> {
        if arity > MAX_POOL_ARITY {
            return Err(Error::ResourceLimit {
                what: "pool arity",
                value: arity as u64,
                limit: MAX_POOL_ARITY as u64,
            });
        }
        let signals = (0..arity).map(|j| projection_word(arity, j)).collect();
        Ok(PatternPool { arity, signals })
    }

    /// Projections followed by `extra`.
    pub fn with_signals(arity: u32, extra: &[TruthTable]) -> Result<Self> {
        let mut pool = Self::new(arity)?;
        for t in extra {
            pool.push(t)?;
        }
        Ok(pool)
    }

    pub fn push(&mut self, signal: &TruthTable) -> Result<()> {
        let word = self.word_of(signal)?;
        self.push_word(word)
    }

    pub(crate) fn push_word(&mut self, word: u64) -> Result<()> {
        if self.signals.len() >= MAX_POOL_SIGNALS {
            return Err(Error::ResourceLimit {
                what: "pool signals",
                value: self.signals.len() as u64 + 1,
                limit: MAX_POOL_SIGNALS as u64,
            });
        }
        self.signals.push(word);
        Ok(())
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.signals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signals.is_empty()
    }

    pub fn signals(&self) -> Vec<TruthTable> {
        self.signals
            .iter()
            .map(|&w| TruthTable::from_word(self.arity, w).unwrap())
            .collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.signals
    }

    fn points(&self) -> usize {
        1 << self.arity
    }

    /// Values of all signals at `α`, signal `k` in bit `k`.
    pub fn pattern(&self, alpha: usize) -> u64 {
        self.signals
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &s)| acc | ((s >> alpha) & 1) << k)
    }

    /// For each `α`, the set of `β` with `pattern(α) ≤ pattern(β)`.
    ///
    /// Two pools with equal signatures admit the same monotone signals and
    /// extend identically, so the signature is the memoization key of the
    /// exact search.
    pub fn signature(&self) -> Vec<u64> {
        let patterns: Vec<u64> = (0..self.points()).map(|a| self.pattern(a)).collect();
        patterns
            .iter()
            .map(|&pa| {
                patterns
                    .iter()
                    .enumerate()
                    .filter(|(_, &pb)| pa & !pb == 0)
                    .fold(0u64, |acc, (b, _)| acc | 1 << b)
            })
            .collect()
    }

    fn word_of(&self, g: &TruthTable) -> Result<u64> {
        if g.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: g.arity(),
            });
        }
        Ok(g.to_word().expect("pool arity is at most 6"))
    }

    /// True iff `g` is a monotone function of the pool signals.
    pub fn monotone_expressible(&self, g: &TruthTable) -> Result<bool> {
        Ok(expressible(&self.signature(), self.word_of(g)?))
    }

    /// The least monotone table `T` over the pool signals with
    /// `T(pattern(α)) = g(α)`: `T(p) = 1` iff some `α` with `g(α) = 1` has
    /// `pattern(α) ≤ p`.
    pub fn monotone_extension(&self, g: &TruthTable) -> Result<TruthTable> {
        let word = self.word_of(g)?;
        if !expressible(&self.signature(), word) {
            return Err(Error::NotExpressible);
        }
        let ones: Vec<u64> = (0..self.points())
            .filter(|&a| (word >> a) & 1 == 1)
            .map(|a| self.pattern(a))
            .collect();
        let k = self.signals.len() as u32;
        Ok(TruthTable::from_index_fn(k, |p| {
            ones.iter().any(|&q| q & !(p as u64) == 0)
        }))
    }

    /// All functions of the `n` variables that are monotone functions of the
    /// pool, as order-preserving 0/1 labelings of the distinct patterns.
    /// Sorted by table word.
    pub fn enumerate_monotone_signals(&self, limits: &Limits) -> Result<Vec<TruthTable>> {
        let words = upsets(&self.signature(), limits.pattern_limit)?;
        Ok(words
            .into_iter()
            .map(|w| TruthTable::from_word(self.arity, w).unwrap())
            .collect())
    }
}

pub(crate) fn projection_word(arity: u32, var: u32) -> u64 {
    (0..1usize << arity)
        .filter(|a| (a >> var) & 1 == 1)
        .fold(0, |acc, a| acc | 1 << a)
}

/// `g` respects the preorder given by `signature`.
#[inline]
pub(crate) fn expressible(signature: &[u64], g: u64) -> bool {
    let mut rest = g;
    while rest != 0 {
        let a = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if signature[a] & !g != 0 {
            return false;
        }
    }
    true
}

/// Every up-closed set of the preorder, sorted.
pub(crate) fn upsets(signature: &[u64], pattern_limit: usize) -> Result<Vec<u64>> {
    // Equivalence classes: α ~ β iff each is above the other.
    let mut classes: Vec<(u64, u64)> = Vec::new(); // (members, up-set)
    let mut covered = 0u64;
    for a in 0..signature.len() {
        if (covered >> a) & 1 == 1 {
            continue;
        }
        let members = (0..signature.len())
            .filter(|&b| (signature[a] >> b) & 1 == 1 && (signature[b] >> a) & 1 == 1)
            .fold(0u64, |acc, b| acc | 1 << b);
        covered |= members;
        classes.push((members, signature[a]));
    }
    if classes.len() > pattern_limit {
        return Err(Error::ResourceLimit {
            what: "distinct patterns",
            value: classes.len() as u64,
            limit: pattern_limit as u64,
        });
    }
    // Strictly higher classes have strictly smaller up-sets, so they are
    // decided first.
    classes.sort_by_key(|&(members, up)| (up.count_ones(), members));

    fn go(classes: &[(u64, u64)], chosen: u64, out: &mut Vec<u64>) {
        let Some((&(members, up), rest)) = classes.split_first() else {
            out.push(chosen);
            return;
        };
        go(rest, chosen, out);
        if (up & !members) & !chosen == 0 {
            go(rest, chosen | members, out);
        }
    }

    let mut out = Vec::new();
    go(&classes, 0, &mut out);
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(bits: &str) -> TruthTable {
        TruthTable::from_bit_string(bits).unwrap()
    }

    #[test]
    fn expressibility_examples() {
        let x = PatternPool::new(1).unwrap();
        assert!(!x.monotone_expressible(&t("10")).unwrap());

        let xy = PatternPool::new(2).unwrap();
        assert!(xy.monotone_expressible(&t("0111")).unwrap());

        let both = PatternPool::with_signals(1, &[t("10")]).unwrap();
        for w in 0..4 {
            let g = TruthTable::from_word(1, w).unwrap();
            assert!(both.monotone_expressible(&g).unwrap());
        }
    }

    #[test]
    fn projections_only_means_monotone() {
        let pool = PatternPool::new(3).unwrap();
        for w in 0..256u64 {
            let g = TruthTable::from_word(3, w).unwrap();
            assert_eq!(pool.monotone_expressible(&g).unwrap(), g.is_monotone());
        }
    }

    #[test]
    fn extension_examples() {
        let xy = PatternPool::new(2).unwrap();
        assert_eq!(xy.monotone_extension(&t("0001")).unwrap(), t("0001"));
        assert_eq!(
            xy.monotone_extension(&TruthTable::constant(2, false))
                .unwrap(),
            TruthTable::constant(2, false)
        );
        assert_eq!(
            xy.monotone_extension(&t("1000")),
            Err(Error::NotExpressible)
        );

        // pool {x, z = ¬x}; ¬x through the pool is the projection onto z
        let pool = PatternPool::with_signals(1, &[t("10")]).unwrap();
        let ext = pool.monotone_extension(&t("10")).unwrap();
        assert_eq!(ext, TruthTable::projection(2, 1));
        // cross-check minimality against every monotone 2-input table
        let patterns = [pool.pattern(0) as usize, pool.pattern(1) as usize];
        let reproducing: Vec<TruthTable> = (0..16u64)
            .map(|w| TruthTable::from_word(2, w).unwrap())
            .filter(|m| m.is_monotone())
            .filter(|m| m.get(patterns[0]) && !m.get(patterns[1]))
            .collect();
        assert!(reproducing.contains(&ext));
        for m in &reproducing {
            assert_eq!(ext.and(m), ext, "extension is below {m:?}");
        }
    }

    #[test]
    fn enumeration_examples() {
        let limits = Limits::default();
        let x = PatternPool::new(1).unwrap();
        let got: Vec<String> = x
            .enumerate_monotone_signals(&limits)
            .unwrap()
            .iter()
            .map(TruthTable::bit_string)
            .collect();
        assert_eq!(got, ["00", "01", "11"]);

        let xy = PatternPool::new(2).unwrap();
        let got = xy.enumerate_monotone_signals(&limits).unwrap();
        let filtered: Vec<TruthTable> = (0..16u64)
            .map(|w| TruthTable::from_word(2, w).unwrap())
            .filter(TruthTable::is_monotone)
            .collect();
        assert_eq!(got.len(), 6);
        assert_eq!(got, filtered);

        let both = PatternPool::with_signals(1, &[t("10")]).unwrap();
        assert_eq!(both.enumerate_monotone_signals(&limits).unwrap().len(), 4);
    }

    #[test]
    fn dedekind_counts() {
        let limits = Limits::default();
        let counts: Vec<usize> = (0..=4)
            .map(|n| {
                PatternPool::new(n)
                    .unwrap()
                    .enumerate_monotone_signals(&limits)
                    .unwrap()
                    .len()
            })
            .collect();
        assert_eq!(counts, [2, 3, 6, 20, 168]);
    }

    #[test]
    fn pattern_limit_is_enforced() {
        let limits = Limits {
            pattern_limit: 4,
            ..Limits::default()
        };
        let err = PatternPool::new(3)
            .unwrap()
            .enumerate_monotone_signals(&limits);
        assert!(matches!(err, Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn pool_guards() {
        assert!(PatternPool::new(7).is_err());
        let mut p = PatternPool::new(2).unwrap();
        assert!(p.push(&t("10")).is_err());
        assert!(p.monotone_expressible(&t("10")).is_err());
    }
}
