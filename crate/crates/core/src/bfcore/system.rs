use std::fmt::Write as _;

use crate::bfcore::TruthTable;
use crate::error::{Error, Result};

/// A nonempty ordered list of same-arity Boolean functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FunctionSystem {
    members: Vec<TruthTable>,
}

impl FunctionSystem {
    pub fn new(members: Vec<TruthTable>) -> Result<Self> {
        let first = members.first().ok_or(Error::EmptySystem)?;
        let arity = first.arity();
        if let Some(bad) = members.iter().find(|f| f.arity() != arity) {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: bad.arity(),
            });
        }
        Ok(FunctionSystem { members })
    }

    pub fn single(f: TruthTable) -> Self {
        FunctionSystem { members: vec![f] }
    }

    pub fn arity(&self) -> u32 {
        self.members[0].arity()
    }

    pub fn members(&self) -> &[TruthTable] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True iff some member falls from 1 at index `a` to 0 at index `b`.
    /// No comparability check is made here; see [`crate::is_jump`].
    #[inline]
    pub(crate) fn drops(&self, a: usize, b: usize) -> bool {
        self.members.iter().any(|f| f.get(a) && !f.get(b))
    }

    pub fn is_monotone(&self) -> bool {
        self.members.iter().all(TruthTable::is_monotone)
    }
}

impl From<TruthTable> for FunctionSystem {
    fn from(f: TruthTable) -> Self {
        FunctionSystem::single(f)
    }
}

/// A named function read from or written to a function file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedFunction {
    pub name: String,
    pub table: TruthTable,
}

/// Parses the line format `name <arity> 0x<hex>`; `#` starts a comment.
pub fn parse_functions(text: &str) -> Result<Vec<NamedFunction>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [name, arity, hex] = fields[..] else {
            return Err(Error::parse(
                line,
                format!("expected `name arity 0xhex`, got {} field(s)", fields.len()),
            ));
        };
        let arity: u32 = arity
            .parse()
            .map_err(|_| Error::parse(line, format!("bad arity {arity:?}")))?;
        let table = TruthTable::from_hex(arity, hex).map_err(|m| Error::parse(line, m))?;
        out.push(NamedFunction {
            name: name.to_string(),
            table,
        });
    }
    Ok(out)
}

/// Parses a function file into a system; fails on an empty file or mixed arities.
pub fn parse_system(text: &str) -> Result<FunctionSystem> {
    let funcs = parse_functions(text)?;
    if funcs.is_empty() {
        return Err(Error::parse(0, "no functions listed"));
    }
    FunctionSystem::new(funcs.into_iter().map(|f| f.table).collect())
}

pub fn write_functions(funcs: &[NamedFunction]) -> String {
    let mut out = String::new();
    for f in funcs {
        writeln!(out, "{} {} {}", f.name, f.table.arity(), f.table.to_hex()).unwrap();
    }
    out
}
