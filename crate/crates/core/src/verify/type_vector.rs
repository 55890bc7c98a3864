use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

/// Whether a term of a wreath word comes from the base (`N`) or the wrap (`C`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermType {
    N,
    C,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TypeVector(pub Vec<TermType>);

impl TypeVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when `pattern` (e.g. `"CCNN"`) occurs contiguously.
    pub fn contains(&self, pattern: &str) -> bool {
        let s = self.to_string();
        s.contains(pattern)
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.0 {
            f.write_str(match t {
                TermType::N => "N",
                TermType::C => "C",
            })?;
        }
        Ok(())
    }
}

/// Types of the `length` terms at `start, start + d, …` (1-based) of a
/// wreath word with block size `block`. Position `p` is a base term iff
/// `⌈p / block⌉` is odd.
pub fn type_vector(w: &Word, block: usize, d: usize, start: usize, length: usize) -> Result<TypeVector> {
    if block == 0 || d == 0 {
        return Err(Error::arg("block size and step must be positive"));
    }
    if length == 0 {
        return Ok(TypeVector::default());
    }
    let last = (length - 1)
        .checked_mul(d)
        .and_then(|x| x.checked_add(start))
        .ok_or_else(|| Error::arg("position overflow"))?;
    if start == 0 || last > w.len() {
        return Err(Error::arg(format!(
            "positions {start}..={last} step {d} fall outside a word of length {}",
            w.len()
        )));
    }
    Ok(TypeVector(
        (0..length)
            .map(|i| {
                let p = start + i * d;
                if p.div_ceil(block) % 2 == 1 {
                    TermType::N
                } else {
                    TermType::C
                }
            })
            .collect(),
    ))
}
