//! The hexagonal morphism on the six-letter marked alphabet
//! `{1̄, 1̲, 2̄, 2̲, 3̄, 3̲}` and its projection onto `{1, 2, 3}`.

use std::fmt;

use super::{Morphism, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mark {
    Over,
    Under,
}

/// A letter of `{1, 2, 3}` carrying an over- or under-mark.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AuxSymbol {
    letter: u8,
    mark: Mark,
}

impl AuxSymbol {
    pub fn new(letter: u8, mark: Mark) -> Result<Self> {
        if !(1..=3).contains(&letter) {
            return Err(Error::arg(format!("auxiliary letter must be 1, 2 or 3, got {letter}")));
        }
        Ok(AuxSymbol { letter, mark })
    }

    pub const fn over(letter: u8) -> Self {
        AuxSymbol {
            letter,
            mark: Mark::Over,
        }
    }

    pub const fn under(letter: u8) -> Self {
        AuxSymbol {
            letter,
            mark: Mark::Under,
        }
    }

    pub fn letter(self) -> u8 {
        self.letter
    }

    pub fn mark(self) -> Mark {
        self.mark
    }

    /// All six values, in encoding order.
    pub fn all() -> [AuxSymbol; 6] {
        [
            Self::over(1),
            Self::under(1),
            Self::over(2),
            Self::under(2),
            Self::over(3),
            Self::under(3),
        ]
    }

    /// Dense code `0..6`: `2 * (letter - 1) + (mark == Under)`.
    pub fn code(self) -> u8 {
        2 * (self.letter - 1) + (self.mark == Mark::Under) as u8
    }

    pub fn from_code(c: u8) -> Option<Self> {
        (c < 6).then(|| AuxSymbol {
            letter: c / 2 + 1,
            mark: if c.is_multiple_of(2) { Mark::Over } else { Mark::Under },
        })
    }
}

impl fmt::Display for AuxSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Combining overline / low line.
        let m = match self.mark {
            Mark::Over => '\u{0305}',
            Mark::Under => '\u{0332}',
        };
        write!(f, "{}{}", self.letter, m)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AuxWord(pub Vec<AuxSymbol>);

impl AuxWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Encoded form over the six codes.
    pub fn encode(&self) -> Word {
        Word::from_raw(self.0.iter().map(|a| a.code()).collect(), 6)
    }

    pub fn decode(w: &Word) -> Result<AuxWord> {
        w.iter()
            .map(|s| AuxSymbol::from_code(s.0).ok_or_else(|| Error::arg("code outside 0..6")))
            .collect::<Result<Vec<_>>>()
            .map(AuxWord)
    }
}

impl fmt::Display for AuxWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

const KAPPA: [[AuxSymbol; 3]; 6] = [
    // 1̄ -> 1̄ 2̲ 3̄
    [AuxSymbol::over(1), AuxSymbol::under(2), AuxSymbol::over(3)],
    // 1̲ -> 3̲ 2̄ 1̲
    [AuxSymbol::under(3), AuxSymbol::over(2), AuxSymbol::under(1)],
    // 2̄ -> 2̄ 3̲ 1̄
    [AuxSymbol::over(2), AuxSymbol::under(3), AuxSymbol::over(1)],
    // 2̲ -> 1̲ 3̄ 2̲
    [AuxSymbol::under(1), AuxSymbol::over(3), AuxSymbol::under(2)],
    // 3̄ -> 3̄ 1̲ 2̄
    [AuxSymbol::over(3), AuxSymbol::under(1), AuxSymbol::over(2)],
    // 3̲ -> 2̲ 1̄ 3̲
    [AuxSymbol::under(2), AuxSymbol::over(1), AuxSymbol::under(3)],
];

pub fn kappa(a: AuxSymbol) -> AuxWord {
    AuxWord(KAPPA[a.code() as usize].to_vec())
}

/// The hexagonal morphism on the dense codes of [`AuxSymbol::code`].
pub fn kappa_morphism() -> Morphism {
    let rows: Vec<Vec<u8>> = KAPPA.iter().map(|img| img.iter().map(|a| a.code()).collect()).collect();
    let refs: Vec<&[u8]> = rows.iter().map(Vec::as_slice).collect();
    Morphism::from_rows(&refs, 6).expect("static table")
}

/// `κ^t(1̄)`, of length `3^t`.
pub fn kappa_iterate(t: u32) -> Result<AuxWord> {
    kappa_iterate_capped(t, DEFAULT_CAP)
}

pub fn kappa_iterate_capped(t: u32, cap: usize) -> Result<AuxWord> {
    let w = kappa_morphism().iterate(AuxSymbol::over(1).code(), t, cap)?;
    AuxWord::decode(&w)
}

/// Erases marks; the result is over `{1, 2, 3}`, stored 0-based.
pub fn project(aw: &AuxWord) -> Word {
    Word::from_raw(aw.0.iter().map(|a| a.letter - 1).collect(), 3)
}
