//! Words over small alphabets and the sequence operations built on them:
//! arithmetic-progression subsequences, cyclic shifts, circular sequences,
//! wreathing and covering subsequences.
//!
//! Public positions are 1-based throughout; storage is a plain `Vec<u8>`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest alphabet a [`Word`] can carry.
pub const MAX_ALPHABET: usize = 256;

/// One letter, encoded 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Symbol(pub u8);

impl Symbol {
    pub fn value(self) -> usize {
        self.0 as usize
    }
}

/// A finite sequence of symbols, every one of them below `alphabet_size`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet_size: usize,
}

impl Word {
    pub fn new(symbols: Vec<u8>, alphabet_size: usize) -> Result<Self> {
        if alphabet_size == 0 || alphabet_size > MAX_ALPHABET {
            return Err(Error::arg(format!(
                "alphabet size must be in 1..={MAX_ALPHABET}, got {alphabet_size}"
            )));
        }
        if let Some((i, &s)) = symbols.iter().enumerate().find(|(_, &s)| s as usize >= alphabet_size) {
            return Err(Error::arg(format!(
                "symbol {s} at position {} is outside an alphabet of size {alphabet_size}",
                i + 1
            )));
        }
        Ok(Word { symbols, alphabet_size })
    }

    /// Builds a word whose alphabet is the smallest one containing every symbol.
    pub fn from_symbols(symbols: Vec<u8>) -> Self {
        let alphabet_size = symbols.iter().map(|&s| s as usize + 1).max().unwrap_or(1);
        Word { symbols, alphabet_size }
    }

    pub fn empty(alphabet_size: usize) -> Self {
        Word {
            symbols: Vec::new(),
            alphabet_size: alphabet_size.clamp(1, MAX_ALPHABET),
        }
    }

    /// Unchecked constructor for internal producers that already guarantee
    /// the alphabet invariant.
    pub(crate) fn from_raw(symbols: Vec<u8>, alphabet_size: usize) -> Self {
        debug_assert!(symbols.iter().all(|&s| (s as usize) < alphabet_size));
        Word { symbols, alphabet_size }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.symbols
    }

    /// Symbol at 1-based position `i`.
    pub fn get(&self, i: usize) -> Option<Symbol> {
        i.checked_sub(1).and_then(|i| self.symbols.get(i)).map(|&s| Symbol(s))
    }

    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.symbols.iter().map(|&s| Symbol(s))
    }

    /// The factor `w(i, j)` of consecutive terms, 1-based and inclusive.
    pub fn factor(&self, i: usize, j: usize) -> Result<Word> {
        if i == 0 || i > j || j > self.len() {
            return Err(Error::arg(format!(
                "factor ({i}, {j}) out of range for a word of length {}",
                self.len()
            )));
        }
        Ok(Word::from_raw(self.symbols[i - 1..j].to_vec(), self.alphabet_size))
    }

    pub fn prefix(&self, n: usize) -> Word {
        let n = n.min(self.len());
        Word::from_raw(self.symbols[..n].to_vec(), self.alphabet_size)
    }

    /// Concatenation; the result lives over the larger of the two alphabets.
    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Word::from_raw(symbols, self.alphabet_size.max(other.alphabet_size))
    }

    /// Re-declares the alphabet, which must still contain every symbol.
    pub fn with_alphabet(self, alphabet_size: usize) -> Result<Word> {
        Word::new(self.symbols, alphabet_size)
    }

    /// Adds `offset` to every symbol, widening the alphabet accordingly.
    pub fn relabel_offset(&self, offset: u8) -> Result<Word> {
        let alphabet_size = self.alphabet_size + offset as usize;
        if alphabet_size > MAX_ALPHABET {
            return Err(Error::arg("offset pushes the alphabet past 256 symbols"));
        }
        Ok(Word::from_raw(
            self.symbols.iter().map(|&s| s + offset).collect(),
            alphabet_size,
        ))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[{}](", self.alphabet_size)?;
        if self.alphabet_size <= 10 {
            for &s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (i, &s) in self.symbols.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{s}")?;
            }
        }
        f.write_str(")")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render(self, 0))
    }
}

/// The terms `x_start x_{start+d} x_{start+2d} ...` up to the end of `w`.
pub fn d_subsequence(w: &Word, d: usize, start: usize) -> Result<Word> {
    if d == 0 {
        return Err(Error::arg("step d must be at least 1"));
    }
    if start == 0 || start > w.len() {
        return Err(Error::arg(format!(
            "start {start} out of range for a word of length {}",
            w.len()
        )));
    }
    Ok(Word::from_raw(
        w.as_slice()[start - 1..].iter().step_by(d).copied().collect(),
        w.alphabet_size(),
    ))
}

/// The `i`-shift: the first `i` terms moved to the end.
pub fn shift(w: &Word, i: usize) -> Result<Word> {
    if i > w.len() {
        return Err(Error::arg(format!("shift {i} exceeds word length {}", w.len())));
    }
    let mut symbols = Vec::with_capacity(w.len());
    symbols.extend_from_slice(&w.as_slice()[i..]);
    symbols.extend_from_slice(&w.as_slice()[..i]);
    Ok(Word::from_raw(symbols, w.alphabet_size()))
}

/// The circular sequence of order `|phi|`: all rotations of `phi` in order,
/// the whole cycle repeated `t` times.
pub fn circular(phi: &Word, t: usize) -> Result<Word> {
    if phi.is_empty() || t == 0 {
        return Err(Error::arg("circular sequence needs a non-empty word and t >= 1"));
    }
    let l = phi.len();
    Ok(circular_prefix(phi, l * l * t))
}

/// First `n` terms of the infinite periodic circular stream over `phi`.
pub fn circular_prefix(phi: &Word, n: usize) -> Word {
    let l = phi.len();
    if l == 0 || n == 0 {
        return Word::empty(phi.alphabet_size());
    }
    let src = phi.as_slice();
    let symbols = (0..n)
        .map(|p| {
            let block = p / l;
            let r = p % l;
            src[(block % l + r) % l]
        })
        .collect();
    Word::from_raw(symbols, phi.alphabet_size())
}

/// Wreathing of order `l`: alternating `l`-term blocks of `base` and `wrap`.
pub fn wreath(base: &Word, wrap: &Word, l: usize) -> Result<Word> {
    if l == 0 {
        return Err(Error::arg("wreath order must be at least 1"));
    }
    if base.len() != wrap.len() {
        return Err(Error::arg(format!(
            "base and wrap lengths differ ({} vs {})",
            base.len(),
            wrap.len()
        )));
    }
    if !base.len().is_multiple_of(l) {
        return Err(Error::arg(format!("order {l} does not divide length {}", base.len())));
    }
    let mut symbols = Vec::with_capacity(2 * base.len());
    for (b, w) in base.as_slice().chunks_exact(l).zip(wrap.as_slice().chunks_exact(l)) {
        symbols.extend_from_slice(b);
        symbols.extend_from_slice(w);
    }
    Ok(Word::from_raw(symbols, base.alphabet_size().max(wrap.alphabet_size())))
}

/// A covering subsequence together with the 0-based indices of its first
/// and last blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covering {
    pub word: Word,
    pub first_block: usize,
    pub last_block: usize,
}

/// The run of whole `block_size` blocks covering positions `from..=to`.
pub fn covering_subsequence(w: &Word, block_size: usize, from: usize, to: usize) -> Result<Covering> {
    if block_size == 0 || !w.len().is_multiple_of(block_size) {
        return Err(Error::arg(format!(
            "block size {block_size} does not divide length {}",
            w.len()
        )));
    }
    if from == 0 || from > to || to > w.len() {
        return Err(Error::arg(format!(
            "range ({from}, {to}) out of bounds for length {}",
            w.len()
        )));
    }
    let first_block = (from - 1) / block_size;
    let last_block = (to - 1) / block_size;
    let word = w.factor(first_block * block_size + 1, (last_block + 1) * block_size)?;
    Ok(Covering {
        word,
        first_block,
        last_block,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_symbols(s.bytes().map(|b| b - b'0').collect())
    }

    fn letters(s: &str) -> Word {
        Word::from_symbols(s.bytes().map(|b| b - b'a').collect())
    }

    #[test]
    fn d_subsequence_examples() {
        assert_eq!(
            d_subsequence(&letters("abdcbc"), 2, 2).unwrap(),
            letters("bcc").with_alphabet(4).unwrap()
        );
        let x = letters("abcadb");
        assert_eq!(d_subsequence(&x, 3, 1).unwrap().as_slice(), &[0, 0]);
        assert_eq!(d_subsequence(&x, 1, 1).unwrap(), x);
        assert!(d_subsequence(&x, 1, 0).is_err());
        assert!(d_subsequence(&x, 1, 7).is_err());
        assert!(d_subsequence(&x, 0, 1).is_err());
    }

    #[test]
    fn shift_examples() {
        let phi = w("5678");
        assert_eq!(shift(&phi, 1).unwrap().as_slice(), w("6785").as_slice());
        assert_eq!(shift(&phi, 3).unwrap().as_slice(), w("8567").as_slice());
        assert_eq!(shift(&phi, 0).unwrap(), phi);
        assert_eq!(shift(&phi, 4).unwrap(), phi);
        assert!(shift(&phi, 5).is_err());
    }

    #[test]
    fn circular_examples() {
        assert_eq!(
            circular(&w("5678"), 1).unwrap().as_slice(),
            w("5678678578568567").as_slice()
        );
        assert_eq!(circular(&w("0"), 3).unwrap().as_slice(), &[0, 0, 0]);
        assert_eq!(circular(&w("456"), 1).unwrap().as_slice(), w("456564645").as_slice());
        assert_eq!(circular(&w("456"), 2).unwrap().len(), 18);
        assert!(circular(&w("456"), 0).is_err());
    }

    #[test]
    fn circular_prefix_examples() {
        assert_eq!(circular_prefix(&w("456"), 3).as_slice(), w("456").as_slice());
        assert_eq!(circular_prefix(&w("5678"), 16), circular(&w("5678"), 1).unwrap());
        assert!(circular_prefix(&w("5678"), 0).is_empty());
        let full = circular(&w("456"), 4).unwrap();
        for n in 0..=full.len() {
            assert_eq!(circular_prefix(&w("456"), n), full.prefix(n));
        }
    }

    #[test]
    fn circular_blocks_are_shifts() {
        let phi = w("0123");
        let z = circular(&phi, 3).unwrap();
        for (j, block) in z.as_slice().chunks(4).enumerate() {
            assert_eq!(block, shift(&phi, j % 4).unwrap().as_slice());
        }
    }

    #[test]
    fn wreath_examples() {
        let base = w("1234214312432134");
        let wrap = w("5678678578568567");
        assert_eq!(
            wreath(&base, &wrap, 4).unwrap().as_slice(),
            w("12345678214367851243785621348567").as_slice()
        );
        assert_eq!(wreath(&letters("abc"), &letters("xyz"), 3).unwrap().len(), 6);
        assert_eq!(
            wreath(&w("123"), &w("456"), 1).unwrap().as_slice(),
            w("142536").as_slice()
        );
        assert!(wreath(&w("12"), &w("456"), 1).is_err());
        assert!(wreath(&w("1234"), &w("5678"), 3).is_err());
    }

    #[test]
    fn covering_examples() {
        let x = w("012345678");
        let c = covering_subsequence(&x, 3, 4, 4).unwrap();
        assert_eq!(
            (c.word.as_slice(), c.first_block, c.last_block),
            (&[3u8, 4, 5][..], 1, 1)
        );
        let y = w("01234567");
        let c = covering_subsequence(&y, 4, 3, 6).unwrap();
        assert_eq!((c.word, c.first_block, c.last_block), (y.clone(), 0, 1));
        let c = covering_subsequence(&x, 3, 1, 9).unwrap();
        assert_eq!((c.word, c.first_block, c.last_block), (x.clone(), 0, 2));
        assert!(covering_subsequence(&x, 4, 1, 2).is_err());
        assert!(covering_subsequence(&x, 3, 5, 4).is_err());
        assert!(covering_subsequence(&x, 3, 1, 10).is_err());
    }

    #[test]
    fn new_rejects_out_of_alphabet() {
        assert!(Word::new(vec![0, 3], 3).is_err());
        assert!(Word::new(vec![], 0).is_err());
        assert!(Word::new(vec![], 1).unwrap().is_empty());
    }
}
