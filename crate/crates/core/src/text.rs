//! Plain-text word format: one word per line. Alphabets that fit in single
//! digits (after the display offset) render as digit strings, larger ones
//! as whitespace-separated integers.

use crate::error::{Error, Result};
use crate::word::{Word, MAX_ALPHABET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum WordFormat {
    /// Digit strings, single-character tokens, letters `a..z`, or integer
    /// tokens, decided per line.
    #[default]
    Auto,
    /// One digit per symbol, shifted down by `offset`.
    Digits { offset: u8 },
    /// `a` is symbol 0.
    Letters,
    /// Whitespace-separated integers, shifted down by `offset`.
    Integers { offset: u8 },
}

pub fn render(w: &Word, offset: u8) -> String {
    if w.alphabet_size() + offset as usize <= 10 {
        w.as_slice().iter().map(|&s| (b'0' + s + offset) as char).collect()
    } else {
        w.as_slice()
            .iter()
            .map(|&s| (s as usize + offset as usize).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses a single line. `line_no` only feeds error messages. When
/// `alphabet` is `None` the smallest alphabet containing every symbol is
/// used.
pub fn parse_word(line: &str, line_no: usize, fmt: WordFormat, alphabet: Option<usize>) -> Result<Word> {
    let fmt = match fmt {
        WordFormat::Auto => detect(line, line_no)?,
        f => f,
    };
    let mut symbols = Vec::new();
    match fmt {
        WordFormat::Digits { offset } => {
            for (col, c) in line.chars().enumerate() {
                if c.is_whitespace() {
                    continue;
                }
                let v = c
                    .to_digit(10)
                    .ok_or_else(|| err(line_no, col + 1, format!("expected a digit, found {c:?}")))?;
                let v = v.checked_sub(offset as u32).ok_or_else(|| {
                    err(
                        line_no,
                        col + 1,
                        format!("digit {c} is below the display offset {offset}"),
                    )
                })?;
                symbols.push(v as u8);
            }
        }
        WordFormat::Letters => {
            for (col, c) in line.chars().enumerate() {
                if c.is_whitespace() {
                    continue;
                }
                if !c.is_ascii_lowercase() {
                    return Err(err(line_no, col + 1, format!("expected a letter a-z, found {c:?}")));
                }
                symbols.push(c as u8 - b'a');
            }
        }
        WordFormat::Integers { offset } => {
            let mut col = 0;
            for tok in line.split_whitespace() {
                let at = line[col..].find(tok).map_or(col, |i| col + i);
                col = at + tok.len();
                let column = line[..at].chars().count() + 1;
                let v: usize = tok
                    .parse()
                    .map_err(|_| err(line_no, column, format!("expected an integer, found {tok:?}")))?;
                let v = v
                    .checked_sub(offset as usize)
                    .filter(|&v| v < MAX_ALPHABET)
                    .ok_or_else(|| err(line_no, column, format!("symbol {tok} out of range")))?;
                symbols.push(v as u8);
            }
        }
        WordFormat::Auto => unreachable!(),
    }
    let alphabet = alphabet.unwrap_or_else(|| symbols.iter().map(|&s| s as usize + 1).max().unwrap_or(1));
    if let Some(pos) = symbols.iter().position(|&s| s as usize >= alphabet) {
        return Err(err(
            line_no,
            column_of_symbol(line, pos),
            format!("symbol outside an alphabet of size {alphabet}"),
        ));
    }
    Word::new(symbols, alphabet)
}

fn column_of_symbol(line: &str, index: usize) -> usize {
    line.char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .nth(index)
        .map_or(1, |(i, _)| line[..i].chars().count() + 1)
}

fn detect(line: &str, line_no: usize) -> Result<WordFormat> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let all = |pred: fn(char) -> bool| line.chars().filter(|c| !c.is_whitespace()).all(pred);
    if all(|c| c.is_ascii_digit()) {
        if tokens.len() <= 1 || tokens.iter().all(|t| t.len() == 1) {
            Ok(WordFormat::Digits { offset: 0 })
        } else {
            Ok(WordFormat::Integers { offset: 0 })
        }
    } else if all(|c| c.is_ascii_lowercase()) {
        Ok(WordFormat::Letters)
    } else {
        let (col, c) = line
            .chars()
            .enumerate()
            .find(|(_, c)| !c.is_whitespace() && !c.is_ascii_digit() && !c.is_ascii_lowercase())
            .or_else(|| line.chars().enumerate().find(|(_, c)| c.is_ascii_lowercase()))
            .unwrap_or((0, ' '));
        Err(err(line_no, col + 1, format!("unexpected character {c:?}")))
    }
}

/// Parses every non-blank line.
pub fn parse_words(text: &str, fmt: WordFormat, alphabet: Option<usize>) -> Result<Vec<Word>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_word(l, i + 1, fmt, alphabet))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn digits_and_offsets() {
        let w = Word::new(vec![0, 1, 2, 3], 4).unwrap();
        assert_eq!(render(&w, 0), "0123");
        assert_eq!(render(&w, 1), "1234");
        let p = parse_word("1234", 1, WordFormat::Digits { offset: 1 }, Some(4)).unwrap();
        assert_eq!(p, w);
    }

    #[test]
    fn large_alphabets_use_integers() {
        let w = Word::new(vec![0, 11, 3], 12).unwrap();
        assert_eq!(render(&w, 0), "0 11 3");
        assert_eq!(parse_word("0 11 3", 1, WordFormat::Auto, Some(12)).unwrap(), w);
        // Ten symbols with a display offset of one no longer fit in digits.
        let w = Word::new(vec![9], 10).unwrap();
        assert_eq!(render(&w, 0), "9");
        assert_eq!(render(&w, 1), "10");
    }

    #[test]
    fn letters() {
        let w = parse_word("abdcbc", 1, WordFormat::Auto, None).unwrap();
        assert_eq!(w.as_slice(), &[0, 1, 3, 2, 1, 2]);
        assert_eq!(w.alphabet_size(), 4);
    }

    #[test]
    fn errors_name_line_and_column() {
        match parse_word("01x2", 3, WordFormat::Auto, None) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("{other:?}"),
        }
        match parse_word("0129", 1, WordFormat::Digits { offset: 0 }, Some(4)) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 4),
            other => panic!("{other:?}"),
        }
        match parse_words("012\n\n0a", WordFormat::Digits { offset: 0 }, None) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 2)),
            other => panic!("{other:?}"),
        }
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(alpha in 1usize..40, offset in 0u8..2, raw in proptest::collection::vec(any::<u8>(), 0..60)) {
            let symbols: Vec<u8> = raw.iter().map(|&b| b % alpha as u8).collect();
            let w = Word::new(symbols, alpha).unwrap();
            let text = render(&w, offset);
            let fmt = if alpha + offset as usize <= 10 {
                WordFormat::Digits { offset }
            } else {
                WordFormat::Integers { offset }
            };
            prop_assert_eq!(parse_word(&text, 1, fmt, Some(alpha)).unwrap(), w);
        }
    }
}
