//! Morphisms on words, the published uniform morphisms, the hexagonal
//! morphism over the marked alphabet, the 4-letter block morphism, and a
//! ternary generator below the `7/4` repetition threshold.

mod dejean;
mod kappa;
mod lambda;
mod mu;

pub use dejean::{dejean_word, DEJEAN_THRESHOLD};
pub use kappa::{kappa, kappa_iterate, kappa_iterate_capped, kappa_morphism, project, AuxSymbol, AuxWord, Mark};
pub use lambda::{lambda_iterate, lambda_iterate_capped, lambda_morphism};
pub use mu::{builtin_mu, mu_self_check, MU_WIDTHS};

use crate::error::{Error, Result};
use crate::text;
use crate::word::{Word, MAX_ALPHABET};

/// Default bound on the length of iterated words.
pub const DEFAULT_CAP: usize = 10_000_000;

/// A map from each domain symbol to an image word; all images share one
/// codomain alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    images: Vec<Word>,
    codomain_size: usize,
    uniform_width: Option<usize>,
}

impl Morphism {
    /// Images may be given over different alphabets; they are widened to the
    /// largest. `codomain_size`, when given, must contain every image.
    pub fn new(images: Vec<Word>, codomain_size: Option<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::arg("a morphism needs at least one image"));
        }
        let widest = images.iter().map(Word::alphabet_size).max().unwrap_or(1);
        let codomain_size = codomain_size.unwrap_or(widest);
        let images = images
            .into_iter()
            .map(|w| w.with_alphabet(codomain_size))
            .collect::<Result<Vec<_>>>()?;
        let first = images[0].len();
        let uniform_width = (first > 0 && images.iter().all(|w| w.len() == first)).then_some(first);
        Ok(Morphism {
            images,
            codomain_size,
            uniform_width,
        })
    }

    /// Uniform morphism from raw image rows.
    pub fn from_rows(rows: &[&[u8]], codomain_size: usize) -> Result<Self> {
        let images = rows
            .iter()
            .map(|r| Word::new(r.to_vec(), codomain_size))
            .collect::<Result<Vec<_>>>()?;
        let m = Morphism::new(images, Some(codomain_size))?;
        if m.uniform_width.is_none() {
            return Err(Error::arg("image rows differ in length"));
        }
        Ok(m)
    }

    pub fn domain_size(&self) -> usize {
        self.images.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    pub fn uniform_width(&self) -> Option<usize> {
        self.uniform_width
    }

    pub fn image(&self, symbol: u8) -> Option<&Word> {
        self.images.get(symbol as usize)
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image rows as slices, in domain order.
    pub fn rows(&self) -> Vec<&[u8]> {
        self.images.iter().map(Word::as_slice).collect()
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if let Some((i, s)) = w.iter().enumerate().find(|(_, s)| s.value() >= self.images.len()) {
            return Err(Error::arg(format!(
                "symbol {} at position {} is outside the domain of size {}",
                s.0,
                i + 1,
                self.images.len()
            )));
        }
        Ok(Word::from_raw(self.apply_raw(w.as_slice()), self.codomain_size))
    }

    pub(crate) fn apply_raw(&self, s: &[u8]) -> Vec<u8> {
        let mut out = Vec::with_capacity(s.len() * self.uniform_width.unwrap_or(1));
        for &c in s {
            out.extend_from_slice(self.images[c as usize].as_slice());
        }
        out
    }

    /// `m^t(seed)`, refusing to materialise more than `cap` symbols.
    pub fn iterate(&self, seed: u8, t: u32, cap: usize) -> Result<Word> {
        if self.codomain_size > self.images.len() {
            return Err(Error::arg("iteration needs codomain within the domain"));
        }
        if seed as usize >= self.images.len() {
            return Err(Error::arg("seed outside the domain"));
        }
        let mut cur = vec![seed];
        for _ in 0..t {
            let next_len: u128 = cur.iter().map(|&c| self.images[c as usize].len() as u128).sum();
            if next_len > cap as u128 {
                let projected = match self.uniform_width {
                    Some(w) => (w as u128).checked_pow(t).unwrap_or(u128::MAX),
                    None => next_len,
                };
                return Err(Error::Resource {
                    what: "iterated morphism",
                    requested: projected,
                    cap,
                });
            }
            cur = self.apply_raw(&cur);
        }
        Ok(Word::from_raw(cur, self.codomain_size.max(self.images.len())))
    }
}

/// `m(w)`.
pub fn apply(m: &Morphism, w: &Word) -> Result<Word> {
    m.apply(w)
}

/// Renders a uniform morphism as a header line `k width alphabet_size`
/// followed by one image per line.
pub fn write_morphism(k: usize, m: &Morphism) -> String {
    let mut out = format!("{} {} {}\n", k, m.uniform_width().unwrap_or(0), m.codomain_size());
    for img in m.images() {
        out.push_str(&text::render(img, 0));
        out.push('\n');
    }
    out
}

/// Inverse of [`write_morphism`]; returns `(k, morphism)`.
pub fn parse_morphism(input: &str) -> Result<(usize, Morphism)> {
    let mut lines = input.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        column: 1,
        message: "missing header `k width alphabet_size`".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let field = |i: usize| -> Result<usize> {
        fields.get(i).and_then(|f| f.parse().ok()).ok_or_else(|| Error::Parse {
            line: hl + 1,
            column: 1,
            message: "header must be three integers `k width alphabet_size`".into(),
        })
    };
    if fields.len() != 3 {
        return Err(Error::Parse {
            line: hl + 1,
            column: 1,
            message: "header must be three integers `k width alphabet_size`".into(),
        });
    }
    let (k, width, alphabet) = (field(0)?, field(1)?, field(2)?);
    if alphabet == 0 || alphabet > MAX_ALPHABET {
        return Err(Error::Parse {
            line: hl + 1,
            column: 1,
            message: format!("alphabet size {alphabet} out of range"),
        });
    }
    let fmt = if alphabet <= 10 {
        text::WordFormat::Digits { offset: 0 }
    } else {
        text::WordFormat::Integers { offset: 0 }
    };
    let mut images = Vec::new();
    for (i, l) in lines {
        let w = text::parse_word(l.trim(), i + 1, fmt, Some(alphabet))?;
        if width != 0 && w.len() != width {
            return Err(Error::Parse {
                line: i + 1,
                column: 1,
                message: format!("image has length {}, header says {width}", w.len()),
            });
        }
        images.push(w);
    }
    Ok((k, Morphism::new(images, Some(alphabet))?))
}
