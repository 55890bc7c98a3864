//! Sequence factories: uniform morphisms applied to `7/4⁺`-free ternary
//! words, and the two wreath constructions over 6 and 8 symbols.
//!
//! Wreath words are stored 0-based; print them with display offset
//! [`WREATH_DISPLAY_OFFSET`] to get the `1..=6` / `1..=8` labels.

use crate::error::{Error, Result};
use crate::morphisms::{builtin_mu, dejean_word, kappa_iterate_capped, lambda_iterate_capped, project, DEFAULT_CAP};
use crate::word::{circular_prefix, wreath, Word};

pub const WREATH_DISPLAY_OFFSET: u8 = 1;

/// Length-`n` prefix of `μ_k` applied to a `7/4⁺`-free ternary word.
pub fn k_thue_word(k: usize, n: usize) -> Result<Word> {
    let mu = builtin_mu(k)?;
    let width = mu.uniform_width().expect("built-in morphisms are uniform");
    let source = dejean_word(n.div_ceil(width));
    Ok(mu.apply(&source)?.prefix(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionKind {
    Phi4,
    Phi6,
}

impl ConstructionKind {
    /// The `k` the construction is k-Thue for.
    pub fn k(self) -> usize {
        match self {
            ConstructionKind::Phi4 => 4,
            ConstructionKind::Phi6 => 6,
        }
    }

    /// Wreath block size.
    pub fn block(self) -> usize {
        match self {
            ConstructionKind::Phi4 => 3,
            ConstructionKind::Phi6 => 4,
        }
    }

    /// Window within which all terms are pairwise distinct.
    pub fn distinct_window(self) -> usize {
        self.k() + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::Phi4 => "phi4",
            ConstructionKind::Phi6 => "phi6",
        }
    }

    pub fn build(self, t: u32) -> Result<Word> {
        self.build_capped(t, DEFAULT_CAP)
    }

    pub fn build_capped(self, t: u32, cap: usize) -> Result<Word> {
        match self {
            ConstructionKind::Phi4 => phi4_capped(t, cap),
            ConstructionKind::Phi6 => phi6_capped(t, cap),
        }
    }
}

impl std::str::FromStr for ConstructionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi4" => Ok(ConstructionKind::Phi4),
            "phi6" => Ok(ConstructionKind::Phi6),
            other => Err(Error::arg(format!("unknown construction {other:?}"))),
        }
    }
}

fn wreathed(base: Word, cycle_start: u8, block: usize, alphabet: usize) -> Result<Word> {
    let base = base.with_alphabet(alphabet)?;
    let cycle = Word::new((cycle_start..cycle_start + block as u8).collect(), alphabet)?;
    // The wrap is cut to the base length so the two interleave exactly.
    let wrap = circular_prefix(&cycle, base.len());
    wreath(&base, &wrap, block)
}

fn check_t(t: u32, base: u128, cap: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::arg("wreath constructions need t >= 1"));
    }
    let len = base.checked_pow(t).map_or(u128::MAX, |b| b.saturating_mul(2));
    if len > cap as u128 {
        return Err(Error::Resource {
            what: "wreath construction",
            requested: len,
            cap,
        });
    }
    Ok(())
}

/// The projected hexagonal iterate wreathed (order 3) with the circular
/// stream over `4 5 6`; length `2·3^t`.
pub fn phi4(t: u32) -> Result<Word> {
    phi4_capped(t, DEFAULT_CAP)
}

pub fn phi4_capped(t: u32, cap: usize) -> Result<Word> {
    check_t(t, 3, cap)?;
    wreathed(project(&kappa_iterate_capped(t, cap)?), 3, 3, 6)
}

/// The block-morphism iterate wreathed (order 4) with the circular stream
/// over `5 6 7 8`; length `2·4^t`.
pub fn phi6(t: u32) -> Result<Word> {
    phi6_capped(t, DEFAULT_CAP)
}

pub fn phi6_capped(t: u32, cap: usize) -> Result<Word> {
    check_t(t, 4, cap)?;
    wreathed(lambda_iterate_capped(t, cap)?, 4, 4, 8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repetition::is_k_thue;
    use crate::text::render;
    use crate::word::shift;

    #[test]
    fn k_thue_word_examples() {
        assert_eq!(render(&k_thue_word(2, 7).unwrap(), 0), "0310213");
        assert!(k_thue_word(4, 0).unwrap().is_empty());
        let w = k_thue_word(6, 1000).unwrap();
        assert_eq!((w.len(), w.alphabet_size()), (1000, 8));
        assert_eq!(is_k_thue(&w, 6), None);
        assert!(k_thue_word(9, 10).is_err());
    }

    #[test]
    fn phi4_examples() {
        assert_eq!(render(&phi4(1).unwrap(), 1), "123456");
        assert_eq!(render(&phi4(2).unwrap(), 1), "123456132564312645");
        assert!(phi4(0).is_err());
        assert!(matches!(phi4_capped(9, 1000), Err(Error::Resource { .. })));
    }

    #[test]
    fn phi6_examples() {
        assert_eq!(render(&phi6(1).unwrap(), 1), "12345678");
        assert_eq!(render(&phi6(2).unwrap(), 1), "12345678214367851243785621348567");
    }

    #[test]
    fn distinct_windows() {
        for (kind, tmax) in [(ConstructionKind::Phi4, 6), (ConstructionKind::Phi6, 5)] {
            for t in 1..=tmax {
                let w = kind.build(t).unwrap();
                assert_eq!(w.len(), 2 * kind.block().pow(t));
                for win in w.as_slice().windows(kind.distinct_window()) {
                    let mut v = win.to_vec();
                    v.sort();
                    v.dedup();
                    assert_eq!(v.len(), win.len(), "{kind:?} t={t}");
                }
            }
        }
    }

    #[test]
    fn wrap_blocks_are_cyclic_shifts() {
        for kind in [ConstructionKind::Phi4, ConstructionKind::Phi6] {
            let l = kind.block();
            let base_cycle = Word::new((l as u8..2 * l as u8).collect(), 2 * l).unwrap();
            let w = kind.build(4).unwrap();
            for (j, pair) in w.as_slice().chunks(2 * l).enumerate() {
                assert_eq!(&pair[l..], shift(&base_cycle, j % l).unwrap().as_slice());
            }
        }
    }
}
