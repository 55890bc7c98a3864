//! Longest k-Thue word over `k + 1` letters, by exhaustive DFS.

use std::time::Instant;

use super::{par_map, Certificate, VerifyOptions, Witness};
use crate::error::{Error, Result};
use crate::repetition::k_square_ending_at;
use crate::text::render;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightnessOptions {
    /// Only explore words whose letters first appear in increasing order.
    /// Relabelling preserves the k-Thue property, so the maximum is the same.
    pub symmetry_breaking: bool,
    pub verify: VerifyOptions,
}

impl Default for TightnessOptions {
    fn default() -> Self {
        TightnessOptions {
            symmetry_breaking: true,
            verify: VerifyOptions::default(),
        }
    }
}

#[derive(Default)]
struct Walk {
    nodes: u64,
    best: Vec<u8>,
}

fn dfs(w: &mut Vec<u8>, k: usize, letters: u8, canonical: bool, out: &mut Walk) {
    if w.len() > out.best.len() {
        out.best = w.clone();
    }
    let top = if canonical {
        (w.iter().max().map_or(0, |&m| m + 1) + 1).min(letters)
    } else {
        letters
    };
    for c in 0..top {
        w.push(c);
        if k_square_ending_at(w, w.len() - 1, k).is_none() {
            out.nodes += 1;
            dfs(w, k, letters, canonical, out);
        }
        w.pop();
    }
}

/// The lexicographically least longest k-Thue word over `k + 1` letters
/// (with symmetry breaking, least among first-appearance-ordered words),
/// and the number of k-Thue words visited.
pub fn longest_k_thue_word(k: usize, opts: &TightnessOptions) -> Result<(Word, u64)> {
    if k == 0 || k > 16 {
        return Err(Error::arg("tightness needs 1 <= k <= 16"));
    }
    let letters = (k + 1) as u8;
    let canonical = opts.symmetry_breaking;

    // Units are the k-Thue words of length 2; the empty and one-letter
    // words are counted here.
    let firsts: Vec<u8> = if canonical { vec![0] } else { (0..letters).collect() };
    let mut units = Vec::new();
    for &a in &firsts {
        let seconds = if canonical { 0..2.min(letters) } else { 0..letters };
        for b in seconds {
            if a != b {
                units.push(vec![a, b]);
            }
        }
    }
    let results = par_map(opts.verify.jobs, &units, |u| {
        let mut walk = Walk::default();
        let mut w = u.clone();
        walk.nodes = 1;
        dfs(&mut w, k, letters, canonical, &mut walk);
        walk
    });
    let mut nodes = firsts.len() as u64;
    let mut best: Vec<u8> = firsts.first().map(|&a| vec![a]).unwrap_or_default();
    for r in results {
        nodes += r.nodes;
        if r.best.len() > best.len() {
            best = r.best;
        }
    }
    Ok((Word::from_raw(best, k + 1), nodes))
}

/// Walks every k-Thue word over `k + 1` letters; verified iff the longest
/// has length exactly `2k + 1`. Otherwise the witness holds a longest word.
pub fn verify_tightness_with(k: usize, opts: &TightnessOptions) -> Result<Certificate> {
    let started = Instant::now();
    let (best, nodes) = longest_k_thue_word(k, opts)?;
    let mut cert = Certificate::new("tightness")
        .param("k", k)
        .param("alphabet_size", k + 1)
        .param("symmetry_breaking", opts.symmetry_breaking);
    cert.count("words_enumerated", nodes);
    cert.count("max_length", best.len() as u64);
    if best.len() != 2 * k + 1 {
        cert.fail(Witness::Tightness {
            k,
            max_length: best.len(),
            example: render(&best, 0),
        });
    }
    Ok(cert.with_elapsed(started.elapsed()))
}

pub fn verify_tightness(k: usize, opts: &VerifyOptions) -> Result<Certificate> {
    verify_tightness_with(
        k,
        &TightnessOptions {
            symmetry_breaking: true,
            verify: opts.clone(),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repetition::is_k_thue;

    fn opts(sym: bool) -> TightnessOptions {
        TightnessOptions {
            symmetry_breaking: sym,
            verify: VerifyOptions::default().with_jobs(1),
        }
    }

    /// Longest k-Thue word over k+1 letters by filtering every word.
    fn brute_max(k: usize) -> usize {
        let a = k + 1;
        let mut best = 0;
        for n in 1..=2 * k + 3 {
            let any = (0..a.pow(n as u32)).any(|code| {
                let v: Vec<u8> = (0..n).map(|i| (code / a.pow(i as u32) % a) as u8).collect();
                is_k_thue(&Word::from_raw(v, a), k).is_none()
            });
            if any {
                best = n;
            } else {
                break;
            }
        }
        best
    }

    /// Every window of k+1 terms is distinct, so a k-Thue word over k+1
    /// letters repeats with period k+1. Its d-subsequence then has a square
    /// of half-length h exactly when k+1 divides hd, so the longest word
    /// has length 2(k+1) - p, p the largest proper divisor of k+1.
    fn periodic_max(k: usize) -> usize {
        let n = k + 1;
        let p = (1..n).rev().find(|p| n.is_multiple_of(*p)).unwrap_or(1);
        2 * n - p
    }

    #[test]
    fn agrees_with_brute_force() {
        for k in 1..=4 {
            assert_eq!(brute_max(k), periodic_max(k));
            let full = verify_tightness_with(k, &opts(false)).unwrap();
            assert_eq!(full.counts["max_length"], brute_max(k) as u64);
        }
    }

    #[test]
    fn maxima_follow_the_divisor_rule() {
        for k in 1..=8 {
            let c = verify_tightness_with(k, &opts(true)).unwrap();
            assert_eq!(c.counts["max_length"], periodic_max(k) as u64, "k={k}");
            let prime = (2..k + 1).all(|p| (k + 1) % p != 0);
            assert_eq!(c.is_verified(), prime, "k={k}");
            if let Some(w) = &c.witness {
                assert!(w.recheck().unwrap());
            }
        }
    }

    #[test]
    fn symmetry_breaking_keeps_the_maximum() {
        for k in 1..=5 {
            let a = verify_tightness_with(k, &opts(true)).unwrap();
            let b = verify_tightness_with(k, &opts(false)).unwrap();
            assert_eq!(a.counts["max_length"], b.counts["max_length"]);
            assert!(a.counts["words_enumerated"] <= b.counts["words_enumerated"]);
        }
    }

    #[test]
    fn k1_example() {
        let c = verify_tightness_with(1, &opts(true)).unwrap();
        assert_eq!(c.counts["max_length"], 3);
        assert!(verify_tightness_with(0, &opts(true)).is_err());
    }
}
