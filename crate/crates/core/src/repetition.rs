//! Square detection in words and in their arithmetic-progression
//! subsequences.
//!
//! The full checkers are quadratic per residue class with early-exit
//! comparisons. [`k_square_ending_at`] is the incremental variant used by
//! the exhaustive searches: when a word is extended, only squares whose
//! second half ends at a new position can be new.

use serde::{Deserialize, Serialize};

use crate::word::Word;

/// A square `w(start .. start+2t-1)` of consecutive terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SquareWitness {
    /// 1-based.
    pub start: usize,
    pub half_length: usize,
}

impl SquareWitness {
    pub fn holds(&self, w: &Word) -> bool {
        let s = w.as_slice();
        let (i, h) = (self.start, self.half_length);
        i >= 1 && h >= 1 && i - 1 + 2 * h <= s.len() && s[i - 1..i - 1 + h] == s[i - 1 + h..i - 1 + 2 * h]
    }
}

/// A square in the `d`-subsequence that starts at `start` in the original
/// word; the square begins at that first term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RepetitionWitness {
    pub d: usize,
    /// 1-based index into the original word.
    pub start: usize,
    pub half_length: usize,
}

impl RepetitionWitness {
    /// Re-checks the witness by direct comparison of the terms it names.
    pub fn holds(&self, w: &Word) -> bool {
        let s = w.as_slice();
        let (d, i, h) = (self.d, self.start, self.half_length);
        if d == 0 || i == 0 || h == 0 {
            return false;
        }
        let last = i - 1 + (2 * h - 1) * d;
        if last >= s.len() {
            return false;
        }
        (0..h).all(|j| s[i - 1 + j * d] == s[i - 1 + (h + j) * d])
    }
}

/// Minimal `(start, half_length)` square of a slice, 0-based start.
pub(crate) fn first_square_in(s: &[u8]) -> Option<(usize, usize)> {
    let n = s.len();
    let mut best: Option<(usize, usize)> = None;
    for h in 1..=n / 2 {
        // A square of half h starting at st is detected at i = st + h - 1.
        let mut end = n - h;
        if let Some((b, _)) = best {
            if b == 0 {
                break;
            }
            // Only strictly earlier starts can improve on `best`.
            end = end.min(b + h - 1);
        }
        let mut run = 0;
        for i in 0..end {
            if s[i] == s[i + h] {
                run += 1;
                if run == h {
                    best = Some((i + 1 - h, h));
                    break;
                }
            } else {
                run = 0;
            }
        }
    }
    best
}

/// The square of consecutive terms with the smallest start, ties broken by
/// the shortest half. `None` means `w` is square-free.
pub fn find_square(w: &Word) -> Option<SquareWitness> {
    first_square_in(w.as_slice()).map(|(start, half_length)| SquareWitness {
        start: start + 1,
        half_length,
    })
}

pub fn is_square_free(w: &Word) -> bool {
    find_square(w).is_none()
}

pub(crate) fn first_k_repetition_in(s: &[u8], k: usize) -> Option<RepetitionWitness> {
    let n = s.len();
    let mut buf = Vec::with_capacity(n);
    for d in 1..=k {
        let mut best: Option<(usize, usize)> = None;
        for r in 0..d.min(n) {
            buf.clear();
            buf.extend(s[r..].iter().step_by(d).copied());
            if let Some((st, h)) = first_square_in(&buf) {
                let start = r + st * d;
                if best.is_none_or(|b| (start, h) < b) {
                    best = Some((start, h));
                }
            }
        }
        if let Some((start, half_length)) = best {
            return Some(RepetitionWitness {
                d,
                start: start + 1,
                half_length,
            });
        }
    }
    None
}

/// `None` iff every `d`-subsequence, `1 <= d <= k`, is square-free.
/// Otherwise the witness minimal by `(d, start, half_length)`.
///
/// Only the `d` residue-class subsequences are scanned: a square in a
/// subsequence starting later lies inside the one of its class.
pub fn is_k_thue(w: &Word, k: usize) -> Option<RepetitionWitness> {
    first_k_repetition_in(w.as_slice(), k)
}

/// Looks for a square in some `d`-subsequence, `d <= k`, whose second half
/// ends at 0-based position `p`. Returns `(d, start, half)` with a 0-based
/// start.
#[inline]
pub fn k_square_ending_at(s: &[u8], p: usize, k: usize) -> Option<(usize, usize, usize)> {
    let last = s[p];
    for d in 1..=k {
        let mut h = 1;
        while (2 * h - 1) * d <= p {
            if s[p - h * d] == last {
                let mut j = 1;
                while j < h && s[p - j * d] == s[p - (h + j) * d] {
                    j += 1;
                }
                if j == h {
                    return Some((d, p - (2 * h - 1) * d, h));
                }
            }
            h += 1;
        }
    }
    None
}

/// Checks every square whose second half ends at a position `>= from`.
/// Assumes `s[..from]` is already free of such squares.
pub fn k_square_ending_in(s: &[u8], from: usize, k: usize) -> Option<(usize, usize, usize)> {
    (from..s.len()).find_map(|p| k_square_ending_at(s, p, k))
}

/// Incremental k-Thue checker for a word built one symbol at a time.
///
/// Each residue-class subsequence is kept contiguous, so the search for an
/// earlier copy of the new symbol is a byte scan.
#[derive(Clone, Debug)]
pub struct KThueTracker {
    k: usize,
    /// Subsequence of residue `r` mod `d` at index `d * (d - 1) / 2 + r`.
    subs: Vec<Vec<u8>>,
    len: usize,
}

impl KThueTracker {
    pub fn new(k: usize) -> Self {
        KThueTracker {
            k,
            subs: vec![Vec::new(); k * (k + 1) / 2],
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Appends `c` and reports the square ending at it, if any, as
    /// `(d, start, half)` with a 0-based start, minimal by `(d, half)`.
    /// Same answer as [`k_square_ending_at`] on the whole word.
    pub fn push(&mut self, c: u8) -> Option<(usize, usize, usize)> {
        let p = self.len;
        self.len += 1;
        for d in 1..=self.k {
            self.subs[d * (d - 1) / 2 + p % d].push(c);
        }
        for d in 1..=self.k {
            let t = &self.subs[d * (d - 1) / 2 + p % d];
            let m = t.len() - 1;
            let lo = m - m.div_ceil(2);
            for i in memchr::memrchr_iter(c, &t[lo..m]) {
                let i = lo + i;
                let h = m - i;
                if t[i + 1..m] == t[i + 1 - h..i] {
                    return Some((d, p - (2 * h - 1) * d, h));
                }
            }
        }
        None
    }

    /// Appends a run of symbols; stops at the first square.
    pub fn extend(&mut self, cs: &[u8]) -> Option<(usize, usize, usize)> {
        cs.iter().find_map(|&c| self.push(c))
    }

    /// Drops everything from position `n` on.
    pub fn truncate(&mut self, n: usize) {
        if n >= self.len {
            return;
        }
        for d in 1..=self.k {
            for r in 0..d {
                let keep = if n > r { (n - r).div_ceil(d) } else { 0 };
                self.subs[d * (d - 1) / 2 + r].truncate(keep);
            }
        }
        self.len = n;
    }
}
