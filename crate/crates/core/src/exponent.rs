//! Fractional repetitions: the exponent `|pe| / |p|` of a factor `pe` whose
//! tail `e` is a prefix of `pe`, computed in exact rational arithmetic.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::Word;

pub type Exponent = Ratio<u64>;

/// Locates a factor `w(start .. start+total_length-1)` with period
/// `pi_length`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentWitness {
    /// 1-based.
    pub start: usize,
    pub pi_length: usize,
    pub total_length: usize,
}

impl ExponentWitness {
    pub fn exponent(&self) -> Exponent {
        Ratio::new(self.total_length as u64, self.pi_length as u64)
    }

    pub fn holds(&self, w: &Word) -> bool {
        let s = w.as_slice();
        let (i, p, n) = (self.start, self.pi_length, self.total_length);
        if i == 0 || p == 0 || n < p || i - 1 + n > s.len() {
            return false;
        }
        let f = &s[i - 1..i - 1 + n];
        (p..n).all(|j| f[j] == f[j - p])
    }
}

impl fmt::Display for ExponentWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.exponent();
        write!(
            f,
            "exponent {}/{} at {} (period {}, length {})",
            e.numer(),
            e.denom(),
            self.start,
            self.pi_length,
            self.total_length
        )
    }
}

/// Parses `"7/4"` or `"2"`.
pub fn parse_exponent(s: &str) -> Result<Exponent> {
    let bad = || Error::arg(format!("not a rational exponent: {s:?}"));
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: u64 = n.parse().map_err(|_| bad())?;
    let d: u64 = d.parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(bad());
    }
    Ok(Ratio::new(n, d))
}

/// Maximum exponent over all factors of `w`. Ties go to the smallest start,
/// then the shortest period.
pub fn max_exponent(w: &Word) -> Result<ExponentWitness> {
    let s = w.as_slice();
    let n = s.len();
    if n == 0 {
        return Err(Error::arg("the exponent of an empty word is undefined"));
    }
    let mut best = ExponentWitness {
        start: 1,
        pi_length: 1,
        total_length: 1,
    };
    for p in 1..n {
        // n / p bounds every exponent with period p.
        if (n as u64) * (best.pi_length as u64) < (best.total_length as u64) * (p as u64) {
            break;
        }
        let mut run = 0usize;
        let mut best_run = 0usize;
        let mut best_start = 0usize;
        for i in 0..n - p {
            if s[i] == s[i + p] {
                run += 1;
                if run > best_run {
                    best_run = run;
                    best_start = i + 1 - run;
                }
            } else {
                run = 0;
            }
        }
        let cand = ExponentWitness {
            start: best_start + 1,
            pi_length: p,
            total_length: best_run + p,
        };
        if better(&cand, &best) {
            best = cand;
        }
    }
    Ok(best)
}

fn better(a: &ExponentWitness, b: &ExponentWitness) -> bool {
    let lhs = a.total_length as u64 * b.pi_length as u64;
    let rhs = b.total_length as u64 * a.pi_length as u64;
    lhs > rhs || (lhs == rhs && (a.start, a.pi_length) < (b.start, b.pi_length))
}

/// `None` iff no factor of `w` has exponent strictly greater than `q`.
pub fn is_q_plus_free(w: &Word, q: Exponent) -> Option<ExponentWitness> {
    if w.is_empty() {
        return None;
    }
    let m = max_exponent(w).expect("non-empty");
    (m.exponent() > q).then_some(m)
}

/// Checks only factors ending at 0-based position `p`, assuming the prefix
/// `s[..p]` is already `q⁺`-free. Returns the offending witness, if any.
pub fn exceeds_ending_at(s: &[u8], p: usize, q: Exponent) -> Option<ExponentWitness> {
    let (num, den) = (*q.numer(), *q.denom());
    for per in 1..=p {
        // A run of r matches gives exponent (r + per) / per; it exceeds q
        // once r * den > per * (num - den).
        let limit = (per as u64) * num.saturating_sub(den);
        let mut r = 0usize;
        while r + per <= p && s[p - r] == s[p - r - per] {
            r += 1;
            if (r as u64) * den > limit {
                return Some(ExponentWitness {
                    start: p + 2 - r - per,
                    pi_length: per,
                    total_length: r + per,
                });
            }
        }
    }
    None
}
