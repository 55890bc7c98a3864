//! Lexicographically least ternary words with no factor of exponent above
//! `7/4`, found by depth-first search with backtracking.

use num_rational::Ratio;

use crate::exponent::{exceeds_ending_at, Exponent};
use crate::word::Word;

pub const DEJEAN_THRESHOLD: Exponent = Ratio::new_raw(7, 4);

/// Extra symbols searched beyond the requested length. Backtracking never
/// revisits a position this far behind the search front (checked by tests
/// well past the lengths used here), so every requested length sees the
/// same settled prefix.
const LOOKAHEAD: usize = 64;

/// Depth-first search for the least `7/4⁺`-free ternary word of length
/// `target`. Also reports how far behind the deepest point reached the
/// search ever had to retreat.
pub(crate) fn least_free_word(target: usize) -> (Vec<u8>, usize) {
    let mut s: Vec<u8> = Vec::with_capacity(target);
    let mut next: u8 = 0;
    let mut deepest = 0usize;
    let mut max_retreat = 0usize;
    while s.len() < target {
        if next < 3 {
            s.push(next);
            if exceeds_ending_at(&s, s.len() - 1, DEJEAN_THRESHOLD).is_some() {
                s.pop();
                next += 1;
            } else {
                deepest = deepest.max(s.len());
                next = 0;
            }
        } else {
            // Exhausted this position; retreat one and try the next symbol.
            let last = s.pop().expect("ternary 7/4+-free words of every length exist");
            max_retreat = max_retreat.max(deepest - s.len());
            next = last + 1;
        }
    }
    (s, max_retreat)
}

/// A `7/4⁺`-free word of length `n` over `{0, 1, 2}`; `dejean_word(n)` is a
/// prefix of `dejean_word(n + 1)`.
pub fn dejean_word(n: usize) -> Word {
    if n == 0 {
        return Word::empty(3);
    }
    let (mut s, _) = least_free_word(n + LOOKAHEAD);
    s.truncate(n);
    Word::from_raw(s, 3)
}
