//! Random words checked against direct enumeration.

use kthue::exponent::{max_exponent, Exponent};
use kthue::repetition::{k_square_ending_at, KThueTracker};
use kthue::{find_square, is_k_thue, RepetitionWitness, Word};
use proptest::prelude::*;

fn oracle(w: &[u8], k: usize) -> Option<RepetitionWitness> {
    let n = w.len();
    for d in 1..=k {
        for start in 1..=n {
            for h in 1..=n {
                if start - 1 + (2 * h - 1) * d >= n {
                    break;
                }
                if (0..h).all(|j| w[start - 1 + j * d] == w[start - 1 + (h + j) * d]) {
                    return Some(RepetitionWitness {
                        d,
                        start,
                        half_length: h,
                    });
                }
            }
        }
    }
    None
}

/// Largest `length / period` over all factors.
fn oracle_exponent(w: &[u8]) -> Exponent {
    let n = w.len();
    let mut best = Exponent::new(1, 1);
    for i in 0..n {
        for p in 1..=n - i {
            let run = (i + p..n).take_while(|&j| w[j] == w[j - p]).count();
            best = best.max(Exponent::new((p + run) as u64, p as u64));
        }
    }
    best
}

fn words(alpha: u8, max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..alpha, 0..=max)
}

proptest! {
    #[test]
    fn k_thue_matches_oracle(v in words(5, 40), k in 1usize..6) {
        let w = Word::new(v.clone(), 5).unwrap();
        prop_assert_eq!(is_k_thue(&w, k), oracle(&v, k));
    }

    #[test]
    fn find_square_is_the_d1_case(v in words(3, 30)) {
        let w = Word::new(v.clone(), 3).unwrap();
        let got = find_square(&w).map(|s| (s.start, s.half_length));
        prop_assert_eq!(got, oracle(&v, 1).map(|r| (r.start, r.half_length)));
    }

    #[test]
    fn exponent_matches_oracle(v in words(3, 30)) {
        prop_assume!(!v.is_empty());
        let w = Word::new(v.clone(), 3).unwrap();
        let m = max_exponent(&w).unwrap();
        prop_assert!(m.holds(&w));
        prop_assert_eq!(m.exponent(), oracle_exponent(&v));
    }

    #[test]
    fn tracker_matches_rescan(v in words(4, 60), k in 1usize..5, cut in 0usize..60) {
        let mut t = KThueTracker::new(k);
        for (p, &c) in v.iter().enumerate() {
            prop_assert_eq!(t.push(c), k_square_ending_at(&v, p, k));
        }
        let cut = cut.min(v.len());
        t.truncate(cut);
        prop_assert_eq!(t.len(), cut);
        for (p, &c) in v.iter().enumerate().skip(cut) {
            prop_assert_eq!(t.push(c), k_square_ending_at(&v, p, k));
        }
    }
}
