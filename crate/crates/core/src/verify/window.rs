//! Window determinism: for every 4-letter ternary window `x1 x2 x3 x4`,
//! every `d <= k` and every residue offset `s <= d`, the `d`-subsequence of
//! the image starting at `s` must pin down the middle letters `x2 x3`.

use std::collections::HashMap;
use std::time::Instant;

use super::{Certificate, Witness};
use crate::error::Result;
use crate::morphisms::{builtin_mu, Morphism};
use crate::repetition::first_square_in;
use crate::text::render;
use crate::word::Word;

/// Which ternary 4-letter windows take part.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum WindowScope {
    /// All 81 words.
    #[default]
    All,
    /// The 18 square-free words, the only ones occurring in square-free
    /// sources.
    SquareFree,
}

impl WindowScope {
    pub fn name(self) -> &'static str {
        match self {
            WindowScope::All => "all",
            WindowScope::SquareFree => "square-free",
        }
    }
}

fn windows(scope: WindowScope) -> impl Iterator<Item = [u8; 4]> {
    (0..81u32)
        .map(|c| {
            let mut w = [0u8; 4];
            let mut c = c;
            for x in w.iter_mut().rev() {
                *x = (c % 3) as u8;
                c /= 3;
            }
            w
        })
        .filter(move |w| scope == WindowScope::All || first_square_in(w).is_none())
}

pub fn verify_window_determinism_with(m: &Morphism, k: usize, scope: WindowScope) -> Certificate {
    let started = Instant::now();
    let mut cert = Certificate::new("window-determinism")
        .param("k", k)
        .param("width", m.uniform_width().unwrap_or(0))
        .param("alphabet_size", m.codomain_size())
        .param("windows", scope.name());
    let width = m.uniform_width().unwrap_or(0);
    let mut keys = 0u64;
    let mut table: HashMap<(usize, usize, Vec<u8>), [u8; 4]> = HashMap::new();
    'outer: for d in 1..=k {
        // Residue offsets must start inside the first image block.
        for delta in windows(scope) {
            let image = m.apply_raw(&delta);
            for s in 1..=d.min(width) {
                let content: Vec<u8> = image[s - 1..].iter().step_by(d).copied().collect();
                keys += 1;
                match table.entry((d, s, content)) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(delta);
                    }
                    std::collections::hash_map::Entry::Occupied(e) => {
                        let other = *e.get();
                        if other[1..3] != delta[1..3] {
                            let w = |v: &[u8], a| render(&Word::from_raw(v.to_vec(), a), 0);
                            let alpha = m.codomain_size();
                            cert.fail(Witness::KeyCollision {
                                d,
                                offset: s,
                                content: w(&e.key().2, alpha),
                                first: w(&other, 3),
                                second: w(&delta, 3),
                                first_image: w(&m.apply_raw(&other), alpha),
                                second_image: w(&image, alpha),
                                alphabet_size: alpha,
                            });
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    cert.count("keys_inserted", keys);
    cert.count("distinct_keys", table.len() as u64);
    cert.with_elapsed(started.elapsed())
}

pub fn verify_window_determinism(k: usize, scope: WindowScope) -> Result<Certificate> {
    Ok(verify_window_determinism_with(&builtin_mu(k)?, k, scope))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Status;

    #[test]
    fn builtin_morphisms_up_to_6_pass() {
        for k in 2..=6 {
            for scope in [WindowScope::All, WindowScope::SquareFree] {
                let c = verify_window_determinism(k, scope).unwrap();
                assert!(c.is_verified(), "{}", c.to_json());
            }
        }
    }

    #[test]
    fn mu7_and_mu8_collide() {
        for k in [7, 8] {
            let c = verify_window_determinism(k, WindowScope::All).unwrap();
            assert_eq!(c.status, Status::Counterexample);
            assert!(c.witness.unwrap().recheck().unwrap());
        }
        let c = verify_window_determinism(7, WindowScope::SquareFree).unwrap();
        let Some(Witness::KeyCollision {
            d,
            offset,
            first,
            second,
            ..
        }) = c.witness
        else {
            panic!("expected a collision");
        };
        assert_eq!((d, offset, first.as_str(), second.as_str()), (7, 4, "0102", "0120"));
        assert!(verify_window_determinism(8, WindowScope::SquareFree)
            .unwrap()
            .is_verified());
    }

    #[test]
    fn d1_alone_determines_the_window() {
        let m = builtin_mu(3).unwrap();
        let c = verify_window_determinism_with(&m, 1, WindowScope::All);
        assert!(c.is_verified());
        assert_eq!(c.counts["distinct_keys"], 81);
    }

    #[test]
    fn identical_images_collide() {
        let m = builtin_mu(2).unwrap();
        let r = m.rows();
        let bad = Morphism::from_rows(&[r[0], r[0], r[2]], 4).unwrap();
        let c = verify_window_determinism_with(&bad, 2, WindowScope::All);
        assert_eq!(c.status, Status::Counterexample);
        assert!(c.witness.unwrap().recheck().unwrap());
    }
}
