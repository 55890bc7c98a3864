//! Exhaustive check that a uniform morphism maps every square-free ternary
//! word up to a given length to a k-Thue word.
//!
//! The search walks the tree of square-free ternary words one letter at a
//! time, keeping the image in step. Appending a letter appends one image
//! block, and only squares whose second half ends inside that block need
//! checking.

use std::time::Instant;

use super::{par_map, Budget, Certificate, VerifyOptions, Witness};
use crate::error::Result;
use crate::morphisms::{builtin_mu, Morphism};
use crate::repetition::{is_k_thue, k_square_ending_at, KThueTracker};
use crate::text::render;
use crate::word::Word;

/// Certificate plus the number of square-free words met at each length
/// (index 0 is length 1).
#[derive(Clone, Debug)]
pub struct BoundedSearch {
    pub certificate: Certificate,
    pub per_length: Vec<u64>,
}

struct Walker<'a> {
    rows: Vec<&'a [u8]>,
    budget: &'a Budget,
    phi: Vec<u8>,
    img: KThueTracker,
    per_length: Vec<u64>,
    violation: Option<Vec<u8>>,
    leaves: Option<Vec<Vec<u8>>>,
}

impl<'a> Walker<'a> {
    fn new(rows: Vec<&'a [u8]>, k: usize, max_len: usize, budget: &'a Budget) -> Self {
        Walker {
            rows,
            budget,
            phi: Vec::with_capacity(max_len),
            img: KThueTracker::new(k),
            per_length: vec![0; max_len],
            violation: None,
            leaves: None,
        }
    }

    fn seed(&mut self, prefix: &[u8]) {
        self.phi = prefix.to_vec();
        for &c in prefix {
            let found = self.img.extend(self.rows[c as usize]);
            debug_assert!(found.is_none(), "units are prefixes that passed");
        }
    }

    /// Returns `true` when the walk must stop (violation or budget).
    fn walk(&mut self, depth_limit: usize) -> bool {
        if self.phi.len() >= depth_limit {
            if let Some(l) = self.leaves.as_mut() {
                l.push(self.phi.clone());
            }
            return false;
        }
        for c in 0..3u8 {
            self.phi.push(c);
            let last = self.phi.len() - 1;
            if k_square_ending_at(&self.phi, last, 1).is_none() {
                self.per_length[last] += 1;
                if !self.budget.spend(1) {
                    return true;
                }
                let old = self.img.len();
                if self.img.extend(self.rows[c as usize]).is_some() {
                    self.violation = Some(self.phi.clone());
                    return true;
                }
                if self.walk(depth_limit) {
                    return true;
                }
                self.img.truncate(old);
            }
            self.phi.pop();
        }
        false
    }
}

/// Runs the search and keeps the per-length word counts.
pub fn bounded_image_search(m: &Morphism, k: usize, max_len: usize, opts: &VerifyOptions) -> BoundedSearch {
    let started = Instant::now();
    let mut cert = Certificate::new("bounded-images")
        .param("k", k)
        .param("max_len", max_len)
        .param("width", m.uniform_width().unwrap_or(0))
        .param("alphabet_size", m.codomain_size());
    let budget = Budget::new(opts);
    let rows = m.rows();

    // Shallow part of the tree, walked serially; its leaves are the units.
    let split = opts.partition_depth.clamp(1, max_len.max(1)).min(max_len);
    let mut root = Walker::new(rows.clone(), k, max_len, &budget);
    root.leaves = Some(Vec::new());
    let root_stopped = max_len > 0 && root.walk(split);
    let mut per_length = root.per_length.clone();
    let mut violation = root.violation.clone();
    let units = if root_stopped || split == max_len {
        Vec::new()
    } else {
        root.leaves.take().unwrap_or_default()
    };

    let results = par_map(opts.jobs, &units, |prefix| {
        let mut w = Walker::new(rows.clone(), k, max_len, &budget);
        w.seed(prefix);
        w.walk(max_len);
        (w.per_length, w.violation)
    });
    for (pl, v) in results {
        for (a, b) in per_length.iter_mut().zip(pl) {
            *a += b;
        }
        if violation.is_none() {
            violation = v;
        }
    }

    let total: u64 = per_length.iter().sum();
    cert.count("words_enumerated", total);
    cert.count("words_at_max_len", per_length.last().copied().unwrap_or(0));
    cert.count("work_units", units.len() as u64);
    if let Some(phi) = violation {
        let source = Word::new(phi, 3).expect("ternary");
        let image = m.apply(&source).expect("domain is ternary");
        let rep = is_k_thue(&image, k).expect("incremental and full checkers agree");
        cert.fail(Witness::Repetition {
            word: render(&image, 0),
            alphabet_size: image.alphabet_size(),
            display_offset: 0,
            repetition: rep,
            source: Some(render(&source, 0)),
        });
    } else if budget.tripped() {
        cert.abort();
    }
    BoundedSearch {
        certificate: cert.with_elapsed(started.elapsed()),
        per_length,
    }
}

pub fn verify_bounded_images_with(m: &Morphism, k: usize, max_len: usize, opts: &VerifyOptions) -> Certificate {
    bounded_image_search(m, k, max_len, opts).certificate
}

/// Checks the built-in morphism for `k` against every square-free ternary
/// word of length at most `max_len`.
pub fn verify_bounded_images(k: usize, max_len: usize, opts: &VerifyOptions) -> Result<Certificate> {
    let m = builtin_mu(k)?;
    Ok(verify_bounded_images_with(&m, k, max_len, opts))
}
