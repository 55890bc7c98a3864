//! Exhaustive search for uniform morphisms from a ternary alphabet whose
//! images pass the bounded-image and window-determinism checks.
//!
//! Candidate triples are filled symbol by symbol, image 0 first. A symbol is
//! only placed if it is at most one more than the largest symbol so far, so
//! each codomain relabelling class is visited once. Partial images are
//! pruned as soon as they, or their concatenations with finished images,
//! contain a d-square for some d <= k.

use std::fmt;

use crate::error::{Error, Result};
use crate::morphisms::Morphism;
use crate::repetition::{first_k_repetition_in, first_square_in, k_square_ending_at};
use crate::verify::{
    bounded_image_search, default_jobs, par_map, verify_window_determinism_with, VerifyOptions, WindowScope,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub k: usize,
    pub width: usize,
    pub alphabet_size: usize,
    /// Fixed leading symbols of each image, in canonical labels.
    pub prefixes: [Vec<u8>; 3],
    /// Length of the bounded-image test run on every complete triple.
    pub test_len: usize,
    /// Longer bounded-image test for survivors, if any.
    pub recheck_len: Option<usize>,
    pub window_scope: WindowScope,
    /// Nodes below the partition depth that may be visited.
    pub max_nodes: Option<u64>,
    pub max_results: Option<usize>,
    /// Number of leading symbols fixed per work unit.
    pub partition_depth: usize,
    pub jobs: usize,
}

impl SearchConfig {
    pub fn new(k: usize, width: usize) -> Self {
        SearchConfig {
            k,
            width,
            alphabet_size: k + 2,
            prefixes: Default::default(),
            test_len: 20,
            recheck_len: Some(40),
            window_scope: WindowScope::All,
            max_nodes: None,
            max_results: None,
            partition_depth: 4,
            jobs: default_jobs(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::arg("k must be at least 1"));
        }
        if self.width == 0 {
            return Err(Error::arg("width must be at least 1"));
        }
        if !(2..=256).contains(&self.alphabet_size) {
            return Err(Error::arg("alphabet size must be between 2 and 256"));
        }
        if self.test_len < 4 {
            return Err(Error::arg("test length must be at least 4"));
        }
        if self.max_nodes == Some(0) || self.max_results == Some(0) {
            return Err(Error::arg("limits must allow at least one node and one result"));
        }
        for p in &self.prefixes {
            if p.len() > self.width {
                return Err(Error::arg("prefix longer than the image width"));
            }
            if p.iter().any(|&c| c as usize >= self.alphabet_size) {
                return Err(Error::arg("prefix symbol outside the alphabet"));
            }
        }
        Ok(())
    }

    fn depth(&self) -> usize {
        self.partition_depth.min(3 * self.width - 1)
    }

    fn token_head(&self, depth: usize) -> String {
        let prefixes: Vec<String> = self.prefixes.iter().map(|p| join(p)).collect();
        format!(
            "kthue-search:v1;k={};w={};a={};L={};R={};S={};P={};D={}",
            self.k,
            self.width,
            self.alphabet_size,
            self.test_len,
            self.recheck_len.map_or("-".to_string(), |r| r.to_string()),
            self.window_scope.name(),
            prefixes.join(","),
            depth
        )
    }
}

fn join(p: &[u8]) -> String {
    p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(".")
}

/// Counts of what the search saw and discarded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Partial image containing a d-square.
    pub pruned_image: u64,
    /// Partial image following a finished image with a d-square across.
    pub pruned_context: u64,
    /// Finished image failing the short square-free words.
    pub pruned_completion: u64,
    /// Complete triples reaching the expensive checks.
    pub candidates: u64,
    pub rejected_bounded: u64,
    pub rejected_window: u64,
    pub rejected_recheck: u64,
    pub emitted: u64,
}

impl SearchStats {
    fn add(&mut self, o: &SearchStats) {
        self.pruned_image += o.pruned_image;
        self.pruned_context += o.pruned_context;
        self.pruned_completion += o.pruned_completion;
        self.candidates += o.candidates;
        self.rejected_bounded += o.rejected_bounded;
        self.rejected_window += o.rejected_window;
        self.rejected_recheck += o.rejected_recheck;
        self.emitted += o.emitted;
    }

    pub fn entries(&self) -> [(&'static str, u64); 8] {
        [
            ("pruned_image", self.pruned_image),
            ("pruned_context", self.pruned_context),
            ("pruned_completion", self.pruned_completion),
            ("candidates", self.candidates),
            ("rejected_bounded", self.rejected_bounded),
            ("rejected_window", self.rejected_window),
            ("rejected_recheck", self.rejected_recheck),
            ("emitted", self.emitted),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub morphisms: Vec<Morphism>,
    /// Valid partial assignments visited in this run.
    pub nodes: u64,
    pub stats: SearchStats,
    /// Set when a limit stopped the run; resumes at the next unvisited node.
    pub checkpoint: Option<String>,
}

impl SearchResult {
    pub fn is_complete(&self) -> bool {
        self.checkpoint.is_none()
    }
}

/// Which filter turned a complete triple down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    Image,
    ShortWords,
    Bounded,
    Window,
    Recheck,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rejection::Image => "an image is not k-Thue",
            Rejection::ShortWords => "a square-free word of length <= 3 maps to a repetition",
            Rejection::Bounded => "bounded-image test failed",
            Rejection::Window => "window determinism failed",
            Rejection::Recheck => "bounded-image recheck failed",
        })
    }
}

/// Relabels the codomain by first appearance in the concatenated images.
/// Unused symbols keep their relative order after the used ones.
pub fn canonicalize(m: &Morphism) -> Morphism {
    let a = m.codomain_size();
    let mut map = vec![u16::MAX; a];
    let mut next = 0u16;
    for img in m.images() {
        for &c in img.as_slice() {
            if map[c as usize] == u16::MAX {
                map[c as usize] = next;
                next += 1;
            }
        }
    }
    for slot in map.iter_mut().filter(|s| **s == u16::MAX) {
        *slot = next;
        next += 1;
    }
    let rows: Vec<Vec<u8>> = m
        .images()
        .iter()
        .map(|img| img.as_slice().iter().map(|&c| map[c as usize] as u8).collect())
        .collect();
    let images = rows.into_iter().map(|r| crate::word::Word::from_raw(r, a)).collect();
    Morphism::new(images, Some(a)).expect("relabelling keeps the alphabet")
}

/// Runs every filter of the search on one ternary morphism, without the
/// canonical-labelling and prefix restrictions.
pub fn check_candidate(cfg: &SearchConfig, m: &Morphism) -> Result<std::result::Result<(), Rejection>> {
    cfg.validate()?;
    if m.domain_size() != 3 || m.uniform_width() != Some(cfg.width) {
        return Err(Error::arg(
            "candidate must be a ternary morphism of the configured width",
        ));
    }
    let rows = m.rows();
    let k = cfg.k;
    if rows.iter().any(|r| first_k_repetition_in(r, k).is_some()) {
        return Ok(Err(Rejection::Image));
    }
    for w in short_words(2) {
        if first_k_repetition_in(&concat(&rows, &w), k).is_some() {
            return Ok(Err(Rejection::ShortWords));
        }
    }
    Ok(final_checks(cfg, m))
}

fn concat(rows: &[&[u8]], w: &[u8]) -> Vec<u8> {
    w.iter().flat_map(|&c| rows[c as usize].iter().copied()).collect()
}

/// Square-free words of length 1..=3 over `0..=top`.
fn short_words(top: u8) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..3 {
        let mut next = Vec::new();
        for w in &layer {
            for c in 0..=top {
                let mut v = w.clone();
                v.push(c);
                if first_square_in(&v).is_none() {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn final_checks(cfg: &SearchConfig, m: &Morphism) -> std::result::Result<(), Rejection> {
    let serial = VerifyOptions::default().with_jobs(1);
    if !bounded_image_search(m, cfg.k, cfg.test_len, &serial)
        .certificate
        .is_verified()
    {
        return Err(Rejection::Bounded);
    }
    if !verify_window_determinism_with(m, cfg.k, cfg.window_scope).is_verified() {
        return Err(Rejection::Window);
    }
    if let Some(r) = cfg.recheck_len.filter(|&r| r > cfg.test_len) {
        if !bounded_image_search(m, cfg.k, r, &serial).certificate.is_verified() {
            return Err(Rejection::Recheck);
        }
    }
    Ok(())
}

enum Prune {
    Image,
    Context,
    Completion,
}

struct Engine<'a> {
    cfg: &'a SearchConfig,
    /// Words `w` over symbols below `i` with `w i` square-free, `|w| <= 2`.
    contexts: [Vec<Vec<u8>>; 3],
    /// Square-free words of length <= 3 over `0..=i` that contain `i`.
    completions: [Vec<Vec<u8>>; 3],
}

impl<'a> Engine<'a> {
    fn new(cfg: &'a SearchConfig) -> Self {
        let all = short_words(2);
        let contexts = [0u8, 1, 2].map(|i| {
            all.iter()
                .filter(|w| w.len() <= 2 && w.iter().all(|&c| c < i))
                .filter(|w| first_square_in(&[w.as_slice(), &[i]].concat()).is_none())
                .cloned()
                .collect()
        });
        let completions = [0u8, 1, 2].map(|i| {
            all.iter()
                .filter(|w| w.len() >= 2 && w.contains(&i) && w.iter().all(|&c| c <= i))
                .cloned()
                .collect()
        });
        Engine {
            cfg,
            contexts,
            completions,
        }
    }

    fn rows<'s>(&self, syms: &'s [u8]) -> Vec<&'s [u8]> {
        syms.chunks(self.cfg.width).collect()
    }

    /// Checks the symbol just placed at the end of `syms`.
    fn check(&self, syms: &[u8], scratch: &mut Vec<u8>) -> std::result::Result<(), Prune> {
        let w = self.cfg.width;
        let k = self.cfg.k;
        let p = syms.len() - 1;
        let (i, j) = (p / w, p % w);
        let img = &syms[i * w..];
        if k_square_ending_at(img, j, k).is_some() {
            return Err(Prune::Image);
        }
        let rows = self.rows(syms);
        for ctx in &self.contexts[i] {
            scratch.clear();
            for &c in ctx {
                scratch.extend_from_slice(rows[c as usize]);
            }
            scratch.extend_from_slice(img);
            if k_square_ending_at(scratch, scratch.len() - 1, k).is_some() {
                return Err(Prune::Context);
            }
        }
        if j == w - 1 {
            for u in &self.completions[i] {
                if first_k_repetition_in(&concat(&rows, u), k).is_some() {
                    return Err(Prune::Completion);
                }
            }
        }
        Ok(())
    }

    fn choices(&self, syms: &[u8], top: u16) -> std::ops::Range<u16> {
        let p = syms.len();
        let (i, j) = (p / self.cfg.width, p % self.cfg.width);
        let hi = (top + 1).min(self.cfg.alphabet_size as u16);
        match self.cfg.prefixes[i].get(j) {
            Some(&c) if (c as u16) < hi => c as u16..c as u16 + 1,
            Some(_) => 0..0,
            None => 0..hi,
        }
    }
}

/// One depth-first walk, either the shallow enumeration of work units or
/// the search below one unit.
struct Walk<'e, 'a> {
    e: &'e Engine<'a>,
    syms: Vec<u8>,
    scratch: Vec<u8>,
    depth_limit: usize,
    stats: SearchStats,
    nodes: u64,
    max_nodes: Option<u64>,
    max_results: Option<usize>,
    found: Vec<Morphism>,
    units: Vec<Vec<u8>>,
    /// Resume target: nodes before it in depth-first order are skipped.
    skip: Option<Vec<u8>>,
    stop: Option<Vec<u8>>,
}

impl<'e, 'a> Walk<'e, 'a> {
    fn new(e: &'e Engine<'a>, start: Vec<u8>, depth_limit: usize) -> Self {
        Walk {
            e,
            syms: start,
            scratch: Vec::new(),
            depth_limit,
            stats: SearchStats::default(),
            nodes: 0,
            max_nodes: None,
            max_results: None,
            found: Vec::new(),
            units: Vec::new(),
            skip: None,
            stop: None,
        }
    }

    fn limited(mut self, max_nodes: Option<u64>, max_results: Option<usize>) -> Self {
        self.max_nodes = max_nodes;
        self.max_results = max_results;
        self
    }

    /// Returns `true` once a limit stops the walk.
    fn run(&mut self, top: u16) -> bool {
        let p = self.syms.len();
        if p == self.depth_limit {
            if p == 3 * self.e.cfg.width {
                self.leaf();
            } else {
                self.units.push(self.syms.clone());
            }
            return false;
        }
        for c in self.e.choices(&self.syms, top) {
            let c = c as u8;
            let mut on_path = false;
            if let Some(x) = &self.skip {
                match c.cmp(&x[p]) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => on_path = true,
                    std::cmp::Ordering::Greater => self.skip = None,
                }
            }
            self.syms.push(c);
            let next_top = top.max(c as u16 + 1);
            let stopped = if on_path && p + 1 < self.skip.as_ref().map_or(0, Vec::len) {
                self.run(next_top)
            } else {
                if on_path {
                    self.skip = None;
                }
                self.visit(next_top)
            };
            self.syms.pop();
            if stopped {
                return true;
            }
            if on_path {
                self.skip = None;
            }
        }
        false
    }

    fn visit(&mut self, top: u16) -> bool {
        match self.e.check(&self.syms, &mut self.scratch) {
            Err(Prune::Image) => self.stats.pruned_image += 1,
            Err(Prune::Context) => self.stats.pruned_context += 1,
            Err(Prune::Completion) => self.stats.pruned_completion += 1,
            Ok(()) => {
                let out_of_nodes = self.max_nodes.is_some_and(|m| self.nodes >= m);
                let out_of_results = self.max_results.is_some_and(|m| self.found.len() >= m);
                if out_of_nodes || out_of_results {
                    self.stop = Some(self.syms.clone());
                    return true;
                }
                self.nodes += 1;
                return self.run(top);
            }
        }
        false
    }

    fn leaf(&mut self) {
        self.stats.candidates += 1;
        let cfg = self.e.cfg;
        let rows = self.e.rows(&self.syms);
        let m = Morphism::from_rows(&rows, cfg.alphabet_size).expect("symbols are in range");
        match final_checks(cfg, &m) {
            Ok(()) => {
                self.stats.emitted += 1;
                self.found.push(m);
            }
            Err(Rejection::Window) => self.stats.rejected_window += 1,
            Err(Rejection::Recheck) => self.stats.rejected_recheck += 1,
            Err(_) => self.stats.rejected_bounded += 1,
        }
    }
}

fn top_of(syms: &[u8]) -> u16 {
    syms.iter().map(|&c| c as u16 + 1).max().unwrap_or(0)
}

struct UnitRun {
    stats: SearchStats,
    nodes: u64,
    found: Vec<Morphism>,
    stop: Option<Vec<u8>>,
}

fn run_unit(
    e: &Engine,
    unit: &[u8],
    skip: Option<&[u8]>,
    max_nodes: Option<u64>,
    max_results: Option<usize>,
) -> UnitRun {
    let mut w = Walk::new(e, unit.to_vec(), 3 * e.cfg.width).limited(max_nodes, max_results);
    w.skip = skip.map(<[u8]>::to_vec);
    w.run(top_of(unit));
    UnitRun {
        stats: w.stats,
        nodes: w.nodes,
        found: w.found,
        stop: w.stop,
    }
}

fn parse_token(cfg: &SearchConfig, token: &str) -> Result<(usize, Vec<u8>)> {
    let bad = |m: &str| Error::arg(format!("invalid checkpoint token: {m}"));
    let (head, at) = token.rsplit_once(";at=").ok_or_else(|| bad("missing position"))?;
    let depth: usize = head
        .rsplit_once(";D=")
        .and_then(|(_, d)| d.parse().ok())
        .ok_or_else(|| bad("missing partition depth"))?;
    if depth >= 3 * cfg.width || head != cfg.token_head(depth) {
        return Err(bad("it was made for a different configuration"));
    }
    let path = at
        .split('.')
        .map(|s| s.parse::<u8>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| bad("malformed position"))?;
    if path.len() <= depth || path.len() > 3 * cfg.width {
        return Err(bad("position depth out of range"));
    }
    Ok((depth, path))
}

pub fn search_morphisms(cfg: &SearchConfig) -> Result<SearchResult> {
    search_with(cfg, None, |_| {})
}

/// Continues a run stopped at `token`; the outputs of the two runs
/// concatenate to the output of one uninterrupted run.
pub fn resume_search(cfg: &SearchConfig, token: &str) -> Result<SearchResult> {
    search_with(cfg, Some(token), |_| {})
}

/// The search, handing each morphism to `sink` as soon as its place in the
/// output order is settled.
pub fn search_with(cfg: &SearchConfig, resume: Option<&str>, mut sink: impl FnMut(&Morphism)) -> Result<SearchResult> {
    cfg.validate()?;
    let e = Engine::new(cfg);
    let (depth, target) = match resume {
        Some(t) => {
            let (d, p) = parse_token(cfg, t)?;
            (d, Some(p))
        }
        None => (cfg.depth(), None),
    };

    let mut root = Walk::new(&e, Vec::new(), depth);
    root.run(0);
    let mut stats = SearchStats::default();
    let mut nodes = 0;
    // Shallow nodes were already counted by the run that made the token.
    if target.is_none() {
        stats = root.stats;
        nodes = root.nodes;
    }
    let mut units = root.units;
    if let Some(t) = &target {
        units.retain(|u| u.as_slice() >= &t[..depth]);
    }

    let mut out = SearchResult {
        morphisms: Vec::new(),
        nodes,
        stats,
        checkpoint: None,
    };
    let mut used = 0u64;
    let jobs = cfg.jobs.max(1);
    let chunk = if jobs == 1 { 1 } else { 4 * jobs };
    for batch in units.chunks(chunk) {
        let left_nodes = cfg.max_nodes.map(|m| m - used);
        let left_results = cfg.max_results.map(|m| m - out.morphisms.len());
        let skip_for = |u: &Vec<u8>| target.as_deref().filter(|t| t.starts_with(u));
        let runs = par_map(jobs, batch, |u| run_unit(&e, u, skip_for(u), left_nodes, left_results));
        for (u, mut r) in batch.iter().zip(runs) {
            let left_nodes = cfg.max_nodes.map(|m| m - used);
            let left_results = cfg.max_results.map(|m| m - out.morphisms.len());
            let fits = r.stop.is_none()
                && left_nodes.is_none_or(|m| r.nodes <= m)
                && left_results.is_none_or(|m| r.found.len() < m);
            if !fits {
                r = run_unit(&e, u, skip_for(u), left_nodes, left_results);
            }
            used += r.nodes;
            out.nodes += r.nodes;
            out.stats.add(&r.stats);
            for m in r.found {
                sink(&m);
                out.morphisms.push(m);
            }
            if let Some(p) = r.stop {
                out.checkpoint = Some(format!("{};at={}", cfg.token_head(depth), join(&p)));
                return Ok(out);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::builtin_mu;

    fn k2(jobs: usize) -> SearchConfig {
        SearchConfig {
            prefixes: [vec![0], vec![0], vec![0]],
            recheck_len: None,
            test_len: 12,
            jobs,
            ..SearchConfig::new(2, 7)
        }
    }

    #[test]
    fn width_one_is_empty() {
        let cfg = SearchConfig {
            jobs: 1,
            ..SearchConfig::new(2, 1)
        };
        let r = search_morphisms(&cfg).unwrap();
        assert!(r.morphisms.is_empty());
        assert!(r.is_complete());
    }

    /// Every map from three symbols to single letters of a 4-letter
    /// alphabet fails, found by trying all 64.
    #[test]
    fn width_one_brute_force() {
        let cfg = SearchConfig::new(2, 1);
        for code in 0..64u8 {
            let rows = [[code % 4], [code / 4 % 4], [code / 16]];
            let refs: Vec<&[u8]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = Morphism::from_rows(&refs, 4).unwrap();
            assert!(check_candidate(&cfg, &m).unwrap().is_err());
        }
    }

    #[test]
    fn canonical_forms() {
        let m2 = canonicalize(&builtin_mu(2).unwrap());
        let rows: Vec<String> = m2
            .rows()
            .iter()
            .map(|r| r.iter().map(|c| char::from(b'0' + c)).collect())
            .collect();
        assert_eq!(rows, ["0120321", "0310213", "0230132"]);
        assert_eq!(canonicalize(&m2), m2);
        // The built-in table for k = 4 introduces 5 before 4.
        let m4 = canonicalize(&builtin_mu(4).unwrap());
        assert_eq!(m4.images()[0].as_slice(), &[0, 1, 2, 3, 4, 0, 5, 1, 2, 4, 3, 5]);
        assert_eq!(canonicalize(&m4), m4);
    }

    #[test]
    fn mu2_passes_and_is_found() {
        let cfg = k2(1);
        let mu = canonicalize(&builtin_mu(2).unwrap());
        assert_eq!(check_candidate(&cfg, &mu).unwrap(), Ok(()));
        let r = search_morphisms(&cfg).unwrap();
        assert!(r.is_complete());
        assert!(r.morphisms.contains(&mu), "{} found", r.morphisms.len());
        for m in &r.morphisms {
            assert_eq!(canonicalize(m), *m);
            assert_eq!(check_candidate(&cfg, m).unwrap(), Ok(()));
        }
    }

    #[test]
    fn jobs_do_not_change_output() {
        let a = search_morphisms(&k2(1)).unwrap();
        let b = search_morphisms(&k2(4)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn resume_reproduces_full_run() {
        let full = search_morphisms(&k2(1)).unwrap();
        for (jobs, budget) in [(1, 1), (1, 40), (3, 100)] {
            let cfg = SearchConfig {
                max_nodes: Some(budget),
                ..k2(jobs)
            };
            let mut found = Vec::new();
            let mut nodes = 0;
            let mut stats = SearchStats::default();
            let mut r = search_morphisms(&cfg).unwrap();
            let mut rounds = 1;
            loop {
                found.extend(r.morphisms.iter().cloned());
                nodes += r.nodes;
                stats.add(&r.stats);
                match r.checkpoint.take() {
                    Some(t) => r = resume_search(&cfg, &t).unwrap(),
                    None => break,
                }
                rounds += 1;
            }
            assert!(rounds > 2);
            assert_eq!(found, full.morphisms);
            assert_eq!(nodes, full.nodes);
            assert_eq!(stats, full.stats);
        }
    }

    #[test]
    fn result_limit_and_token_checks() {
        let cfg = SearchConfig {
            max_results: Some(1),
            ..k2(1)
        };
        let r = search_morphisms(&cfg).unwrap();
        assert_eq!(r.morphisms.len(), 1);
        let t = r.checkpoint.unwrap();
        let other = SearchConfig {
            width: 8,
            ..cfg.clone()
        };
        assert!(resume_search(&other, &t).is_err());
        assert!(resume_search(&cfg, "garbage").is_err());
        let next = resume_search(&cfg, &t).unwrap();
        assert_ne!(next.morphisms.first(), r.morphisms.first());
    }

    #[test]
    fn bad_configs() {
        assert!(search_morphisms(&SearchConfig::new(2, 0)).is_err());
        let cfg = SearchConfig {
            test_len: 3,
            ..SearchConfig::new(2, 7)
        };
        assert!(search_morphisms(&cfg).is_err());
        let cfg = SearchConfig {
            prefixes: [vec![9], vec![], vec![]],
            ..SearchConfig::new(2, 7)
        };
        assert!(search_morphisms(&cfg).is_err());
        let cfg = SearchConfig {
            max_nodes: Some(0),
            ..SearchConfig::new(2, 7)
        };
        assert!(search_morphisms(&cfg).is_err());
    }
}
