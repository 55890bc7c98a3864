//! Executable checks for every claim that rests on a finite computation.
//! Each check returns a [`Certificate`]; failures carry a witness that can
//! be re-checked from the certificate alone.

mod bounded;
mod certificate;
mod construction;
mod kappa_props;
mod lambda_props;
pub(crate) mod properties;
mod suite;
mod tightness;
mod type_vector;
mod window;

pub use bounded::{bounded_image_search, verify_bounded_images, verify_bounded_images_with, BoundedSearch};
pub use certificate::{exit_code, Certificate, Status, Witness, CERTIFICATE_VERSION, TOOL_VERSION};
pub use construction::verify_construction;
pub use kappa_props::{verify_kappa_properties, verify_kappa_properties_with, KappaProperty};
pub use lambda_props::{verify_lambda_properties, verify_lambda_properties_with, LambdaProperty};
pub use suite::{run_suite, SuiteConfig, Task};
pub use tightness::{longest_k_thue_word, verify_tightness, verify_tightness_with, TightnessOptions};
pub use type_vector::{type_vector, TermType, TypeVector};
pub use window::{verify_window_determinism, verify_window_determinism_with, WindowScope};

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

/// Knobs shared by the exhaustive verifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Worker threads; results never depend on this.
    pub jobs: usize,
    /// Stop (status `aborted`) after this many search nodes.
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Length of the prefixes that split a search into work units.
    pub partition_depth: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: default_jobs(),
            max_nodes: None,
            time_limit: None,
            partition_depth: 8,
        }
    }
}

impl VerifyOptions {
    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }
}

/// `KTHUE_JOBS` if set, else the machine's parallelism.
pub fn default_jobs() -> usize {
    std::env::var("KTHUE_JOBS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&j| j > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Shared node/time budget for one verification run.
pub(crate) struct Budget {
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    used: AtomicU64,
    tripped: AtomicBool,
}

impl Budget {
    pub(crate) fn new(opts: &VerifyOptions) -> Self {
        Budget {
            max_nodes: opts.max_nodes,
            deadline: opts.time_limit.map(|d| Instant::now() + d),
            used: AtomicU64::new(0),
            tripped: AtomicBool::new(false),
        }
    }

    /// Records `n` more nodes; `false` once the budget is spent.
    #[inline]
    pub(crate) fn spend(&self, n: u64) -> bool {
        if self.max_nodes.is_none() && self.deadline.is_none() {
            return true;
        }
        if self.tripped.load(Ordering::Relaxed) {
            return false;
        }
        let used = self.used.fetch_add(n, Ordering::Relaxed) + n;
        let over_nodes = self.max_nodes.is_some_and(|m| used > m);
        let over_time = used % 1024 < n && self.deadline.is_some_and(|d| Instant::now() > d);
        if over_nodes || over_time {
            self.tripped.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub(crate) fn tripped(&self) -> bool {
        self.tripped.load(Ordering::Relaxed)
    }
}

/// Maps `f` over `units` on `jobs` threads, keeping input order.
pub(crate) fn par_map<U, T, F>(jobs: usize, units: &[U], f: F) -> Vec<T>
where
    U: Sync,
    T: Send,
    F: Fn(&U) -> T + Sync + Send,
{
    use rayon::prelude::*;
    if jobs <= 1 || units.len() <= 1 {
        return units.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| units.par_iter().map(&f).collect()),
        Err(_) => units.iter().map(f).collect(),
    }
}
