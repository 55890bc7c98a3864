use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use super::{
    verify_bounded_images_with, verify_construction, verify_kappa_properties, verify_lambda_properties,
    verify_tightness, verify_window_determinism_with, Certificate, KappaProperty, LambdaProperty, VerifyOptions,
    WindowScope,
};
use crate::constructions::ConstructionKind;
use crate::error::Result;
use crate::morphisms::{builtin_mu, Morphism};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    BoundedImages { k: usize, max_len: usize },
    WindowDeterminism { k: usize, scope: WindowScope },
    Tightness { k: usize },
    Kappa { t: u32, properties: Vec<KappaProperty> },
    Lambda { t: u32, properties: Vec<LambdaProperty> },
    Construction { kind: ConstructionKind, t: u32 },
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::BoundedImages { .. } => "bounded-images",
            Task::WindowDeterminism { .. } => "window-determinism",
            Task::Tightness { .. } => "tightness",
            Task::Kappa { .. } => "kappa",
            Task::Lambda { .. } => "lambda",
            Task::Construction { .. } => "construction",
        }
    }

    /// Every check at its standard bounds, with `max_len` for the bounded
    /// image search.
    pub fn all(max_len: usize) -> Vec<Task> {
        let mut tasks = Vec::new();
        for k in 2..=8 {
            tasks.push(Task::BoundedImages { k, max_len });
        }
        for k in 2..=8 {
            tasks.push(Task::WindowDeterminism {
                k,
                scope: WindowScope::All,
            });
        }
        for k in 1..=8 {
            tasks.push(Task::Tightness { k });
        }
        let (kt, kf): (Vec<_>, Vec<_>) = KappaProperty::ALL.into_iter().partition(|p| p.is_table_based());
        tasks.push(Task::Kappa { t: 6, properties: kf });
        tasks.push(Task::Kappa { t: 5, properties: kt });
        let (lt, lf): (Vec<_>, Vec<_>) = LambdaProperty::ALL.into_iter().partition(|p| p.is_table_based());
        tasks.push(Task::Lambda { t: 6, properties: lf });
        tasks.push(Task::Lambda { t: 5, properties: lt });
        for t in 1..=7 {
            tasks.push(Task::Construction {
                kind: ConstructionKind::Phi4,
                t,
            });
        }
        for t in 1..=6 {
            tasks.push(Task::Construction {
                kind: ConstructionKind::Phi6,
                t,
            });
        }
        tasks
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub tasks: Vec<Task>,
    pub options: VerifyOptions,
    /// Replacement tables for `μ_k`, keyed by `k`.
    pub mu_overrides: BTreeMap<usize, Morphism>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            tasks: Task::all(40),
            options: VerifyOptions::default(),
            mu_overrides: BTreeMap::new(),
        }
    }
}

fn mu(cfg: &SuiteConfig, k: usize) -> Result<Morphism> {
    match cfg.mu_overrides.get(&k) {
        Some(m) => Ok(m.clone()),
        None => builtin_mu(k),
    }
}

fn run_task(cfg: &SuiteConfig, task: &Task) -> Result<Certificate> {
    match task {
        Task::BoundedImages { k, max_len } => Ok(verify_bounded_images_with(&mu(cfg, *k)?, *k, *max_len, &cfg.options)),
        Task::WindowDeterminism { k, scope } => Ok(verify_window_determinism_with(&mu(cfg, *k)?, *k, *scope)),
        Task::Tightness { k } => verify_tightness(*k, &cfg.options),
        Task::Kappa { t, properties } => verify_kappa_properties(*t, properties),
        Task::Lambda { t, properties } => verify_lambda_properties(*t, properties),
        Task::Construction { kind, t } => verify_construction(*kind, *t),
    }
}

/// Runs every task in order. A task that errors or panics yields an
/// `aborted` certificate carrying the message under the `error` parameter.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<Certificate> {
    cfg.tasks
        .iter()
        .map(|task| {
            let started = Instant::now();
            let failed = |msg: String| {
                let mut c = Certificate::new(task.name()).param("error", msg);
                c.abort();
                c.with_elapsed(started.elapsed())
            };
            match catch_unwind(AssertUnwindSafe(|| run_task(cfg, task))) {
                Ok(Ok(c)) => c,
                Ok(Err(e)) => failed(e.to_string()),
                Err(p) => failed(
                    p.downcast_ref::<&str>()
                        .map(|s| s.to_string())
                        .or_else(|| p.downcast_ref::<String>().cloned())
                        .unwrap_or_else(|| "panic".into()),
                ),
            }
        })
        .collect()
}
