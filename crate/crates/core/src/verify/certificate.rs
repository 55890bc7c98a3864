use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;
use crate::repetition::{is_k_thue, RepetitionWitness};
use crate::text::{parse_word, WordFormat};
use crate::word::{d_subsequence, Word};

/// Bumped whenever a key is renamed or its meaning changes.
pub const CERTIFICATE_VERSION: u32 = 1;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Counterexample,
    Aborted,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Counterexample => 1,
            Status::Aborted => 2,
        }
    }
}

/// Process exit code for a batch: any counterexample wins, then any abort.
pub fn exit_code(certs: &[Certificate]) -> i32 {
    if certs.iter().any(|c| c.status == Status::Counterexample) {
        1
    } else if certs.iter().any(|c| c.status == Status::Aborted) {
        2
    } else {
        0
    }
}

/// Words inside witnesses are rendered in the plain-text format with the
/// stated display offset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A square in a `d`-subsequence of `word`. `source` is the ternary
    /// preimage when the word is a morphic image.
    Repetition {
        word: String,
        alphabet_size: usize,
        display_offset: u8,
        repetition: RepetitionWitness,
        source: Option<String>,
    },
    /// Two 4-letter windows whose images share a `d`-subsequence (same
    /// offset, same content) but differ in their two middle letters.
    KeyCollision {
        d: usize,
        offset: usize,
        content: String,
        first: String,
        second: String,
        first_image: String,
        second_image: String,
        alphabet_size: usize,
    },
    /// A named structural property fails. `table` and `t` rebuild the word.
    Property {
        property: String,
        table: Vec<String>,
        t: u32,
        positions: Vec<usize>,
        detail: String,
    },
    /// A longest k-Thue word over `k + 1` letters, when its length is not
    /// `2k + 1`.
    Tightness {
        k: usize,
        max_length: usize,
        example: String,
    },
    /// A window of `window` consecutive terms starting at `start` (1-based)
    /// that repeats a symbol.
    Distinctness {
        word: String,
        alphabet_size: usize,
        display_offset: u8,
        start: usize,
        window: usize,
    },
}

fn parse(s: &str, alphabet: usize, offset: u8) -> Result<Word> {
    let fmt = if alphabet + offset as usize <= 10 {
        WordFormat::Digits { offset }
    } else {
        WordFormat::Integers { offset }
    };
    parse_word(s, 1, fmt, Some(alphabet))
}

impl Witness {
    /// Reproduces the violation from the witness alone. `Ok(true)` means
    /// the witness is genuine.
    pub fn recheck(&self) -> Result<bool> {
        match self {
            Witness::Repetition {
                word,
                alphabet_size,
                display_offset,
                repetition,
                ..
            } => {
                let w = parse(word, *alphabet_size, *display_offset)?;
                Ok(repetition.holds(&w))
            }
            Witness::KeyCollision {
                d,
                offset,
                content,
                first,
                second,
                first_image,
                second_image,
                alphabet_size,
            } => {
                let a = parse(first_image, *alphabet_size, 0)?;
                let b = parse(second_image, *alphabet_size, 0)?;
                let c = parse(content, *alphabet_size, 0)?;
                let sa = d_subsequence(&a, *d, *offset)?;
                let sb = d_subsequence(&b, *d, *offset)?;
                let mid = |s: &str| s.get(1..3).map(str::to_owned);
                Ok(sa.as_slice() == c.as_slice() && sb.as_slice() == c.as_slice() && mid(first) != mid(second))
            }
            Witness::Property { .. } => super::properties::recheck_property(self),
            Witness::Tightness { k, max_length, example } => {
                let w = parse(example, k + 1, 0)?;
                if w.len() != *max_length || is_k_thue(&w, *k).is_some() {
                    return Ok(false);
                }
                if w.len() > 2 * k + 1 {
                    return Ok(true);
                }
                // A shorter maximum needs the exhaustive walk again.
                let opts = super::TightnessOptions {
                    symmetry_breaking: true,
                    verify: super::VerifyOptions::default().with_jobs(1),
                };
                let (best, _) = super::longest_k_thue_word(*k, &opts)?;
                Ok(best.len() == *max_length)
            }
            Witness::Distinctness {
                word,
                alphabet_size,
                display_offset,
                start,
                window,
            } => {
                let w = parse(word, *alphabet_size, *display_offset)?;
                let s = w.as_slice();
                if *start == 0 || start - 1 + window > s.len() {
                    return Ok(false);
                }
                let win = &s[start - 1..start - 1 + window];
                Ok((0..win.len()).any(|i| win[i + 1..].contains(&win[i])))
            }
        }
    }
}

/// Record of one verification run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub version: u32,
    pub task_name: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    pub witness: Option<Witness>,
    pub counts: BTreeMap<String, u64>,
    pub elapsed_ms: u64,
    pub tool_version: String,
}

impl Certificate {
    pub fn new(task_name: impl Into<String>) -> Self {
        Certificate {
            version: CERTIFICATE_VERSION,
            task_name: task_name.into(),
            parameters: BTreeMap::new(),
            status: Status::Verified,
            witness: None,
            counts: BTreeMap::new(),
            elapsed_ms: 0,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn count(&mut self, key: &str, value: u64) {
        self.counts.insert(key.to_string(), value);
    }

    pub fn fail(&mut self, witness: Witness) {
        self.status = Status::Counterexample;
        self.witness = Some(witness);
    }

    pub fn abort(&mut self) {
        self.status = Status::Aborted;
    }

    pub fn with_elapsed(mut self, d: Duration) -> Self {
        self.elapsed_ms = d.as_millis() as u64;
        self
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// The certificate with its timing field zeroed, for comparing runs.
    pub fn without_timing(&self) -> Certificate {
        Certificate {
            elapsed_ms: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Certificate> {
        serde_json::from_str(s)
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let params = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let counts = self
            .counts
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let status = match self.status {
            Status::Verified => "verified",
            Status::Counterexample => "COUNTEREXAMPLE",
            Status::Aborted => "ABORTED",
        };
        format!(
            "{:<20} {:<14} {}  [{}]  {} ms",
            self.task_name, status, params, counts, self.elapsed_ms
        )
    }
}
