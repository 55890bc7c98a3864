use std::time::Instant;

use super::{Certificate, Witness};
use crate::constructions::{ConstructionKind, WREATH_DISPLAY_OFFSET};
use crate::error::{Error, Result};
use crate::morphisms::DEFAULT_CAP;
use crate::repetition::is_k_thue;
use crate::text::render;

/// Builds `kind` at `t`, then checks the distinctness window and the
/// k-Thue property directly. A length over the cap gives `aborted`.
pub fn verify_construction(kind: ConstructionKind, t: u32) -> Result<Certificate> {
    verify_construction_capped(kind, t, DEFAULT_CAP)
}

pub(crate) fn verify_construction_capped(kind: ConstructionKind, t: u32, cap: usize) -> Result<Certificate> {
    let started = Instant::now();
    let mut cert = Certificate::new("construction")
        .param("kind", kind.name())
        .param("t", t)
        .param("k", kind.k());
    let w = match kind.build_capped(t, cap) {
        Ok(w) => w,
        Err(Error::Resource { requested, .. }) => {
            cert.count("requested_length", requested.min(u64::MAX as u128) as u64);
            cert.abort();
            return Ok(cert.with_elapsed(started.elapsed()));
        }
        Err(e) => return Err(e),
    };
    cert.count("length", w.len() as u64);
    let rendered = || render(&w, WREATH_DISPLAY_OFFSET);
    let win = kind.distinct_window();
    let s = w.as_slice();
    let clash = s
        .windows(win)
        .position(|x| (0..win).any(|i| x[i + 1..].contains(&x[i])));
    if let Some(i) = clash {
        cert.fail(Witness::Distinctness {
            word: rendered(),
            alphabet_size: w.alphabet_size(),
            display_offset: WREATH_DISPLAY_OFFSET,
            start: i + 1,
            window: win,
        });
    } else if let Some(rep) = is_k_thue(&w, kind.k()) {
        cert.fail(Witness::Repetition {
            word: rendered(),
            alphabet_size: w.alphabet_size(),
            display_offset: WREATH_DISPLAY_OFFSET,
            repetition: rep,
            source: None,
        });
    }
    Ok(cert.with_elapsed(started.elapsed()))
}
