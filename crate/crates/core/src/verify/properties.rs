//! Plumbing shared by the block-property checkers of the two base
//! morphisms: building `m^(t-1)` and `m^t`, reporting failures as
//! re-checkable witnesses.

use std::collections::hash_map::{Entry, HashMap};
use std::hash::Hash;
use std::time::Instant;

use super::{Certificate, Status, Witness};
use crate::error::{Error, Result};
use crate::morphisms::{Morphism, DEFAULT_CAP};
use crate::text::{parse_word, render, WordFormat};

/// Failing positions (1-based term indices) and a description.
pub(crate) type Failure = Option<(Vec<usize>, String)>;

/// `m^(t-1)(seed)` and `m^t(seed)`.
pub(crate) fn iterates(m: &Morphism, seed: u8, t: u32, cap: usize) -> Result<(Vec<u8>, Vec<u8>)> {
    if t == 0 {
        return Err(Error::arg("block properties need t >= 1"));
    }
    let prev = m.iterate(seed, t - 1, cap)?.into_vec();
    let next_len = prev.len() as u128 * m.uniform_width().unwrap_or(1) as u128;
    if next_len > cap as u128 {
        return Err(Error::Resource {
            what: "iterated morphism",
            requested: next_len,
            cap,
        });
    }
    let cur = m.apply_raw(&prev);
    Ok((prev, cur))
}

pub(crate) fn table_rows(m: &Morphism) -> Vec<String> {
    m.images().iter().map(|w| render(w, 0)).collect()
}

/// Inserts `key -> value`; returns the earlier value when it differs.
pub(crate) fn insert_unique<K: Hash + Eq, V: Eq + Clone>(
    map: &mut HashMap<K, (V, usize)>,
    key: K,
    value: V,
    at: usize,
) -> Option<(V, usize)> {
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert((value, at));
            None
        }
        Entry::Occupied(e) => (e.get().0 != value).then(|| e.get().clone()),
    }
}

/// Runs `check` for each named property in order and stops at the first
/// failure.
pub(crate) fn run_properties<P: Copy>(
    task: &str,
    m: &Morphism,
    t: u32,
    props: &[P],
    name: impl Fn(P) -> &'static str,
    mut check: impl FnMut(P) -> Failure,
) -> Certificate {
    let started = Instant::now();
    let names: Vec<&str> = props.iter().map(|&p| name(p)).collect();
    let mut cert = Certificate::new(task).param("t", t).param("properties", names);
    let mut passed = 0u64;
    for &p in props {
        if let Some((positions, detail)) = check(p) {
            cert.fail(Witness::Property {
                property: name(p).to_string(),
                table: table_rows(m),
                t,
                positions,
                detail,
            });
            break;
        }
        passed += 1;
    }
    cert.count("properties_passed", passed);
    cert.with_elapsed(started.elapsed())
}

pub(crate) fn recheck_property(w: &Witness) -> Result<bool> {
    let Witness::Property { property, table, t, .. } = w else {
        return Err(Error::arg("not a property witness"));
    };
    let (alphabet, is_kappa) = match property.chars().next() {
        Some('K') => (6, true),
        Some('L') => (4, false),
        _ => return Err(Error::arg(format!("unknown property {property:?}"))),
    };
    let rows = table
        .iter()
        .enumerate()
        .map(|(i, r)| parse_word(r, i + 1, WordFormat::Digits { offset: 0 }, Some(alphabet)).map(|w| w.into_vec()))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&[u8]> = rows.iter().map(Vec::as_slice).collect();
    let m = Morphism::from_rows(&refs, alphabet)?;
    let cert = if is_kappa {
        let p = property.parse()?;
        super::kappa_props::verify_kappa_properties_with(&m, *t, &[p], DEFAULT_CAP)?
    } else {
        let p = property.parse()?;
        super::lambda_props::verify_lambda_properties_with(&m, *t, &[p], DEFAULT_CAP)?
    };
    Ok(cert.status == Status::Counterexample)
}
