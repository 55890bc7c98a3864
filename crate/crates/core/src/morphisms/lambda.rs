//! The 4-uniform morphism on `{1, 2, 3, 4}` whose images permute symbols
//! only within the fixed pairs `{1, 2}` and `{3, 4}`. Stored 0-based.

use super::{Morphism, DEFAULT_CAP};
use crate::error::Result;
use crate::word::Word;

const LAMBDA: [[u8; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [0, 1, 3, 2], [1, 0, 2, 3]];

pub fn lambda_morphism() -> Morphism {
    let refs: Vec<&[u8]> = LAMBDA.iter().map(|r| r.as_slice()).collect();
    Morphism::from_rows(&refs, 4).expect("static table")
}

/// `λ^t(1)`, of length `4^t`.
pub fn lambda_iterate(t: u32) -> Result<Word> {
    lambda_iterate_capped(t, DEFAULT_CAP)
}

pub fn lambda_iterate_capped(t: u32, cap: usize) -> Result<Word> {
    lambda_morphism().iterate(0, t, cap)
}
