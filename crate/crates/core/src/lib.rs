//! Construction and exhaustive verification of k-Thue words: words whose
//! every `d`-subsequence, `1 <= d <= k`, is square-free, over `k + 2`
//! symbols.

pub mod constructions;
pub mod error;
pub mod exponent;
pub mod morphisms;
pub mod repetition;
pub mod search;
pub mod text;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use exponent::{is_q_plus_free, max_exponent, Exponent, ExponentWitness};
pub use repetition::{find_square, is_k_thue, RepetitionWitness, SquareWitness};
pub use word::{circular, circular_prefix, covering_subsequence, d_subsequence, shift, wreath, Symbol, Word};
