//! The block properties of `λ^t`, checked exhaustively over every aligned
//! 4-block. The preimage of block `i` is term `i` of `λ^(t-1)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use super::properties::{insert_unique, iterates, run_properties, Failure};
use super::Certificate;
use crate::error::{Error, Result};
use crate::morphisms::{lambda_morphism, Morphism, DEFAULT_CAP};
use crate::repetition::first_square_in;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LambdaProperty {
    /// Adjacent blocks concatenate to a square-free word.
    L1,
    /// Length `4^t`; aligned 4-blocks are images.
    L2,
    /// Terms 1, 2 of a block are `{1, 2}`, terms 3, 4 are `{3, 4}`.
    L3,
    /// A block differs from the block two places on.
    L4,
    /// Consecutive blocks agreeing on their first (last) two terms come
    /// from `{1, 3}` or `{2, 4}` (`{1, 4}` or `{2, 3}`).
    L5,
    /// Given the third block of a run of three, the half-class of the first
    /// fixes it.
    L6,
    /// Blocks `4m` apart sharing a term are equal; blocks `4m + 2` apart differ.
    L7,
    /// One known term leaves two possible blocks, with the stated preimages.
    L8,
}

impl LambdaProperty {
    pub const ALL: [LambdaProperty; 8] = [
        Self::L1,
        Self::L2,
        Self::L3,
        Self::L4,
        Self::L5,
        Self::L6,
        Self::L7,
        Self::L8,
    ];

    pub fn name(self) -> &'static str {
        const NAMES: [&str; 8] = ["L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8"];
        NAMES[self as usize]
    }

    pub fn is_table_based(self) -> bool {
        matches!(self, Self::L6 | Self::L8)
    }
}

impl fmt::Display for LambdaProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LambdaProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::arg(format!("unknown property {s:?}; expected L1..L8")))
    }
}

type Block = [u8; 4];

/// Blocks and preimages seen with one term at one place, and where first.
type Fits = (BTreeSet<Block>, BTreeSet<u8>, usize);

/// Preimage classes (0-based) allowed when blocks agree on their first
/// half, and on their second half.
const FRONT_CLASSES: [[u8; 2]; 2] = [[0, 2], [1, 3]];
const BACK_CLASSES: [[u8; 2]; 2] = [[0, 3], [1, 2]];

fn within(set: &BTreeSet<u8>, classes: &[[u8; 2]; 2]) -> bool {
    classes.iter().any(|c| set.iter().all(|x| c.contains(x)))
}

fn show(b: &[u8]) -> String {
    b.iter().map(|&x| char::from(b'1' + x)).collect()
}

fn pos(i: usize) -> usize {
    4 * i + 1
}

struct Ctx {
    prev: Vec<u8>,
    blocks: Vec<Block>,
    images: Vec<Block>,
    len: usize,
    t: u32,
    adj: BTreeMap<(Block, Block), usize>,
}

impl Ctx {
    fn new(m: &Morphism, t: u32, cap: usize) -> Result<Ctx> {
        let (prev, cur) = iterates(m, 0, t, cap)?;
        let blocks: Vec<Block> = cur.chunks_exact(4).map(|c| [c[0], c[1], c[2], c[3]]).collect();
        let images = m.rows().iter().map(|r| [r[0], r[1], r[2], r[3]]).collect();
        let mut adj = BTreeMap::new();
        for (i, w) in blocks.windows(2).enumerate() {
            let key = if w[0] <= w[1] { (w[0], w[1]) } else { (w[1], w[0]) };
            adj.entry(key).or_insert(i);
        }
        Ok(Ctx {
            prev,
            blocks,
            images,
            len: cur.len(),
            t,
            adj,
        })
    }

    fn check(&self, p: LambdaProperty) -> Failure {
        use LambdaProperty::*;
        let b = &self.blocks;
        match p {
            L1 => self.adj.iter().find_map(|(&(x, y), &i)| {
                [[x, y], [y, x]].into_iter().find_map(|[u, v]| {
                    let s = [u, v].concat();
                    first_square_in(&s).map(|_| (vec![pos(i), pos(i + 1)], format!("{} is not square-free", show(&s))))
                })
            }),
            L2 => {
                let expect = 4usize.pow(self.t);
                if self.len != expect {
                    return Some((vec![], format!("length {} instead of {expect}", self.len)));
                }
                b.iter()
                    .position(|x| !self.images.contains(x))
                    .map(|i| (vec![pos(i)], format!("block {} is not an image", show(&b[i]))))
            }
            L3 => b
                .iter()
                .position(|x| {
                    let (mut f, mut l) = ([x[0], x[1]], [x[2], x[3]]);
                    f.sort_unstable();
                    l.sort_unstable();
                    f != [0, 1] || l != [2, 3]
                })
                .map(|i| (vec![pos(i)], format!("block {} breaks the pair structure", show(&b[i])))),
            L4 => b.windows(3).position(|w| w[0] == w[2]).map(|i| {
                (
                    vec![pos(i), pos(i + 2)],
                    format!("block {} repeats two places on", show(&b[i])),
                )
            }),
            L5 => b.windows(2).enumerate().find_map(|(i, w)| {
                let pre: BTreeSet<u8> = [self.prev[i], self.prev[i + 1]].into();
                let front = w[0][..2] == w[1][..2] && !within(&pre, &FRONT_CLASSES);
                let back = w[0][2..] == w[1][2..] && !within(&pre, &BACK_CLASSES);
                (front || back).then(|| {
                    (
                        vec![pos(i), pos(i + 1)],
                        format!(
                            "blocks {} {} come from {} and {}",
                            show(&w[0]),
                            show(&w[1]),
                            self.prev[i] + 1,
                            self.prev[i + 1] + 1
                        ),
                    )
                })
            }),
            L6 => {
                let mut seen = HashMap::new();
                b.windows(3).enumerate().find_map(|(i, w)| {
                    [(0usize, [w[0][0], w[0][1]]), (1, [w[0][2], w[0][3]])]
                        .into_iter()
                        .find_map(|(half, terms)| {
                            insert_unique(&mut seen, (w[2], half, terms), w[0], i).map(|(other, k)| {
                                (
                                    vec![pos(k), pos(i)],
                                    format!(
                                        "{} and {} both start a run of three ending in {}",
                                        show(&other),
                                        show(&w[0]),
                                        show(&w[2])
                                    ),
                                )
                            })
                        })
                })
            }
            L7 => {
                // Within one residue class mod 4 a single term fixes the
                // block; classes two apart share no block.
                let mut seen = HashMap::new();
                let mut class: [BTreeMap<Block, usize>; 4] = Default::default();
                for (i, x) in b.iter().enumerate() {
                    class[i % 4].entry(*x).or_insert(i);
                    for q in 0..4 {
                        if let Some((other, k)) = insert_unique(&mut seen, (i % 4, q, x[q]), *x, i) {
                            return Some((
                                vec![pos(k), pos(i)],
                                format!("{} and {} are 4m apart and share term {}", show(&other), show(x), q + 1),
                            ));
                        }
                    }
                }
                (0..2).find_map(|r| {
                    class[r].iter().find_map(|(x, &i)| {
                        class[r + 2]
                            .get(x)
                            .map(|&j| (vec![pos(i), pos(j)], format!("{} occurs 4m + 2 apart", show(x))))
                    })
                })
            }
            L8 => {
                let mut seen: BTreeMap<(usize, u8), Fits> = BTreeMap::new();
                for (i, x) in b.iter().enumerate() {
                    for q in 0..4 {
                        let e = seen
                            .entry((q, x[q]))
                            .or_insert_with(|| (BTreeSet::new(), BTreeSet::new(), i));
                        e.0.insert(*x);
                        e.1.insert(self.prev[i]);
                    }
                }
                seen.iter().find_map(|(&(q, s), (blocks, pre, i))| {
                    let classes = if q < 2 { &FRONT_CLASSES } else { &BACK_CLASSES };
                    (blocks.len() > 2 || !within(pre, classes)).then(|| {
                        (
                            vec![pos(*i) + q],
                            format!(
                                "term {} at {} fits {} blocks from preimages {:?}",
                                s + 1,
                                q + 1,
                                blocks.len(),
                                pre.iter().map(|p| p + 1).collect::<Vec<_>>()
                            ),
                        )
                    })
                })
            }
        }
    }
}

/// Checks `props` for the built-in block morphism at `t`.
pub fn verify_lambda_properties(t: u32, props: &[LambdaProperty]) -> Result<Certificate> {
    verify_lambda_properties_with(&lambda_morphism(), t, props, DEFAULT_CAP)
}

/// Same, for any 4-uniform table on four symbols.
pub fn verify_lambda_properties_with(
    m: &Morphism,
    t: u32,
    props: &[LambdaProperty],
    cap: usize,
) -> Result<Certificate> {
    if m.domain_size() != 4 || m.codomain_size() != 4 || m.uniform_width() != Some(4) {
        return Err(Error::arg("expected a 4-uniform morphism on four symbols"));
    }
    let ctx = match Ctx::new(m, t, cap) {
        Ok(c) => c,
        Err(Error::Resource { requested, .. }) => {
            let mut cert = Certificate::new("lambda").param("t", t);
            cert.count("requested_length", requested.min(u64::MAX as u128) as u64);
            cert.abort();
            return Ok(cert);
        }
        Err(e) => return Err(e),
    };
    let mut cert = run_properties("lambda", m, t, props, LambdaProperty::name, |p| ctx.check(p));
    cert.count("blocks", ctx.blocks.len() as u64);
    cert.count("adjacent_pairs", ctx.adj.len() as u64);
    Ok(cert)
}
