//! The block properties of the projected hexagonal iterate, each checked
//! exhaustively over every block and every adjacent block pair of `κ^t`.
//!
//! Blocks are the aligned projected triples. Two block values are adjacent
//! when they occur next to each other somewhere in `κ^t`; adjacency is
//! unordered.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use super::properties::{insert_unique, iterates, run_properties, Failure};
use super::Certificate;
use crate::error::{Error, Result};
use crate::morphisms::{kappa_morphism, AuxSymbol, Morphism, DEFAULT_CAP};
use crate::repetition::first_square_in;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KappaProperty {
    /// Adjacent blocks concatenate to a square-free word.
    K1,
    /// Length `3^t`; aligned triples are images.
    K2,
    /// Every block is a permutation of `{1, 2, 3}`.
    K3,
    /// Consecutive blocks have different middle terms.
    K4,
    /// Three consecutive terms across a block boundary fix both blocks.
    K5,
    /// The first term of a block differs from the last of an adjacent one.
    K6,
    /// Distinct blocks sharing a first or last term are adjacent.
    K7,
    /// No two adjacent blocks share a third adjacent block.
    K8,
    /// The middle term of `π(κ(a))` is `π(a) + 1 (mod 3)`.
    K9,
    /// Distinct first (or last) terms of two adjacent blocks fix both.
    K10,
    /// A block and one term of an adjacent block fix that block.
    K11,
    /// Occurrences of adjacent blocks are an odd number of places apart.
    K12,
}

impl KappaProperty {
    pub const ALL: [KappaProperty; 12] = [
        Self::K1,
        Self::K2,
        Self::K3,
        Self::K4,
        Self::K5,
        Self::K6,
        Self::K7,
        Self::K8,
        Self::K9,
        Self::K10,
        Self::K11,
        Self::K12,
    ];

    pub fn name(self) -> &'static str {
        const NAMES: [&str; 12] = [
            "K1", "K2", "K3", "K4", "K5", "K6", "K7", "K8", "K9", "K10", "K11", "K12",
        ];
        NAMES[self as usize]
    }

    /// Properties that are uniqueness claims checked by building a table.
    pub fn is_table_based(self) -> bool {
        matches!(self, Self::K5 | Self::K7 | Self::K8 | Self::K10 | Self::K11)
    }
}

impl fmt::Display for KappaProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KappaProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::arg(format!("unknown property {s:?}; expected K1..K12")))
    }
}

type Block = [u8; 3];

struct Ctx {
    /// `κ^(t-1)` over the six codes.
    prev: Vec<u8>,
    /// Projected blocks of `κ^t`.
    blocks: Vec<Block>,
    /// Projected images of the table, by code.
    images: Vec<Block>,
    len: usize,
    t: u32,
    /// Unordered adjacent pairs with the block index of a first occurrence.
    adj: BTreeMap<(Block, Block), usize>,
}

fn ordered(a: Block, b: Block) -> (Block, Block) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn show(b: &[u8]) -> String {
    b.iter().map(|&x| char::from(b'1' + x)).collect()
}

/// 1-based term position of the first term of block `i`.
fn pos(i: usize) -> usize {
    3 * i + 1
}

impl Ctx {
    fn new(m: &Morphism, t: u32, cap: usize) -> Result<Ctx> {
        let (prev, cur) = iterates(m, AuxSymbol::over(1).code(), t, cap)?;
        let proj = |c: &u8| c / 2;
        let blocks: Vec<Block> = cur
            .chunks_exact(3)
            .map(|c| [proj(&c[0]), proj(&c[1]), proj(&c[2])])
            .collect();
        let images = m
            .rows()
            .iter()
            .map(|r| [proj(&r[0]), proj(&r[1]), proj(&r[2])])
            .collect();
        let mut adj = BTreeMap::new();
        for (i, w) in blocks.windows(2).enumerate() {
            adj.entry(ordered(w[0], w[1])).or_insert(i);
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

    fn adjacent(&self, a: Block, b: Block) -> bool {
        self.adj.contains_key(&ordered(a, b))
    }

    fn check(&self, p: KappaProperty) -> Failure {
        use KappaProperty::*;
        let b = &self.blocks;
        match p {
            K1 => self.adj.iter().find_map(|(&(x, y), &i)| {
                [[x, y], [y, x]].into_iter().find_map(|[u, v]| {
                    let s = [u, v].concat();
                    first_square_in(&s).map(|_| (vec![pos(i), pos(i + 1)], format!("{} is not square-free", show(&s))))
                })
            }),
            K2 => {
                let expect = 3usize.pow(self.t);
                if self.len != expect {
                    return Some((vec![], format!("length {} instead of {expect}", self.len)));
                }
                b.iter()
                    .position(|x| !self.images.contains(x))
                    .map(|i| (vec![pos(i)], format!("block {} is not an image", show(&b[i]))))
            }
            K3 => b
                .iter()
                .position(|x| {
                    let mut s = *x;
                    s.sort_unstable();
                    s != [0, 1, 2]
                })
                .map(|i| {
                    (
                        vec![pos(i)],
                        format!("block {} is not a permutation of 123", show(&b[i])),
                    )
                }),
            K4 => b
                .windows(2)
                .position(|w| w[0][1] == w[1][1])
                .map(|i| (vec![pos(i) + 1, pos(i + 1) + 1], "equal middle terms".into())),
            K5 => {
                let flat: Vec<u8> = b.concat();
                let mut seen = HashMap::new();
                (0..flat.len().saturating_sub(2)).filter(|j| j % 3 != 0).find_map(|j| {
                    let key = (j % 3, [flat[j], flat[j + 1], flat[j + 2]]);
                    let val = (b[j / 3], b[j / 3 + 1]);
                    insert_unique(&mut seen, key, val, j).map(|(_, k)| {
                        (
                            vec![k + 1, j + 1],
                            format!("terms {} fit two different block pairs", show(&key.1)),
                        )
                    })
                })
            }
            K6 => b.windows(2).enumerate().find_map(|(i, w)| {
                if w[0][0] == w[1][2] {
                    Some((
                        vec![pos(i), pos(i + 1) + 2],
                        "first of left block equals last of right".into(),
                    ))
                } else if w[1][0] == w[0][2] {
                    Some((
                        vec![pos(i + 1), pos(i) + 2],
                        "first of right block equals last of left".into(),
                    ))
                } else {
                    None
                }
            }),
            K7 => {
                let mut first: BTreeMap<Block, usize> = BTreeMap::new();
                for (i, x) in b.iter().enumerate() {
                    first.entry(*x).or_insert(i);
                }
                let vals: Vec<(&Block, &usize)> = first.iter().collect();
                vals.iter().enumerate().find_map(|(n, &(x, &i))| {
                    vals[n + 1..].iter().find_map(|&(y, &j)| {
                        let share = x[0] == y[0] || x[2] == y[2];
                        (share && !self.adjacent(*x, *y)).then(|| {
                            (
                                vec![pos(i), pos(j)],
                                format!("{} and {} share an end term but are not adjacent", show(x), show(y)),
                            )
                        })
                    })
                })
            }
            K8 => {
                let mut nbrs: BTreeMap<Block, BTreeSet<Block>> = BTreeMap::new();
                for &(x, y) in self.adj.keys() {
                    nbrs.entry(x).or_default().insert(y);
                    nbrs.entry(y).or_default().insert(x);
                }
                self.adj.iter().find_map(|(&(x, y), &i)| {
                    nbrs[&x].intersection(&nbrs[&y]).next().map(|z| {
                        (
                            vec![pos(i), pos(i + 1)],
                            format!("{} and {} are both adjacent to {}", show(&x), show(&y), show(z)),
                        )
                    })
                })
            }
            K9 => {
                let table = self.images.iter().enumerate().find_map(|(c, img)| {
                    (img[1] != (c as u8 / 2 + 1) % 3)
                        .then(|| (vec![], format!("image of code {c} has middle term {}", img[1] + 1)))
                });
                table.or_else(|| {
                    b.iter().zip(&self.prev).enumerate().find_map(|(i, (x, &c))| {
                        (x[1] != (c / 2 + 1) % 3).then(|| (vec![pos(i) + 1], format!("preimage letter {}", c / 2 + 1)))
                    })
                })
            }
            K10 => {
                let mut seen = HashMap::new();
                b.windows(2).enumerate().find_map(|(i, w)| {
                    [(w[0], w[1]), (w[1], w[0])].into_iter().find_map(|(u, v)| {
                        [0usize, 2].into_iter().find_map(|e| {
                            if u[e] == v[e] {
                                return None;
                            }
                            insert_unique(&mut seen, (e, u[e], v[e]), (u, v), i).map(|(_, k)| {
                                (
                                    vec![pos(k), pos(i)],
                                    format!(
                                        "{} terms {}{} fit two adjacent block pairs",
                                        if e == 0 { "first" } else { "last" },
                                        u[e] + 1,
                                        v[e] + 1
                                    ),
                                )
                            })
                        })
                    })
                })
            }
            K11 => {
                let mut seen = HashMap::new();
                b.windows(2).enumerate().find_map(|(i, w)| {
                    [(w[0], w[1]), (w[1], w[0])].into_iter().find_map(|(u, v)| {
                        (0..3).find_map(|q| {
                            insert_unique(&mut seen, (u, q, v[q]), v, i).map(|(other, k)| {
                                (
                                    vec![pos(k), pos(i)],
                                    format!(
                                        "{} with term {} at {} fits {} and {}",
                                        show(&u),
                                        v[q] + 1,
                                        q + 1,
                                        show(&other),
                                        show(&v)
                                    ),
                                )
                            })
                        })
                    })
                })
            }
            K12 => {
                let mut parity: HashMap<Block, usize> = HashMap::new();
                b.iter().enumerate().find_map(|(i, x)| {
                    let &mut j = parity.entry(*x).or_insert(i);
                    ((i - j) % 2 == 1).then(|| {
                        (
                            vec![pos(j), pos(i)],
                            format!("{} occurs an odd distance from itself", show(x)),
                        )
                    })
                })
            }
        }
    }
}

/// Checks `props` for the built-in hexagonal morphism at `t`.
pub fn verify_kappa_properties(t: u32, props: &[KappaProperty]) -> Result<Certificate> {
    verify_kappa_properties_with(&kappa_morphism(), t, props, DEFAULT_CAP)
}

/// Same, for any 3-uniform table over the six codes of [`AuxSymbol::code`].
pub fn verify_kappa_properties_with(m: &Morphism, t: u32, props: &[KappaProperty], cap: usize) -> Result<Certificate> {
    if m.domain_size() != 6 || m.codomain_size() != 6 || m.uniform_width() != Some(3) {
        return Err(Error::arg("expected a 3-uniform morphism on six symbols"));
    }
    let ctx = match Ctx::new(m, t, cap) {
        Ok(c) => c,
        Err(Error::Resource { requested, .. }) => {
            let mut cert = Certificate::new("kappa").param("t", t);
            cert.count("requested_length", requested.min(u64::MAX as u128) as u64);
            cert.abort();
            return Ok(cert);
        }
        Err(e) => return Err(e),
    };
    let mut cert = run_properties("kappa", m, t, props, KappaProperty::name, |p| ctx.check(p));
    cert.count("blocks", ctx.blocks.len() as u64);
    cert.count("adjacent_pairs", ctx.adj.len() as u64);
    Ok(cert)
}
