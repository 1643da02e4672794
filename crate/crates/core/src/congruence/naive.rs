//! Generate-then-filter enumeration, kept as an oracle for the pruned search.
//! Slow, but shares no logic with it beyond the final compatibility test.

use crate::act::FiniteAct;
use crate::partition::Partition;

use super::{violation, Congruence};

/// Every set partition of `{0, .., n-1}` with at most `max_blocks` blocks,
/// built by inserting elements one at a time into existing or new blocks.
pub fn set_partitions(n: usize, max_blocks: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for x in 0..n {
        let mut next = Vec::new();
        for blocks in out {
            for i in 0..blocks.len() {
                let mut b = blocks.clone();
                b[i].push(x);
                next.push(b);
            }
            if blocks.len() < max_blocks {
                let mut b = blocks;
                b.push(vec![x]);
                next.push(b);
            }
        }
        out = next;
    }
    out
}

/// All congruences of `act` with at most `max_blocks` classes, sorted by
/// restricted growth string.
pub fn congruences(act: &FiniteAct, max_blocks: usize) -> Vec<Congruence> {
    let mut found: Vec<Congruence> = set_partitions(act.size(), max_blocks)
        .into_iter()
        .map(|blocks| Partition::from_blocks(act.size(), &blocks))
        .filter(|p| violation(act, p).is_none())
        .map(Congruence::trusted)
        .collect();
    found.sort_by(|a, b| a.partition().as_slice().cmp(b.partition().as_slice()));
    found
}

/// The least-index congruence separating `a` from `forbidden`, ties broken
/// by restricted growth string.
pub fn least_separating(
    act: &FiniteAct,
    a: usize,
    forbidden: &[usize],
    max_blocks: usize,
) -> Option<Congruence> {
    congruences(act, max_blocks)
        .into_iter()
        .filter(|c| c.separates(a, forbidden))
        .min_by_key(|c| (c.index(), c.partition().as_slice().to_vec()))
}
