//! Congruences on finite acts.
//!
//! A [`Congruence`] only exists after its partition has been checked against
//! an act; the free functions here are the only ways to obtain one.

pub mod naive;
mod search;

use serde::Serialize;

use crate::act::{ActHomomorphism, FiniteAct};
use crate::error::{Error, Result};
use crate::partition::{Partition, UnionFind};

pub use search::{estimate, stirling2, PartitionSearch, SearchLimits, DEFAULT_MAX_SEARCH};

/// A partition verified to be compatible with an act.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Congruence {
    partition: Partition,
}

impl Congruence {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn into_partition(self) -> Partition {
        self.partition
    }

    pub fn size(&self) -> usize {
        self.partition.size()
    }

    pub fn index(&self) -> usize {
        self.partition.index()
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.partition.same_block(a, b)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.partition.blocks()
    }

    /// Whether no element of `forbidden` shares a block with `a`.
    pub fn separates(&self, a: usize, forbidden: &[usize]) -> bool {
        forbidden.iter().all(|&x| !self.same_block(a, x))
    }

    pub(crate) fn trusted(partition: Partition) -> Self {
        Congruence { partition }
    }
}

fn check_size(act: &FiniteAct, partition: &Partition) -> Result<()> {
    if partition.size() != act.size() {
        return Err(Error::SizeMismatch {
            expected: act.size(),
            got: partition.size(),
        });
    }
    Ok(())
}

/// First `(a, b, m)` with `a ~ b` but `am`, `bm` in different blocks.
pub fn violation(act: &FiniteAct, partition: &Partition) -> Option<(usize, usize, usize)> {
    for a in 0..act.size() {
        for b in a + 1..act.size() {
            if !partition.same_block(a, b) {
                continue;
            }
            for m in act.monoid().elements() {
                if !partition.same_block(act.act(a, m), act.act(b, m)) {
                    return Some((a, b, m));
                }
            }
        }
    }
    None
}

/// Checks `a ~ b => am ~ bm` exhaustively.
pub fn verify(act: &FiniteAct, partition: Partition) -> Result<Congruence> {
    check_size(act, &partition)?;
    match violation(act, &partition) {
        Some((a, b, m)) => Err(Error::NotCompatible(a, b, m)),
        None => Ok(Congruence { partition }),
    }
}

/// The least equivalence containing `seeds` that is closed under the unary
/// maps `x -> op(x, k)` for `k < ops`, skipping undefined values.
///
/// Each class keeps one known image per map; merging two classes pushes the
/// pair of their images, which is enough even when some members have no image.
pub fn close_under<F>(size: usize, ops: usize, op: F, seeds: &[(usize, usize)]) -> Partition
where
    F: Fn(usize, usize) -> Option<usize>,
{
    let mut uf = UnionFind::new(size);
    let mut images: Vec<Vec<Option<usize>>> = (0..size)
        .map(|x| (0..ops).map(|k| op(x, k)).collect())
        .collect();
    let mut pending: Vec<(usize, usize)> = seeds.to_vec();
    while let Some((x, y)) = pending.pop() {
        let Some((root, absorbed)) = uf.union(x, y) else {
            continue;
        };
        let moved = std::mem::take(&mut images[absorbed]);
        for (k, image) in moved.into_iter().enumerate() {
            match (images[root][k], image) {
                (Some(p), Some(q)) => pending.push((p, q)),
                (None, Some(q)) => images[root][k] = Some(q),
                _ => {}
            }
        }
    }
    uf.to_partition()
}

/// The congruence generated by `seeds`.
pub fn principal_closure(act: &FiniteAct, seeds: &[(usize, usize)]) -> Result<Congruence> {
    if let Some(&(a, b)) = seeds
        .iter()
        .find(|&&(a, b)| a >= act.size() || b >= act.size())
    {
        return Err(Error::OutOfRange(a.max(b), act.size()));
    }
    let p = close_under(
        act.size(),
        act.monoid().order(),
        |a, m| Some(act.act(a, m)),
        seeds,
    );
    debug_assert!(violation(act, &p).is_none());
    Ok(Congruence { partition: p })
}

/// `rho_B`: the subact `B` is one block, everything else a singleton.
pub fn rees_congruence(act: &FiniteAct, subact: &[usize]) -> Result<Congruence> {
    act.check_subact(subact)?;
    let p = Partition::from_blocks(act.size(), &[subact.to_vec()]);
    Ok(Congruence { partition: p })
}

/// The intersection of finitely many congruences on one act.
pub fn meet(congruences: &[&Congruence]) -> Result<Congruence> {
    let (first, rest) = congruences.split_first().ok_or(Error::EmptyGeneratorSet)?;
    let mut p = first.partition.clone();
    for c in rest {
        if c.size() != p.size() {
            return Err(Error::ActMismatch);
        }
        p = p.meet(&c.partition);
    }
    Ok(Congruence { partition: p })
}

/// `rho` restricted to a subact, on the subact reindexed ascending.
pub fn restrict(
    act: &FiniteAct,
    rho: &Congruence,
    subact: &[usize],
) -> Result<(FiniteAct, Congruence)> {
    if rho.size() != act.size() {
        return Err(Error::ActMismatch);
    }
    let (sub, inclusion) = act.restrict_to(subact)?;
    let labels: Vec<usize> = inclusion
        .iter()
        .map(|&x| rho.partition.block_of(x))
        .collect();
    Ok((sub, Congruence::trusted(Partition::from_labels(&labels))))
}

/// `A/rho` with classes ordered by least member, and the projection.
pub fn quotient(act: &FiniteAct, rho: &Congruence) -> (FiniteAct, ActHomomorphism) {
    assert_eq!(rho.size(), act.size(), "congruence on a different act");
    let p = &rho.partition;
    let blocks = p.blocks();
    let n = act.monoid().order();
    let mut table = Vec::with_capacity(blocks.len() * n);
    for b in &blocks {
        table.extend(
            act.monoid()
                .elements()
                .map(|m| p.block_of(act.act(b[0], m))),
        );
    }
    let labels = blocks
        .iter()
        .map(|b| format!("[{}]", act.label(b[0])))
        .collect();
    let q = FiniteAct::from_validated(act.monoid().clone(), blocks.len(), table, Some(labels));
    let proj = ActHomomorphism::new(act, &q, p.as_slice().to_vec())
        .expect("projection onto a quotient is a homomorphism");
    (q, proj)
}

/// `ker f = {(a, b) : af = bf}`.
pub fn kernel(source: &FiniteAct, hom: &ActHomomorphism) -> Result<Congruence> {
    if hom.map().len() != source.size() {
        return Err(Error::ActMismatch);
    }
    Ok(Congruence::trusted(Partition::from_labels(hom.map())))
}

/// All congruences with at most `max_index` classes, in restricted-growth
/// order, lazily. Fails up front if the search estimate exceeds the cap.
pub fn enumerate<'a>(
    act: &'a FiniteAct,
    max_index: Option<usize>,
    limits: &SearchLimits,
) -> Result<impl Iterator<Item = Congruence> + 'a> {
    let bound = max_index.unwrap_or(act.size()).min(act.size());
    limits.check(act.size(), bound)?;
    let search = PartitionSearch::new(act.size(), act.operations(), bound);
    Ok(search.map(Congruence::trusted))
}

/// The least-index congruence separating `a` from every element of
/// `forbidden`, ties broken by restricted-growth order.
pub(crate) fn least_separating(
    n: usize,
    ops: &[Vec<usize>],
    a: usize,
    forbidden: &[usize],
    max_index: usize,
    limits: &SearchLimits,
) -> Result<Option<Partition>> {
    let bound = max_index.min(n);
    limits.check(n, bound)?;
    let apart: Vec<(usize, usize)> = forbidden.iter().map(|&x| (a, x)).collect();
    // deepen one block at a time: the first hit at bound k has index k
    for k in 1..=bound {
        let mut search = PartitionSearch::new(n, ops.to_vec(), k);
        search.keep_apart(&apart);
        if let Some(p) = search.next() {
            return Ok(Some(p));
        }
    }
    Ok(None)
}
