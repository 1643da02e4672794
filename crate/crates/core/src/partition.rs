//! Set partitions in first-occurrence normal form, plus the union-find used
//! to build them.

use serde::{Deserialize, Serialize};

/// A partition of `{0, .., size-1}`.
///
/// Block ids are numbered in order of first occurrence, so two partitions are
/// equal exactly when their `block_of` sequences are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    block_of: Vec<usize>,
    blocks: usize,
}

impl Partition {
    /// Normalizes an arbitrary labelling into first-occurrence form.
    pub fn from_labels<T: Eq + std::hash::Hash + Clone>(labels: &[T]) -> Self {
        let mut seen = std::collections::HashMap::new();
        let block_of = labels
            .iter()
            .map(|l| {
                let next = seen.len();
                *seen.entry(l.clone()).or_insert(next)
            })
            .collect();
        Partition {
            block_of,
            blocks: seen.len(),
        }
    }

    /// Builds a partition from explicit blocks. Elements not mentioned become
    /// singletons; an element listed twice keeps its last block.
    pub fn from_blocks(size: usize, blocks: &[Vec<usize>]) -> Self {
        let mut labels: Vec<usize> = (0..size).map(|x| blocks.len() + x).collect();
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                labels[x] = b;
            }
        }
        Self::from_labels(&labels)
    }

    pub fn equality(size: usize) -> Self {
        Partition {
            block_of: (0..size).collect(),
            blocks: size,
        }
    }

    pub fn universal(size: usize) -> Self {
        Partition {
            block_of: vec![0; size],
            blocks: usize::from(size > 0),
        }
    }

    pub fn size(&self) -> usize {
        self.block_of.len()
    }

    /// Number of blocks.
    pub fn index(&self) -> usize {
        self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.block_of
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    /// Blocks in block-id order; members ascending. Because ids follow first
    /// occurrence, blocks are also sorted by least member.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    pub fn block_members(&self, x: usize) -> Vec<usize> {
        let b = self.block_of[x];
        (0..self.size())
            .filter(|&y| self.block_of[y] == b)
            .collect()
    }

    /// Common refinement.
    pub fn meet(&self, other: &Partition) -> Partition {
        let pairs: Vec<(usize, usize)> = self
            .block_of
            .iter()
            .zip(&other.block_of)
            .map(|(&a, &b)| (a, b))
            .collect();
        Self::from_labels(&pairs)
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        let mut image = vec![usize::MAX; self.blocks];
        for (x, &b) in self.block_of.iter().enumerate() {
            let o = other.block_of[x];
            if image[b] == usize::MAX {
                image[b] = o;
            } else if image[b] != o {
                return false;
            }
        }
        true
    }

    /// The pairs `(x, representative)` that generate this partition as an
    /// equivalence; used to feed a partition back into a closure.
    pub fn generating_pairs(&self) -> Vec<(usize, usize)> {
        let mut rep = vec![usize::MAX; self.blocks];
        let mut out = Vec::new();
        for (x, &b) in self.block_of.iter().enumerate() {
            if rep[b] == usize::MAX {
                rep[b] = x;
            } else {
                out.push((rep[b], x));
            }
        }
        out
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `x` and `y`. Returns `Some((root, absorbed))`
    /// when two distinct classes were joined.
    pub fn union(&mut self, x: usize, y: usize) -> Option<(usize, usize)> {
        let (mut rx, mut ry) = (self.find(x), self.find(y));
        if rx == ry {
            return None;
        }
        if self.size[rx] < self.size[ry] {
            std::mem::swap(&mut rx, &mut ry);
        }
        self.parent[ry] = rx;
        self.size[rx] += self.size[ry];
        Some((rx, ry))
    }

    pub fn to_partition(&mut self) -> Partition {
        let roots: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&roots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_is_first_occurrence() {
        let p = Partition::from_labels(&[7, 3, 7, 9, 3]);
        assert_eq!(p.as_slice(), &[0, 1, 0, 2, 1]);
        assert_eq!(p.index(), 3);
        assert_eq!(p.blocks(), vec![vec![0, 2], vec![1, 4], vec![3]]);
    }

    #[test]
    fn meet_and_refinement() {
        let a = Partition::from_blocks(4, &[vec![0, 1], vec![2, 3]]);
        let b = Partition::from_blocks(4, &[vec![0, 2], vec![1, 3]]);
        let m = a.meet(&b);
        assert_eq!(m, Partition::equality(4));
        assert!(m.refines(&a) && m.refines(&b));
        assert!(!a.refines(&b));
        assert!(a.refines(&Partition::universal(4)));
    }

    #[test]
    fn generating_pairs_rebuild_the_partition() {
        let p = Partition::from_blocks(6, &[vec![0, 4, 5], vec![1, 3]]);
        let mut uf = UnionFind::new(6);
        for (x, y) in p.generating_pairs() {
            uf.union(x, y);
        }
        assert_eq!(uf.to_partition(), p);
    }
}
