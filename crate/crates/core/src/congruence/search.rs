//! Depth-first enumeration of partitions compatible with a family of unary
//! maps, as restricted growth strings.
//!
//! Element `k` is placed after `0..k`. Placing it in block `c` is rejected as
//! soon as some pair inside a block has images, both already placed, in
//! different blocks. A full assignment that survives every check is closed.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default bound on the estimated number of candidate partitions.
pub const DEFAULT_MAX_SEARCH: u128 = 1 << 32;

/// Caps for exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest admissible `sum_{k <= bound} S(n, k)`.
    pub max_search: u128,
    /// Largest number of subacts listed by condition checks.
    pub max_subacts: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_search: DEFAULT_MAX_SEARCH,
            max_subacts: crate::act::DEFAULT_SUBACT_CAP,
        }
    }
}

impl SearchLimits {
    /// Defaults, with `ACTSEP_MAX_SEARCH` overriding the search cap.
    pub fn from_env() -> Self {
        let mut lim = SearchLimits::default();
        if let Some(v) = std::env::var("ACTSEP_MAX_SEARCH")
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            lim.max_search = v;
        }
        lim
    }

    pub(crate) fn check(&self, n: usize, bound: usize) -> Result<()> {
        let e = estimate(n, bound);
        if e > self.max_search {
            return Err(Error::SearchSpaceTooLarge(e));
        }
        Ok(())
    }
}

/// Stirling number of the second kind, saturating.
pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = (j as u128)
                .saturating_mul(row[j])
                .saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row[k]
}

/// `sum_{k=1..bound} S(n, k)`: the number of partitions with at most `bound`
/// blocks.
pub fn estimate(n: usize, bound: usize) -> u128 {
    (1..=bound.min(n)).fold(0u128, |acc, k| acc.saturating_add(stirling2(n, k)))
}

/// Lazy iterator over partitions closed under `ops`, at most `max_blocks`
/// blocks, in lexicographic order of their restricted growth strings.
pub struct PartitionSearch {
    n: usize,
    ops: Vec<Vec<usize>>,
    /// `preimages[t]` lists `(x, k)` with `ops[k][x] = t`.
    preimages: Vec<Vec<(usize, usize)>>,
    /// `apart[k]` lists `y < k` that must not share a block with `k`.
    apart: Vec<Vec<usize>>,
    max_blocks: usize,
    assign: Vec<usize>,
    members: Vec<Vec<usize>>,
    blocks: usize,
    next_choice: Vec<usize>,
    depth: usize,
    done: bool,
}

impl PartitionSearch {
    pub fn new(n: usize, ops: Vec<Vec<usize>>, max_blocks: usize) -> Self {
        let mut preimages = vec![Vec::new(); n];
        for (k, op) in ops.iter().enumerate() {
            debug_assert_eq!(op.len(), n);
            for (x, &t) in op.iter().enumerate() {
                if t != x {
                    preimages[t].push((x, k));
                }
            }
        }
        PartitionSearch {
            n,
            ops,
            preimages,
            apart: vec![Vec::new(); n],
            max_blocks,
            assign: vec![usize::MAX; n],
            members: Vec::new(),
            blocks: 0,
            next_choice: vec![0; n],
            depth: 0,
            done: n == 0 || max_blocks == 0,
        }
    }

    /// Requires each pair to lie in different blocks.
    pub fn keep_apart(&mut self, pairs: &[(usize, usize)]) {
        for &(x, y) in pairs {
            if x == y {
                // cannot be satisfied
                self.done = true;
            } else {
                self.apart[x.max(y)].push(x.min(y));
            }
        }
    }

    fn block(&self, x: usize, k: usize, c: usize) -> usize {
        if x == k {
            c
        } else {
            self.assign[x]
        }
    }

    fn fits(&self, k: usize, c: usize) -> bool {
        if self.apart[k].iter().any(|&y| self.assign[y] == c) {
            return false;
        }
        if let Some(block) = self.members.get(c) {
            for &y in block {
                for op in &self.ops {
                    let (fk, fy) = (op[k], op[y]);
                    if fk <= k && fy <= k && self.block(fk, k, c) != self.block(fy, k, c) {
                        return false;
                    }
                }
            }
        }
        for &(x, j) in &self.preimages[k] {
            if x >= k {
                continue;
            }
            let op = &self.ops[j];
            for &y in &self.members[self.assign[x]] {
                let fy = op[y];
                if fy <= k && self.block(fy, k, c) != c {
                    return false;
                }
            }
        }
        true
    }

    fn place(&mut self, k: usize, c: usize) {
        self.assign[k] = c;
        if c == self.blocks {
            self.members.push(Vec::new());
            self.blocks += 1;
        }
        self.members[c].push(k);
    }

    fn unplace(&mut self, k: usize) {
        let c = self.assign[k];
        self.members[c].pop();
        if self.members[c].is_empty() {
            self.members.pop();
            self.blocks -= 1;
        }
        self.assign[k] = usize::MAX;
    }
}

impl Iterator for PartitionSearch {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        loop {
            let k = self.depth;
            if k == self.n {
                let p = Partition::from_labels(&self.assign);
                self.depth -= 1;
                self.unplace(self.depth);
                return Some(p);
            }
            let choices = (self.blocks + 1).min(self.max_blocks);
            let mut placed = false;
            while self.next_choice[k] < choices {
                let c = self.next_choice[k];
                self.next_choice[k] += 1;
                if self.fits(k, c) {
                    self.place(k, c);
                    placed = true;
                    break;
                }
            }
            if placed {
                self.depth += 1;
                if self.depth < self.n {
                    self.next_choice[self.depth] = 0;
                }
            } else if k == 0 {
                self.done = true;
                return None;
            } else {
                self.depth -= 1;
                self.unplace(self.depth);
            }
        }
    }
}
