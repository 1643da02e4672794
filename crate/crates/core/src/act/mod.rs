//! Finite right acts over finite monoids.

mod partial;
mod transport;

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use crate::congruence::{self, Congruence};
use crate::error::{Error, Result};
use crate::monoid::{check_labels, FiniteMonoid};
use crate::partition::{Partition, UnionFind};

pub use partial::PartialAct;

/// Default cap on the number of subacts listed by [`FiniteAct::subacts`].
pub const DEFAULT_SUBACT_CAP: usize = 1 << 16;

/// A right `M`-act on `{0, .., size-1}`: entry `(a, m)` of the table is `am`.
///
/// Constructors validate `a1 = a` and `a(mn) = (am)n` exhaustively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAct {
    monoid: Arc<FiniteMonoid>,
    size: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// A verified map of acts `(am)f = (af)m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActHomomorphism {
    map: Vec<usize>,
    target_size: usize,
}

impl ActHomomorphism {
    pub fn new(source: &FiniteAct, target: &FiniteAct, map: Vec<usize>) -> Result<Self> {
        if source.monoid != target.monoid && *source.monoid != *target.monoid {
            return Err(Error::MonoidMismatch);
        }
        if map.len() != source.size {
            return Err(Error::SizeMismatch {
                expected: source.size,
                got: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.size) {
            return Err(Error::OutOfRange(bad, target.size));
        }
        for a in 0..source.size {
            for m in source.monoid.elements() {
                if map[source.act(a, m)] != target.act(map[a], m) {
                    return Err(Error::NotAHomomorphism(a, m));
                }
            }
        }
        Ok(ActHomomorphism {
            map,
            target_size: target.size,
        })
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target_size];
        self.map
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    /// The image, ascending.
    pub fn image(&self) -> Vec<usize> {
        let mut im = self.map.clone();
        im.sort_unstable();
        im.dedup();
        im
    }
}

impl FiniteAct {
    /// Validates a `size x |M|` action table.
    pub fn from_table(monoid: Arc<FiniteMonoid>, rows: &[Vec<usize>]) -> Result<Self> {
        let size = rows.len();
        let n = monoid.order();
        if size == 0 {
            return Err(Error::MalformedTable(
                "an act needs at least one element".into(),
            ));
        }
        let mut table = Vec::with_capacity(size * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {a} has {} entries, monoid has order {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= size) {
                return Err(Error::MalformedTable(format!(
                    "row {a} has entry {bad} out of range"
                )));
            }
            table.extend_from_slice(row);
        }
        let act = FiniteAct {
            monoid,
            size,
            table,
            labels: None,
        };
        act.validate()?;
        Ok(act)
    }

    fn validate(&self) -> Result<()> {
        let m = &self.monoid;
        for a in 0..self.size {
            if self.act(a, m.identity()) != a {
                return Err(Error::IdentityLawViolation(a));
            }
        }
        for a in 0..self.size {
            for x in m.elements() {
                let ax = self.act(a, x);
                for y in m.elements() {
                    if self.act(a, m.mul(x, y)) != self.act(ax, y) {
                        return Err(Error::AssociativityViolation(a, x, y));
                    }
                }
            }
        }
        Ok(())
    }

    pub(crate) fn from_validated(
        monoid: Arc<FiniteMonoid>,
        size: usize,
        table: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Self {
        let act = FiniteAct {
            monoid,
            size,
            table,
            labels,
        };
        debug_assert!(act.validate().is_ok());
        act
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        check_labels(&labels, self.size)?;
        self.labels = Some(labels);
        Ok(self)
    }

    /// The monoid acting on itself by right multiplication.
    pub fn regular(monoid: Arc<FiniteMonoid>) -> Self {
        let n = monoid.order();
        let table = (0..n * n).map(|k| monoid.mul(k / n, k % n)).collect();
        let labels = monoid.labels().map(<[String]>::to_vec);
        FiniteAct {
            monoid,
            size: n,
            table,
            labels,
        }
    }

    /// A one-point act.
    pub fn trivial(monoid: Arc<FiniteMonoid>) -> Self {
        let n = monoid.order();
        FiniteAct {
            monoid,
            size: 1,
            table: vec![0; n],
            labels: None,
        }
    }

    /// The act of a finite group on the right cosets `Hg` of a subgroup.
    pub fn coset_act(group: Arc<FiniteMonoid>, subgroup: &[usize]) -> Result<Self> {
        group.group_inverses()?;
        let mut member = vec![false; group.order()];
        for &h in subgroup {
            if h >= group.order() {
                return Err(Error::OutOfRange(h, group.order()));
            }
            member[h] = true;
        }
        let closed = subgroup
            .iter()
            .all(|&a| subgroup.iter().all(|&b| member[group.mul(a, b)]));
        if !member[group.identity()] || !closed {
            return Err(Error::PreconditionViolated("not a subgroup".into()));
        }
        // coset Hg, keyed by its sorted element list
        let coset = |g: usize| {
            let mut c: Vec<usize> = subgroup.iter().map(|&h| group.mul(h, g)).collect();
            c.sort_unstable();
            c
        };
        let keys: Vec<Vec<usize>> = group.elements().map(coset).collect();
        let classes = Partition::from_labels(&keys);
        let reps: Vec<usize> = classes.blocks().iter().map(|b| b[0]).collect();
        let size = reps.len();
        let mut table = Vec::with_capacity(size * group.order());
        for &r in &reps {
            for m in group.elements() {
                table.push(classes.block_of(group.mul(r, m)));
            }
        }
        let labels = reps
            .iter()
            .map(|&r| format!("H*{}", group.label(r)))
            .collect();
        Ok(FiniteAct::from_validated(group, size, table, Some(labels)))
    }

    pub fn monoid(&self) -> &Arc<FiniteMonoid> {
        &self.monoid
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, a: usize, m: usize) -> usize {
        self.table[a * self.monoid.order() + m]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.monoid.order())
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    /// Distinct action maps `a -> am`, one per distinct column.
    pub fn operations(&self) -> Vec<Vec<usize>> {
        let mut ops: Vec<Vec<usize>> = Vec::new();
        let mut seen = HashSet::new();
        for m in self.monoid.elements() {
            let col: Vec<usize> = (0..self.size).map(|a| self.act(a, m)).collect();
            if seen.insert(col.clone()) {
                ops.push(col);
            }
        }
        ops
    }

    fn check_in_range(&self, set: &[usize]) -> Result<()> {
        match set.iter().find(|&&x| x >= self.size) {
            Some(&x) => Err(Error::OutOfRange(x, self.size)),
            None => Ok(()),
        }
    }

    /// `<U>`: the least subact containing `U`, ascending.
    pub fn subact_generated(&self, generators: &[usize]) -> Result<Vec<usize>> {
        if generators.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        self.check_in_range(generators)?;
        let mut inside = vec![false; self.size];
        for &u in generators {
            for m in self.monoid.elements() {
                inside[self.act(u, m)] = true;
            }
        }
        Ok(mask_to_set(&inside))
    }

    /// `<a> = aM`.
    pub fn cyclic_subact(&self, a: usize) -> Vec<usize> {
        let mut inside = vec![false; self.size];
        for m in self.monoid.elements() {
            inside[self.act(a, m)] = true;
        }
        mask_to_set(&inside)
    }

    /// `Ok` if `set` is a subact, otherwise the first escaping `(b, m)`.
    pub fn check_subact(&self, set: &[usize]) -> Result<()> {
        if set.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        self.check_in_range(set)?;
        let mut inside = vec![false; self.size];
        for &b in set {
            inside[b] = true;
        }
        for &b in set {
            for m in self.monoid.elements() {
                if !inside[self.act(b, m)] {
                    return Err(Error::NotASubact(b, m));
                }
            }
        }
        Ok(())
    }

    pub fn is_subact(&self, set: &[usize]) -> bool {
        self.check_subact(set).is_ok()
    }

    /// `leq[a][b]` is `a <=_A b`, that is `<a> ⊆ <b>`, equivalently `a ∈ bM`.
    pub fn preorder(&self) -> Vec<Vec<bool>> {
        let mut leq = vec![vec![false; self.size]; self.size];
        for b in 0..self.size {
            for m in self.monoid.elements() {
                leq[self.act(b, m)][b] = true;
            }
        }
        leq
    }

    /// Green's relation `R_A`: `<a> = <b>`.
    pub fn green_r(&self) -> Partition {
        let gens: Vec<Vec<usize>> = (0..self.size).map(|a| self.cyclic_subact(a)).collect();
        Partition::from_labels(&gens)
    }

    /// Elements fixed by every monoid element.
    pub fn zeros(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| self.monoid.elements().all(|m| self.act(a, m) == a))
            .collect()
    }

    /// Distinct monoid elements act differently somewhere.
    pub fn is_faithful(&self) -> bool {
        let m = &self.monoid;
        m.elements().all(|x| {
            (x + 1..m.order()).all(|y| (0..self.size).any(|a| self.act(a, x) != self.act(a, y)))
        })
    }

    /// Every subact, ordered by size and then lexicographically. Subacts are
    /// the non-empty unions of cyclic subacts.
    pub fn subacts(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let cyclic: Vec<Vec<bool>> = (0..self.size)
            .map(|a| set_to_mask(self.size, &self.cyclic_subact(a)))
            .collect();
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        let mut queue = VecDeque::new();
        for c in &cyclic {
            if seen.insert(c.clone()) {
                queue.push_back(c.clone());
            }
        }
        if seen.len() > cap {
            return Err(Error::SearchSpaceTooLarge(cap as u128));
        }
        while let Some(set) = queue.pop_front() {
            for c in &cyclic {
                // skip unions that add nothing
                if c.iter().zip(&set).all(|(&x, &s)| !x || s) {
                    continue;
                }
                let union: Vec<bool> = set.iter().zip(c).map(|(&a, &b)| a || b).collect();
                if !seen.contains(&union) {
                    if seen.len() >= cap {
                        return Err(Error::SearchSpaceTooLarge(cap as u128));
                    }
                    seen.insert(union.clone());
                    queue.push_back(union);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = seen.iter().map(|m| mask_to_set(m)).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// `A/B`: collapse the subact `B` to a fresh element `0_B`, appended after
    /// the surviving elements (which keep their relative order).
    pub fn rees_quotient(&self, subact: &[usize]) -> Result<(FiniteAct, ActHomomorphism)> {
        self.check_subact(subact)?;
        let mut inside = vec![false; self.size];
        for &b in subact {
            inside[b] = true;
        }
        let survivors: Vec<usize> = (0..self.size).filter(|&a| !inside[a]).collect();
        let zero = survivors.len();
        let mut map = vec![zero; self.size];
        for (i, &a) in survivors.iter().enumerate() {
            map[a] = i;
        }
        let n = self.monoid.order();
        let mut table = Vec::with_capacity((zero + 1) * n);
        for &a in &survivors {
            table.extend(self.monoid.elements().map(|m| map[self.act(a, m)]));
        }
        table.extend(std::iter::repeat_n(zero, n));
        let mut labels: Vec<String> = survivors.iter().map(|&a| self.label(a)).collect();
        labels.push("0_B".into());
        let quotient =
            FiniteAct::from_validated(self.monoid.clone(), zero + 1, table, Some(labels));
        let projection = ActHomomorphism::new(self, &quotient, map)?;
        Ok((quotient, projection))
    }

    /// The coproduct of acts over one monoid. Parts are laid out in order;
    /// injection `i` shifts part `i` by the sizes of the parts before it.
    pub fn disjoint_union(parts: &[FiniteAct]) -> Result<(FiniteAct, Vec<ActHomomorphism>)> {
        let first = parts.first().ok_or(Error::EmptyGeneratorSet)?;
        if parts.iter().any(|p| *p.monoid != *first.monoid) {
            return Err(Error::MonoidMismatch);
        }
        let monoid = first.monoid.clone();
        let mut offsets = Vec::with_capacity(parts.len());
        let mut table = Vec::new();
        let mut labels = Vec::new();
        let mut offset = 0;
        let labelled = parts.iter().any(|p| p.labels.is_some());
        for (i, p) in parts.iter().enumerate() {
            offsets.push(offset);
            table.extend(p.table.iter().map(|&x| x + offset));
            labels.extend((0..p.size).map(|a| {
                if parts.len() == 1 {
                    p.label(a)
                } else {
                    format!("{}.{}", i, p.label(a))
                }
            }));
            offset += p.size;
        }
        let union = FiniteAct::from_validated(
            monoid,
            offset,
            table,
            (labelled || parts.len() > 1).then_some(labels),
        );
        let injections = parts
            .iter()
            .zip(&offsets)
            .map(|(p, &o)| ActHomomorphism::new(p, &union, (o..o + p.size).collect()))
            .collect::<Result<Vec<_>>>()?;
        Ok((union, injections))
    }

    /// The decomposition into indecomposable subacts: connected components of
    /// the graph with edges `{a, am}`, ordered by least member.
    pub fn decompose(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.size);
        for a in 0..self.size {
            for m in self.monoid.elements() {
                uf.union(a, self.act(a, m));
            }
        }
        uf.to_partition().blocks()
    }

    /// The act on a subact, elements reindexed ascending; also returns the
    /// inclusion as a list of original indices.
    pub fn restrict_to(&self, subact: &[usize]) -> Result<(FiniteAct, Vec<usize>)> {
        self.check_subact(subact)?;
        let mut elems = subact.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let mut pos = vec![usize::MAX; self.size];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i;
        }
        let mut table = Vec::with_capacity(elems.len() * self.monoid.order());
        for &x in &elems {
            table.extend(self.monoid.elements().map(|m| pos[self.act(x, m)]));
        }
        let labels = self
            .labels
            .as_ref()
            .map(|_| elems.iter().map(|&x| self.label(x)).collect());
        Ok((
            FiniteAct::from_validated(self.monoid.clone(), elems.len(), table, labels),
            elems,
        ))
    }

    /// `M/rho` for a right congruence `rho` on `M`, that is a congruence on
    /// the regular act. The result is cyclic, generated by `[1]`.
    pub fn cyclic_from_right_congruence(
        monoid: Arc<FiniteMonoid>,
        rho: &Partition,
    ) -> Result<FiniteAct> {
        let regular = FiniteAct::regular(monoid);
        let rho = congruence::verify(&regular, rho.clone())?;
        Ok(congruence::quotient(&regular, &rho).0)
    }

    /// Convenience: quotient by a verified congruence.
    pub fn quotient(&self, rho: &Congruence) -> (FiniteAct, ActHomomorphism) {
        congruence::quotient(self, rho)
    }
}

fn mask_to_set(mask: &[bool]) -> Vec<usize> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}

fn set_to_mask(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &x in set {
        m[x] = true;
    }
    m
}
