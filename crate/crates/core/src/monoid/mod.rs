//! Finite monoids given by multiplication tables.

mod clifford;
pub mod iso;
mod rees;

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use clifford::StrongSemilatticeSpec;
pub use rees::{RankReport, ReesMatrixSpec, ReesMonoid};

/// Default element cap for [`FiniteMonoid::transformation_closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;
/// Default cap on the number of right ideals listed by
/// [`FiniteMonoid::structure`].
pub const DEFAULT_IDEAL_CAP: usize = 1 << 20;

/// A finite monoid stored as its full multiplication table.
///
/// Entry `(i, j)` of the table is the index of `m_i m_j`. Values are only
/// produced by the validating constructors, so every `FiniteMonoid` is
/// associative and has a two-sided identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteMonoid {
    order: usize,
    identity: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteMonoid {
    /// Validates a square table and an identity index.
    pub fn from_table(rows: &[Vec<usize>], identity: usize) -> Result<Self> {
        let order = rows.len();
        let table = flatten_square(rows)?;
        if identity >= order {
            return Err(Error::BadIdentity(identity));
        }
        if let Some((i, j, k)) = first_non_associative(order, &table) {
            return Err(Error::NotAssociative(i, j, k));
        }
        for i in 0..order {
            if table[identity * order + i] != i || table[i * order + identity] != i {
                return Err(Error::BadIdentity(identity));
            }
        }
        Ok(FiniteMonoid {
            order,
            identity,
            table,
            labels: None,
        })
    }

    /// Attaches display labels, one per element. Labels must be non-empty and
    /// free of whitespace so they survive the text format.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        check_labels(&labels, self.order)?;
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn from_validated(order: usize, identity: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        FiniteMonoid {
            order,
            identity,
            table,
            labels: None,
        }
    }

    /// The submonoid of the full transformation monoid on `degree` points
    /// generated by `generators` (maps given by their image lists).
    ///
    /// Element 0 is the identity map; the rest appear in breadth-first order
    /// of right multiplication by the generators. Maps compose left to right,
    /// matching the right action: `x (f g) = (x f) g`.
    pub fn transformation_closure(
        degree: usize,
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self> {
        for g in generators {
            if g.len() != degree || g.iter().any(|&x| x >= degree) {
                return Err(Error::MalformedTable(format!(
                    "generator {g:?} is not a map on {degree} points"
                )));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for g in generators {
                let prod: Vec<usize> = elements[e].iter().map(|&x| g[x]).collect();
                if !index.contains_key(&prod) {
                    if elements.len() == cap {
                        return Err(Error::ClosureTooLarge(cap));
                    }
                    index.insert(prod.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(prod);
                }
            }
        }
        let order = elements.len();
        let mut table = Vec::with_capacity(order * order);
        for a in &elements {
            for b in &elements {
                let prod: Vec<usize> = a.iter().map(|&x| b[x]).collect();
                table.push(index[&prod]);
            }
        }
        let labels = elements.iter().map(|e| transformation_label(e)).collect();
        Ok(FiniteMonoid {
            order,
            identity: 0,
            table,
            labels: Some(labels),
        })
    }

    /// `S^1` for a semigroup table `S`: a fresh identity is always adjoined at
    /// index 0 and the original elements shift up by one.
    pub fn adjoin_identity(semigroup: &[Vec<usize>]) -> Result<Self> {
        let n = semigroup.len();
        let flat = flatten_square(semigroup)?;
        if let Some((i, j, k)) = first_non_associative(n, &flat) {
            return Err(Error::NotAssociative(i, j, k));
        }
        let order = n + 1;
        let mut table = vec![0; order * order];
        for i in 0..order {
            table[i] = i;
            table[i * order] = i;
        }
        for i in 0..n {
            for j in 0..n {
                table[(i + 1) * order + j + 1] = flat[i * n + j] + 1;
            }
        }
        Ok(FiniteMonoid {
            order,
            identity: 0,
            table,
            labels: None,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label, or its index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Two-sided inverse of `x` with respect to the identity, if any.
    pub fn unit_inverse(&self, x: usize) -> Option<usize> {
        self.elements()
            .find(|&y| self.mul(x, y) == self.identity && self.mul(y, x) == self.identity)
    }

    /// A monoid is a group iff every element has a two-sided inverse.
    pub fn is_group(&self) -> bool {
        self.elements().all(|x| self.unit_inverse(x).is_some())
    }

    /// Inverse table of a group; `NotAGroup` otherwise.
    pub fn group_inverses(&self) -> Result<Vec<usize>> {
        self.elements()
            .map(|x| self.unit_inverse(x).ok_or(Error::NotAGroup))
            .collect()
    }

    /// Inverses in the semigroup sense: `y` with `xyx = x` and `yxy = y`.
    pub fn semigroup_inverses(&self, x: usize) -> Vec<usize> {
        self.elements()
            .filter(|&y| self.mul(self.mul(x, y), x) == x && self.mul(self.mul(y, x), y) == y)
            .collect()
    }

    /// Clifford predicate: regular, every element has exactly one inverse,
    /// and idempotents are central. All three are checked exhaustively.
    pub fn is_clifford(&self) -> bool {
        let regular = self
            .elements()
            .all(|x| self.elements().any(|y| self.mul(self.mul(x, y), x) == x));
        if !regular {
            return false;
        }
        if !self
            .elements()
            .all(|x| self.semigroup_inverses(x).len() == 1)
        {
            return false;
        }
        self.idempotents()
            .into_iter()
            .all(|e| self.elements().all(|x| self.mul(e, x) == self.mul(x, e)))
    }

    /// The principal right ideal `xM`, ascending.
    pub fn principal_right_ideal(&self, x: usize) -> Vec<usize> {
        let mut set: Vec<usize> = self.elements().map(|m| self.mul(x, m)).collect();
        set.sort_unstable();
        set.dedup();
        set
    }

    pub fn principal_left_ideal(&self, x: usize) -> Vec<usize> {
        let mut set: Vec<usize> = self.elements().map(|m| self.mul(m, x)).collect();
        set.sort_unstable();
        set.dedup();
        set
    }

    /// Whether a non-empty set is closed under right multiplication.
    pub fn is_right_ideal(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &x in set {
            member[x] = true;
        }
        !set.is_empty()
            && set
                .iter()
                .all(|&x| self.elements().all(|m| member[self.mul(x, m)]))
    }

    /// Whether a non-empty set is closed under multiplication on both sides.
    pub fn is_ideal(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &x in set {
            member[x] = true;
        }
        !set.is_empty()
            && set.iter().all(|&x| {
                self.elements()
                    .all(|m| member[self.mul(x, m)] && member[self.mul(m, x)])
            })
    }

    /// Green's R relation: `a R b` iff `aM = bM`.
    pub fn r_classes(&self) -> Partition {
        let ideals: Vec<Vec<usize>> = self
            .elements()
            .map(|x| self.principal_right_ideal(x))
            .collect();
        Partition::from_labels(&ideals)
    }

    pub fn l_classes(&self) -> Partition {
        let ideals: Vec<Vec<usize>> = self
            .elements()
            .map(|x| self.principal_left_ideal(x))
            .collect();
        Partition::from_labels(&ideals)
    }

    pub fn h_classes(&self) -> Partition {
        self.r_classes().meet(&self.l_classes())
    }

    /// Every right ideal (non-empty), in a deterministic order: by size, then
    /// lexicographically.
    pub fn right_ideals(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        // Right ideals are exactly the non-empty unions of principal ones.
        let principal: Vec<Vec<bool>> = self
            .elements()
            .map(|x| to_mask(self.order, &self.principal_right_ideal(x)))
            .collect();
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        let mut queue: VecDeque<Vec<bool>> = VecDeque::new();
        for p in &principal {
            if seen.insert(p.clone()) {
                queue.push_back(p.clone());
            }
        }
        if seen.len() > cap {
            return Err(Error::RightIdealEnumerationTooLarge(cap));
        }
        while let Some(set) = queue.pop_front() {
            for p in &principal {
                let union: Vec<bool> = set.iter().zip(p).map(|(&a, &b)| a || b).collect();
                if !seen.contains(&union) {
                    if seen.len() >= cap {
                        return Err(Error::RightIdealEnumerationTooLarge(cap));
                    }
                    seen.insert(union.clone());
                    queue.push_back(union);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = seen.iter().map(|m| from_mask(m)).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// The full structural summary of the monoid.
    pub fn structure(&self, ideal_cap: usize) -> Result<StructureReport> {
        Ok(StructureReport {
            idempotents: self.idempotents(),
            commutative: self.is_commutative(),
            group: self.is_group(),
            clifford: self.is_clifford(),
            r_classes: self.r_classes(),
            h_classes: self.h_classes(),
            principal_right_ideals: self
                .elements()
                .map(|x| self.principal_right_ideal(x))
                .collect(),
            right_ideals: self.right_ideals(ideal_cap)?,
        })
    }

    /// Whether `map` is a monoid homomorphism `self -> target`.
    pub fn is_homomorphism_to(&self, target: &FiniteMonoid, map: &[usize]) -> bool {
        map.len() == self.order
            && map.iter().all(|&x| x < target.order)
            && map[self.identity] == target.identity
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b]))
            })
    }

    /// The monoid on a set of elements closed under multiplication and
    /// containing the identity, reindexed in ascending order.
    pub fn submonoid(&self, elements: &[usize]) -> Result<(FiniteMonoid, Vec<usize>)> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i;
        }
        if pos[self.identity] == usize::MAX {
            return Err(Error::NotASubmonoid);
        }
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n);
        for &a in &elems {
            for &b in &elems {
                let p = pos[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::NotASubmonoid);
                }
                table.push(p);
            }
        }
        let mut sub = FiniteMonoid::from_validated(n, pos[self.identity], table);
        if self.labels.is_some() {
            sub.labels = Some(elems.iter().map(|&x| self.label(x)).collect());
        }
        Ok((sub, elems))
    }

    /// The quotient monoid by a partition that is compatible with
    /// multiplication on both sides. Element `k` of the result is block `k`.
    pub fn quotient(&self, partition: &Partition) -> Result<FiniteMonoid> {
        if partition.size() != self.order {
            return Err(Error::SizeMismatch {
                expected: self.order,
                got: partition.size(),
            });
        }
        if let Some((a, b, m)) = two_sided_violation(self, partition) {
            return Err(Error::NotTwoSidedCongruence(a, b, m));
        }
        let blocks = partition.blocks();
        let n = blocks.len();
        let mut table = Vec::with_capacity(n * n);
        for x in &blocks {
            for y in &blocks {
                table.push(partition.block_of(self.mul(x[0], y[0])));
            }
        }
        let labels = blocks
            .iter()
            .map(|b| format!("[{}]", self.label(b[0])))
            .collect();
        let mut q = FiniteMonoid::from_validated(n, partition.block_of(self.identity), table);
        q.labels = Some(labels);
        Ok(q)
    }

    /// Right and left multiplication maps, as unary operations on the
    /// carrier: first all `x -> xm`, then all `x -> mx`.
    pub fn two_sided_operations(&self) -> Vec<Vec<usize>> {
        let mut ops = Vec::with_capacity(2 * self.order);
        for m in self.elements() {
            ops.push(self.elements().map(|x| self.mul(x, m)).collect());
        }
        for m in self.elements() {
            ops.push(self.elements().map(|x| self.mul(m, x)).collect());
        }
        ops
    }
}

/// Idempotents, Green's classes and ideals of a monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub idempotents: Vec<usize>,
    pub commutative: bool,
    pub group: bool,
    pub clifford: bool,
    pub r_classes: Partition,
    pub h_classes: Partition,
    /// `principal_right_ideals[m]` is `mM`.
    pub principal_right_ideals: Vec<Vec<usize>>,
    pub right_ideals: Vec<Vec<usize>>,
}

/// First `(a, b, m)` with `a ~ b` but `ma` and `mb` in different blocks.
pub(crate) fn two_sided_violation(
    monoid: &FiniteMonoid,
    partition: &Partition,
) -> Option<(usize, usize, usize)> {
    for a in monoid.elements() {
        for b in a + 1..monoid.order() {
            if !partition.same_block(a, b) {
                continue;
            }
            for m in monoid.elements() {
                if !partition.same_block(monoid.mul(a, m), monoid.mul(b, m))
                    || !partition.same_block(monoid.mul(m, a), monoid.mul(m, b))
                {
                    return Some((a, b, m));
                }
            }
        }
    }
    None
}

fn flatten_square(rows: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::MalformedTable("empty table".into()));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= n) {
            return Err(Error::MalformedTable(format!(
                "row {i} has entry {bad} out of range"
            )));
        }
        flat.extend_from_slice(row);
    }
    Ok(flat)
}

fn first_non_associative(n: usize, t: &[usize]) -> Option<(usize, usize, usize)> {
    for i in 0..n {
        for j in 0..n {
            let ij = t[i * n + j];
            for k in 0..n {
                if t[ij * n + k] != t[i * n + t[j * n + k]] {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

pub(crate) fn check_labels(labels: &[String], n: usize) -> Result<()> {
    if labels.len() != n {
        return Err(Error::MalformedTable(format!(
            "{} labels for {n} elements",
            labels.len()
        )));
    }
    if let Some(bad) = labels
        .iter()
        .find(|l| l.is_empty() || l.chars().any(char::is_whitespace))
    {
        return Err(Error::MalformedTable(format!("bad label {bad:?}")));
    }
    Ok(())
}

fn transformation_label(map: &[usize]) -> String {
    let parts: Vec<String> = map.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn to_mask(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &x in set {
        m[x] = true;
    }
    m
}

fn from_mask(mask: &[bool]) -> Vec<usize> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}

/// The cyclic group of order `n` on `0..n` with identity 0.
pub fn cyclic_group(n: usize) -> FiniteMonoid {
    assert!(n > 0);
    let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    FiniteMonoid::from_validated(n, 0, table)
}
