use std::sync::Arc;

use super::FiniteAct;
use crate::congruence::close_under;
use crate::error::{Error, Result};
use crate::monoid::{check_labels, FiniteMonoid};
use crate::partition::Partition;

/// A finite window onto a (possibly infinite) act: `am` is either a carrier
/// element or undefined. Undefined entries are never guessed.
///
/// Validation checks `a1 = a` and, wherever both sides are defined,
/// `a(mn) = (am)n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialAct {
    monoid: Arc<FiniteMonoid>,
    size: usize,
    table: Vec<Option<usize>>,
    labels: Option<Vec<String>>,
}

impl PartialAct {
    pub fn from_table(monoid: Arc<FiniteMonoid>, rows: &[Vec<Option<usize>>]) -> Result<Self> {
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
            if let Some(bad) = row.iter().flatten().find(|&&x| x >= size) {
                return Err(Error::MalformedTable(format!(
                    "row {a} has entry {bad} out of range"
                )));
            }
            table.extend_from_slice(row);
        }
        let act = PartialAct {
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
            if self.act(a, m.identity()) != Some(a) {
                return Err(Error::IdentityLawViolation(a));
            }
        }
        for a in 0..self.size {
            for x in m.elements() {
                let Some(ax) = self.act(a, x) else { continue };
                for y in m.elements() {
                    if let (Some(l), Some(r)) = (self.act(a, m.mul(x, y)), self.act(ax, y)) {
                        if l != r {
                            return Err(Error::AssociativityViolation(a, x, y));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        check_labels(&labels, self.size)?;
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn monoid(&self) -> &Arc<FiniteMonoid> {
        &self.monoid
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, a: usize, m: usize) -> Option<usize> {
        self.table[a * self.monoid.order() + m]
    }

    pub fn rows(&self) -> Vec<Vec<Option<usize>>> {
        self.table
            .chunks(self.monoid.order())
            .map(<[Option<usize>]>::to_vec)
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

    /// Index of the element carrying `label`.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        (0..self.size).find(|&a| self.label(a) == label)
    }

    pub fn is_total(&self) -> bool {
        self.table.iter().all(Option::is_some)
    }

    /// The total act, if every entry is defined.
    pub fn to_total(&self) -> Option<FiniteAct> {
        let table = self.table.iter().copied().collect::<Option<Vec<usize>>>()?;
        Some(FiniteAct::from_validated(
            self.monoid.clone(),
            self.size,
            table,
            self.labels.clone(),
        ))
    }

    /// The least equivalence containing `seeds` that is closed under every
    /// defined action: `a ~ b`, `am` and `bm` defined imply `am ~ bm`.
    pub fn closure(&self, seeds: &[(usize, usize)]) -> Result<Partition> {
        if let Some(&(a, b)) = seeds
            .iter()
            .find(|&&(a, b)| a >= self.size || b >= self.size)
        {
            return Err(Error::OutOfRange(a.max(b), self.size));
        }
        Ok(close_under(
            self.size,
            self.monoid.order(),
            |a, m| self.act(a, m),
            seeds,
        ))
    }

    /// First `(a, b, m)` with `a ~ b` and `am`, `bm` defined in different
    /// blocks, if any.
    pub fn compatibility_violation(&self, partition: &Partition) -> Option<(usize, usize, usize)> {
        for a in 0..self.size {
            for b in a + 1..self.size {
                if !partition.same_block(a, b) {
                    continue;
                }
                for m in self.monoid.elements() {
                    if let (Some(x), Some(y)) = (self.act(a, m), self.act(b, m)) {
                        if !partition.same_block(x, y) {
                            return Some((a, b, m));
                        }
                    }
                }
            }
        }
        None
    }
}

impl From<&FiniteAct> for PartialAct {
    fn from(act: &FiniteAct) -> Self {
        PartialAct {
            monoid: act.monoid.clone(),
            size: act.size,
            table: act.table.iter().map(|&x| Some(x)).collect(),
            labels: act.labels.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monogenic(w: usize) -> Arc<FiniteMonoid> {
        // {x^0, .., x^w, big}: exponents add, anything past w collapses to big
        let n = w + 2;
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| (i + j).min(w + 1)).collect())
            .collect();
        Arc::new(FiniteMonoid::from_table(&rows, 0).unwrap())
    }

    #[test]
    fn undefined_entries_stay_undefined_in_closure() {
        // a path a0 <- a1 <- a2 under x, the last column undefined
        let m = monogenic(2);
        let rows = vec![
            vec![Some(0), None, None, None],
            vec![Some(1), Some(0), None, None],
            vec![Some(2), Some(1), Some(0), None],
        ];
        let act = PartialAct::from_table(m, &rows).unwrap();
        assert!(!act.is_total());
        let p = act.closure(&[(1, 2)]).unwrap();
        assert!(p.same_block(0, 1));
        assert_eq!(p.index(), 1);
        let q = act.closure(&[(0, 1)]).unwrap();
        assert_eq!(q.index(), 2);
        assert!(act.compatibility_violation(&q).is_none());
        assert_eq!(
            act.compatibility_violation(&Partition::from_labels(&[0, 1, 1])),
            Some((1, 2, 1))
        );
    }

    #[test]
    fn total_round_trip() {
        let m = monogenic(1);
        let reg = FiniteAct::regular(m);
        let p = PartialAct::from(&reg);
        assert!(p.is_total());
        assert_eq!(p.to_total().unwrap(), reg);
    }

    #[test]
    fn partial_associativity_checked_where_defined() {
        let m = monogenic(1);
        let rows = vec![
            vec![Some(0), Some(1), Some(0)],
            vec![Some(1), Some(1), Some(1)],
        ];
        assert_eq!(
            PartialAct::from_table(m, &rows),
            Err(Error::AssociativityViolation(0, 1, 1))
        );
    }
}
