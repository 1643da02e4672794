//! Rees matrix semigroups `M(G; I, J; P)` with an identity adjoined.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::FiniteMonoid;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Data for `M(G; I, J; P)`: a group, the sizes of `I` and `J`, and the
/// `J x I` sandwich matrix (`sandwich[j][i]` is `p_ji`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesMatrixSpec {
    group: FiniteMonoid,
    inverses: Vec<usize>,
    rows: usize,
    cols: usize,
    sandwich: Vec<Vec<usize>>,
}

/// The partitions `~_I`, `~_J` of a sandwich matrix and its rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub r_i: usize,
    pub r_j: usize,
    pub rank: usize,
    pub classes_i: Partition,
    pub classes_j: Partition,
}

impl ReesMatrixSpec {
    pub fn new(
        group: FiniteMonoid,
        rows: usize,
        cols: usize,
        sandwich: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let inverses = group.group_inverses()?;
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidReesSpec(
                "index sets must be non-empty".into(),
            ));
        }
        if sandwich.len() != cols || sandwich.iter().any(|r| r.len() != rows) {
            return Err(Error::InvalidReesSpec(format!(
                "sandwich matrix must be {cols} x {rows} (J x I)"
            )));
        }
        if sandwich.iter().flatten().any(|&g| g >= group.order()) {
            return Err(Error::InvalidReesSpec(
                "sandwich entry is not a group element".into(),
            ));
        }
        Ok(ReesMatrixSpec {
            group,
            inverses,
            rows,
            cols,
            sandwich,
        })
    }

    pub fn group(&self) -> &FiniteMonoid {
        &self.group
    }

    /// `|I|`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// `|J|`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn sandwich(&self) -> &[Vec<usize>] {
        &self.sandwich
    }

    /// `p_ji`.
    pub fn entry(&self, j: usize, i: usize) -> usize {
        self.sandwich[j][i]
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.group.mul(a, b)
    }

    fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Index of `(i, g, j)` in the monoid built by [`ReesMatrixSpec::build`].
    pub fn element(&self, i: usize, g: usize, j: usize) -> usize {
        1 + (i * self.group.order() + g) * self.cols + j
    }

    /// Inverse of [`ReesMatrixSpec::element`]; `None` for the identity.
    pub fn triple(&self, x: usize) -> Option<(usize, usize, usize)> {
        if x == 0 {
            return None;
        }
        let y = x - 1;
        let j = y % self.cols;
        let ig = y / self.cols;
        Some((ig / self.group.order(), ig % self.group.order(), j))
    }

    /// `S^1` for `S = M(G; I, J; P)` with product
    /// `(i, g, j)(k, h, l) = (i, g p_jk h, l)`. The identity is element 0 and
    /// triples follow in `(i, g, j)` lexicographic order.
    pub fn build(&self) -> ReesMonoid {
        let g_order = self.group.order();
        let order = self.rows * g_order * self.cols + 1;
        let mut table = vec![0; order * order];
        for x in 0..order {
            table[x] = x;
            table[x * order] = x;
        }
        for x in 1..order {
            let (i, g, j) = self.triple(x).unwrap();
            for y in 1..order {
                let (k, h, l) = self.triple(y).unwrap();
                let mid = self.mul(self.mul(g, self.entry(j, k)), h);
                table[x * order + y] = self.element(i, mid, l);
            }
        }
        let mut labels = vec!["1".to_string()];
        labels.extend((1..order).map(|x| {
            let (i, g, j) = self.triple(x).unwrap();
            format!("({i},{},{j})", self.group.label(g))
        }));
        let mut monoid = FiniteMonoid::from_validated(order, 0, table);
        monoid.labels = Some(labels);
        ReesMonoid {
            spec: self.clone(),
            monoid: Arc::new(monoid),
        }
    }

    /// Rewrites `P` so that row `j0` and column `i0` are all the identity,
    /// using `q_ji = p_{j,i0}^-1 p_ji p_{j0,i}^-1 p_{j0,i0}`.
    ///
    /// This is `q_ji = u_j p_ji v_i` with `u_j = p_{j,i0}^-1` and
    /// `v_i = p_{j0,i}^-1 p_{j0,i0}`, so the two Rees semigroups are
    /// isomorphic via `(i, g, j) -> (i, v_i^-1 g u_j^-1, j)`.
    pub fn normalize(&self, i0: usize, j0: usize) -> Result<ReesMatrixSpec> {
        if i0 >= self.rows || j0 >= self.cols {
            return Err(Error::InvalidReesSpec(format!(
                "anchor ({i0}, {j0}) out of range"
            )));
        }
        let corner = self.entry(j0, i0);
        let sandwich = (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| {
                        let left = self.mul(self.inv(self.entry(j, i0)), self.entry(j, i));
                        let right = self.mul(self.inv(self.entry(j0, i)), corner);
                        self.mul(left, right)
                    })
                    .collect()
            })
            .collect();
        Ok(ReesMatrixSpec {
            sandwich,
            ..self.clone()
        })
    }

    /// Whether row `j0` and column `i0` are identically the group identity.
    pub fn is_normalized_at(&self, i0: usize, j0: usize) -> bool {
        let e = self.group.identity();
        (0..self.rows).all(|i| self.entry(j0, i) == e)
            && (0..self.cols).all(|j| self.entry(j, i0) == e)
    }

    /// First column index `i0` with `p_{j,i0} = e` for all `j`.
    pub fn identity_column(&self) -> Option<usize> {
        let e = self.group.identity();
        (0..self.rows).find(|&i| (0..self.cols).all(|j| self.entry(j, i) == e))
    }

    /// `~_I`, `~_J` and rank of `P`, or of `P/N` when a normal subgroup is
    /// given (entries replaced by their cosets).
    pub fn rank(&self, normal_subgroup: Option<&[usize]>) -> Result<RankReport> {
        let (group, entry_map): (FiniteMonoid, Vec<usize>) = match normal_subgroup {
            None => (self.group.clone(), (0..self.group.order()).collect()),
            Some(n) => {
                let cosets = coset_partition(&self.group, &self.inverses, n)?;
                let quotient = self.group.quotient(&cosets)?;
                (quotient, cosets.as_slice().to_vec())
            }
        };
        let p = |j: usize, i: usize| entry_map[self.entry(j, i)];
        // i ~_I k iff p_ji = p_jk g for all j, some g
        let col_related = |i: usize, k: usize| {
            group
                .elements()
                .any(|g| (0..self.cols).all(|j| p(j, i) == group.mul(p(j, k), g)))
        };
        // j ~_J l iff p_ji = g p_li for all i, some g
        let row_related = |j: usize, l: usize| {
            group
                .elements()
                .any(|g| (0..self.rows).all(|i| p(j, i) == group.mul(g, p(l, i))))
        };
        let classes_i = partition_from_relation(self.rows, col_related);
        let classes_j = partition_from_relation(self.cols, row_related);
        let (r_i, r_j) = (classes_i.index(), classes_j.index());
        Ok(RankReport {
            r_i,
            r_j,
            rank: r_i.max(r_j),
            classes_i,
            classes_j,
        })
    }
}

/// A built Rees matrix monoid together with the data that produced it.
#[derive(Debug, Clone)]
pub struct ReesMonoid {
    pub spec: ReesMatrixSpec,
    pub monoid: Arc<FiniteMonoid>,
}

/// Labels each element by the least element related to it. The relation is
/// an equivalence for both `~_I` and `~_J`.
fn partition_from_relation(n: usize, related: impl Fn(usize, usize) -> bool) -> Partition {
    let labels: Vec<usize> = (0..n)
        .map(|x| (0..=x).find(|&y| related(x, y)).unwrap_or(x))
        .collect();
    Partition::from_labels(&labels)
}

/// Left cosets `gN` as a partition of the group, after checking that `N` is
/// a normal subgroup.
fn coset_partition(group: &FiniteMonoid, inverses: &[usize], n: &[usize]) -> Result<Partition> {
    let mut member = vec![false; group.order()];
    for &x in n {
        if x >= group.order() {
            return Err(Error::NotNormalSubgroup);
        }
        member[x] = true;
    }
    let closed = n
        .iter()
        .all(|&a| n.iter().all(|&b| member[group.mul(a, b)]));
    if !member[group.identity()] || !closed {
        return Err(Error::NotNormalSubgroup);
    }
    let normal = group.elements().all(|g| {
        n.iter()
            .all(|&x| member[group.mul(group.mul(g, x), inverses[g])])
    });
    if !normal {
        return Err(Error::NotNormalSubgroup);
    }
    // g ~ h iff g^-1 h in N
    let labels: Vec<usize> = group
        .elements()
        .map(|h| {
            group
                .elements()
                .find(|&g| member[group.mul(inverses[g], h)])
                .unwrap()
        })
        .collect();
    Ok(Partition::from_labels(&labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::cyclic_group;

    fn trivial() -> FiniteMonoid {
        cyclic_group(1)
    }

    #[test]
    fn trivial_one_by_one() {
        let r = ReesMatrixSpec::new(trivial(), 1, 1, vec![vec![0]])
            .unwrap()
            .build();
        assert_eq!(r.monoid.order(), 2);
        assert_eq!(r.monoid.idempotents(), vec![0, 1]);
    }

    #[test]
    fn rectangular_band() {
        let spec = ReesMatrixSpec::new(trivial(), 2, 2, vec![vec![0, 0], vec![0, 0]]).unwrap();
        let r = spec.build();
        assert_eq!(r.monoid.order(), 5);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let x = spec.element(i, 0, j);
                        let y = spec.element(k, 0, l);
                        assert_eq!(r.monoid.mul(x, y), spec.element(i, 0, l));
                    }
                }
            }
        }
    }

    #[test]
    fn z2_rees_monoid_is_associative() {
        let spec =
            ReesMatrixSpec::new(cyclic_group(2), 2, 2, vec![vec![0, 0], vec![0, 1]]).unwrap();
        let r = spec.build();
        assert_eq!(r.monoid.order(), 9);
        // re-validate through the checking constructor
        FiniteMonoid::from_table(&r.monoid.rows(), 0).unwrap();
        assert_eq!(r.monoid.label(spec.element(1, 1, 0)), "(1,1,0)");
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(
            ReesMatrixSpec::new(cyclic_group(2), 2, 1, vec![vec![0, 2]]),
            Err(Error::InvalidReesSpec(_))
        ));
        let semilattice = FiniteMonoid::from_table(&[vec![0, 1], vec![1, 1]], 0).unwrap();
        assert_eq!(
            ReesMatrixSpec::new(semilattice, 1, 1, vec![vec![0]]),
            Err(Error::NotAGroup)
        );
    }

    #[test]
    fn normalization_fixed_point_and_single_entry() {
        let spec =
            ReesMatrixSpec::new(cyclic_group(2), 2, 2, vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(spec.normalize(0, 0).unwrap(), spec);
        let one = ReesMatrixSpec::new(cyclic_group(2), 1, 1, vec![vec![1]]).unwrap();
        assert_eq!(one.normalize(0, 0).unwrap().sandwich(), &[vec![0]]);
    }

    #[test]
    fn normalization_anchors() {
        let spec =
            ReesMatrixSpec::new(cyclic_group(3), 3, 2, vec![vec![1, 2, 0], vec![2, 2, 1]]).unwrap();
        for i0 in 0..3 {
            for j0 in 0..2 {
                assert!(spec.normalize(i0, j0).unwrap().is_normalized_at(i0, j0));
            }
        }
    }

    #[test]
    fn rank_of_all_identity_matrix() {
        let spec =
            ReesMatrixSpec::new(cyclic_group(2), 2, 2, vec![vec![0, 0], vec![0, 0]]).unwrap();
        let r = spec.rank(None).unwrap();
        assert_eq!((r.r_i, r.r_j, r.rank), (1, 1, 1));
    }

    #[test]
    fn rank_modulo_whole_group_is_one() {
        let spec = ReesMatrixSpec::new(
            cyclic_group(2),
            3,
            3,
            vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]],
        )
        .unwrap();
        assert_eq!(spec.rank(None).unwrap().rank, 3);
        assert_eq!(spec.rank(Some(&[0, 1])).unwrap().rank, 1);
        assert_eq!(spec.rank(Some(&[0])).unwrap().rank, 3);
    }

    #[test]
    fn rank_rejects_non_normal_subgroup() {
        // S3 as permutations of 3 points; {id, (0 1)} is not normal
        let s3 =
            FiniteMonoid::transformation_closure(3, &[vec![1, 0, 2], vec![1, 2, 0]], 100).unwrap();
        let swap = (0..6).find(|&x| s3.label(x) == "[1,0,2]").unwrap();
        let spec = ReesMatrixSpec::new(s3, 1, 1, vec![vec![0]]).unwrap();
        assert_eq!(spec.rank(Some(&[0, swap])), Err(Error::NotNormalSubgroup));
        assert_eq!(spec.rank(Some(&[swap])), Err(Error::NotNormalSubgroup));
    }
}
