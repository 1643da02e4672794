//! Strong semilattices of groups (Clifford monoids).

use std::collections::BTreeMap;

use super::FiniteMonoid;
use crate::error::{Error, Result};

/// A semilattice `Y` (commutative idempotent monoid), one group per element
/// of `Y`, and structure maps `G_a -> G_b` for every `a >= b`.
///
/// The order on `Y` is `b <= a` iff `ab = b`. Missing diagonal links default
/// to the identity map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongSemilatticeSpec {
    semilattice: FiniteMonoid,
    components: Vec<FiniteMonoid>,
    links: BTreeMap<(usize, usize), Vec<usize>>,
}

impl StrongSemilatticeSpec {
    pub fn new(
        semilattice: FiniteMonoid,
        components: Vec<FiniteMonoid>,
        mut links: BTreeMap<(usize, usize), Vec<usize>>,
    ) -> Result<Self> {
        let y = &semilattice;
        if !y.is_commutative() || y.idempotents().len() != y.order() {
            return Err(Error::InvalidSemilattice(
                "Y must be commutative and idempotent".into(),
            ));
        }
        if components.len() != y.order() {
            return Err(Error::InvalidSemilattice(format!(
                "{} groups for {} semilattice elements",
                components.len(),
                y.order()
            )));
        }
        for g in &components {
            g.group_inverses()?;
        }
        for a in y.elements() {
            let id: Vec<usize> = components[a].elements().collect();
            match links.get(&(a, a)) {
                None => {
                    links.insert((a, a), id);
                }
                Some(l) if *l != id => return Err(Error::LinkNotHomomorphism(a, a)),
                Some(_) => {}
            }
        }
        for (&(a, b), map) in &links {
            if a >= y.order() || b >= y.order() || y.mul(a, b) != b {
                return Err(Error::InvalidSemilattice(format!(
                    "link {a} -> {b} between incomparable or unknown elements"
                )));
            }
            let (src, dst) = (&components[a], &components[b]);
            if !src.is_homomorphism_to(dst, map) {
                return Err(Error::LinkNotHomomorphism(a, b));
            }
        }
        let geq = |a: usize, b: usize| y.mul(a, b) == b;
        for a in y.elements() {
            for b in y.elements().filter(|&b| geq(a, b)) {
                if !links.contains_key(&(a, b)) {
                    return Err(Error::InvalidSemilattice(format!(
                        "missing link {a} -> {b}"
                    )));
                }
            }
        }
        for a in y.elements() {
            for b in y.elements().filter(|&b| geq(a, b)) {
                for c in y.elements().filter(|&c| geq(b, c)) {
                    let (ab, bc, ac) = (&links[&(a, b)], &links[&(b, c)], &links[&(a, c)]);
                    if components[a].elements().any(|x| bc[ab[x]] != ac[x]) {
                        return Err(Error::LinkCoherenceViolation(a, b, c));
                    }
                }
            }
        }
        Ok(StrongSemilatticeSpec {
            semilattice,
            components,
            links,
        })
    }

    pub fn semilattice(&self) -> &FiniteMonoid {
        &self.semilattice
    }

    pub fn components(&self) -> &[FiniteMonoid] {
        &self.components
    }

    /// Index of the first element of `G_a` in the built monoid.
    pub fn offset(&self, a: usize) -> usize {
        self.components[..a].iter().map(FiniteMonoid::order).sum()
    }

    /// The monoid on the disjoint union of the groups, `G_a` laid out in
    /// semilattice index order, with `xy = (x link(a,ab)) (y link(b,ab))`.
    pub fn build(&self) -> Result<FiniteMonoid> {
        let y = &self.semilattice;
        let offsets: Vec<usize> = y.elements().map(|a| self.offset(a)).collect();
        let order: usize = self.components.iter().map(FiniteMonoid::order).sum();
        let mut owner = Vec::with_capacity(order);
        for a in y.elements() {
            owner.extend(self.components[a].elements().map(|x| (a, x)));
        }
        let mut table = Vec::with_capacity(order * order);
        for &(a, x) in &owner {
            for &(b, z) in &owner {
                let c = y.mul(a, b);
                let xc = self.links[&(a, c)][x];
                let zc = self.links[&(b, c)][z];
                table.push(offsets[c] + self.components[c].mul(xc, zc));
            }
        }
        let top = y.identity();
        let identity = offsets[top] + self.components[top].identity();
        let rows: Vec<Vec<usize>> = table.chunks(order).map(<[usize]>::to_vec).collect();
        let monoid = FiniteMonoid::from_table(&rows, identity).map_err(|e| {
            Error::InternalInvariantViolation(format!("semilattice of groups: {e}"))
        })?;
        let central = monoid.idempotents().into_iter().all(|e| {
            monoid
                .elements()
                .all(|x| monoid.mul(e, x) == monoid.mul(x, e))
        });
        if !central {
            return Err(Error::InternalInvariantViolation(
                "idempotents of a semilattice of groups must be central".into(),
            ));
        }
        let labels = owner
            .iter()
            .map(|&(a, x)| {
                format!(
                    "{}@{}",
                    self.components[a].label(x),
                    self.semilattice.label(a)
                )
            })
            .collect();
        monoid.with_labels(labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::cyclic_group;

    fn chain2() -> FiniteMonoid {
        FiniteMonoid::from_table(&[vec![0, 1], vec![1, 1]], 0).unwrap()
    }

    #[test]
    fn trivial_semilattice_gives_the_group() {
        let spec =
            StrongSemilatticeSpec::new(cyclic_group(1), vec![cyclic_group(3)], BTreeMap::new())
                .unwrap();
        let m = spec.build().unwrap();
        assert_eq!(m.order(), 3);
        assert!(m.is_group());
    }

    #[test]
    fn chain_of_two_z2s() {
        let links = BTreeMap::from([((0, 1), vec![0, 1])]);
        let spec =
            StrongSemilatticeSpec::new(chain2(), vec![cyclic_group(2), cyclic_group(2)], links)
                .unwrap();
        let m = spec.build().unwrap();
        assert_eq!(m.order(), 4);
        assert!(m.is_commutative());
        assert_eq!(m.idempotents(), vec![0, 2]);
        assert!(m.is_clifford());
    }

    #[test]
    fn tower_of_two() {
        // G_1 = Z2, G_2 = Z4, generator of Z2 goes to the square of a generator of Z4
        let links = BTreeMap::from([((0, 1), vec![0, 2])]);
        let spec =
            StrongSemilatticeSpec::new(chain2(), vec![cyclic_group(2), cyclic_group(4)], links)
                .unwrap();
        let m = spec.build().unwrap();
        assert_eq!(m.order(), 6);
        assert!(m.is_clifford());
    }

    #[test]
    fn rejects_non_homomorphic_link() {
        let links = BTreeMap::from([((0, 1), vec![1, 0])]);
        assert_eq!(
            StrongSemilatticeSpec::new(chain2(), vec![cyclic_group(2), cyclic_group(2)], links),
            Err(Error::LinkNotHomomorphism(0, 1))
        );
    }

    #[test]
    fn rejects_incoherent_links() {
        // chain 0 > 1 > 2 with Z3 everywhere; 0->2 is not the composite
        let chain3 =
            FiniteMonoid::from_table(&[vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]], 0).unwrap();
        let id = vec![0, 1, 2];
        let swap = vec![0, 2, 1];
        let links = BTreeMap::from([((0, 1), id.clone()), ((1, 2), id.clone()), ((0, 2), swap)]);
        let groups = vec![cyclic_group(3), cyclic_group(3), cyclic_group(3)];
        assert_eq!(
            StrongSemilatticeSpec::new(chain3, groups, links),
            Err(Error::LinkCoherenceViolation(0, 1, 2))
        );
    }
}
