//! Moving acts between a monoid and a submonoid.

use std::sync::Arc;

use super::FiniteAct;
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;

/// Checks that `embedding` is an injective monoid homomorphism `N -> M`.
fn check_embedding(n: &FiniteMonoid, m: &FiniteMonoid, embedding: &[usize]) -> Result<()> {
    if embedding.len() != n.order() {
        return Err(Error::SizeMismatch {
            expected: n.order(),
            got: embedding.len(),
        });
    }
    if let Some(&x) = embedding.iter().find(|&&x| x >= m.order()) {
        return Err(Error::OutOfRange(x, m.order()));
    }
    let mut seen = vec![false; m.order()];
    let injective = embedding
        .iter()
        .all(|&x| !std::mem::replace(&mut seen[x], true));
    if !injective || !n.is_homomorphism_to(m, embedding) {
        return Err(Error::NotASubmonoid);
    }
    Ok(())
}

impl FiniteAct {
    /// The `N`-act obtained by restricting scalars along `embedding: N -> M`.
    pub fn restrict_along(
        &self,
        submonoid: Arc<FiniteMonoid>,
        embedding: &[usize],
    ) -> Result<FiniteAct> {
        check_embedding(&submonoid, &self.monoid, embedding)?;
        let mut table = Vec::with_capacity(self.size * submonoid.order());
        for a in 0..self.size {
            table.extend(submonoid.elements().map(|x| self.act(a, embedding[x])));
        }
        Ok(FiniteAct::from_validated(
            submonoid,
            self.size,
            table,
            self.labels.clone(),
        ))
    }

    /// Extends an `N`-act to an `M`-act when `N` sits in `M` with `M \ N` an
    /// ideal: a fresh zero `0` is appended and `am = 0` for `m` outside `N`.
    pub fn transport_along_ideal_complement(
        &self,
        monoid: Arc<FiniteMonoid>,
        embedding: &[usize],
    ) -> Result<FiniteAct> {
        check_embedding(&self.monoid, &monoid, embedding)?;
        let mut preimage = vec![None; monoid.order()];
        for (x, &y) in embedding.iter().enumerate() {
            preimage[y] = Some(x);
        }
        for x in monoid.elements().filter(|&x| preimage[x].is_none()) {
            for m in monoid.elements() {
                if preimage[monoid.mul(x, m)].is_some() || preimage[monoid.mul(m, x)].is_some() {
                    return Err(Error::ComplementNotIdeal(x, m));
                }
            }
        }
        let zero = self.size;
        let mut table = Vec::with_capacity((zero + 1) * monoid.order());
        for a in 0..self.size {
            table.extend(monoid.elements().map(|m| match preimage[m] {
                Some(x) => self.act(a, x),
                None => zero,
            }));
        }
        table.extend(std::iter::repeat_n(zero, monoid.order()));
        let mut labels: Vec<String> = (0..self.size).map(|a| self.label(a)).collect();
        labels.push("0".into());
        let size = zero + 1;
        let act = FiniteAct {
            monoid,
            size,
            table,
            labels: Some(labels),
        };
        act.validate()
            .map_err(|e| Error::InternalInvariantViolation(format!("transported act: {e}")))?;
        Ok(act)
    }

    /// Extends an `N`-act to an `M`-act through a retraction `phi: M -> N`
    /// (a homomorphism fixing `N`): `am = a phi(m)`.
    pub fn transport_along_retraction(
        &self,
        monoid: Arc<FiniteMonoid>,
        embedding: &[usize],
        retraction: &[usize],
    ) -> Result<FiniteAct> {
        check_embedding(&self.monoid, &monoid, embedding)?;
        if retraction.len() != monoid.order() {
            return Err(Error::NotARetraction(format!(
                "map has {} entries, monoid has order {}",
                retraction.len(),
                monoid.order()
            )));
        }
        if retraction.iter().any(|&x| x >= self.monoid.order()) {
            return Err(Error::NotARetraction("image outside the submonoid".into()));
        }
        if !monoid.is_homomorphism_to(&self.monoid, retraction) {
            return Err(Error::NotARetraction("not a homomorphism".into()));
        }
        if let Some(x) = self
            .monoid
            .elements()
            .find(|&x| retraction[embedding[x]] != x)
        {
            return Err(Error::NotARetraction(format!(
                "does not fix submonoid element {}",
                self.monoid.label(x)
            )));
        }
        let mut table = Vec::with_capacity(self.size * monoid.order());
        for a in 0..self.size {
            table.extend(monoid.elements().map(|m| self.act(a, retraction[m])));
        }
        Ok(FiniteAct::from_validated(
            monoid,
            self.size,
            table,
            self.labels.clone(),
        ))
    }
}
