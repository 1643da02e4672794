//! The cyclic act `M/rho` against the monoid `N = M/rho`.
//!
//! Subacts of the act are exactly the right ideals of `N`, and each act
//! condition matches a monoid condition: RF with monoid RF, WSS with
//! separation from principal right ideals, SSS from all right ideals, CS
//! from the complement of a point. Monoid-side separation uses two-sided
//! congruences on `N`, found by the same restricted-growth search run over
//! left and right multiplications.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use super::{check_condition, instances, Condition};
use crate::act::FiniteAct;
use crate::congruence::{self, SearchLimits};
use crate::error::{Error, Result};
use crate::monoid::{two_sided_violation, FiniteMonoid};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionAgreement {
    pub condition: Condition,
    pub act_holds: bool,
    pub monoid_holds: bool,
    /// The act instances and the monoid instances are the same sets.
    pub instances_match: bool,
}

impl ConditionAgreement {
    pub fn agrees(&self) -> bool {
        self.act_holds == self.monoid_holds && self.instances_match
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondenceReport {
    /// Size of the act `M/rho`.
    pub act_size: usize,
    /// Subacts of `M/rho` are the images of the `rho`-saturated right ideals
    /// of `M`.
    pub saturated_ideals_match: bool,
    /// Subacts of `M/rho` are the right ideals of `N` (two-sided `rho` only).
    pub quotient_ideals_match: Option<bool>,
    /// Per-condition agreement (two-sided `rho` only).
    pub conditions: Vec<ConditionAgreement>,
}

impl CorrespondenceReport {
    pub fn all_agree(&self) -> bool {
        self.saturated_ideals_match
            && self.quotient_ideals_match.unwrap_or(true)
            && self.conditions.iter().all(ConditionAgreement::agrees)
    }
}

/// Monoid-side instances on `N`, in the same layout as the act side.
fn monoid_instances(
    n: &FiniteMonoid,
    condition: Condition,
    limits: &SearchLimits,
) -> Result<Vec<(usize, Vec<usize>)>> {
    let size = n.order();
    let mut out = Vec::new();
    let mut outside = |sets: Vec<Vec<usize>>| {
        for s in sets {
            for a in (0..size).filter(|a| !s.contains(a)) {
                out.push((a, s.clone()));
            }
        }
    };
    match condition {
        Condition::Rf => outside((0..size).map(|b| vec![b]).collect()),
        Condition::Wss => {
            let mut principal: Vec<Vec<usize>> =
                n.elements().map(|y| n.principal_right_ideal(y)).collect();
            principal.sort();
            principal.dedup();
            outside(principal);
        }
        Condition::Sss => {
            let cap = limits.max_subacts;
            outside(n.right_ideals(cap)?)
        }
        Condition::Cs if size == 1 => {}
        Condition::Cs => outside(
            (0..size)
                .map(|a| (0..size).filter(|&x| x != a).collect())
                .collect(),
        ),
    }
    Ok(out)
}

fn as_set(instances: Vec<(usize, Vec<usize>)>) -> BTreeSet<(usize, Vec<usize>)> {
    instances
        .into_iter()
        .map(|(a, mut x)| {
            // RF is stated on unordered pairs on the act side
            x.sort_unstable();
            (a, x)
        })
        .collect()
}

/// Runs the correspondence checks for a right congruence `rho` on `M`.
/// With `monoid_side` set, `rho` must be two-sided and the four conditions
/// are compared; otherwise only the ideal bijection is checked.
pub fn act_monoid_correspondence(
    monoid: Arc<FiniteMonoid>,
    rho: &Partition,
    monoid_side: bool,
    limits: &SearchLimits,
) -> Result<CorrespondenceReport> {
    let act = FiniteAct::cyclic_from_right_congruence(monoid.clone(), rho)?;
    let subacts: Vec<Vec<usize>> = act.subacts(limits.max_subacts)?;
    let mut images: Vec<Vec<usize>> = monoid
        .right_ideals(limits.max_subacts)?
        .into_iter()
        .filter(|ideal| {
            let inside: BTreeSet<usize> = ideal.iter().copied().collect();
            monoid
                .elements()
                .all(|x| inside.contains(&x) == inside.contains(&rho.block_members(x)[0]))
        })
        .map(|ideal| {
            let mut blocks: Vec<usize> = ideal.iter().map(|&x| rho.block_of(x)).collect();
            blocks.sort_unstable();
            blocks.dedup();
            blocks
        })
        .collect();
    images.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    images.dedup();
    let saturated_ideals_match = images == subacts;

    let two_sided = two_sided_violation(&monoid, rho);
    if !monoid_side {
        return Ok(CorrespondenceReport {
            act_size: act.size(),
            saturated_ideals_match,
            quotient_ideals_match: None,
            conditions: Vec::new(),
        });
    }
    if let Some((a, b, m)) = two_sided {
        return Err(Error::NotTwoSidedCongruence(a, b, m));
    }
    let n = monoid.quotient(rho)?;
    let quotient_ideals_match = n.right_ideals(limits.max_subacts)? == subacts;
    let ops = n.two_sided_operations();
    let mut conditions = Vec::new();
    for condition in Condition::ALL {
        let act_holds = check_condition(&act, condition, limits)?.holds;
        let act_side = as_set(instances(&act, condition, limits)?);
        let mut monoid_holds = true;
        let monoid_list = monoid_instances(&n, condition, limits)?;
        for (a, x) in &monoid_list {
            let found = congruence::least_separating(n.order(), &ops, *a, x, n.order(), limits)?;
            if found.is_none() {
                monoid_holds = false;
                break;
            }
        }
        let mut monoid_side = as_set(monoid_list);
        if condition == Condition::Rf {
            // the act side lists each unordered pair once
            monoid_side.retain(|(a, x)| x[0] > *a);
        }
        conditions.push(ConditionAgreement {
            condition,
            act_holds,
            monoid_holds,
            instances_match: act_side == monoid_side,
        });
    }
    Ok(CorrespondenceReport {
        act_size: act.size(),
        saturated_ideals_match,
        quotient_ideals_match: Some(quotient_ideals_match),
        conditions,
    })
}
