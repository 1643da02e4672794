//! Bracket sets, separation searches and the four separability conditions.
//!
//! Conditions: RF separates pairs, WSS separates an element from a cyclic
//! subact, SSS from any subact, CS from the rest of the act.

mod correspondence;
mod rees;
mod report;
mod witness;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::act::FiniteAct;
use crate::congruence::{self, Congruence, SearchLimits};
use crate::error::{Error, Result};
use crate::partition::Partition;

pub use correspondence::{act_monoid_correspondence, ConditionAgreement, CorrespondenceReport};
pub use rees::{rees_bracket_decomposition, ReesBracketDecomposition};
pub use report::{CertificateRecord, InstanceRecord, ReportRecord};
pub use witness::{
    clifford_witness, disjoint_union_fallback, disjoint_union_witness, rclass_witness,
    rees_cyclic_sss_witness,
};

/// `[a, b]_M = {m : a = bm}` for every `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketProfile {
    pub element: usize,
    /// `brackets[b]`, ascending monoid elements.
    pub brackets: Vec<Vec<usize>>,
    pub distinct_count: usize,
}

/// `[a, b]_M`, ascending.
pub fn bracket_set(act: &FiniteAct, a: usize, b: usize) -> Vec<usize> {
    act.monoid()
        .elements()
        .filter(|&m| act.act(b, m) == a)
        .collect()
}

pub fn bracket_profile(act: &FiniteAct, a: usize) -> Result<BracketProfile> {
    check_element(act, a)?;
    let brackets: Vec<Vec<usize>> = (0..act.size()).map(|b| bracket_set(act, a, b)).collect();
    let distinct_count = Partition::from_labels(&brackets).index();
    Ok(BracketProfile {
        element: a,
        brackets,
        distinct_count,
    })
}

/// `b ~ c` iff `[a, b]_M = [a, c]_M`; the block of `a` is `{a}`.
pub fn sigma(act: &FiniteAct, a: usize) -> Result<Congruence> {
    let profile = bracket_profile(act, a)?;
    let p = Partition::from_labels(&profile.brackets);
    let c = congruence::verify(act, p)
        .map_err(|e| Error::InternalInvariantViolation(format!("bracket partition: {e}")))?;
    if c.partition().block_members(a) != [a] {
        return Err(Error::InternalInvariantViolation(
            "bracket partition merges a with another element".into(),
        ));
    }
    Ok(c)
}

fn check_element(act: &FiniteAct, a: usize) -> Result<()> {
    if a >= act.size() {
        return Err(Error::OutOfRange(a, act.size()));
    }
    Ok(())
}

/// A congruence separating `element` from every member of `forbidden`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationCertificate {
    element: usize,
    forbidden: Vec<usize>,
    congruence: Congruence,
}

impl SeparationCertificate {
    /// Checks the separation; `forbidden` is sorted and deduplicated.
    pub fn new(element: usize, forbidden: &[usize], congruence: Congruence) -> Result<Self> {
        let mut forbidden = forbidden.to_vec();
        forbidden.sort_unstable();
        forbidden.dedup();
        let n = congruence.size();
        if let Some(&x) = forbidden.iter().chain([&element]).find(|&&x| x >= n) {
            return Err(Error::OutOfRange(x, n));
        }
        if !congruence.separates(element, &forbidden) {
            return Err(Error::InternalInvariantViolation(format!(
                "congruence does not separate {element} from {forbidden:?}"
            )));
        }
        Ok(SeparationCertificate {
            element,
            forbidden,
            congruence,
        })
    }

    pub fn element(&self) -> usize {
        self.element
    }

    pub fn forbidden(&self) -> &[usize] {
        &self.forbidden
    }

    pub fn congruence(&self) -> &Congruence {
        &self.congruence
    }

    pub fn quotient_size(&self) -> usize {
        self.congruence.index()
    }
}

/// The least-index congruence separating `a` from `forbidden` (ties broken by
/// restricted-growth order), searching only up to `max_index` classes when
/// given. `None` means nothing within the bound separates.
pub fn separate(
    act: &FiniteAct,
    a: usize,
    forbidden: &[usize],
    max_index: Option<usize>,
    limits: &SearchLimits,
) -> Result<Option<SeparationCertificate>> {
    check_element(act, a)?;
    if let Some(&x) = forbidden.iter().find(|&&x| x >= act.size()) {
        return Err(Error::OutOfRange(x, act.size()));
    }
    if forbidden.is_empty() {
        return Err(Error::PreconditionViolated("forbidden set is empty".into()));
    }
    if forbidden.contains(&a) {
        return Err(Error::ElementInForbiddenSet(a));
    }
    let bound = max_index.unwrap_or(act.size());
    let found =
        congruence::least_separating(act.size(), &act.operations(), a, forbidden, bound, limits)?;
    found
        .map(|p| SeparationCertificate::new(a, forbidden, Congruence::trusted(p)))
        .transpose()
}

/// Least index of a congruence separating `a` from `forbidden`. Over a finite
/// act the equality congruence always works, so this is at most `|A|`.
pub fn min_index(
    act: &FiniteAct,
    a: usize,
    forbidden: &[usize],
    limits: &SearchLimits,
) -> Result<usize> {
    let cert = separate(act, a, forbidden, None, limits)?;
    cert.map(|c| c.quotient_size())
        .ok_or_else(|| Error::InternalInvariantViolation("equality does not separate".into()))
}

/// One of the four separability conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    Rf,
    Wss,
    Sss,
    Cs,
}

impl Condition {
    pub const ALL: [Condition; 4] = [Condition::Rf, Condition::Wss, Condition::Sss, Condition::Cs];
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Rf => "rf",
            Condition::Wss => "wss",
            Condition::Sss => "sss",
            Condition::Cs => "cs",
        })
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rf" => Ok(Condition::Rf),
            "wss" => Ok(Condition::Wss),
            "sss" => Ok(Condition::Sss),
            "cs" => Ok(Condition::Cs),
            other => Err(Error::PreconditionViolated(format!(
                "unknown condition {other}"
            ))),
        }
    }
}

/// The result of checking one condition on one act.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: Condition,
    pub holds: bool,
    pub certificates: Vec<SeparationCertificate>,
    /// The first instance with no certificate within the bound.
    pub counterexample: Option<(usize, Vec<usize>)>,
}

/// The `(element, forbidden set)` instances a condition quantifies over, in
/// a fixed order.
pub fn instances(
    act: &FiniteAct,
    condition: Condition,
    limits: &SearchLimits,
) -> Result<Vec<(usize, Vec<usize>)>> {
    let n = act.size();
    let mut out = Vec::new();
    match condition {
        Condition::Rf => {
            for a in 0..n {
                for b in a + 1..n {
                    out.push((a, vec![b]));
                }
            }
        }
        Condition::Wss => {
            let mut cyclic: Vec<Vec<usize>> = (0..n).map(|x| act.cyclic_subact(x)).collect();
            cyclic.sort();
            cyclic.dedup();
            for c in &cyclic {
                for a in (0..n).filter(|a| !c.contains(a)) {
                    out.push((a, c.clone()));
                }
            }
        }
        Condition::Sss => {
            for b in act.subacts(limits.max_subacts)? {
                for a in (0..n).filter(|a| !b.contains(a)) {
                    out.push((a, b.clone()));
                }
            }
        }
        Condition::Cs => {
            if n > 1 {
                for a in 0..n {
                    out.push((a, (0..n).filter(|&x| x != a).collect()));
                }
            }
        }
    }
    Ok(out)
}

/// Solves every instance of `condition` with [`separate`].
pub fn check_condition(
    act: &FiniteAct,
    condition: Condition,
    limits: &SearchLimits,
) -> Result<ConditionReport> {
    check_condition_bounded(act, condition, None, limits)
}

/// As [`check_condition`], only accepting congruences with at most
/// `max_index` classes.
pub fn check_condition_bounded(
    act: &FiniteAct,
    condition: Condition,
    max_index: Option<usize>,
    limits: &SearchLimits,
) -> Result<ConditionReport> {
    if act.size() == 1 {
        let universal = Congruence::trusted(Partition::universal(1));
        return Ok(ConditionReport {
            condition,
            holds: true,
            certificates: vec![SeparationCertificate::new(0, &[], universal)?],
            counterexample: None,
        });
    }
    let ops = act.operations();
    let bound = max_index.unwrap_or(act.size());
    let mut certificates = Vec::new();
    for (a, forbidden) in instances(act, condition, limits)? {
        match congruence::least_separating(act.size(), &ops, a, &forbidden, bound, limits)? {
            Some(p) => certificates.push(SeparationCertificate::new(
                a,
                &forbidden,
                Congruence::trusted(p),
            )?),
            None => {
                return Ok(ConditionReport {
                    condition,
                    holds: false,
                    certificates,
                    counterexample: Some((a, forbidden)),
                })
            }
        }
    }
    Ok(ConditionReport {
        condition,
        holds: true,
        certificates,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::monoid::FiniteMonoid;

    fn null3() -> Arc<FiniteMonoid> {
        Arc::new(FiniteMonoid::adjoin_identity(&[vec![1, 1], vec![1, 1]]).unwrap())
    }

    #[test]
    fn null_monoid_brackets() {
        // elements: 1, s, 0
        let act = FiniteAct::regular(null3());
        let p = bracket_profile(&act, 1).unwrap();
        assert_eq!(p.brackets, vec![vec![1], vec![0], vec![]]);
        assert_eq!(p.distinct_count, 3);
        let z = bracket_profile(&act, 2).unwrap();
        assert_eq!(z.brackets, vec![vec![2], vec![1, 2], vec![0, 1, 2]]);
        assert_eq!(sigma(&act, 1).unwrap().partition(), &Partition::equality(3));
    }

    #[test]
    fn one_point_act() {
        let act = FiniteAct::trivial(null3());
        let p = bracket_profile(&act, 0).unwrap();
        assert_eq!(p.brackets, vec![vec![0, 1, 2]]);
        assert_eq!(sigma(&act, 0).unwrap().index(), 1);
        for c in Condition::ALL {
            let r = check_condition(&act, c, &SearchLimits::default()).unwrap();
            assert!(r.holds);
            assert_eq!(r.certificates[0].quotient_size(), 1);
        }
    }

    #[test]
    fn separate_two_zeros() {
        let m = null3();
        let act = FiniteAct::from_table(m, &[vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
        let c = separate(&act, 0, &[1], None, &SearchLimits::default())
            .unwrap()
            .unwrap();
        assert_eq!(c.quotient_size(), 2);
        assert_eq!(
            separate(&act, 0, &[0], None, &SearchLimits::default()),
            Err(Error::ElementInForbiddenSet(0))
        );
        assert!(matches!(
            separate(&act, 0, &[], None, &SearchLimits::default()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn conditions_hold_on_regular_null_act() {
        let act = FiniteAct::regular(null3());
        for c in Condition::ALL {
            let r = check_condition(&act, c, &SearchLimits::default()).unwrap();
            assert!(r.holds, "{c}");
            assert!(r.counterexample.is_none());
        }
        let cs = check_condition(&act, Condition::Cs, &SearchLimits::default()).unwrap();
        assert_eq!(cs.certificates.len(), 3);
        // 1 from {s, 0} uses the ideal {s, 0}; 0 from {1, s} needs equality
        assert_eq!(cs.certificates[0].quotient_size(), 2);
        assert_eq!(cs.certificates[2].quotient_size(), 3);
        let bounded =
            check_condition_bounded(&act, Condition::Cs, Some(1), &SearchLimits::default())
                .unwrap();
        assert!(!bounded.holds);
        assert_eq!(bounded.counterexample, Some((0, vec![1, 2])));
    }
}
