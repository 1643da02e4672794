//! Parameterized finite reconstructions of standard examples, each carrying
//! the facts it is expected to satisfy.
//!
//! Infinite examples appear either as finite quotients or as windows: partial
//! acts whose entries are defined only when the result stays inside the
//! window, so every identification derived in a window also holds in the
//! infinite act.

mod build;

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::act::{FiniteAct, PartialAct};
use crate::congruence::{self, SearchLimits};
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::partition::Partition;
use crate::separability::separate;

pub use build::{squarefree_words, FAMILIES};

/// The act of a family instance.
#[derive(Debug, Clone)]
pub enum FamilyAct {
    Total(FiniteAct),
    Partial(PartialAct),
}

impl FamilyAct {
    pub fn size(&self) -> usize {
        match self {
            FamilyAct::Total(a) => a.size(),
            FamilyAct::Partial(a) => a.size(),
        }
    }

    pub fn label(&self, x: usize) -> String {
        match self {
            FamilyAct::Total(a) => a.label(x),
            FamilyAct::Partial(a) => a.label(x),
        }
    }

    fn closure(&self, seeds: &[(usize, usize)]) -> Result<Partition> {
        match self {
            FamilyAct::Total(a) => {
                congruence::principal_closure(a, seeds).map(|c| c.into_partition())
            }
            FamilyAct::Partial(a) => a.closure(seeds),
        }
    }
}

/// Where a witness congruence lives.
#[derive(Debug, Clone)]
pub enum Carrier {
    /// The instance's own act.
    Instance,
    /// The regular act of another monoid.
    RegularActOf(Arc<FiniteMonoid>),
    Partial(PartialAct),
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub description: String,
    pub carrier: Carrier,
    pub partition: Partition,
    /// `(element, forbidden)` pairs the partition must separate.
    pub separations: Vec<(usize, Vec<usize>)>,
    /// A monoid homomorphism from the carrier's monoid whose kernel is the
    /// partition (regular carriers only).
    pub homomorphism: Option<(Arc<FiniteMonoid>, Vec<usize>)>,
    /// An element and the exact block it must lie in.
    pub expected_block: Option<(usize, Vec<usize>)>,
}

#[derive(Debug, Clone)]
pub enum Fact {
    /// Identifying `seed` forces `target` to be identified.
    ForcingChain {
        seed: (usize, usize),
        target: (usize, usize),
    },
    MinIndex {
        element: usize,
        subset: Vec<usize>,
        value: usize,
    },
    WitnessCongruence(Box<Witness>),
    /// No congruence with at most `bound` classes separates.
    NoSeparationUpTo {
        element: usize,
        subset: Vec<usize>,
        bound: usize,
    },
    StructuralCount {
        name: String,
        value: usize,
    },
}

#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub monoid: Arc<FiniteMonoid>,
    pub act: FamilyAct,
    pub marked: BTreeMap<String, usize>,
    pub expected: Vec<Fact>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactOutcome {
    pub fact: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub params: BTreeMap<String, i64>,
    pub outcomes: Vec<FactOutcome>,
}

impl FamilyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    /// One `pass`/`FAIL` line per fact after a `family` header. Goldens store
    /// this text.
    pub fn to_text(&self) -> String {
        let mut out = format!("family {}\n", instance_key(&self.family, &self.params));
        for o in &self.outcomes {
            let verdict = if o.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("{verdict} {} ({})\n", o.fact, o.detail));
        }
        out
    }
}

/// `name` followed by `key=value` pairs, e.g. `kozhukhov n=3`.
pub fn instance_key(name: &str, params: &BTreeMap<String, i64>) -> String {
    let mut s = name.to_string();
    for (k, v) in params {
        s.push_str(&format!(" {k}={v}"));
    }
    s
}

/// File stem for goldens and dumps, e.g. `kozhukhov_n3`.
pub fn instance_stem(name: &str, params: &BTreeMap<String, i64>) -> String {
    let mut s = name.to_string();
    for (k, v) in params {
        s.push_str(&format!("_{k}{v}"));
    }
    s
}

pub fn build(name: &str, params: &BTreeMap<String, i64>) -> Result<FamilyInstance> {
    build::build(name, params)
}

impl FamilyInstance {
    pub fn marked(&self, name: &str) -> Option<usize> {
        self.marked.get(name).copied()
    }

    pub fn key(&self) -> String {
        instance_key(&self.name, &self.params)
    }

    pub fn stem(&self) -> String {
        instance_stem(&self.name, &self.params)
    }

    fn total(&self) -> Result<&FiniteAct> {
        match &self.act {
            FamilyAct::Total(a) => Ok(a),
            FamilyAct::Partial(_) => {
                Err(Error::PreconditionViolated("fact needs a total act".into()))
            }
        }
    }

    fn set_label(&self, xs: &[usize]) -> String {
        let parts: Vec<String> = xs.iter().map(|&x| self.act.label(x)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Short human-readable form of a fact, using the act's labels.
    pub fn describe(&self, fact: &Fact) -> String {
        let l = |x: usize| self.act.label(x);
        match fact {
            Fact::ForcingChain { seed, target } => format!(
                "forcing {}~{} => {}~{}",
                l(seed.0),
                l(seed.1),
                l(target.0),
                l(target.1)
            ),
            Fact::MinIndex {
                element,
                subset,
                value,
            } => format!(
                "min_index {} from {} = {value}",
                l(*element),
                self.set_label(subset)
            ),
            Fact::WitnessCongruence(w) => format!("witness {}", w.description),
            Fact::NoSeparationUpTo {
                element,
                subset,
                bound,
            } => format!(
                "no_separation {} from {} within {bound}",
                l(*element),
                self.set_label(subset)
            ),
            Fact::StructuralCount { name, value } => format!("count {name} = {value}"),
        }
    }

    fn check(&self, fact: &Fact, limits: &SearchLimits) -> Result<(bool, String)> {
        match fact {
            Fact::ForcingChain { seed, target } => {
                let p = self.act.closure(&[*seed])?;
                let merged = p.same_block(target.0, target.1);
                Ok((merged, format!("closure has {} classes", p.index())))
            }
            Fact::MinIndex {
                element,
                subset,
                value,
            } => {
                let act = self.total()?;
                let found = separate(act, *element, subset, None, limits)?
                    .map(|c| c.quotient_size())
                    .ok_or_else(|| {
                        Error::InternalInvariantViolation("equality does not separate".into())
                    })?;
                Ok((found == *value, format!("found {found}")))
            }
            Fact::NoSeparationUpTo {
                element,
                subset,
                bound,
            } => {
                let act = self.total()?;
                match separate(act, *element, subset, Some(*bound), limits)? {
                    None => Ok((true, "none found".into())),
                    Some(c) => Ok((false, format!("index {} separates", c.quotient_size()))),
                }
            }
            Fact::StructuralCount { name, value } => {
                let actual = self.structural_count(name)?;
                Ok((actual == *value, format!("computed {actual}")))
            }
            Fact::WitnessCongruence(w) => self.check_witness(w),
        }
    }

    fn structural_count(&self, name: &str) -> Result<usize> {
        match name {
            "monoid_order" => Ok(self.monoid.order()),
            "act_size" => Ok(self.act.size()),
            "squarefree_words" => {
                let n = self.params.get("n").copied().unwrap_or(0).max(0) as usize;
                Ok(count_squarefree_brute_force(n))
            }
            other => Err(Error::PreconditionViolated(format!(
                "unknown structural count {other}"
            ))),
        }
    }

    fn check_witness(&self, w: &Witness) -> Result<(bool, String)> {
        let regular;
        let violation = match &w.carrier {
            Carrier::Instance => match &self.act {
                FamilyAct::Total(a) => total_violation(a, &w.partition),
                FamilyAct::Partial(a) => partial_violation(a, &w.partition),
            },
            Carrier::RegularActOf(m) => {
                regular = FiniteAct::regular(m.clone());
                total_violation(&regular, &w.partition)
            }
            Carrier::Partial(a) => partial_violation(a, &w.partition),
        };
        if let Some(msg) = violation {
            return Ok((false, msg));
        }
        for (a, xs) in &w.separations {
            if xs.iter().any(|&x| w.partition.same_block(*a, x)) {
                return Ok((false, format!("does not separate {a} from {xs:?}")));
            }
        }
        if let Some((target, map)) = &w.homomorphism {
            let source = match &w.carrier {
                Carrier::RegularActOf(m) => m.clone(),
                Carrier::Instance => self.monoid.clone(),
                Carrier::Partial(_) => {
                    return Ok((false, "homomorphism needs a regular carrier".into()))
                }
            };
            if !source.is_homomorphism_to(target, map) {
                return Ok((false, "map is not a monoid homomorphism".into()));
            }
            if Partition::from_labels(map) != w.partition {
                return Ok((false, "partition is not the kernel of the map".into()));
            }
        }
        if let Some((a, block)) = &w.expected_block {
            if w.partition.block_members(*a) != *block {
                return Ok((
                    false,
                    format!("class of {a} is {:?}", w.partition.block_members(*a)),
                ));
            }
        }
        Ok((
            true,
            format!(
                "{} classes, {} separations",
                w.partition.index(),
                w.separations.len()
            ),
        ))
    }

    /// Checks every expected fact. Failures, including errors raised by a
    /// check, become report entries.
    pub fn verify(&self, limits: &SearchLimits) -> FamilyReport {
        let outcomes = self
            .expected
            .par_iter()
            .map(|fact| {
                let (passed, detail) = match self.check(fact, limits) {
                    Ok(r) => r,
                    Err(e) => (false, format!("error: {e}")),
                };
                FactOutcome {
                    fact: self.describe(fact),
                    passed,
                    detail,
                }
            })
            .collect();
        FamilyReport {
            family: self.name.clone(),
            params: self.params.clone(),
            outcomes,
        }
    }
}

fn total_violation(act: &FiniteAct, p: &Partition) -> Option<String> {
    if p.size() != act.size() {
        return Some(format!("partition has {} entries", p.size()));
    }
    congruence::violation(act, p).map(|(a, b, m)| format!("{a} ~ {b} but not after acting by {m}"))
}

fn partial_violation(act: &PartialAct, p: &Partition) -> Option<String> {
    if p.size() != act.size() {
        return Some(format!("partition has {} entries", p.size()));
    }
    act.compatibility_violation(p)
        .map(|(a, b, m)| format!("{a} ~ {b} but not after acting by {m}"))
}

/// Counts square-free words of length `1..=n` over three letters by testing
/// every word, independently of the incremental generator used to build the
/// monoid.
pub fn count_squarefree_brute_force(n: usize) -> usize {
    let mut total = 0;
    for len in 1..=n {
        let mut word = vec![0u8; len];
        'words: loop {
            let square = (1..=len / 2).any(|half| {
                (0..=len - 2 * half).any(|s| word[s..s + half] == word[s + half..s + 2 * half])
            });
            if !square {
                total += 1;
            }
            for pos in (0..len).rev() {
                if word[pos] < 2 {
                    word[pos] += 1;
                    continue 'words;
                }
                word[pos] = 0;
            }
            break;
        }
    }
    total
}
