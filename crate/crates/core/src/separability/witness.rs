//! Explicit separating congruences built from the structure of the act or
//! the monoid, each verified before it is returned.

use std::sync::Arc;

use super::{separate, SeparationCertificate};
use crate::act::FiniteAct;
use crate::congruence::{self, SearchLimits};
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::partition::Partition;

fn certify(
    act: &FiniteAct,
    p: Partition,
    a: usize,
    forbidden: &[usize],
) -> Result<SeparationCertificate> {
    let c = congruence::verify(act, p)
        .map_err(|e| Error::InternalInvariantViolation(format!("witness partition: {e}")))?;
    SeparationCertificate::new(a, forbidden, c)
}

/// Separates `a` from a zero when the monoid has finitely many R-classes.
///
/// Each nonzero `x` is labelled by which R-classes `R_i` it sends entirely to
/// the zero (`xR_i = {0}`); the zero gets a block of its own.
pub fn rclass_witness(act: &FiniteAct, zero: usize, a: usize) -> Result<SeparationCertificate> {
    for x in [zero, a] {
        if x >= act.size() {
            return Err(Error::OutOfRange(x, act.size()));
        }
    }
    if act.monoid().elements().any(|m| act.act(zero, m) != zero) {
        return Err(Error::NotAZero(zero));
    }
    if a == zero {
        return Err(Error::ElementInForbiddenSet(a));
    }
    let classes = act.monoid().r_classes().blocks();
    let labels: Vec<Option<Vec<bool>>> = (0..act.size())
        .map(|x| {
            (x != zero).then(|| {
                classes
                    .iter()
                    .map(|r| r.iter().all(|&m| act.act(x, m) == zero))
                    .collect()
            })
        })
        .collect();
    let p = Partition::from_labels(&labels);
    let bound = 1usize
        .checked_shl(classes.len() as u32)
        .map_or(usize::MAX, |b| b + 1);
    if p.index() > bound {
        return Err(Error::InternalInvariantViolation(
            "R-class witness has too many classes".into(),
        ));
    }
    certify(act, p, a, &[zero])
}

/// Separates `a` and `b` over a Clifford monoid when they generate different
/// cyclic subacts: after arranging `a` not below `b`, the blocks are
/// `{x : a <= x}` and its complement.
pub fn clifford_witness(act: &FiniteAct, a: usize, b: usize) -> Result<SeparationCertificate> {
    for x in [a, b] {
        if x >= act.size() {
            return Err(Error::OutOfRange(x, act.size()));
        }
    }
    if !act.monoid().is_clifford() {
        return Err(Error::NotClifford);
    }
    let leq = act.preorder();
    if leq[a][b] && leq[b][a] {
        return Err(Error::RRelated(a, b));
    }
    let top = if leq[a][b] { b } else { a };
    let labels: Vec<bool> = (0..act.size()).map(|x| leq[top][x]).collect();
    certify(act, Partition::from_labels(&labels), a, &[b])
}

/// Whether `M \ {1}` is a subsemigroup in which every element divides every
/// other on both sides (finite simple, hence completely simple).
fn completely_simple_complement(m: &FiniteMonoid) -> bool {
    let one = m.identity();
    let s: Vec<usize> = m.elements().filter(|&x| x != one).collect();
    if s.is_empty() {
        return false;
    }
    let closed = s.iter().all(|&x| s.iter().all(|&y| m.mul(x, y) != one));
    closed
        && s.iter().all(|&x| {
            let mut reach = vec![false; m.order()];
            for &u in &s {
                let ux = m.mul(u, x);
                for &v in &s {
                    reach[m.mul(ux, v)] = true;
                }
            }
            s.iter().all(|&t| reach[t])
        })
}

/// For the cyclic act `M/rho` over `M = S^1` with `S` completely simple, and
/// a zero of it: the classes `{[1]}`, `{0}` and everything else.
///
/// Returns the act together with a certificate separating `a` from the zero
/// (the least zero other than `[1]` when `zero` is absent). With only two
/// elements the equality congruence is returned.
pub fn rees_cyclic_sss_witness(
    monoid: Arc<FiniteMonoid>,
    rho: &Partition,
    zero: Option<usize>,
    a: usize,
) -> Result<(FiniteAct, SeparationCertificate)> {
    if !completely_simple_complement(&monoid) {
        return Err(Error::PreconditionViolated(
            "monoid minus its identity is not completely simple".into(),
        ));
    }
    let one = monoid.identity();
    let act = FiniteAct::cyclic_from_right_congruence(monoid, rho)?;
    let gen = rho.block_of(one);
    let zero = match zero {
        Some(z) if z >= act.size() => return Err(Error::OutOfRange(z, act.size())),
        Some(z) => {
            if act.monoid().elements().any(|m| act.act(z, m) != z) {
                return Err(Error::NotAZero(z));
            }
            z
        }
        None => *act
            .zeros()
            .iter()
            .find(|&&z| z != gen)
            .ok_or_else(|| Error::PreconditionViolated("act has no zero".into()))?,
    };
    if zero == gen {
        return Err(Error::PreconditionViolated(
            "the generator is the zero".into(),
        ));
    }
    if a >= act.size() {
        return Err(Error::OutOfRange(a, act.size()));
    }
    if a == zero {
        return Err(Error::ElementInForbiddenSet(a));
    }
    if rho.block_members(one) != [one] {
        return Err(Error::InternalInvariantViolation(
            "class of the identity is not a singleton".into(),
        ));
    }
    let p = if act.size() <= 2 {
        Partition::equality(act.size())
    } else {
        let labels: Vec<usize> = (0..act.size())
            .map(|x| match x {
                _ if x == gen => 0,
                _ if x == zero => 1,
                _ => 2,
            })
            .collect();
        Partition::from_labels(&labels)
    };
    let cert = certify(&act, p, a, &[zero])?;
    Ok((act, cert))
}

fn locate_block(act: &FiniteAct, blocks: &[Vec<usize>], a: usize) -> Result<usize> {
    let mut owner = vec![usize::MAX; act.size()];
    for (i, b) in blocks.iter().enumerate() {
        act.check_subact(b)?;
        for &x in b {
            if owner[x] != usize::MAX {
                return Err(Error::PreconditionViolated(format!(
                    "element {x} lies in two blocks"
                )));
            }
            owner[x] = i;
        }
    }
    if let Some(x) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::PreconditionViolated(format!(
            "element {x} lies in no block"
        )));
    }
    if a >= act.size() {
        return Err(Error::OutOfRange(a, act.size()));
    }
    Ok(owner[a])
}

/// For a decomposition of the act into subacts `blocks`, separates `a` from a
/// set `forbidden` missing the block of `a` by the two classes: that block and
/// the rest.
pub fn disjoint_union_witness(
    act: &FiniteAct,
    blocks: &[Vec<usize>],
    a: usize,
    forbidden: &[usize],
) -> Result<SeparationCertificate> {
    let i = locate_block(act, blocks, a)?;
    if forbidden.is_empty() {
        return Err(Error::PreconditionViolated("forbidden set is empty".into()));
    }
    if forbidden.iter().any(|x| blocks[i].contains(x)) {
        return Err(Error::XMeetsBlock);
    }
    let labels: Vec<bool> = (0..act.size()).map(|x| blocks[i].contains(&x)).collect();
    certify(act, Partition::from_labels(&labels), a, forbidden)
}

/// The other case: separate inside the block `A_i` of `a`, then send the
/// complement of `A_i` to one extra class (a fresh zero of the image).
pub fn disjoint_union_fallback(
    act: &FiniteAct,
    blocks: &[Vec<usize>],
    a: usize,
    forbidden: &[usize],
    limits: &SearchLimits,
) -> Result<SeparationCertificate> {
    let i = locate_block(act, blocks, a)?;
    if forbidden.contains(&a) {
        return Err(Error::ElementInForbiddenSet(a));
    }
    let (sub, inclusion) = act.restrict_to(&blocks[i])?;
    let local = |x: usize| inclusion.iter().position(|&y| y == x);
    let inside: Vec<usize> = forbidden.iter().filter_map(|&x| local(x)).collect();
    let local_a = local(a).expect("a lies in its block");
    let local_labels: Vec<usize> = if inside.is_empty() {
        vec![0; sub.size()]
    } else {
        let cert = separate(&sub, local_a, &inside, None, limits)?.ok_or_else(|| {
            Error::InternalInvariantViolation("no separation inside a finite block".into())
        })?;
        cert.congruence().partition().as_slice().to_vec()
    };
    let outside = sub.size();
    let labels: Vec<usize> = (0..act.size())
        .map(|x| local(x).map_or(outside, |k| local_labels[k]))
        .collect();
    certify(act, Partition::from_labels(&labels), a, forbidden)
}
