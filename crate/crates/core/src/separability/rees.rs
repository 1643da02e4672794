//! Bracket sets over `S^1` for a Rees matrix semigroup `S`, split as a
//! product of a row-group part and a column part.

use super::bracket_set;
use crate::act::FiniteAct;
use crate::error::{Error, Result};
use crate::monoid::ReesMonoid;

/// For `a <= b`, `a != b`: `[a, b]_M = U_b x J'` (on non-identity elements).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesBracketDecomposition {
    /// `{(i, g) : a = b(i, g, j) for some j}`.
    pub u_b: Vec<(usize, usize)>,
    /// `{j : a = a(i0, e, j)}`.
    pub j_prime: Vec<usize>,
    /// `{h : a = x(i_b, h, j_a)}` for a generator `x` of a cyclic act, with
    /// `a = x(i_a, g_a, j_a)` and `b = x(i_b, g_b, j_b)` the least
    /// representatives; absent when no generator is supplied or `a` or `b`
    /// has no representative in `S`.
    pub z_b: Option<Vec<usize>>,
    /// The column `i0` used for `J'`.
    pub anchor: usize,
}

/// Computes `U_b`, `J'` (and `Z_b` when `generator` is given) and checks the
/// product identity against the bracket set computed directly.
pub fn rees_bracket_decomposition(
    rees: &ReesMonoid,
    act: &FiniteAct,
    a: usize,
    b: usize,
    generator: Option<usize>,
) -> Result<ReesBracketDecomposition> {
    if **act.monoid() != *rees.monoid {
        return Err(Error::MonoidMismatch);
    }
    for x in [a, b] {
        if x >= act.size() {
            return Err(Error::OutOfRange(x, act.size()));
        }
    }
    let spec = &rees.spec;
    let i0 = spec.identity_column().ok_or(Error::NotNormalized)?;
    if a == b {
        return Err(Error::PreconditionViolated("a and b must differ".into()));
    }
    if !act.preorder()[a][b] {
        return Err(Error::NotComparable(a, b));
    }
    let e = spec.group().identity();
    let group: Vec<usize> = spec.group().elements().collect();
    let mut u_b = Vec::new();
    for i in 0..spec.rows() {
        for &g in &group {
            if (0..spec.cols()).any(|j| act.act(b, spec.element(i, g, j)) == a) {
                u_b.push((i, g));
            }
        }
    }
    let j_prime: Vec<usize> = (0..spec.cols())
        .filter(|&j| act.act(a, spec.element(i0, e, j)) == a)
        .collect();
    let mut product: Vec<usize> = u_b
        .iter()
        .flat_map(|&(i, g)| j_prime.iter().map(move |&j| spec.element(i, g, j)))
        .collect();
    product.sort_unstable();
    let one = rees.monoid.identity();
    let direct: Vec<usize> = bracket_set(act, a, b)
        .into_iter()
        .filter(|&m| m != one)
        .collect();
    if product != direct {
        return Err(Error::InternalInvariantViolation(format!(
            "bracket set {direct:?} differs from U_b x J' = {product:?}"
        )));
    }
    let z_b = match generator {
        None => None,
        Some(x) => {
            if x >= act.size() {
                return Err(Error::OutOfRange(x, act.size()));
            }
            let rep = |y: usize| {
                rees.monoid
                    .elements()
                    .filter(|&m| m != one)
                    .find(|&m| act.act(x, m) == y)
                    .and_then(|m| spec.triple(m))
            };
            match (rep(a), rep(b)) {
                (Some((_, _, j_a)), Some((i_b, _, _))) => Some(
                    group
                        .iter()
                        .copied()
                        .filter(|&h| act.act(x, spec.element(i_b, h, j_a)) == a)
                        .collect(),
                ),
                _ => None,
            }
        }
    };
    Ok(ReesBracketDecomposition {
        u_b,
        j_prime,
        z_b,
        anchor: i0,
    })
}
