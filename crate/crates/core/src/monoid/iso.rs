//! Brute-force monoid isomorphism search for small orders.
//!
//! Used as an oracle: it knows nothing about how either monoid was built.

use std::collections::VecDeque;

use super::FiniteMonoid;

/// A greedy generating set: scan elements in index order and keep each one
/// not already in the submonoid generated so far.
pub fn generating_set(m: &FiniteMonoid) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut inside = vec![false; m.order()];
    inside[m.identity()] = true;
    for x in m.elements() {
        if inside[x] {
            continue;
        }
        gens.push(x);
        // re-close from scratch
        inside = vec![false; m.order()];
        inside[m.identity()] = true;
        let mut queue = VecDeque::from([m.identity()]);
        while let Some(y) = queue.pop_front() {
            for &g in &gens {
                let z = m.mul(y, g);
                if !inside[z] {
                    inside[z] = true;
                    queue.push_back(z);
                }
            }
        }
    }
    gens
}

/// Per-element data preserved by every isomorphism.
fn signature(m: &FiniteMonoid, x: usize) -> (usize, usize, usize, usize, usize, bool) {
    // index and period of the monogenic subsemigroup
    let mut powers = vec![x];
    let (index, period) = loop {
        let next = m.mul(*powers.last().unwrap(), x);
        if let Some(p) = powers.iter().position(|&y| y == next) {
            break (p, powers.len() - p);
        }
        powers.push(next);
    };
    let commuting = m.elements().filter(|&y| m.mul(x, y) == m.mul(y, x)).count();
    (
        index,
        period,
        commuting,
        m.principal_right_ideal(x).len(),
        m.principal_left_ideal(x).len(),
        m.is_idempotent(x),
    )
}

/// Finds a bijection `phi` with `phi(xy) = phi(x) phi(y)`, if one exists.
pub fn find_isomorphism(a: &FiniteMonoid, b: &FiniteMonoid) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let sig_a: Vec<_> = a.elements().map(|x| signature(a, x)).collect();
    let sig_b: Vec<_> = b.elements().map(|x| signature(b, x)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let gens = generating_set(a);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| b.elements().filter(|&y| sig_b[y] == sig_a[g]).collect())
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search(a, b, &gens, &candidates, &mut images)
}

fn search(
    a: &FiniteMonoid,
    b: &FiniteMonoid,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let map = extend(a, b, &gens[..images.len()], images)?;
    if images.len() == gens.len() {
        let complete = map.iter().all(|&y| y != usize::MAX);
        return (complete && a.is_homomorphism_to(b, &map)).then_some(map);
    }
    for &c in &candidates[images.len()] {
        images.push(c);
        if let Some(found) = search(a, b, gens, candidates, images) {
            return Some(found);
        }
        images.pop();
    }
    None
}

/// Extends a partial assignment of generator images to the submonoid they
/// generate; `None` on any inconsistency or collision.
fn extend(
    a: &FiniteMonoid,
    b: &FiniteMonoid,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    map[a.identity()] = b.identity();
    used[b.identity()] = true;
    let mut queue = VecDeque::from([a.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&g, &h) in gens.iter().zip(images) {
            let (xa, xb) = (a.mul(x, g), b.mul(map[x], h));
            if map[xa] == usize::MAX {
                if used[xb] {
                    return None;
                }
                map[xa] = xb;
                used[xb] = true;
                queue.push_back(xa);
            } else if map[xa] != xb {
                return None;
            }
        }
    }
    Some(map)
}
