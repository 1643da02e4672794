//! A built-in corpus: every monoid of order at most 4 up to isomorphism, a
//! handful of named constructions, and all their acts of small size up to
//! isomorphism.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use crate::act::FiniteAct;
use crate::error::Result;
use crate::families;
use crate::monoid::iso::generating_set;
use crate::monoid::{cyclic_group, FiniteMonoid, ReesMatrixSpec};

#[derive(Debug, Clone)]
pub struct CatalogMonoid {
    pub name: String,
    pub monoid: Arc<FiniteMonoid>,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub monoid_name: String,
    pub act: FiniteAct,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn go(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(k + 1, p, out);
            p.swap(k, i);
        }
    }
    go(0, &mut p, &mut out);
    out
}

/// Least relabelling of a table (identity at 0) under permutations fixing 0.
fn canonical_monoid_table(n: usize, t: &[usize], perms: &[Vec<usize>]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mut inv = vec![0; n];
    for p in perms {
        // p acts on 1..n
        let phi: Vec<usize> = std::iter::once(0).chain(p.iter().map(|&x| x + 1)).collect();
        for (x, &y) in phi.iter().enumerate() {
            inv[y] = x;
        }
        let relabelled: Vec<usize> = (0..n * n)
            .map(|k| phi[t[inv[k / n] * n + inv[k % n]]])
            .collect();
        if best.as_ref().is_none_or(|b| relabelled < *b) {
            best = Some(relabelled);
        }
    }
    best.expect("at least one permutation")
}

fn associative(n: usize, t: &[usize]) -> bool {
    (0..n).all(|a| {
        (0..n).all(|b| {
            let ab = t[a * n + b];
            (0..n).all(|c| t[ab * n + c] == t[a * n + t[b * n + c]])
        })
    })
}

/// All monoids of the given order up to isomorphism, found by running over
/// every table with identity 0 and keeping the least relabelling of each
/// associative one. Sorted by that canonical table.
pub fn monoids_of_order(n: usize) -> Vec<FiniteMonoid> {
    assert!(n >= 1);
    let perms = permutations(n - 1);
    let free: Vec<usize> = (1..n)
        .flat_map(|a| (1..n).map(move |b| a * n + b))
        .collect();
    let mut t = vec![0; n * n];
    for x in 0..n {
        t[x] = x;
        t[x * n] = x;
    }
    let mut found = std::collections::BTreeSet::new();
    let total = n.pow(free.len() as u32);
    for code in 0..total {
        let mut c = code;
        for &cell in &free {
            t[cell] = c % n;
            c /= n;
        }
        if associative(n, &t) {
            found.insert(canonical_monoid_table(n, &t, &perms));
        }
    }
    found
        .into_iter()
        .map(|t| {
            let rows: Vec<Vec<usize>> = t.chunks(n).map(<[usize]>::to_vec).collect();
            FiniteMonoid::from_table(&rows, 0).expect("associative with identity 0")
        })
        .collect()
}

/// `M(Z_2; n, n; P)` with `p_00 = e`, `p_ii = g` for `i > 0` and every
/// off-diagonal entry `e`.
pub fn diagonal_z2(n: usize) -> ReesMatrixSpec {
    let sandwich = (0..n)
        .map(|j| (0..n).map(|i| usize::from(i == j && i > 0)).collect())
        .collect();
    ReesMatrixSpec::new(cyclic_group(2), n, n, sandwich).expect("valid Rees data")
}

fn family_monoid(name: &str, kv: &[(&str, i64)]) -> Arc<FiniteMonoid> {
    let params: BTreeMap<String, i64> = kv.iter().map(|&(k, v)| (k.to_string(), v)).collect();
    families::build(name, &params)
        .expect("in-range family parameters")
        .monoid
}

/// Named constructions beyond the small-order list.
pub fn named_monoids() -> Vec<CatalogMonoid> {
    let s3 = FiniteMonoid::transformation_closure(3, &[vec![1, 0, 2], vec![1, 2, 0]], 100)
        .expect("S3 closes");
    let band = ReesMatrixSpec::new(cyclic_group(1), 2, 2, vec![vec![0, 0], vec![0, 0]])
        .expect("valid Rees data")
        .build()
        .monoid;
    let named: Vec<(&str, Arc<FiniteMonoid>)> = vec![
        ("z5", Arc::new(cyclic_group(5))),
        ("z6", Arc::new(cyclic_group(6))),
        ("s3", Arc::new(s3)),
        ("rectangular_band_2x2", band),
        ("rees_z2_diagonal_2", diagonal_z2(2).build().monoid),
        ("cd_quotient_2", family_monoid("bz_quotient", &[("n", 2)])),
        ("null_4", family_monoid("kozhukhov", &[("n", 3)])),
        ("star_3", family_monoid("star_semilattice", &[("n", 3)])),
        ("tower_2", family_monoid("clifford_tower", &[("n", 2)])),
    ];
    named
        .into_iter()
        .map(|(name, monoid)| CatalogMonoid {
            name: name.into(),
            monoid,
        })
        .collect()
}

/// Monoids of order `1..=max_order` (named `m<order>_<k>`) followed by the
/// named constructions.
pub fn catalog(max_order: usize) -> Vec<CatalogMonoid> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        for (k, m) in monoids_of_order(n).into_iter().enumerate() {
            out.push(CatalogMonoid {
                name: format!("m{n}_{k}"),
                monoid: Arc::new(m),
            });
        }
    }
    out.extend(named_monoids());
    out
}

fn all_maps(k: usize) -> Vec<Vec<u8>> {
    let total = k.pow(k as u32);
    (0..total)
        .map(|mut c| {
            (0..k)
                .map(|_| {
                    let d = (c % k) as u8;
                    c /= k;
                    d
                })
                .collect()
        })
        .collect()
}

/// Scratch space for extending generator images to the whole monoid.
struct Extender<'m> {
    m: &'m FiniteMonoid,
    gens: Vec<usize>,
    k: usize,
    maps: Vec<u8>,
    assigned: Vec<bool>,
    queue: Vec<usize>,
}

impl<'m> Extender<'m> {
    fn new(m: &'m FiniteMonoid, gens: Vec<usize>, k: usize) -> Self {
        Extender {
            m,
            gens,
            k,
            maps: vec![0; m.order() * k],
            assigned: vec![false; m.order()],
            queue: Vec::with_capacity(m.order()),
        }
    }

    /// Extends images of the first `images.len()` generators along the
    /// Cayley graph of the submonoid they generate. False when two words for
    /// the same element get different maps.
    fn extend(&mut self, images: &[&[u8]]) -> bool {
        let k = self.k;
        self.assigned.iter_mut().for_each(|a| *a = false);
        let one = self.m.identity();
        self.assigned[one] = true;
        for p in 0..k {
            self.maps[one * k + p] = p as u8;
        }
        self.queue.clear();
        self.queue.push(one);
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for (g, img) in self.gens.iter().zip(images) {
                let y = self.m.mul(x, *g);
                if self.assigned[y] {
                    if (0..k).any(|p| self.maps[y * k + p] != img[self.maps[x * k + p] as usize]) {
                        return false;
                    }
                } else {
                    for p in 0..k {
                        self.maps[y * k + p] = img[self.maps[x * k + p] as usize];
                    }
                    self.assigned[y] = true;
                    self.queue.push(y);
                }
            }
        }
        true
    }
}

/// Whether `f^i = f^(i+p)` for the index `i` and period `p` of `g`.
fn satisfies_power_relation(m: &FiniteMonoid, g: usize, f: &[u8]) -> bool {
    let mut powers = vec![g];
    let (index, period) = loop {
        let next = m.mul(*powers.last().expect("non-empty"), g);
        if let Some(i) = powers.iter().position(|&y| y == next) {
            break (i + 1, powers.len() - i);
        }
        powers.push(next);
    };
    let power = |e: usize| {
        let mut out: Vec<u8> = (0..f.len() as u8).collect();
        for _ in 0..e {
            out = out.iter().map(|&p| f[p as usize]).collect();
        }
        out
    };
    power(index) == power(index + period)
}

fn canonical_act_table(k: usize, n: usize, t: &[usize], perms: &[Vec<usize>]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mut inv = vec![0; k];
    for phi in perms {
        for (x, &y) in phi.iter().enumerate() {
            inv[y] = x;
        }
        let relabelled: Vec<usize> = (0..k * n).map(|c| phi[t[inv[c / n] * n + c % n]]).collect();
        if best.as_ref().is_none_or(|b| relabelled < *b) {
            best = Some(relabelled);
        }
    }
    best.expect("at least one permutation")
}

/// Every act of size exactly `k` over `m` up to isomorphism, as right
/// transformation representations: generator images are chosen one at a
/// time and rejected as soon as two words for one element disagree.
pub fn acts_of_size(m: &Arc<FiniteMonoid>, k: usize) -> Result<Vec<FiniteAct>> {
    let gens = generating_set(m);
    let maps = all_maps(k);
    let candidates: Vec<Vec<&[u8]>> = gens
        .iter()
        .map(|&g| {
            maps.iter()
                .filter(|f| satisfies_power_relation(m, g, f))
                .map(Vec::as_slice)
                .collect()
        })
        .collect();
    let perms = permutations(k);
    let n = m.order();
    let mut ext = Extender::new(m, gens, k);
    let mut seen = HashSet::new();
    let mut tables = Vec::new();
    let mut chosen: Vec<&[u8]> = Vec::with_capacity(candidates.len());

    fn go<'a>(
        ext: &mut Extender,
        candidates: &[Vec<&'a [u8]>],
        chosen: &mut Vec<&'a [u8]>,
        emit: &mut dyn FnMut(&[u8]),
    ) {
        if chosen.len() == candidates.len() {
            emit(&ext.maps);
            return;
        }
        for &map in &candidates[chosen.len()] {
            chosen.push(map);
            if ext.extend(chosen) {
                go(ext, candidates, chosen, emit);
            }
            chosen.pop();
        }
    }

    let mut emit = |f: &[u8]| {
        // row a, column x holds a*x, the image of a under x's map
        let t: Vec<usize> = (0..k * n)
            .map(|c| f[(c % n) * k + c / n] as usize)
            .collect();
        let canon = canonical_act_table(k, n, &t, &perms);
        if seen.insert(canon.clone()) {
            tables.push(canon);
        }
    };
    if candidates.is_empty() {
        // trivial monoid: only the identity acts
        ext.extend(&[]);
        emit(&ext.maps);
    } else {
        go(&mut ext, &candidates, &mut chosen, &mut emit);
    }
    tables.sort();
    tables
        .into_iter()
        .map(|t| {
            let rows: Vec<Vec<usize>> = t.chunks(n).map(<[usize]>::to_vec).collect();
            FiniteAct::from_table(m.clone(), &rows)
        })
        .collect()
}

/// Acts of every size `1..=max_size` over every catalog monoid.
pub fn corpus(monoids: &[CatalogMonoid], max_size: usize) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for cm in monoids {
        for k in 1..=max_size {
            for act in acts_of_size(&cm.monoid, k)? {
                out.push(CorpusEntry {
                    monoid_name: cm.name.clone(),
                    act,
                });
            }
        }
    }
    Ok(out)
}

/// `count` items taken at an even stride, always starting with the first.
pub fn stride_sample<T: Clone>(items: &[T], count: usize) -> Vec<T> {
    if items.len() <= count {
        return items.to_vec();
    }
    (0..count)
        .map(|i| items[i * items.len() / count].clone())
        .collect()
}
