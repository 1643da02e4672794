use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::sync::Arc;

use super::{Carrier, Fact, FamilyAct, FamilyInstance, Witness};
use crate::act::{FiniteAct, PartialAct};
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::partition::Partition;

/// Family names with their parameters and accepted ranges.
pub const FAMILIES: &[(&str, &str)] = &[
    ("bz_window", "w=1..40"),
    ("bz_quotient", "n=1..12"),
    ("kozhukhov", "n=1..6"),
    ("leftzero", "n=1..6"),
    ("squarefree", "n=1..6"),
    ("n_times_g", "n=1..6 g=1..4"),
    ("free_monogenic_act", "w=1..40"),
    ("clifford_tower", "n=1..4"),
    ("semilattice_act", "chain=1..8 | free=1..4"),
    ("star_semilattice", "n=1..6"),
];

pub(super) fn build(name: &str, params: &BTreeMap<String, i64>) -> Result<FamilyInstance> {
    let p = Params(params);
    match name {
        "bz_window" => {
            p.only(&["w"])?;
            bz_window(p.get("w", 1..=40)?)
        }
        "bz_quotient" => {
            p.only(&["n"])?;
            bz_quotient(p.get("n", 1..=12)?)
        }
        "kozhukhov" => {
            p.only(&["n"])?;
            kozhukhov(p.get("n", 1..=6)?)
        }
        "leftzero" => {
            p.only(&["n"])?;
            leftzero(p.get("n", 1..=6)?)
        }
        "squarefree" => {
            p.only(&["n"])?;
            squarefree(p.get("n", 1..=6)?)
        }
        "n_times_g" => {
            p.only(&["n", "g"])?;
            n_times_g(p.get("n", 1..=6)?, p.get("g", 1..=4)?)
        }
        "free_monogenic_act" => {
            p.only(&["w"])?;
            free_monogenic_act(p.get("w", 1..=40)?)
        }
        "clifford_tower" => {
            p.only(&["n"])?;
            clifford_tower(p.get("n", 1..=4)?)
        }
        "semilattice_act" => {
            p.only(&["chain", "free"])?;
            match (params.contains_key("chain"), params.contains_key("free")) {
                (true, false) => semilattice_act(chain(p.get("chain", 1..=8)?)),
                (false, true) => semilattice_act(free_semilattice(p.get("free", 1..=4)?)),
                _ => Err(Error::ParamOutOfRange {
                    name: "chain|free".into(),
                    detail: "give exactly one of chain, free".into(),
                }),
            }
        }
        "star_semilattice" => {
            p.only(&["n"])?;
            star_semilattice(p.get("n", 1..=6)?)
        }
        other => Err(Error::UnknownFamily(other.to_string())),
    }
    .map(|mut inst| {
        inst.params = params.clone();
        inst
    })
}

struct Params<'a>(&'a BTreeMap<String, i64>);

impl Params<'_> {
    fn only(&self, allowed: &[&str]) -> Result<()> {
        match self.0.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(Error::ParamOutOfRange {
                name: k.clone(),
                detail: "unknown parameter".into(),
            }),
            None => Ok(()),
        }
    }

    fn get(&self, name: &str, range: RangeInclusive<i64>) -> Result<usize> {
        let v = *self.0.get(name).ok_or_else(|| Error::ParamOutOfRange {
            name: name.into(),
            detail: "missing".into(),
        })?;
        if !range.contains(&v) {
            return Err(Error::ParamOutOfRange {
                name: name.into(),
                detail: format!("{v} not in {}..{}", range.start(), range.end()),
            });
        }
        Ok(v as usize)
    }
}

fn labelled(table: Vec<Vec<usize>>, identity: usize, labels: Vec<String>) -> Arc<FiniteMonoid> {
    Arc::new(
        FiniteMonoid::from_table(&table, identity)
            .and_then(|m| m.with_labels(labels))
            .expect("family monoids are valid by construction"),
    )
}

fn total_act(monoid: &Arc<FiniteMonoid>, rows: Vec<Vec<usize>>, labels: Vec<String>) -> FiniteAct {
    FiniteAct::from_table(monoid.clone(), &rows)
        .and_then(|a| a.with_labels(labels))
        .expect("family acts are valid by construction")
}

fn partial_act(
    monoid: &Arc<FiniteMonoid>,
    rows: Vec<Vec<Option<usize>>>,
    labels: Vec<String>,
) -> PartialAct {
    PartialAct::from_table(monoid.clone(), &rows)
        .and_then(|a| a.with_labels(labels))
        .expect("family acts are valid by construction")
}

fn instance(
    name: &str,
    monoid: Arc<FiniteMonoid>,
    act: FamilyAct,
    marked: &[(&str, usize)],
    expected: Vec<Fact>,
) -> Result<FamilyInstance> {
    Ok(FamilyInstance {
        name: name.into(),
        params: BTreeMap::new(),
        monoid,
        act,
        marked: marked.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        expected,
    })
}

fn count(name: &str, value: usize) -> Fact {
    Fact::StructuralCount {
        name: name.into(),
        value,
    }
}

/// `{1, a, .., a^w, omega}` where `omega` stands for every power above `w`.
fn truncated_monogenic(w: usize) -> Arc<FiniteMonoid> {
    let n = w + 2;
    let omega = w + 1;
    let table = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i + j <= w { i + j } else { omega })
                .collect()
        })
        .collect();
    let mut labels: Vec<String> = (0..=w).map(|k| format!("a^{k}")).collect();
    labels.push("omega".into());
    labelled(table, 0, labels)
}

/// Window `{a^0..a^w, b_-w..b_w, 0}` of the regular act of `A ∪ B`, acted on
/// by powers of `a`.
fn bz_window_act(w: usize) -> PartialAct {
    let monoid = truncated_monogenic(w);
    let omega = w + 1;
    let b = |j: i64| w + 1 + (j + w as i64) as usize;
    let zero = 3 * w + 2;
    let wi = w as i64;
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for k in 0..=w {
        rows.push(
            (0..=omega)
                .map(|m| (m != omega && k + m <= w).then_some(k + m))
                .collect(),
        );
        labels.push(format!("a^{k}"));
    }
    for j in -wi..=wi {
        rows.push(
            (0..=omega)
                .map(|m| {
                    let t = j + m as i64;
                    (m != omega && t <= wi).then(|| b(t))
                })
                .collect(),
        );
        labels.push(format!("b{j}"));
    }
    rows.push(vec![Some(zero); omega + 1]);
    labels.push("0".into());
    partial_act(&monoid, rows, labels)
}

fn bz_window(w: usize) -> Result<FamilyInstance> {
    let act = bz_window_act(w);
    let b = |j: i64| w + 1 + (j + w as i64) as usize;
    let mut facts = Vec::new();
    for j in 2..=w as i64 {
        for i in 1..j {
            facts.push(Fact::ForcingChain {
                seed: (b(-i), b(-j)),
                target: (b(0), b(j - i)),
            });
        }
    }
    facts.push(count("act_size", 3 * w + 3));
    instance(
        "bz_window",
        act.monoid().clone(),
        FamilyAct::Partial(act),
        &[("b0", b(0)), ("zero", 3 * w + 2)],
        facts,
    )
}

/// `{C_0..C_{k-1}, D_0..D_{k-1}, 0}`: exponents of `a` and indices of `b`
/// taken mod `k`.
fn cd_monoid(k: usize) -> Arc<FiniteMonoid> {
    let n = 2 * k + 1;
    let zero = 2 * k;
    let table = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| match (x < k, y < k) {
                    _ if x == zero || y == zero => zero,
                    (true, true) => (x + y) % k,
                    (true, false) => k + (x + y - k) % k,
                    (false, true) => k + (x - k + y) % k,
                    (false, false) => zero,
                })
                .collect()
        })
        .collect();
    let mut labels: Vec<String> = (0..k).map(|m| format!("C{m}")).collect();
    labels.extend((0..k).map(|m| format!("D{m}")));
    labels.push("0".into());
    labelled(table, 0, labels)
}

fn bz_quotient(n: usize) -> Result<FamilyInstance> {
    let q = cd_monoid(n);
    let big = cd_monoid(2 * n);
    let k = 2 * n;
    let map: Vec<usize> = (0..=2 * k)
        .map(|x| match x {
            _ if x == 2 * k => 2 * n,
            _ if x < k => x % n,
            _ => n + (x - k) % n,
        })
        .collect();
    let mut d_pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k.min(i + n) {
            d_pairs.push((k + i, vec![k + j]));
        }
    }
    let window = bz_window_act(k);
    let wi = k as i64;
    let b = |j: i64| k + 1 + (j + wi) as usize;
    let window_labels: Vec<usize> = (0..window.size())
        .map(|x| match x {
            _ if x <= k => x % n,
            _ if x < 3 * k + 2 => n + ((x - k - 1) as i64 - wi).rem_euclid(n as i64) as usize,
            _ => 2 * n,
        })
        .collect();
    let mut b_pairs = Vec::new();
    for i in -wi..=wi {
        for j in i + 1..=wi.min(i + n as i64 - 1) {
            b_pairs.push((b(i), vec![b(j)]));
        }
    }
    let facts = vec![
        count("monoid_order", 2 * n + 1),
        Fact::WitnessCongruence(Box::new(Witness {
            description: format!("C/D classes mod {n} on the regular act of the mod-{k} quotient"),
            carrier: Carrier::RegularActOf(big),
            partition: Partition::from_labels(&map),
            separations: d_pairs,
            homomorphism: Some((q.clone(), map)),
            expected_block: None,
        })),
        Fact::WitnessCongruence(Box::new(Witness {
            description: format!("C/D classes mod {n} on the window of width {k}"),
            carrier: Carrier::Partial(window),
            partition: Partition::from_labels(&window_labels),
            separations: b_pairs,
            homomorphism: None,
            expected_block: None,
        })),
    ];
    let act = FiniteAct::regular(q.clone());
    instance(
        "bz_quotient",
        q,
        FamilyAct::Total(act),
        &[("zero", 2 * n)],
        facts,
    )
}

/// `S^1` for a semigroup table, with labels `1` followed by `labels`.
fn with_identity(semigroup: &[Vec<usize>], labels: Vec<String>) -> Arc<FiniteMonoid> {
    let mut all = vec!["1".to_string()];
    all.extend(labels);
    Arc::new(
        FiniteMonoid::adjoin_identity(semigroup)
            .and_then(|m| m.with_labels(all))
            .expect("family monoids are valid by construction"),
    )
}

fn kozhukhov(n: usize) -> Result<FamilyInstance> {
    // null semigroup {s_0..s_{n-1}, z}
    let semigroup = vec![vec![n; n + 1]; n + 1];
    let mut names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    names.push("z".into());
    let monoid = with_identity(&semigroup, names);
    let (b, zero) = (n, n + 1);
    let mut rows = Vec::new();
    for i in 0..n {
        let mut row = vec![i];
        row.extend((0..n).map(|j| if i == j { b } else { zero }));
        row.push(zero);
        rows.push(row);
    }
    for x in [b, zero] {
        let mut row = vec![zero; n + 2];
        row[0] = x;
        rows.push(row);
    }
    let mut labels: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    labels.extend(["b".into(), "0".into()]);
    let act = total_act(&monoid, rows, labels);
    let mut facts = Vec::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            facts.push(Fact::ForcingChain {
                seed: (i, j),
                target: (b, zero),
            });
        }
    }
    facts.push(Fact::MinIndex {
        element: b,
        subset: vec![zero],
        value: n + 2,
    });
    instance(
        "kozhukhov",
        monoid,
        FamilyAct::Total(act),
        &[("b", b), ("zero", zero)],
        facts,
    )
}

fn leftzero(n: usize) -> Result<FamilyInstance> {
    let semigroup: Vec<Vec<usize>> = (0..n).map(|x| vec![x; n]).collect();
    let monoid = with_identity(&semigroup, (0..n).map(|x| format!("l{x}")).collect());
    let (b, c) = (n, n + 1);
    let mut rows = Vec::new();
    for x in 0..n {
        let mut row = vec![x];
        row.extend((0..n).map(|y| if x == y { b } else { c }));
        rows.push(row);
    }
    rows.push(vec![b; n + 1]);
    rows.push(vec![c; n + 1]);
    let mut labels: Vec<String> = (0..n).map(|x| format!("a{x}")).collect();
    labels.extend(["b".into(), "c".into()]);
    let act = total_act(&monoid, rows, labels);
    let mut facts = Vec::new();
    for x in 0..n {
        for y in (0..n).filter(|&y| y != x) {
            facts.push(Fact::ForcingChain {
                seed: (x, y),
                target: (b, c),
            });
        }
    }
    // with a single a_x, {a_x, b} is already a class
    facts.push(Fact::MinIndex {
        element: b,
        subset: vec![c],
        value: if n == 1 { 2 } else { n + 2 },
    });
    instance(
        "leftzero",
        monoid,
        FamilyAct::Total(act),
        &[("b", b), ("c", c)],
        facts,
    )
}

fn has_square_suffix(w: &[u8]) -> bool {
    let len = w.len();
    (1..=len / 2).any(|h| w[len - h..] == w[len - 2 * h..len - h])
}

/// Square-free words over `a, b, c` of length `1..=n` in shortlex order,
/// grown one letter at a time.
pub fn squarefree_words(n: usize) -> Vec<String> {
    let mut out: Vec<Vec<u8>> = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for c in *b"abc" {
                let mut v = w.clone();
                v.push(c);
                if !has_square_suffix(&v) {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.into_iter()
        .map(|w| String::from_utf8(w).expect("ascii"))
        .collect()
}

fn is_squarefree(w: &str) -> bool {
    let b = w.as_bytes();
    (1..=b.len()).all(|end| !has_square_suffix(&b[..end]))
}

fn squarefree(n: usize) -> Result<FamilyInstance> {
    let words = squarefree_words(n);
    let size = words.len() + 2;
    let zero = size - 1;
    let mut names = vec![String::new()];
    names.extend(words.iter().cloned());
    let index: BTreeMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_str(), i))
        .collect();
    let table: Vec<Vec<usize>> = (0..size)
        .map(|x| {
            (0..size)
                .map(|y| {
                    if x == zero || y == zero {
                        return zero;
                    }
                    let w = format!("{}{}", names[x], names[y]);
                    if w.len() <= n && is_squarefree(&w) {
                        index[w.as_str()]
                    } else {
                        zero
                    }
                })
                .collect()
        })
        .collect();
    let mut labels = vec!["1".to_string()];
    labels.extend(words.iter().cloned());
    labels.push("0".into());
    let monoid = labelled(table, 0, labels);
    let len = |x: usize| {
        if x == zero {
            usize::MAX
        } else {
            names[x].len()
        }
    };
    let mut facts = vec![
        count("squarefree_words", words.len()),
        count("monoid_order", size),
    ];
    for u in (0..zero).filter(|&u| len(u) < n) {
        let k = len(u);
        let rees: Vec<usize> = (0..size)
            .map(|x| if len(x) > k { size } else { x })
            .collect();
        // the largest right ideal avoiding u: everything that is not a prefix of u
        let avoid: Vec<usize> = (0..size)
            .filter(|&x| x == zero || !names[u].starts_with(names[x].as_str()))
            .collect();
        let label = if k == 0 { "1" } else { names[u].as_str() };
        facts.push(Fact::WitnessCongruence(Box::new(Witness {
            description: format!("Rees congruence of words longer than {k} isolates {label}"),
            carrier: Carrier::Instance,
            partition: Partition::from_labels(&rees),
            separations: vec![(u, avoid)],
            homomorphism: None,
            expected_block: Some((u, vec![u])),
        })));
    }
    let act = FiniteAct::regular(monoid.clone());
    instance(
        "squarefree",
        monoid,
        FamilyAct::Total(act),
        &[("zero", zero)],
        facts,
    )
}

/// `((N/J) x Z_g)^1` with `N/J = {1..n, 0}`; element `(p, u)` sits at
/// `1 + (p-1)g + u`, with `p = n+1` for the zero of `N/J`.
fn nxg_monoid(n: usize, g: usize) -> Arc<FiniteMonoid> {
    let size = 1 + (n + 1) * g;
    let split = |x: usize| ((x - 1) / g + 1, (x - 1) % g);
    let table = (0..size)
        .map(|x| {
            (0..size)
                .map(|y| {
                    if x == 0 || y == 0 {
                        return x + y;
                    }
                    let ((p, u), (q, v)) = (split(x), split(y));
                    let s = (p + q).min(n + 1);
                    1 + (s - 1) * g + (u + v) % g
                })
                .collect()
        })
        .collect();
    let mut labels = vec!["1".to_string()];
    for p in 1..=n + 1 {
        for u in 0..g {
            if p == n + 1 {
                labels.push(format!("(0,{u})"));
            } else {
                labels.push(format!("({p},{u})"));
            }
        }
    }
    labelled(table, 0, labels)
}

fn n_times_g(n: usize, g: usize) -> Result<FamilyInstance> {
    let monoid = nxg_monoid(n, g);
    let el = |p: usize, u: usize| 1 + (p - 1) * g + u;
    let size = monoid.order();
    let split = |x: usize| ((x - 1) / g + 1, (x - 1) % g);
    let mut facts = vec![count("monoid_order", size)];
    if n >= 2 {
        for s in 0..g {
            for h in (0..g).filter(|&h| h != s) {
                facts.push(Fact::ForcingChain {
                    seed: (el(1, s), el(1, h)),
                    target: (el(2, 0), el(2, (h + g - s) % g)),
                });
            }
        }
    }
    // theta: (p, u) -> [p] in (N/J_m)^1, for b = (m, h) below a = (m+1, e)
    for m in 1..n {
        let target = nxg_monoid(m, 1);
        let map: Vec<usize> = (0..size)
            .map(|x| if x == 0 { 0 } else { split(x).0.min(m + 1) })
            .collect();
        let a = el(m + 1, 0);
        let ideal = monoid.principal_right_ideal(a);
        let separations = (0..g).map(|h| (el(m, h), ideal.clone())).collect();
        facts.push(Fact::WitnessCongruence(Box::new(Witness {
            description: format!(
                "theta onto N/J_{m} separates (p,u) with p={m} from <({},0)>",
                m + 1
            ),
            carrier: Carrier::RegularActOf(monoid.clone()),
            partition: Partition::from_labels(&map),
            separations,
            homomorphism: Some((target, map)),
            expected_block: None,
        })));
    }
    // psi: (p, u) -> ([p], u), for b = (m, h) and a = (m, h+1)
    if g >= 2 {
        for m in 1..=n {
            let target = nxg_monoid(m, g);
            let map: Vec<usize> = (0..size)
                .map(|x| {
                    if x == 0 {
                        return 0;
                    }
                    let (p, u) = split(x);
                    1 + (p.min(m + 1) - 1) * g + u
                })
                .collect();
            let separations = (0..g)
                .map(|h| (el(m, h), monoid.principal_right_ideal(el(m, (h + 1) % g))))
                .collect();
            facts.push(Fact::WitnessCongruence(Box::new(Witness {
                description: format!(
                    "psi onto (N/J_{m} x Z{g})^1 separates (p,h) from <(p,h+1)> at p={m}"
                ),
                carrier: Carrier::RegularActOf(monoid.clone()),
                partition: Partition::from_labels(&map),
                separations,
                homomorphism: Some((target, map)),
                expected_block: None,
            })));
        }
    }
    let act = FiniteAct::regular(monoid.clone());
    instance(
        "n_times_g",
        monoid,
        FamilyAct::Total(act),
        &[("identity", 0)],
        facts,
    )
}

fn free_monogenic_act(w: usize) -> Result<FamilyInstance> {
    let monoid = truncated_monogenic(w);
    let zero = w + 1;
    let mut rows: Vec<Vec<Option<usize>>> = (0..=w)
        .map(|i| {
            (0..=w + 1)
                .map(|j| Some(if j <= i { i - j } else { zero }))
                .collect()
        })
        .collect();
    rows.push(vec![Some(zero); w + 2]);
    let mut labels: Vec<String> = (0..=w).map(|i| format!("a{i}")).collect();
    labels.push("0".into());
    let act = partial_act(&monoid, rows, labels);
    let mut facts = Vec::new();
    for j in 1..=w {
        for i in 0..j {
            facts.push(Fact::ForcingChain {
                seed: (i, j),
                target: (zero, 0),
            });
        }
    }
    instance(
        "free_monogenic_act",
        monoid,
        FamilyAct::Partial(act),
        &[("a0", 0), ("zero", zero)],
        facts,
    )
}

/// `G_1 ∪ .. ∪ G_n` with `G_i = Z_{2^i}`; `g_i^k` sits at `2^i - 2 + k`.
fn tower_monoid(n: usize) -> Arc<FiniteMonoid> {
    let offset = |i: usize| (1usize << i) - 2;
    let elems: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (0..1usize << i).map(move |k| (i, k)))
        .collect();
    let table = elems
        .iter()
        .map(|&(i, k)| {
            elems
                .iter()
                .map(|&(j, l)| {
                    let m = i.max(j);
                    let e = (k << (m - i)) + (l << (m - j));
                    offset(m) + e % (1 << m)
                })
                .collect()
        })
        .collect();
    let labels = elems.iter().map(|&(i, k)| format!("g{i}^{k}")).collect();
    labelled(table, 0, labels)
}

fn clifford_tower(n: usize) -> Result<FamilyInstance> {
    let monoid = tower_monoid(n);
    let size = monoid.order();
    // image of g_i^k in G_n
    let top: Vec<usize> = (1..=n)
        .flat_map(|i| (0..1usize << i).map(move |k| k << (n - i)))
        .collect();
    let rho = Partition::from_labels(&top);
    let act = FiniteAct::cyclic_from_right_congruence(monoid.clone(), &rho)?;
    let e1 = 0;
    let rest: Vec<usize> = (1..act.size()).collect();
    let identities: Vec<usize> = (1..=n).map(|i| (1usize << i) - 2).collect();
    // G_n without its identity
    let g_n: Vec<usize> = ((1usize << n) - 1..size).collect();
    let mut facts = vec![
        count("monoid_order", size),
        count("act_size", 1 << n),
        Fact::WitnessCongruence(Box::new(Witness {
            description: "rho identifies each g_i^k with its image in G_n".into(),
            carrier: Carrier::RegularActOf(monoid.clone()),
            partition: rho,
            separations: vec![(0, g_n)],
            homomorphism: None,
            expected_block: Some((0, identities)),
        })),
        Fact::NoSeparationUpTo {
            element: e1,
            subset: rest.clone(),
            bound: n,
        },
    ];
    if n <= 3 {
        facts.push(Fact::MinIndex {
            element: e1,
            subset: rest,
            value: 1 << n,
        });
    }
    instance(
        "clifford_tower",
        monoid,
        FamilyAct::Total(act),
        &[("e1", e1)],
        facts,
    )
}

/// The chain `y0 > y1 > .. > y{k-1}` under meet; `y0` is the identity.
fn chain(k: usize) -> Arc<FiniteMonoid> {
    let table = (0..k).map(|i| (0..k).map(|j| i.max(j)).collect()).collect();
    labelled(table, 0, (0..k).map(|i| format!("y{i}")).collect())
}

/// Finite subsets of `g` letters under union; the empty set is the identity.
fn free_semilattice(g: usize) -> Arc<FiniteMonoid> {
    let n = 1usize << g;
    let table = (0..n).map(|i| (0..n).map(|j| i | j).collect()).collect();
    let labels = (0..n)
        .map(|s| {
            if s == 0 {
                return "1".to_string();
            }
            (0..g)
                .filter(|b| s >> b & 1 == 1)
                .map(|b| (b'a' + b as u8) as char)
                .collect()
        })
        .collect();
    labelled(table, 0, labels)
}

/// `{x_alpha} ∪ {0}` over a semilattice `Y` viewed as a semilattice of
/// trivial semigroups: `x_alpha m = x_alpha` when `alpha <= m`, else `0`.
fn semilattice_act(y: Arc<FiniteMonoid>) -> Result<FamilyInstance> {
    let k = y.order();
    let zero = k;
    let leq = |a: usize, b: usize| y.mul(a, b) == a;
    let mut rows: Vec<Vec<usize>> = (0..k)
        .map(|a| (0..k).map(|m| if leq(a, m) { a } else { zero }).collect())
        .collect();
    rows.push(vec![zero; k]);
    let mut labels: Vec<String> = (0..k).map(|a| format!("x_{}", y.label(a))).collect();
    labels.push("0".into());
    let act = total_act(&y, rows, labels);
    let mut facts = Vec::new();
    for a in 0..k {
        for b in (0..k).filter(|&b| !leq(a, b)) {
            facts.push(Fact::ForcingChain {
                seed: (a, b),
                target: (zero, b),
            });
        }
    }
    instance(
        "semilattice_act",
        y,
        FamilyAct::Total(act),
        &[("zero", zero)],
        facts,
    )
}

fn star_semilattice(n: usize) -> Result<FamilyInstance> {
    let zero = n + 1;
    let table = (0..=zero)
        .map(|a| {
            (0..=zero)
                .map(|b| match (a, b) {
                    (0, _) => b,
                    (_, 0) => a,
                    _ if a == b => a,
                    _ => zero,
                })
                .collect()
        })
        .collect();
    let mut labels = vec!["1".to_string()];
    labels.extend((1..=n).map(|i| format!("x{i}")));
    labels.push("0".into());
    let monoid = labelled(table, 0, labels);
    let act = FiniteAct::regular(monoid.clone());
    let mut facts = Vec::new();
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            facts.push(Fact::ForcingChain {
                seed: (i, j),
                target: (i, zero),
            });
        }
    }
    facts.push(Fact::MinIndex {
        element: zero,
        subset: (0..zero).collect(),
        value: if n == 1 { 2 } else { n + 2 },
    });
    instance(
        "star_semilattice",
        monoid,
        FamilyAct::Total(act),
        &[("zero", zero)],
        facts,
    )
}
