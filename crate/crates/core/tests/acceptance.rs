use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use actsep_core::catalog::{self, CatalogMonoid, CorpusEntry};
use actsep_core::congruence::{self, naive, PartitionSearch};
use actsep_core::families::{self, count_squarefree_brute_force, FamilyAct, FamilyInstance};
use actsep_core::monoid::{cyclic_group, ReesMatrixSpec};
use actsep_core::separability::{
    self, act_monoid_correspondence, check_condition, clifford_witness, disjoint_union_fallback,
    disjoint_union_witness, rclass_witness, rees_bracket_decomposition, rees_cyclic_sss_witness,
    sigma, Condition,
};
use actsep_core::{Error, FiniteAct, FiniteMonoid, Partition, SearchLimits};

type Outcome = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn family(name: &str, kv: &[(&str, i64)]) -> Result<FamilyInstance, String> {
    let params: BTreeMap<String, i64> = kv.iter().map(|&(k, v)| (k.to_string(), v)).collect();
    families::build(name, &params).map_err(|e| format!("{name}: {e}"))
}

fn find(inst: &FamilyInstance, label: &str) -> Result<usize, String> {
    (0..inst.act.size())
        .find(|&x| inst.act.label(x) == label)
        .ok_or_else(|| format!("{}: no element {label}", inst.key()))
}

fn total(inst: &FamilyInstance) -> Result<&FiniteAct, String> {
    match &inst.act {
        FamilyAct::Total(a) => Ok(a),
        FamilyAct::Partial(_) => Err(format!("{}: expected a total act", inst.key())),
    }
}

fn closure(inst: &FamilyInstance, seed: (usize, usize)) -> Result<Partition, String> {
    let p = match &inst.act {
        FamilyAct::Total(a) => {
            congruence::principal_closure(a, &[seed]).map(|c| c.into_partition())
        }
        FamilyAct::Partial(a) => a.closure(&[seed]),
    };
    p.map_err(|e| format!("{}: {e}", inst.key()))
}

fn forces(inst: &FamilyInstance, seed: (&str, &str), target: (&str, &str)) -> Result<(), String> {
    let p = closure(inst, (find(inst, seed.0)?, find(inst, seed.1)?))?;
    ensure(
        p.same_block(find(inst, target.0)?, find(inst, target.1)?),
        || {
            format!(
                "{}: {}~{} does not force {}~{}",
                inst.key(),
                seed.0,
                seed.1,
                target.0,
                target.1
            )
        },
    )
}

fn complement(n: usize, a: usize) -> Vec<usize> {
    (0..n).filter(|&x| x != a).collect()
}

fn c1_corpus(corpus: &[CorpusEntry], limits: &SearchLimits) -> Outcome {
    let mut elements = 0;
    for e in corpus {
        let act = &e.act;
        let report = check_condition(act, Condition::Cs, limits).map_err(|err| err.to_string())?;
        ensure(report.holds, || {
            format!("cs fails on an act over {}", e.monoid_name)
        })?;
        for a in 0..act.size() {
            let s = sigma(act, a).map_err(|err| err.to_string())?;
            ensure(s.partition().block_members(a) == [a], || {
                format!("sigma_{a} has a non-singleton block over {}", e.monoid_name)
            })?;
            elements += 1;
        }
    }
    Ok(format!("{} acts, {elements} elements", corpus.len()))
}

fn c2_sigma_oracle(corpus: &[CorpusEntry], limits: &SearchLimits) -> Outcome {
    let pairs: Vec<(usize, usize)> = corpus
        .iter()
        .enumerate()
        .flat_map(|(i, e)| (0..e.act.size()).map(move |a| (i, a)))
        .collect();
    let sample = catalog::stride_sample(&pairs, 1000);
    for &(i, a) in &sample {
        let act = &corpus[i].act;
        let s = sigma(act, a).map_err(|e| e.to_string())?;
        ensure(congruence::violation(act, s.partition()).is_none(), || {
            format!("sigma_{a} is not a congruence")
        })?;
        ensure(s.partition().block_members(a) == [a], || {
            format!("sigma_{a} merges {a}")
        })?;
        let k = if act.size() == 1 {
            1
        } else {
            separability::min_index(act, a, &complement(act.size(), a), limits)
                .map_err(|e| e.to_string())?
        };
        ensure(k <= s.index(), || {
            format!("separate index {k} exceeds sigma index {}", s.index())
        })?;
        let oracle = naive::congruences(act, act.size())
            .into_iter()
            .filter(|c| c.partition().block_members(a) == [a])
            .map(|c| c.index())
            .min();
        ensure(oracle == Some(k), || {
            format!("enumeration finds {oracle:?} blocks, separate finds {k}")
        })?;
    }
    Ok(format!("{} (act, a) pairs", sample.len()))
}

fn c3_forcing() -> Outcome {
    let mut chains = 0;
    let bz = family("bz_window", &[("w", 12)])?;
    for i in 1..=5 {
        for j in i + 1..=5 {
            let seed = (format!("b-{i}"), format!("b-{j}"));
            let target = format!("b{}", j - i);
            forces(&bz, (&seed.0, &seed.1), ("b0", &target))?;
            chains += 1;
        }
    }
    for n in 1..=4 {
        for (name, target) in [("kozhukhov", ("b", "0")), ("leftzero", ("b", "c"))] {
            let inst = family(name, &[("n", n)])?;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        forces(&inst, (&format!("a{i}"), &format!("a{j}")), target)?;
                        chains += 1;
                    }
                }
            }
        }
    }
    let free = family("free_monogenic_act", &[("w", 10)])?;
    for i in 0..10 {
        for j in i + 1..=10 {
            forces(&free, (&format!("a{i}"), &format!("a{j}")), ("0", "a0"))?;
            chains += 1;
        }
    }
    for n in 1..=5 {
        let inst = family("star_semilattice", &[("n", n)])?;
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    let xi = format!("x{i}");
                    forces(&inst, (&xi, &format!("x{j}")), (&xi, "0"))?;
                    chains += 1;
                }
            }
        }
    }
    Ok(format!("{chains} chains"))
}

fn c4_min_index(limits: &SearchLimits) -> Outcome {
    let mut pins = Vec::new();
    for n in 2..=4 {
        for (name, forbidden) in [("kozhukhov", "0"), ("leftzero", "c")] {
            let inst = family(name, &[("n", n)])?;
            let act = total(&inst)?;
            let b = find(&inst, "b")?;
            let x = find(&inst, forbidden)?;
            let k = separability::min_index(act, b, &[x], limits).map_err(|e| e.to_string())?;
            let oracle = naive::least_separating(act, b, &[x], act.size()).map(|c| c.index());
            ensure(k == n as usize + 2 && oracle == Some(k), || {
                format!("{}: search {k}, enumeration {oracle:?}", inst.key())
            })?;
            pins.push(format!("{name}({n})={k}"));
        }
    }
    Ok(pins.join(" "))
}

fn c5_clifford_tower(limits: &SearchLimits) -> Outcome {
    let mut detail = Vec::new();
    for n in 2..=3usize {
        let inst = family("clifford_tower", &[("n", n as i64)])?;
        let act = total(&inst)?;
        let e1 = inst.marked("e1").ok_or("no e1")?;
        let rest = complement(act.size(), e1);
        let bounded =
            separability::separate(act, e1, &rest, Some(n), limits).map_err(|e| e.to_string())?;
        ensure(bounded.is_none(), || {
            format!("n={n}: separated within {n} classes")
        })?;
        // rho sends g_i^k to g_n^(k * 2^(n-i))
        let m = &inst.monoid;
        let image: Vec<usize> = m
            .elements()
            .map(|x| {
                let label = m.label(x);
                let (i, k) = label[1..].split_once('^').expect("g<i>^<k>");
                let (i, k): (usize, usize) = (i.parse().unwrap(), k.parse().unwrap());
                k << (n - i)
            })
            .collect();
        let rho = Partition::from_labels(&image);
        let regular = FiniteAct::regular(m.clone());
        congruence::verify(&regular, rho.clone()).map_err(|e| format!("n={n}: rho {e}"))?;
        let identities: Vec<usize> = m.idempotents();
        ensure(rho.block_members(m.identity()) == identities, || {
            format!(
                "n={n}: class of e_1 is {:?}",
                rho.block_members(m.identity())
            )
        })?;
        ensure(act.size() == rho.index(), || {
            format!("n={n}: act is not M/rho")
        })?;
        detail.push(format!(
            "n={n}: {} elements, no separation within {n}",
            m.order()
        ));
    }
    Ok(detail.join("; "))
}

fn c6_rank() -> Outcome {
    for n in 2..=6 {
        let spec = catalog::diagonal_z2(n);
        let r = spec.rank(None).map_err(|e| e.to_string())?;
        ensure(r.rank == n, || format!("diagonal n={n}: rank {}", r.rank))?;
        let pg = spec.rank(Some(&[0, 1])).map_err(|e| e.to_string())?;
        ensure(pg.rank == 1, || format!("P/G n={n}: rank {}", pg.rank))?;
        let ones = ReesMatrixSpec::new(cyclic_group(2), n, n, vec![vec![0; n]; n])
            .map_err(|e| e.to_string())?;
        let r1 = ones.rank(None).map_err(|e| e.to_string())?;
        ensure(r1.rank == 1, || {
            format!("identity matrix n={n}: rank {}", r1.rank)
        })?;
    }
    Ok("n = 2..6".into())
}

/// `M \ {1}` is a subsemigroup that is simple (and finite, so completely
/// simple).
fn is_completely_simple_with_identity(m: &FiniteMonoid) -> bool {
    let one = m.identity();
    let s: Vec<usize> = m.elements().filter(|&x| x != one).collect();
    !s.is_empty()
        && s.iter().all(|&x| s.iter().all(|&y| m.mul(x, y) != one))
        && s.iter().all(|&x| {
            s.iter().all(|&t| {
                s.iter()
                    .any(|&u| s.iter().any(|&v| m.mul(m.mul(u, x), v) == t))
            })
        })
}

fn c7_witnesses(
    monoids: &[CatalogMonoid],
    corpus: &[CorpusEntry],
    limits: &SearchLimits,
) -> Outcome {
    let (mut rclass, mut clifford, mut union, mut fallback, mut rees) = (0, 0, 0, 0, 0);
    let fail =
        |what: &str, e: &CorpusEntry, err: Error| format!("{what} over {}: {err}", e.monoid_name);
    for e in corpus {
        let act = &e.act;
        let n = act.size();
        for z in act.zeros() {
            for a in complement(n, z) {
                rclass_witness(act, z, a).map_err(|err| fail("rclass", e, err))?;
                rclass += 1;
            }
        }
        if act.monoid().is_clifford() {
            let leq = act.preorder();
            for a in 0..n {
                for b in complement(n, a) {
                    if !(leq[a][b] && leq[b][a]) {
                        clifford_witness(act, a, b).map_err(|err| fail("clifford", e, err))?;
                        clifford += 1;
                    }
                }
            }
        }
        let blocks = act.decompose();
        if blocks.len() > 1 {
            for block in &blocks {
                let outside: Vec<usize> = (0..n).filter(|x| !block.contains(x)).collect();
                for &a in block {
                    disjoint_union_witness(act, &blocks, a, &outside)
                        .map_err(|err| fail("disjoint union", e, err))?;
                    union += 1;
                    let rest = complement(n, a);
                    disjoint_union_fallback(act, &blocks, a, &rest, limits)
                        .map_err(|err| fail("disjoint union fallback", e, err))?;
                    fallback += 1;
                }
            }
        }
    }
    for cm in monoids {
        let m = &cm.monoid;
        if !is_completely_simple_with_identity(m) {
            continue;
        }
        let one = m.identity();
        let regular = FiniteAct::regular(m.clone());
        let search = PartitionSearch::new(m.order(), regular.operations(), m.order());
        for rho in search {
            if rho.block_members(one) != [one] {
                continue;
            }
            let act = FiniteAct::cyclic_from_right_congruence(m.clone(), &rho)
                .map_err(|err| err.to_string())?;
            let gen = rho.block_of(one);
            for z in act.zeros().into_iter().filter(|&z| z != gen) {
                for a in complement(act.size(), z) {
                    rees_cyclic_sss_witness(m.clone(), &rho, Some(z), a)
                        .map_err(|err| format!("rees cyclic over {}: {err}", cm.name))?;
                    rees += 1;
                }
            }
        }
    }
    let counts = [rclass, clifford, union, fallback, rees];
    ensure(counts.iter().all(|&c| c > 0), || {
        format!("a witness had no applicable instance: {counts:?}")
    })?;
    Ok(format!(
        "rclass {rclass}, clifford {clifford}, disjoint union {union}+{fallback}, rees cyclic {rees}"
    ))
}

fn c8_correspondence(monoids: &[CatalogMonoid], limits: &SearchLimits) -> Outcome {
    let mut checked = 0;
    for cm in monoids.iter().filter(|cm| cm.monoid.order() <= 4) {
        let m = &cm.monoid;
        let search = PartitionSearch::new(m.order(), m.two_sided_operations(), m.order());
        for rho in search {
            let report = act_monoid_correspondence(m.clone(), &rho, true, limits)
                .map_err(|e| format!("{}: {e}", cm.name))?;
            ensure(report.all_agree() && report.conditions.len() == 4, || {
                format!("{} {:?}: {report:?}", cm.name, rho.as_slice())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} two-sided congruences"))
}

/// All `|J| x |I|` matrices over the group with row 0 and column 0 equal to
/// the identity.
fn normalized_matrices(order: usize, rows: usize, cols: usize) -> Vec<Vec<Vec<usize>>> {
    let free = (rows - 1) * (cols - 1);
    (0..order.pow(free as u32))
        .map(|mut code| {
            (0..cols)
                .map(|j| {
                    (0..rows)
                        .map(|i| {
                            if i == 0 || j == 0 {
                                0
                            } else {
                                let g = code % order;
                                code /= order;
                                g
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn c9_rees_brackets() -> Outcome {
    let (mut monoids, mut pairs) = (0, 0);
    for order in 1..=2 {
        for rows in 1..=3 {
            for cols in 1..=3 {
                for sandwich in normalized_matrices(order, rows, cols) {
                    let spec = ReesMatrixSpec::new(cyclic_group(order), rows, cols, sandwich)
                        .map_err(|e| e.to_string())?;
                    let rees = spec.build();
                    let act = FiniteAct::regular(rees.monoid.clone());
                    let one = rees.monoid.identity();
                    let leq = act.preorder();
                    for a in 0..act.size() {
                        for b in complement(act.size(), a).into_iter().filter(|&b| leq[a][b]) {
                            rees_bracket_decomposition(&rees, &act, a, b, Some(one))
                                .map_err(|e| format!("{rows}x{cols} over Z{order}: {e}"))?;
                            pairs += 1;
                        }
                    }
                    monoids += 1;
                }
            }
        }
    }
    Ok(format!("{monoids} monoids, {pairs} comparable pairs"))
}

fn c10_counts(limits: &SearchLimits) -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=6 {
        let inst = family("squarefree", &[("n", n)])?;
        let words = count_squarefree_brute_force(n as usize);
        ensure(
            families::squarefree_words(n as usize).len() == words,
            || format!("n={n}: generator and filter disagree"),
        )?;
        ensure(inst.monoid.order() == words + 2, || {
            format!("n={n}: order {} vs {} words", inst.monoid.order(), words)
        })?;
        counts.push(words.to_string());
    }
    for n in 1..=6 {
        let inst = family("bz_quotient", &[("n", n)])?;
        let report = inst.verify(limits);
        ensure(report.all_passed(), || report.to_text())?;
    }
    Ok(format!("square-free words {}", counts.join(",")))
}

fn main() -> ExitCode {
    let limits = SearchLimits::default();
    let start = Instant::now();
    let monoids = catalog::catalog(4);
    let corpus = match catalog::corpus(&monoids, 5) {
        Ok(c) => c,
        Err(e) => {
            println!("FAIL corpus construction: {e}");
            return ExitCode::FAILURE;
        }
    };
    println!(
        "corpus: {} monoids, {} acts ({:.1}s)",
        monoids.len(),
        corpus.len(),
        start.elapsed().as_secs_f64()
    );
    let criteria: Vec<(&str, Check<'_>)> = vec![
        (
            "1 corpus completeness",
            Box::new(|| c1_corpus(&corpus, &limits)),
        ),
        (
            "2 sigma oracle",
            Box::new(|| c2_sigma_oracle(&corpus, &limits)),
        ),
        ("3 forcing chains", Box::new(c3_forcing)),
        ("4 minimal index pins", Box::new(|| c4_min_index(&limits))),
        ("5 clifford tower", Box::new(|| c5_clifford_tower(&limits))),
        ("6 sandwich rank", Box::new(c6_rank)),
        (
            "7 witness constructions",
            Box::new(|| c7_witnesses(&monoids, &corpus, &limits)),
        ),
        (
            "8 act/monoid correspondence",
            Box::new(|| c8_correspondence(&monoids, &limits)),
        ),
        ("9 rees bracket decomposition", Box::new(c9_rees_brackets)),
        ("10 family counts", Box::new(|| c10_counts(&limits))),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        let outcome = check();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why} ({secs:.1}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
