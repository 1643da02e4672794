use std::collections::BTreeMap;
use std::sync::Arc;

use actsep_core::congruence::{self, naive};
use actsep_core::families::{self, FamilyAct};
use actsep_core::monoid::{cyclic_group, ReesMatrixSpec};
use actsep_core::separability::{self, sigma, SeparationCertificate};
use actsep_core::text::{self, ParsedAct};
use actsep_core::{FiniteAct, FiniteMonoid, Partition, SearchLimits};
use proptest::prelude::*;

/// A transformation monoid on `degree` points with its natural act.
fn natural_act(degree: usize, generators: &[Vec<usize>]) -> FiniteAct {
    let m = FiniteMonoid::transformation_closure(degree, generators, 10_000).unwrap();
    let maps: Vec<Vec<usize>> = m
        .labels()
        .unwrap()
        .iter()
        .map(|l| {
            l.trim_matches(['[', ']'])
                .split(',')
                .map(|x| x.parse().unwrap())
                .collect()
        })
        .collect();
    let rows: Vec<Vec<usize>> = (0..degree)
        .map(|x| maps.iter().map(|f| f[x]).collect())
        .collect();
    FiniteAct::from_table(Arc::new(m), &rows).unwrap()
}

fn act_strategy() -> impl Strategy<Value = FiniteAct> {
    (1usize..=5).prop_flat_map(|degree| {
        prop::collection::vec(prop::collection::vec(0..degree, degree), 1..=2)
            .prop_map(move |gens| natural_act(degree, &gens))
    })
}

fn act_and_element() -> impl Strategy<Value = (FiniteAct, usize)> {
    act_strategy().prop_flat_map(|act| {
        let n = act.size();
        (Just(act), 0..n)
    })
}

fn separation_instance() -> impl Strategy<Value = (FiniteAct, usize, Vec<usize>)> {
    act_strategy()
        .prop_filter("needs two elements", |a| a.size() > 1)
        .prop_flat_map(|act| {
            let n = act.size();
            (Just(act), 0..n, prop::collection::vec(any::<bool>(), n))
        })
        .prop_filter_map("forbidden set is empty", |(act, a, mask)| {
            let forbidden: Vec<usize> = (0..act.size()).filter(|&x| x != a && mask[x]).collect();
            (!forbidden.is_empty()).then_some((act, a, forbidden))
        })
}

fn satisfies_axioms(m: &FiniteMonoid, rows: &[Vec<usize>]) -> bool {
    rows.iter().enumerate().all(|(x, row)| {
        row[m.identity()] == x
            && m.elements()
                .all(|s| m.elements().all(|t| rows[row[s]][t] == row[m.mul(s, t)]))
    })
}

fn bz_window_forces(w: i64, i: usize, j: usize) -> bool {
    let params = BTreeMap::from([("w".to_string(), w)]);
    let inst = families::build("bz_window", &params).unwrap();
    let at = |label: String| {
        (0..inst.act.size())
            .find(|&x| inst.act.label(x) == label)
            .unwrap()
    };
    let FamilyAct::Partial(act) = &inst.act else {
        panic!("bz_window is a partial act")
    };
    let p = act
        .closure(&[(at(format!("b-{i}")), at(format!("b-{j}")))])
        .unwrap();
    p.same_block(at("b0".into()), at(format!("b{}", j - i)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn search_matches_enumeration((act, a, forbidden) in separation_instance()) {
        let limits = SearchLimits::default();
        let found = separability::separate(&act, a, &forbidden, None, &limits).unwrap().unwrap();
        let oracle = naive::least_separating(&act, a, &forbidden, act.size()).unwrap();
        prop_assert_eq!(found.congruence().partition(), oracle.partition());
    }

    #[test]
    fn enumerate_lists_every_congruence(act in act_strategy()) {
        let limits = SearchLimits::default();
        let searched: Vec<Partition> = congruence::enumerate(&act, None, &limits)
            .unwrap()
            .map(|c| c.into_partition())
            .collect();
        let oracle: Vec<Partition> = naive::congruences(&act, act.size())
            .into_iter()
            .map(|c| c.into_partition())
            .collect();
        prop_assert_eq!(searched, oracle);
    }

    #[test]
    fn sigma_isolates_its_element((act, a) in act_and_element()) {
        let s = sigma(&act, a).unwrap();
        prop_assert!(congruence::violation(&act, s.partition()).is_none());
        prop_assert_eq!(s.partition().block_members(a), vec![a]);
    }

    #[test]
    fn act_tables_validate_exactly_when_axioms_hold(
        k in 0usize..7,
        raw in prop::collection::vec(prop::collection::vec(0usize..3, 3), 1..=3),
    ) {
        let monoids = actsep_core::catalog::monoids_of_order(3);
        let m = Arc::new(monoids[k].clone());
        let rows: Vec<Vec<usize>> = raw
            .iter()
            .map(|r| r.iter().map(|&x| x % raw.len()).collect())
            .collect();
        prop_assert_eq!(
            FiniteAct::from_table(m.clone(), &rows).is_ok(),
            satisfies_axioms(&m, &rows)
        );
    }

    #[test]
    fn forcing_survives_wider_windows(w in 5i64..14, extra in 1i64..6, i in 1usize..5, d in 1usize..5) {
        let j = (i + d).min(5);
        prop_assume!(i < j);
        if bz_window_forces(w, i, j) {
            prop_assert!(bz_window_forces(w + extra, i, j));
        }
    }

    #[test]
    fn rank_ignores_row_and_column_order(
        order in 1usize..=3,
        rows in 1usize..=4,
        cols in 1usize..=4,
        seed in prop::collection::vec(0usize..6, 16),
        shift in any::<usize>(),
    ) {
        let sandwich: Vec<Vec<usize>> = (0..cols)
            .map(|j| (0..rows).map(|i| seed[j * 4 + i] % order).collect())
            .collect();
        let spec = ReesMatrixSpec::new(cyclic_group(order), rows, cols, sandwich.clone()).unwrap();
        let rotate_i = shift % rows;
        let rotate_j = (shift / 7) % cols;
        let mut permuted = sandwich;
        permuted.rotate_left(rotate_j);
        for r in &mut permuted {
            r.rotate_left(rotate_i);
            r.swap(0, rows - 1);
        }
        let other = ReesMatrixSpec::new(cyclic_group(order), rows, cols, permuted).unwrap();
        let rank = spec.rank(None).unwrap().rank;
        prop_assert_eq!(other.rank(None).unwrap().rank, rank);
        prop_assert_eq!(spec.normalize(0, 0).unwrap().rank(None).unwrap().rank, rank);
    }

    #[test]
    fn text_formats_round_trip((act, a, forbidden) in separation_instance()) {
        let m = act.monoid().clone();
        let (name, parsed) = text::parse_monoid(&text::write_monoid("m", &m)).unwrap();
        prop_assert_eq!(name.as_str(), "m");
        prop_assert_eq!(parsed.rows(), m.rows());
        let back = text::parse_act(&text::write_act("x", "m", &act), m.clone(), "m").unwrap();
        match back {
            (n, ParsedAct::Total(b)) => {
                prop_assert_eq!(n.as_str(), "x");
                prop_assert_eq!(b.rows(), act.rows());
            }
            (_, ParsedAct::Partial(_)) => prop_assert!(false, "total act read back as partial"),
        }
        let cert = separability::separate(&act, a, &forbidden, None, &SearchLimits::default())
            .unwrap()
            .unwrap();
        let p = cert.congruence().partition().clone();
        let (_, q) = text::parse_congruence(&text::write_congruence("x", &p)).unwrap();
        prop_assert_eq!(&q, &p);
        let c = text::parse_certificate(&text::write_certificate("x", &cert)).unwrap();
        prop_assert_eq!(c.element, a);
        prop_assert_eq!(&c.forbidden, &forbidden);
        prop_assert_eq!(&c.partition, &p);
        let again = SeparationCertificate::new(a, &c.forbidden, congruence::verify(&act, c.partition).unwrap());
        prop_assert!(again.is_ok());
    }
}
