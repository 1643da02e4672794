//! Family reports pinned under `goldens/v1`. Set `ACTSEP_BLESS=1` to rewrite.

use std::collections::BTreeMap;
use std::path::PathBuf;

use actsep_core::families;
use actsep_core::SearchLimits;

pub const PINNED: &[(&str, &[(&str, i64)])] = &[
    ("bz_window", &[("w", 12)]),
    ("bz_quotient", &[("n", 1)]),
    ("bz_quotient", &[("n", 2)]),
    ("bz_quotient", &[("n", 3)]),
    ("bz_quotient", &[("n", 4)]),
    ("bz_quotient", &[("n", 5)]),
    ("bz_quotient", &[("n", 6)]),
    ("kozhukhov", &[("n", 1)]),
    ("kozhukhov", &[("n", 2)]),
    ("kozhukhov", &[("n", 3)]),
    ("kozhukhov", &[("n", 4)]),
    ("leftzero", &[("n", 1)]),
    ("leftzero", &[("n", 2)]),
    ("leftzero", &[("n", 3)]),
    ("leftzero", &[("n", 4)]),
    ("squarefree", &[("n", 1)]),
    ("squarefree", &[("n", 2)]),
    ("squarefree", &[("n", 3)]),
    ("squarefree", &[("n", 4)]),
    ("squarefree", &[("n", 5)]),
    ("squarefree", &[("n", 6)]),
    ("n_times_g", &[("n", 3), ("g", 2)]),
    ("n_times_g", &[("n", 3), ("g", 3)]),
    ("free_monogenic_act", &[("w", 10)]),
    ("clifford_tower", &[("n", 2)]),
    ("clifford_tower", &[("n", 3)]),
    ("semilattice_act", &[("chain", 4)]),
    ("semilattice_act", &[("free", 3)]),
    ("star_semilattice", &[("n", 1)]),
    ("star_semilattice", &[("n", 2)]),
    ("star_semilattice", &[("n", 3)]),
    ("star_semilattice", &[("n", 4)]),
    ("star_semilattice", &[("n", 5)]),
];

#[test]
fn family_reports_match_goldens() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("goldens/v1");
    let bless = std::env::var_os("ACTSEP_BLESS").is_some();
    let mut mismatches = Vec::new();
    for (name, kv) in PINNED {
        let params: BTreeMap<String, i64> = kv.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        let inst = families::build(name, &params).unwrap();
        let report = inst.verify(&SearchLimits::default());
        assert!(report.all_passed(), "{}", report.to_text());
        let path = dir.join(format!("{}.txt", inst.stem()));
        if bless {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, report.to_text()).unwrap();
        } else if std::fs::read_to_string(&path).ok().as_deref() != Some(report.to_text().as_str())
        {
            mismatches.push(path.display().to_string());
        }
    }
    assert!(mismatches.is_empty(), "golden mismatch: {mismatches:?}");
}
