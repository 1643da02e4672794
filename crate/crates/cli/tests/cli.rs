use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use actsep_core::separability::ReportRecord;
use actsep_core::text;

fn actsep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_actsep"))
        .args(args)
        .env_remove("ACTSEP_MAX_SEARCH")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

const NULL3: &str = "monoid null3\norder 3\nidentity 0\ntable\n0 1 2\n1 2 2\n2 2 2\n";
const REGULAR: &str = "act regular\nmonoid null3\nsize 3\ntable\n0 1 2\n1 2 2\n2 2 2\n";

fn null3_files(dir: &Path) -> (PathBuf, PathBuf) {
    let m = dir.join("null3.monoid");
    let a = dir.join("regular.act");
    std::fs::write(&m, NULL3).unwrap();
    std::fs::write(&a, REGULAR).unwrap();
    (m, a)
}

fn dump(dir: &Path, name: &str, param: &str) -> PathBuf {
    let out = actsep(&[
        "family",
        "dump",
        "--name",
        name,
        "--param",
        param,
        "--out",
        p(dir),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    PathBuf::from(stdout(&out).trim())
}

#[test]
fn validate_monoid_and_act() {
    let dir = tempfile::tempdir().unwrap();
    let (m, a) = null3_files(dir.path());
    assert_eq!(code(&actsep(&["validate", "--monoid", p(&m)])), 0);
    assert_eq!(
        code(&actsep(&[
            "validate",
            "--act",
            p(&a),
            "--monoid-file",
            p(&m)
        ])),
        0
    );
    let bad = dir.path().join("bad.monoid");
    std::fs::write(&bad, "monoid x\norder 2\nidentity 1\ntable\n0 1\n1 1\n").unwrap();
    let out = actsep(&["validate", "--monoid", p(&bad)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("invalid:"));
    let bad_act = dir.path().join("bad.act");
    std::fs::write(
        &bad_act,
        "act b\nmonoid null3\nsize 2\ntable\n0 1 1\n1 0 1\n",
    )
    .unwrap();
    assert_eq!(
        code(&actsep(&[
            "validate",
            "--act",
            p(&bad_act),
            "--monoid-file",
            p(&m)
        ])),
        1
    );
}

#[test]
fn min_index_on_dumped_kozhukhov() {
    let dir = tempfile::tempdir().unwrap();
    let stem = dump(dir.path(), "kozhukhov", "n=3");
    let facts = std::fs::read_to_string(stem.with_extension("facts")).unwrap();
    assert!(facts.contains("marked b 3\nmarked zero 4\n"));
    let out = actsep(&[
        "min-index",
        "--act",
        p(&stem.with_extension("act")),
        "--monoid-file",
        p(&stem.with_extension("monoid")),
        "--element",
        "3",
        "--from",
        "4",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "5\n");
}

#[test]
fn rees_rank_of_diagonal_family() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("z2.monoid");
    std::fs::write(&g, "monoid z2\norder 2\nidentity 0\ntable\n0 1\n1 0\n").unwrap();
    let m = dir.path().join("diag4.matrix");
    std::fs::write(&m, "0 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n").unwrap();
    let args = [
        "rees",
        "--group",
        p(&g),
        "--rows",
        "4",
        "--cols",
        "4",
        "--matrix",
        p(&m),
    ];
    let out = actsep(&[&args[..], &["--rank"]].concat());
    assert_eq!(stdout(&out), "r_I=4 r_J=4 rank=4\n");
    let whole = dir.path().join("whole.sub");
    std::fs::write(&whole, "0 1\n").unwrap();
    let out = actsep(&[&args[..], &["--rank", "--mod-subgroup", p(&whole)]].concat());
    assert_eq!(stdout(&out), "r_I=1 r_J=1 rank=1\n");
    let out = actsep(&[&args[..], &["--normalize", "1,1", "--rank"]].concat());
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("normalized i0=1 j0=1\n"));
    let out = actsep(&args);
    assert_eq!(code(&out), 0);
    let (_, built) = text::parse_monoid(&stdout(&out)).unwrap();
    assert_eq!(built.order(), 4 * 2 * 4 + 1);
}

#[test]
fn check_text_and_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let (m, a) = null3_files(dir.path());
    for cond in ["rf", "wss", "sss", "cs"] {
        let base = [
            "check",
            "--act",
            p(&a),
            "--monoid-file",
            p(&m),
            "--condition",
            cond,
        ];
        let t = actsep(&base);
        let j = actsep(&[&base[..], &["--json"]].concat());
        assert_eq!(code(&t), 0);
        assert_eq!(code(&j), 0);
        let from_text = ReportRecord::parse_text(&stdout(&t)).unwrap();
        let from_json = ReportRecord::parse_json(&stdout(&j)).unwrap();
        assert_eq!(from_text, from_json);
        assert_eq!(from_text.act, "regular");
    }
    let certs = dir.path().join("certs");
    let out = actsep(&[
        "check",
        "--act",
        p(&a),
        "--monoid-file",
        p(&m),
        "--condition",
        "cs",
        "--certificates",
        p(&certs),
    ]);
    assert_eq!(code(&out), 0);
    let mut files: Vec<_> = std::fs::read_dir(&certs)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert_eq!(files.len(), 3);
    let cert = text::parse_certificate(&std::fs::read_to_string(&files[0]).unwrap()).unwrap();
    assert_eq!((cert.element, cert.forbidden), (0, vec![1, 2]));
}

#[test]
fn separate_writes_certificate_or_reports_none() {
    let dir = tempfile::tempdir().unwrap();
    let (m, a) = null3_files(dir.path());
    let cert = dir.path().join("c.cert");
    let base = [
        "separate",
        "--act",
        p(&a),
        "--monoid-file",
        p(&m),
        "--element",
        "1",
        "--from",
        "2",
    ];
    let out = actsep(&[&base[..], &["--out", p(&cert)]].concat());
    assert_eq!(code(&out), 0);
    let parsed = text::parse_certificate(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(parsed.act, "regular");
    assert!(!parsed.partition.same_block(1, 2));
    let out = actsep(&[&base[..], &["--max-index", "1"]].concat());
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "none within bound\n");
}

#[test]
fn exit_code_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let (m, a) = null3_files(dir.path());
    // usage
    assert_eq!(code(&actsep(&["check"])), 2);
    assert_eq!(code(&actsep(&["frobnicate"])), 2);
    assert_eq!(code(&actsep(&["family", "run", "--name", "nope"])), 2);
    assert_eq!(
        code(&actsep(&[
            "family",
            "run",
            "--name",
            "kozhukhov",
            "--param",
            "n=99"
        ])),
        2
    );
    assert_eq!(
        code(&actsep(&["validate", "--monoid", "/nonexistent/file"])),
        2
    );
    let sep = [
        "separate",
        "--act",
        p(&a),
        "--monoid-file",
        p(&m),
        "--from",
        "2",
    ];
    assert_eq!(code(&actsep(&[&sep[..], &["--element", "7"]].concat())), 2);
    assert_eq!(code(&actsep(&[&sep[..], &["--element", "2"]].concat())), 2);
    // validation
    let bad = dir.path().join("bad.act");
    std::fs::write(&bad, "act b\nmonoid null3\nsize 2\ntable\n0 1 1\n1 0 1\n").unwrap();
    let chk = [
        "check",
        "--monoid-file",
        p(&m),
        "--condition",
        "cs",
        "--act",
    ];
    assert_eq!(code(&actsep(&[&chk[..], &[p(&bad)]].concat())), 3);
    let wrong = dir.path().join("wrong.act");
    std::fs::write(&wrong, REGULAR.replace("monoid null3", "monoid other")).unwrap();
    assert_eq!(code(&actsep(&[&chk[..], &[p(&wrong)]].concat())), 3);
    // cap
    let out = Command::new(env!("CARGO_BIN_EXE_actsep"))
        .args([
            "min-index",
            "--act",
            p(&a),
            "--monoid-file",
            p(&m),
            "--element",
            "1",
            "--from",
            "2",
        ])
        .env("ACTSEP_MAX_SEARCH", "1")
        .output()
        .unwrap();
    assert_eq!(code(&out), 4);
    // verdicts
    assert_eq!(code(&actsep(&[&chk[..], &[p(&a)]].concat())), 0);
}

#[test]
fn family_run_against_goldens() {
    let goldens = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/goldens/v1");
    let out = actsep(&[
        "family",
        "run",
        "--name",
        "leftzero",
        "--param",
        "n=3",
        "--golden",
        p(&goldens),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("pass min_index b from {c} = 5"));
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(goldens.join("leftzero_n3.txt")).unwrap();
    std::fs::write(
        dir.path().join("leftzero_n3.txt"),
        text.replace("= 5", "= 6"),
    )
    .unwrap();
    let out = actsep(&[
        "family",
        "run",
        "--name",
        "leftzero",
        "--param",
        "n=3",
        "--golden",
        p(dir.path()),
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn family_list_and_partial_dump() {
    let out = actsep(&["family", "list"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 10);
    let dir = tempfile::tempdir().unwrap();
    let stem = dump(dir.path(), "bz_window", "w=3");
    let partial = stem.with_extension("partialact");
    let monoid = stem.with_extension("monoid");
    assert!(std::fs::read_to_string(&partial).unwrap().contains(" - "));
    assert_eq!(
        code(&actsep(&[
            "validate",
            "--act",
            p(&partial),
            "--monoid-file",
            p(&monoid)
        ])),
        0
    );
}

#[test]
fn identical_invocations_are_identical() {
    let a = actsep(&[
        "family",
        "run",
        "--name",
        "n_times_g",
        "--param",
        "n=3",
        "--param",
        "g=3",
    ]);
    let b = actsep(&[
        "family",
        "run",
        "--name",
        "n_times_g",
        "--param",
        "n=3",
        "--param",
        "g=3",
    ]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}
