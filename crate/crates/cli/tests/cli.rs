use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
}

impl Run {
    fn get(&self, key: &str) -> Option<&str> {
        self.stdout
            .lines()
            .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
    }
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_symquiver"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited"),
        stdout: String::from_utf8(out.stdout).unwrap(),
    }
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn write_family(dir: &Path, kind: &str, param: &str, p: &str) -> String {
    let path = dir.join(format!("{kind}_{param}.alg"));
    let path = path.to_str().unwrap().to_string();
    let r = run(&["family", "--type", kind, "--param", param, "--p", p, "--out", &path]);
    assert_eq!(r.code, 0);
    path
}

#[test]
fn family_then_classify() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_family(dir.path(), "iii", "2", "3");
    let r = run(&["classify", &f]);
    assert_eq!(r.code, 0);
    assert_eq!(r.get("family"), Some("iii"));
    assert_eq!(r.get("t"), Some("2"));
}

#[test]
fn lemma1_on_two_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_family(dir.path(), "ii", "2", "2");
    let r = run(&["lemma1", &f]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.get("condition_a"), Some("Omega^2(S_1) = S_2"));
    assert_eq!(r.get("condition_b"), Some("alpha"));
    assert_eq!(r.get("condition_c"), Some("vertex 1 dim 5"));
    assert_eq!(r.get("equivalence_ok"), Some("true"));
    assert_eq!(r.get("finite_type_conclusion"), Some("two-vertex-cycle Nakayama"));
}

#[test]
fn periods_on_loop_family() {
    let r = run(&["periods", &fixture("family_iii_2_p3.alg")]);
    assert_eq!(r.code, 0);
    assert_eq!(r.get("period.S_1"), Some("4"));
    assert_eq!(r.get("period.S_2"), Some("4"));
    assert_eq!(r.get("identity.S_1"), Some("4+4=7+1=7+1"));
    assert_eq!(r.get("identity.S_2"), Some("2+3=4+1=4+1"));
    assert_eq!(r.get("identity_holds.S_2"), Some("true"));
    assert_eq!(r.get("sequence_exact.S_1"), Some("true"));
}

#[test]
fn reports_are_stable_and_json_matches() {
    let f = fixture("family_ii_1_p2.alg");
    for cmd in ["check", "symmetric", "periods", "lemma1", "classify", "census"] {
        let a = run(&["--seed", "7", cmd, &f]);
        let b = run(&["--seed", "7", cmd, &f]);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        let lines: Vec<&str> = a.stdout.lines().collect();
        let keys: Vec<&str> = lines.iter().map(|l| l.split_once('=').unwrap().0).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]), "{cmd} keys sorted");
        let j = run(&["--json", "--seed", "7", cmd, &f]);
        let map: BTreeMap<String, String> = serde_json::from_str(&j.stdout).unwrap();
        let text: BTreeMap<String, String> = lines
            .iter()
            .map(|l| {
                let (k, v) = l.split_once('=').unwrap();
                (k.to_string(), v.to_string())
            })
            .collect();
        assert_eq!(map, text, "{cmd}");
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "vertex 1\nloop x 1 1\n").unwrap();
    assert_eq!(run(&["check", bad.to_str().unwrap()]).code, 2);
    assert_eq!(run(&["check", "/nonexistent/file.alg"]).code, 2);
    assert_eq!(run(&["family", "--type", "iii", "--param", "1"]).code, 2);
    assert_eq!(run(&["family", "--type", "ii", "--param", "2", "--p", "4"]).code, 2);
    assert_eq!(run(&["check", &fixture("free_loop_not_admissible.alg")]).code, 3);
    assert_eq!(run(&["check", &fixture("two_loops_not_admissible.alg")]).code, 3);
    assert_eq!(run(&["lemma1", &fixture("two_cycle_not_symmetric.alg")]).code, 1);
    assert_eq!(run(&["heart", &fixture("family_i_3_p2.alg"), "--vertex", "7"]).code, 2);
    assert_eq!(run(&["--strict", "classify", &fixture("family_ii_2_p3.alg")]).code, 0);
}

#[test]
fn a2_is_not_symmetric() {
    let r = run(&["symmetric", &fixture("a2.alg")]);
    assert_eq!(r.code, 1);
    assert_eq!(r.get("symmetric"), Some("false"));
    assert_eq!(r.get("property_b"), Some("false"));
    assert_eq!(r.get("failed"), Some("algebra is not symmetric"));
    let r = run(&["classify", &fixture("a2.alg")]);
    assert_eq!((r.code, r.get("family")), (0, Some("none")));
    // S_1 has projective dimension 1, which settles aperiodicity without the bound
    let r = run(&["periods", &fixture("a2.alg")]);
    assert_eq!(r.code, 0);
    assert_eq!(r.get("period.S_1"), Some("aperiodic-up-to-bound(12)"));
}

#[test]
fn heart_of_loop_family() {
    let r = run(&["heart", &fixture("family_iii_3_p5.alg"), "--vertex", "2"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.get("simple"), Some("true"));
    assert_eq!(r.get("isomorphic_to"), Some("S_1"));
    let r = run(&["heart", &fixture("family_iii_3_p5.alg"), "--vertex", "1"]);
    assert_eq!(r.get("dimvec"), Some("2,1"));
}

#[test]
fn census_table() {
    let r = run(&["census", &fixture("family_ii_1_p2.alg"), "--max-dim", "3"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.get("count"), Some("6"));
    assert_eq!(r.get("non_projective"), Some("4"));
    assert_eq!(r.get("omega_closed"), Some("true"));
    assert_eq!(r.get("all_periods_divide_4"), Some("true"));
    assert_eq!(r.get("entry.1.dimvec"), Some("1,0"));
    assert_eq!(r.get("entry.6.projective"), Some("true"));
    let small = run(&["census", &fixture("family_iii_3_p5.alg"), "--max-dim", "2"]);
    assert_eq!(small.get("open_boundary"), Some("true"));
}

#[test]
fn verify_rescaled_family() {
    let r = run(&["verify-family", &fixture("family_iii_2_rescaled_p5.alg")]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.get("family"), Some("iii"));
    assert_eq!(r.get("rescaling"), Some("alpha*3"));
    assert_eq!(r.get("passed"), Some("true"));
}

#[test]
fn verify_rejects_non_family() {
    let r = run(&["verify-family", &fixture("two_cycle_not_symmetric.alg")]);
    assert_eq!(r.code, 1);
    assert_eq!(r.get("family"), Some("none"));
}

#[test]
fn family_to_stdout_round_trips() {
    let r = run(&["family", "--type", "ii", "--param", "1", "--p", "3"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("field 3\nvertex 1\nvertex 2\narrow alpha 1 2\narrow beta 2 1\n"));
    assert!(r.stdout.contains("rel alpha.beta.alpha\n"));
}
