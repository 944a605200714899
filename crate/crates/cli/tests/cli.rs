use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn idcodes(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_idcodes")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_examples() {
    let dir = TempDir::new().unwrap();
    let p5 = file(&dir, "p5", "graph 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n");
    let r = idcodes(&["solve", "--problem", "ic", "--input", s(&p5)]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "k=3 witness=0,2,4\n"));

    let k2 = file(&dir, "k2", "graph 2\ne 0 1\n");
    let r = idcodes(&["solve", "--problem", "ic", "--input", s(&k2)]);
    assert_eq!((r.code, r.stderr.as_str()), (2, "error: twins (0,1)\n"));

    let c4 = file(&dir, "c4", "graph 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n");
    let r = idcodes(&["solve", "--problem", "md", "--input", s(&c4)]);
    assert!(r.stdout.starts_with("k=2 "), "{}", r.stdout);
}

#[test]
fn solve_error_codes() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad", "graph 2\ne 0 x\n");
    assert_eq!(idcodes(&["solve", "--problem", "ic", "--input", s(&bad)]).code, 3);
    let p5 = file(&dir, "p5", "graph 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n");
    assert_eq!(idcodes(&["solve", "--problem", "ic", "--input", s(&p5), "--cap", "3"]).code, 4);
    let split = file(&dir, "split", "graph 3\ne 0 1\n");
    assert_eq!(idcodes(&["solve", "--problem", "md", "--input", s(&split)]).code, 2);
    let missing = dir.path().join("missing");
    assert_eq!(idcodes(&["solve", "--problem", "ic", "--input", s(&missing)]).code, 3);
}

#[test]
fn solve_reads_models() {
    let dir = TempDir::new().unwrap();
    let iv = file(&dir, "iv", "intervals 3\n0 0 1\n1 1/2 3/2\n2 1 2\n");
    let r = idcodes(&["solve", "--problem", "ic", "--input", s(&iv)]);
    assert_eq!(r.stdout, "k=2 witness=0,2\n");
    let perm = file(&dir, "perm", "permutation 2\n0 0 1\n1 1 0\n");
    let r = idcodes(&["solve", "--problem", "ld", "--input", s(&perm)]);
    assert_eq!(r.stdout, "k=1 witness=0\n");
}

#[test]
fn cograph_examples() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4", "(J (U 0 1) (U 2 3))\n");
    let r = idcodes(&["cograph", "--problem", "ic", "--cotree", s(&c4)]);
    assert!(r.stdout.starts_with("k=3 "), "{}", r.stdout);
    let k1 = file(&dir, "k1", "0\n");
    let r = idcodes(&["cograph", "--problem", "ld", "--cotree", s(&k1)]);
    assert_eq!(r.stdout, "k=1 emp=true univ=true sep=0\n");
    let star = file(&dir, "star", "(J 0 (U 1 2 3))\n");
    let r = idcodes(&["cograph", "--problem", "ic", "--cotree", s(&star), "--witness"]);
    assert!(r.stdout.starts_with("k=3 ") && r.stdout.contains("witness="), "{}", r.stdout);

    let p4 = file(&dir, "p4", "graph 4\ne 0 1\ne 1 2\ne 2 3\n");
    let r = idcodes(&["cograph", "--problem", "ld", "--cotree", s(&p4)]);
    assert_eq!((r.code, r.stderr.as_str()), (2, "error: not a cograph\n"));
    let broken = file(&dir, "broken", "(J 0 1\n");
    assert_eq!(idcodes(&["cograph", "--problem", "ld", "--cotree", s(&broken)]).code, 3);
    let twins = file(&dir, "twins", "(J 0 1)\n");
    assert_eq!(idcodes(&["cograph", "--problem", "ic", "--cotree", s(&twins)]).code, 2);
}

#[test]
fn generate_then_certify() {
    let dir = TempDir::new().unwrap();
    let prefix = dir.path().join("iic");
    let r = idcodes(&["generate", "--family", "interval-ic", "--k", "4", "--out", s(&prefix)]);
    assert_eq!(r.stdout, "interval-ic ic 4 - 10 solution=0,4,7,9\n");
    let model = prefix.with_extension("model");
    assert!(fs::read_to_string(&model).unwrap().starts_with("intervals 10\n"));
    assert_eq!(fs::read_to_string(prefix.with_extension("manifest")).unwrap(), r.stdout);

    let r = idcodes(&["certify", "--input", s(&model), "--set", "0,4,7,9", "--problem", "ic"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("satisfied slack=0 "), "{}", r.stdout);
    let r = idcodes(&["certify", "--input", s(&model), "--set", "0,1,2,3", "--problem", "ic"]);
    assert_eq!((r.code, r.stderr.as_str()), (2, "error: VerifierFailed pair=(0,1)\n"));
}

#[test]
fn generate_other_families() {
    let dir = TempDir::new().unwrap();
    let unit = dir.path().join("umd");
    let r = idcodes(&["generate", "--family", "unit-md", "--k", "2", "--d", "3", "--out", s(&unit)]);
    assert_eq!(r.stdout, "unit-md md 2 3 7 solution=0,1\n");
    let cg = dir.path().join("cg");
    let r = idcodes(&["generate", "--family", "cograph-id", "--k-variant", "1", "--n", "8", "--out", s(&cg)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let tree = fs::read_to_string(cg.with_extension("model")).unwrap();
    assert!(tree.starts_with('('));
    let r = idcodes(&["generate", "--family", "cograph-id", "--k-variant", "1", "--n", "5", "--out", s(&cg)]);
    assert_eq!(r.code, 2);
    let r = idcodes(&["generate", "--family", "interval-old", "--k", "3", "--out", s(&cg)]);
    assert_eq!(r.code, 2);
}

#[test]
fn unit_certify_slack_zero() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "u", "intervals 5\n0 0 1\n1 1/2 3/2\n2 1 2\n3 3/2 5/2\n4 2 3\n");
    let r = idcodes(&["certify", "--input", s(&m), "--set", "0,2,4", "--problem", "ic"]);
    assert!(r.stdout.starts_with("satisfied slack=0 class=UNIT_INTERVAL"), "{}", r.stdout);
}

#[test]
fn round_trip_tight_families() {
    let dir = TempDir::new().unwrap();
    for fam in ["interval-ic", "interval-ld", "interval-old", "unit-ic", "unit-ld", "unit-old", "perm-ic", "perm-ld", "perm-old"] {
        for k in 1..=8 {
            let prefix = dir.path().join(format!("{fam}{k}"));
            let r = idcodes(&["generate", "--family", fam, "--k", &k.to_string(), "--out", s(&prefix)]);
            if r.code != 0 {
                continue;
            }
            let set = r.stdout.trim().rsplit_once("solution=").unwrap().1.to_string();
            let kind = fam.rsplit_once('-').unwrap().1;
            let model = prefix.with_extension("model");
            let class = match fam.split('-').next().unwrap() {
                "interval" => "interval",
                "unit" => "unit-interval",
                _ => "permutation",
            };
            let c = idcodes(&["certify", "--input", s(&model), "--set", &set, "--problem", kind, "--class", class]);
            assert_eq!(c.code, 0, "{fam} k={k}: {}{}", c.stdout, c.stderr);
            assert!(c.stdout.starts_with("satisfied slack=0 "), "{fam} k={k}: {}", c.stdout);
        }
    }
}

#[test]
fn bounds_rows() {
    let r = idcodes(&["bounds", "--class", "unit-interval", "--kind", "md", "--k", "2", "--d", "3"]);
    assert_eq!(r.stdout, "UNIT_INTERVAL MD 2 3 8 n<=k(D+2)-2\n");
    let r = idcodes(&["bounds", "--class", "COGRAPH", "--kind", "IC", "--k", "5"]);
    assert_eq!(r.stdout, "COGRAPH IC 5 - 8 n<=2k-2\n");
    let r = idcodes(&["bounds", "--class", "interval", "--kind", "ic", "--n", "10"]);
    assert_eq!(r.stdout, "INTERVAL IC n=10 - min_k=4 n<=k(k+1)/2\n");
    assert_eq!(idcodes(&["bounds", "--class", "cograph", "--kind", "old", "--k", "3"]).code, 2);
    assert_eq!(idcodes(&["bounds", "--class", "interval", "--kind", "md", "--k", "3"]).code, 2);
}

#[test]
fn compile_model_and_verify() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4", "(J (U 0 1) (U 2 3))\n");
    let out = dir.path().join("c4.graph");
    assert_eq!(idcodes(&["compile-model", "--input", s(&c4), "--out", s(&out)]).code, 0);
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("graph 4\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 4);
    let r = idcodes(&["verify", "--problem", "md", "--input", s(&out), "--set", "0,2"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "valid\n"));
    let r = idcodes(&["verify", "--problem", "md", "--input", s(&out), "--set", "0,1"]);
    assert_eq!(r.code, 2);
}

#[test]
fn output_is_stable() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    idcodes(&["generate", "--family", "perm-md", "--k", "4", "--d", "4", "--out", s(&a), "--seed", "1"]);
    idcodes(&["generate", "--family", "perm-md", "--k", "4", "--d", "4", "--out", s(&b)]);
    assert_eq!(fs::read(a.with_extension("model")).unwrap(), fs::read(b.with_extension("model")).unwrap());
}
