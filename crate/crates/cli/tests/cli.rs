use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hopf_galois::families::{hnd, HndParams};
use hopf_galois::hopf::FDAlgebra;
use hopf_galois::modcat::{trivial_module_structure, BraidedHopf};
use hopf_galois::{PrimeField, Rationals};
use hopf_galois_cli::files::{prime_field, AlgebraFile, Codec, FieldJson};
use serde_json::Value;
use tempfile::TempDir;

fn hopfcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn family(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let out = path(dir, name);
    let mut all = vec!["family"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--emit", s(&out)]);
    let o = hopfcalc(&all);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    out
}

fn f13_codec() -> Codec<PrimeField> {
    let h = FieldJson::Prime {
        p: 13,
        omega_order: None,
    };
    Codec::new(prime_field(&h).unwrap(), h)
}

#[test]
fn emit_load_emit_is_bit_exact() {
    let dir = TempDir::new().unwrap();
    let cases = [
        family(&dir, "h.json", &["--n", "2", "--m", "3", "--d", "3,3", "--s", "1"]),
        family(&dir, "b.json", &["--n", "2", "--m", "3", "--d", "3,3", "--s", "3", "--line"]),
    ];
    for p in &cases {
        let text = std::fs::read_to_string(p).unwrap();
        let file = AlgebraFile::from_json(&text).unwrap();
        let codec = Codec::new(prime_field(&file.field).unwrap(), file.field.clone());
        let again = if file.ambient.is_some() {
            let mut f2 = codec.emit_braided(&file.name, &codec.braided_hopf(&file).unwrap());
            f2.family = file.family.clone();
            f2
        } else {
            let mut f2 = codec.emit_hopf(&file.name, &codec.hopf(&file).unwrap());
            f2.rmatrix = file.rmatrix.clone();
            f2.family = file.family.clone();
            f2
        };
        assert_eq!(again.to_json(), text);
    }
    let c = family(&dir, "c.json", &["--n", "2", "--m", "3", "--d", "5,1", "--s", "3", "--object", "0:4"]);
    let text = std::fs::read_to_string(&c).unwrap();
    let file = AlgebraFile::from_json(&text).unwrap();
    let codec = Codec::new(prime_field(&file.field).unwrap(), file.field.clone());
    let over = file.over.as_deref().unwrap();
    let b = codec.braided_hopf(over).unwrap();
    let mut again = codec.emit_comodule_algebra(&file.name, &codec.comodule_algebra(&file, &b).unwrap(), over);
    again.invariant = file.invariant.clone();
    assert_eq!(again.to_json(), text);
}

#[test]
fn rational_file_round_trips() {
    let h = FieldJson::Rational;
    let codec = Codec::new(Rationals, h);
    let q = Rationals;
    let a = FDAlgebra::matrix_algebra(&q, 2);
    let text = codec.emit_algebra("End(K^2)", &a).to_json();
    let back = codec.algebra(&AlgebraFile::from_json(&text).unwrap()).unwrap();
    assert_eq!(back, a);
    assert_eq!(codec.emit_algebra("End(K^2)", &back).to_json(), text);
}

#[test]
fn verify_hopf_report_shape() {
    let dir = TempDir::new().unwrap();
    let h = family(&dir, "h4.json", &["--n", "1", "--m", "1", "--d", "1"]);
    let o = hopfcalc(&["verify", "hopf", s(&h), "--seed", "7"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["check"], "hopf");
    assert_eq!(r["pass"], true);
    assert_eq!(r["seed"], 7);
    assert_eq!(r["versions"]["format"], 1);
    assert!(r["details"].as_array().unwrap().iter().all(|d| d["pass"] == true));
    assert_eq!(hopfcalc(&["verify", "hopf", s(&h), "--seed", "7"]).stdout, o.stdout);
}

#[test]
fn trivial_r_matrix_on_sweedler_fails() {
    let dir = TempDir::new().unwrap();
    let h = family(&dir, "h4.json", &["--n", "1", "--m", "1", "--d", "1", "--s", "1"]);
    assert_eq!(code(&hopfcalc(&["verify", "qt", s(&h)])), 0);
    let mut file = AlgebraFile::read(&h).unwrap();
    file.rmatrix = Some(vec![vec![Value::from(0u64), Value::from(0u64), Value::from("1")]]);
    let bad = path(&dir, "bad.json");
    file.write(&bad).unwrap();
    let o = hopfcalc(&["verify", "qt", s(&bad)]);
    assert_eq!(code(&o), 1);
    let r = json(&o);
    assert_eq!(r["pass"], false);
    assert!(r["witness"].is_object());
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let junk = path(&dir, "junk.json");
    std::fs::write(&junk, "{\"field\": ").unwrap();
    assert_eq!(code(&hopfcalc(&["verify", "hopf", s(&junk)])), 2);
    std::fs::write(&junk, r#"{"field":{"kind":"prime","p":12},"name":"x","dim":1,"mult":[],"unit":[]}"#).unwrap();
    assert_eq!(code(&hopfcalc(&["verify", "algebra", s(&junk)])), 2);
    std::fs::write(&junk, r#"{"field":{"kind":"rational"},"name":"x","dim":1,"mult":[[0,0,3,"1"]],"unit":[]}"#).unwrap();
    assert_eq!(code(&hopfcalc(&["verify", "algebra", s(&junk)])), 2);
    assert_eq!(code(&hopfcalc(&["verify", "hopf", s(&path(&dir, "missing.json"))])), 2);
    assert_eq!(code(&hopfcalc(&["family", "--n", "2", "--m", "3", "--d", "4,1"])), 2);
    assert_eq!(code(&hopfcalc(&["family", "--n", "1", "--m", "3", "--d", "3", "--s", "0", "--line"])), 2);
}

#[test]
fn azumaya_verdicts() {
    let dir = TempDir::new().unwrap();
    let codec = Codec::new(Rationals, FieldJson::Rational);
    let e = path(&dir, "end.json");
    codec.emit_algebra("End(K^2)", &FDAlgebra::matrix_algebra(&Rationals, 2)).write(&e).unwrap();
    assert_eq!(code(&hopfcalc(&["verify", "azumaya", s(&e)])), 0);
    let kk = path(&dir, "kk.json");
    std::fs::write(
        &kk,
        r#"{"field":{"kind":"rational"},"name":"KxK","dim":2,"mult":[[0,0,0,"1"],[1,1,1,"1"]],"unit":[[0,"1"],[1,"1"]]}"#,
    )
    .unwrap();
    assert_eq!(code(&hopfcalc(&["verify", "algebra", s(&kk)])), 0);
    assert_eq!(code(&hopfcalc(&["verify", "azumaya", s(&kk)])), 1);
}

#[test]
fn invariants_through_the_cli() {
    let dir = TempDir::new().unwrap();
    let base = ["--n", "2", "--m", "3", "--d", "5,1", "--s", "3"];
    let mk = |name: &str, obj: &str| {
        let mut a = base.to_vec();
        a.extend_from_slice(&["--object", obj]);
        family(&dir, name, &a)
    };
    let (c2, c7) = (mk("c2.json", "0:2"), mk("c7.json", "0:7"));
    assert_eq!(code(&hopfcalc(&["verify", "galois", s(&c2)])), 0);
    let o = hopfcalc(&["galois", "invariant", s(&c2)]);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), r#"{"a":"0","alpha":["2"]}"#);
    let st = path(&dir, "st.json");
    assert_eq!(code(&hopfcalc(&["galois", "cotensor", s(&c2), s(&c7), "--emit", s(&st)])), 0);
    let o = hopfcalc(&["galois", "invariant", s(&st)]);
    assert_eq!(json(&o), serde_json::json!({"a": "0", "alpha": ["9"]}));
    let op = path(&dir, "op.json");
    assert_eq!(code(&hopfcalc(&["galois", "opposite", s(&c2), "--emit", s(&op)])), 0);
    assert_eq!(json(&hopfcalc(&["galois", "invariant", s(&op)])), serde_json::json!({"a": "0", "alpha": ["11"]}));
    let nb = hopfcalc(&["galois", "normal-basis", s(&c2), "--seed", "3"]);
    assert_eq!(code(&nb), 1);
    assert_eq!(json(&nb)["seed"], 3);
}

#[test]
fn normal_basis_and_roundtrip() {
    let dir = TempDir::new().unwrap();
    let c = family(&dir, "c.json", &["--n", "2", "--m", "3", "--d", "3,3", "--s", "3", "--object", "4:0"]);
    let o = hopfcalc(&["galois", "normal-basis", s(&c)]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["witness"].as_array().unwrap().len(), 2);
    let c = family(&dir, "c1.json", &["--n", "1", "--m", "1", "--d", "1", "--s", "1", "--object", "5"]);
    let o = hopfcalc(&["galois", "roundtrip", s(&c)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
}

#[test]
fn twists_of_the_line() {
    let dir = TempDir::new().unwrap();
    let b = family(&dir, "b.json", &["--n", "1", "--m", "3", "--d", "3", "--s", "3", "--line"]);
    let t = path(&dir, "t.json");
    assert_eq!(code(&hopfcalc(&["galois", "twist", s(&b), "--sigma", "1,0,0,2", "--emit", s(&t)])), 0);
    assert_eq!(json(&hopfcalc(&["galois", "invariant", s(&t)])), serde_json::json!({"a": "2", "alpha": []}));
    let b1 = family(&dir, "b1.json", &["--n", "1", "--m", "3", "--d", "1", "--s", "3", "--line"]);
    let o = hopfcalc(&["galois", "twist", s(&b1), "--sigma", "1,0,0,1"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["check"], "cocycle");
}

#[test]
fn upsilon_of_a_trivial_action() {
    let dir = TempDir::new().unwrap();
    let codec = f13_codec();
    let f = *codec.field();
    let hp = hnd(&HndParams::new(1, 1, vec![1]), &f).unwrap();
    let hfile = codec.emit_hopf("H4", &hp);
    let h = BraidedHopf::ordinary(hp);
    let a = trivial_module_structure(&h, &FDAlgebra::matrix_algebra(&f, 2), &h.cat().trivial_object(4));
    let ap = path(&dir, "a.json");
    codec.emit_module_algebra("End(K^2)", &a, &hfile).write(&ap).unwrap();
    assert_eq!(code(&hopfcalc(&["verify", "module-algebra", s(&ap)])), 0);
    let up = path(&dir, "up.json");
    assert_eq!(code(&hopfcalc(&["galois", "upsilon", s(&ap), "--emit", s(&up)])), 0);
    assert_eq!(code(&hopfcalc(&["verify", "galois", s(&up)])), 0);
    assert_eq!(code(&hopfcalc(&["galois", "normal-basis", s(&up)])), 0);
}
