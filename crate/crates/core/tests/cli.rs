mod common;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::*;
use inversion::bfcore::{decrease, write_functions, NamedFunction};
use inversion::circuit::parse_circuit;
use inversion::{Circuit, FunctionSystem};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_inversion"))
        .args(args)
        .output()
        .expect("run binary")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in {text:?}"))
        .to_string()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn g(name: &str) -> String {
    golden(name).to_str().unwrap().to_string()
}

#[test]
fn decrease_of_the_worked_examples() {
    for funcs in ["f1.funcs", "f2.funcs"] {
        let o = run(&["decrease", "--machine", "--funcs", &g(funcs)]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        assert_eq!(field(&stdout(&o), "d"), "2");
        assert_eq!(field(&stdout(&o), "markov"), "2");
    }
    let o = run(&["decrease", "--machine", "--funcs", &g("f1.funcs")]);
    assert_eq!(field(&stdout(&o), "witness"), "000,001,011,111");
}

#[test]
fn human_output_brackets_the_chain() {
    let o = run(&["decrease", "--funcs", &g("f1.funcs")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("witness=(000,001,011,111)"));
}

#[test]
fn malformed_and_oversized_inputs() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.funcs", "f 2 0xZZ\n");
    assert_eq!(code(&run(&["decrease", "--funcs", &bad])), 3);
    let short = write(&dir, "short.funcs", "f 3 0x6\n");
    assert_eq!(code(&run(&["decrease", "--funcs", &short])), 3);
    let missing = dir.path().join("nope").to_str().unwrap().to_string();
    assert_eq!(code(&run(&["decrease", "--funcs", &missing])), 3);
    assert_eq!(code(&run(&["decrease"])), 3);
    assert_eq!(code(&run(&["frobnicate"])), 3);

    let wide = write(&dir, "wide.funcs", &format!("f 5 0x{}\n", "1".repeat(8)));
    let o = run(&["decrease", "--arity-cap", "4", "--funcs", &wide]);
    assert_eq!(code(&o), 4, "{}", stderr(&o));
    let o = run(&["exact", "--funcs", &wide]);
    assert_eq!(code(&o), 4, "{}", stderr(&o));
}

#[test]
fn monotone_basis_is_rejected() {
    let dir = TempDir::new().unwrap();
    let and = write(&dir, "and.basis", "and 2 0x8\n");
    let o = run(&["bounds", "--funcs", &g("f1.funcs"), "--basis", &and]);
    assert_eq!(code(&o), 3);
}

#[test]
fn synth_then_verify() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("c.circuit");
    let out = out.to_str().unwrap();
    let o = run(&[
        "synth",
        "--machine",
        "--funcs",
        &g("f1.funcs"),
        "--basis",
        &g("b2.basis"),
        "--out",
        out,
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(field(&stdout(&o), "weight"), "2");
    assert_eq!(field(&stdout(&o), "verified"), "true");

    let o = run(&[
        "verify",
        "--circuit",
        out,
        "--funcs",
        &g("f1.funcs"),
        "--basis",
        &g("b2.basis"),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(field(&stdout(&o), "status"), "ok");
}

#[test]
fn synth_to_stdout_keeps_records_on_stderr() {
    let o = run(&["synth", "--trace", "--funcs", &g("f2.funcs")]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("# synthesis trace: 2 level(s)"));
    let c = parse_circuit(&text).unwrap();
    assert_eq!(c.inversion_weight(), 2);
    assert_eq!(field(&stderr(&o), "weight"), "2");
}

#[test]
fn verify_reports_the_first_mismatch() {
    let dir = TempDir::new().unwrap();
    // the one-gate F1 circuit checked against the constant-true function
    let one = write(&dir, "one.funcs", "t 3 0xff\n");
    let o = run(&[
        "verify",
        "--machine",
        "--circuit",
        &g("f1_b2.circuit"),
        "--funcs",
        &one,
        "--basis",
        &g("b2.basis"),
    ]);
    assert_eq!(code(&o), 2);
    assert_eq!(field(&stdout(&o), "status"), "mismatch");
    assert_eq!(field(&stdout(&o), "output"), "1");
    assert_eq!(field(&stdout(&o), "input"), "100");

    // shapes that do not line up are a semantic failure too
    let o = run(&[
        "verify",
        "--circuit",
        &g("f1_b2.circuit"),
        "--funcs",
        &g("f2.funcs"),
        "--basis",
        &g("b2.basis"),
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn golden_witnesses_verify() {
    for (circuit, funcs, weight) in [
        ("f1_b2.circuit", "f1.funcs", "1"),
        ("f2_b2.circuit", "f2.funcs", "2"),
    ] {
        let o = run(&[
            "verify",
            "--circuit",
            &g(circuit),
            "--funcs",
            &g(funcs),
            "--basis",
            &g("b2.basis"),
        ]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        assert_eq!(field(&stdout(&o), "weight"), weight);
    }
}

#[test]
fn golden_circuit_text_is_stable() {
    let b = b2();
    let mut c = Circuit::new(3);
    let y = c.add_basis(0, (0..3).map(|i| c.input(i)).collect());
    c.set_outputs(vec![y]);
    assert_eq!(
        c.realized_system(&b).unwrap(),
        FunctionSystem::single(parity_plus_one())
    );
    assert_eq!(
        inversion::circuit::write_circuit(&c),
        fs::read_to_string(golden("f1_b2.circuit")).unwrap()
    );
}

#[test]
fn bounds_records() {
    let o = run(&[
        "bounds",
        "--machine",
        "--funcs",
        &g("f2.funcs"),
        "--basis",
        &g("b2.basis"),
    ]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert_eq!(field(&s, "d"), "2");
    assert_eq!(field(&s, "r"), "2");
    assert_eq!(field(&s, "lower"), "0");
    assert_eq!(field(&s, "upper"), "2");
    let c: f64 = field(&s, "c").parse().unwrap();
    assert!((c - (5f64.log2() + 1.0)).abs() < 1e-12);
}

#[test]
fn exact_with_witness() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("w.circuit");
    let out = out.to_str().unwrap();
    let o = run(&[
        "exact",
        "--machine",
        "--witness",
        "--funcs",
        &g("f2.funcs"),
        "--basis",
        &g("b2.basis"),
        "--out",
        out,
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(field(&stdout(&o), "exact"), "2");
    let o = run(&[
        "verify",
        "--circuit",
        out,
        "--funcs",
        &g("f2.funcs"),
        "--basis",
        &g("b2.basis"),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(field(&stdout(&o), "weight"), "2");
}

#[test]
fn exact_below_the_needed_depth() {
    let o = run(&[
        "exact",
        "--machine",
        "--t-max",
        "1",
        "--funcs",
        &g("f1.funcs"),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(field(&stdout(&o), "exact"), "above");
    assert_eq!(field(&stdout(&o), "t_max"), "1");
}

#[test]
fn split_and_lemma_check() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("s.circuit");
    let out = out.to_str().unwrap();
    let o = run(&[
        "split",
        "--machine",
        "--circuit",
        &g("f2_b2.circuit"),
        "--basis",
        &g("b2.basis"),
        "--out",
        out,
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let s = stdout(&o);
    assert_eq!(field(&s, "removed"), "g0");
    assert_eq!(field(&s, "h"), "0x5");
    assert_eq!(field(&s, "weight_before"), "2");
    assert_eq!(field(&s, "weight_after"), "1");
    assert_eq!(field(&s, "composition"), "ok");
    let reduced = parse_circuit(&fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(reduced.n_inputs(), 3);

    let o = run(&[
        "check-lemma1",
        "--machine",
        "--circuit",
        &g("f1_b2.circuit"),
        "--basis",
        &g("b2.basis"),
    ]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert_eq!(field(&s, "d"), "2");
    assert_eq!(field(&s, "bound"), "5");
    assert_eq!(field(&s, "holds"), "true");

    // nothing to split in a monotone circuit
    let mono = write(
        &dir,
        "m.circuit",
        "inputs 2\ngate a mono 2 0x8 x1 x2\noutputs a\n",
    );
    assert_eq!(code(&run(&["split", "--circuit", &mono])), 2);
}

#[test]
fn malformed_circuit_exits_3() {
    let dir = TempDir::new().unwrap();
    let bad = write(
        &dir,
        "b.circuit",
        "inputs 2\ngate a mono 2 0x8 x1 nowhere\noutputs a\n",
    );
    let o = run(&["check-lemma1", "--circuit", &bad]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn random_systems_match_the_library() {
    let dir = TempDir::new().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..5 {
        let f = random_system(&mut rng, 3, 2);
        let named: Vec<NamedFunction> = f
            .members()
            .iter()
            .enumerate()
            .map(|(j, t)| NamedFunction {
                name: format!("f{j}"),
                table: t.clone(),
            })
            .collect();
        let path = write(&dir, &format!("r{i}.funcs"), &write_functions(&named));
        let o = run(&["decrease", "--machine", "--funcs", &path]);
        assert_eq!(code(&o), 0);
        let d = decrease(&f).unwrap();
        assert_eq!(field(&stdout(&o), "d"), d.value.to_string());
        assert_eq!(
            field(&stdout(&o), "witness"),
            d.witness.tuple_strings().join(",")
        );
    }
}
