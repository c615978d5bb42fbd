use std::path::PathBuf;
use std::process::Command;

use hqmm::{HmmModel, Process};
use hqmm_cli::bundled;
use hqmm_cli::io::{parse_model, serialize_model, Model};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hqmm").chain(args.iter().copied());
    let code = hqmm_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn models_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("models")
}

fn model_path(name: &str) -> String {
    models_dir().join(name).to_string_lossy().into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hqmm-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn every_bundled_model_validates() {
    let on_disk: Vec<_> = std::fs::read_dir(models_dir()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(on_disk.len(), bundled::MODELS.len());
    for name in bundled::names() {
        let (code, out, err) = run(&["validate", &model_path(name)]);
        assert_eq!(code, 0, "{name}: {err}");
        assert!(out.starts_with("ok: "), "{out}");
    }
}

#[test]
fn bundled_files_round_trip() {
    for name in bundled::names() {
        let f = bundled::load(name).unwrap();
        let again = parse_model(&serialize_model(&f)).unwrap();
        assert_eq!(again, f, "{name}");
    }
}

#[test]
fn parsed_models_equal_the_reference_matrices() {
    let Model::Hmm(even) = bundled::load("even_process.hmm").unwrap().model else { panic!() };
    let reference = HmmModel::from_real(&[&[&[0.5, 0.0], &[0.0, 0.0]], &[&[0.0, 1.0], &[0.5, 0.0]]]).unwrap();
    assert_eq!(even.transitions(), reference.transitions());

    let Model::Hmm(four) = bundled::load("four_state.hmm").unwrap().model else { panic!() };
    let (h, q) = (0.5, 0.25);
    let z = [0.0; 4];
    let reference = HmmModel::from_real(&[
        &[&[h, 0.0, q, q], &z, &z, &z],
        &[&z, &[0.0, h, q, q], &z, &z],
        &[&z, &z, &[q, q, h, 0.0], &z],
        &[&z, &z, &z, &[q, q, 0.0, h]],
    ])
    .unwrap();
    assert_eq!(four.transitions(), reference.transitions());
}

#[test]
fn forbidden_word() {
    let (code, out, _) = run(&["wordprob", &model_path("even_process.hmm"), "010"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0.000000000000\n");
    let (_, out, _) = run(&["wordprob", "even_process.hmm", "11"]);
    assert_eq!(out, "0.500000000000\n");
}

#[test]
fn initial_state_specs() {
    let file = model_path("even_process.hmm");
    let (_, out, _) = run(&["wordprob", &file, "0", "--initial", "basis:1"]);
    assert_eq!(out, "0.000000000000\n");
    let (_, out, _) = run(&["wordprob", &file, "0", "--initial", "diag:0.5,0.5"]);
    assert_eq!(out, "0.250000000000\n");
    let (code, _, err) = run(&["wordprob", &file, "0", "--initial", "plus"]);
    assert_eq!(code, 2, "{err}");
    let (_, out, _) = run(&["wordprob", "cluster_pi8_0.hqmm", "0", "--initial", "plus"]);
    assert_eq!(out, "0.500000000000\n");
    let (code, _, _) = run(&["wordprob", "cluster_pi8_0.hqmm", "0", "--initial", "basis:2"]);
    assert_eq!(code, 2);
}

#[test]
fn hankel_block_and_rank() {
    let (code, out, _) = run(&["hankel", &model_path("four_state.hmm")]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[1], "0.250000000000 0.125000000000 0.000000000000 0.062500000000 0.062500000000");
    assert_eq!(lines[5], "rank = 3");

    let (_, out, _) = run(&["hankel", "even_process.hmm", "--rows", "upto:2", "--cols", "-;1;11"]);
    assert_eq!(out.lines().count(), 8);
    assert_eq!(out.lines().last(), Some("rank = 2"));
    let (code, _, _) = run(&["hankel", "even_process.hmm", "--rows", "0;7"]);
    assert_eq!(code, 2);
}

#[test]
fn cluster_commands() {
    let (_, out, _) = run(&["cluster", "--phi", "0.7853981634", "--xi", "0", "h3"]);
    assert_eq!(out, "3.000000000000\n");
    let (_, out, _) = run(&["cluster", "--phi", "0.3", "--xi", "-1.0", "dist", "-n", "2"]);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.ends_with(" 0.250000000000")), "{out}");
    let (_, out, _) = run(&["cluster", "--phi", "0", "--xi", "0", "kraus"]);
    assert_eq!(
        out,
        "K_0:\n0.707106781187 0.000000000000\n0.707106781187 0.000000000000\n\
         K_1:\n0.000000000000 -0.707106781187\n0.000000000000 0.707106781187\n"
    );
    let (code, _, _) = run(&["cluster", "--phi", "nan", "--xi", "0", "h3"]);
    assert_eq!(code, 2);
}

#[test]
fn distribution_and_entropy() {
    let (_, out, _) = run(&["dist", "even_process.hmm", "-n", "2"]);
    assert_eq!(out, "00 0.166666666667\n01 0.166666666667\n10 0.166666666667\n11 0.500000000000\n");
    let csv = scratch("even.csv");
    let (code, _, _) = run(&["dist", "even_process.hmm", "-n", "3", "--csv", csv.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("word,probability\n000,"));
    assert!(text.contains("\n010,0.000000000000\n"));
    assert!(!text.contains('\r'));
    assert_eq!(text.lines().count(), 9);

    let (_, out, _) = run(&["entropy", "cluster_pi4_0.hqmm", "-n", "3"]);
    assert_eq!(out, "3.000000000000\n");
}

#[test]
fn steady_states() {
    let (_, out, _) = run(&["steady", "even_process.hmm"]);
    assert_eq!(out, "unique: true\n0.666666666667\n0.333333333333\n");
    let (_, out, _) = run(&["steady", "cluster.mps"]);
    assert_eq!(out, "unique: true\n0.500000000000 0.000000000000\n0.000000000000 0.500000000000\n");
}

#[test]
fn conversion_round_trip() {
    let src = bundled::load("even_process.hmm").unwrap();
    let Model::Hmm(classical) = &src.model else { panic!() };
    for (target, file) in [("hqmm-embed", "embed.hqmm"), ("hqmm-pure", "pure.hqmm")] {
        let out_path = scratch(file);
        let p = out_path.to_str().unwrap();
        let (code, _, err) = run(&["convert", &model_path("even_process.hmm"), "--to", target, "-o", p]);
        assert_eq!(code, 0, "{err}");
        let (code, _, _) = run(&["validate", p]);
        assert_eq!(code, 0);
        for w in classical.alphabet().words_up_to(4) {
            let word = classical.alphabet().format_word(&w);
            let (code, out, _) = run(&["wordprob", p, &word]);
            assert_eq!(code, 0);
            let got: f64 = out.trim().parse().unwrap();
            let want = classical.raw_word_weight(&w, &classical.default_state().unwrap()).unwrap();
            assert!((got - want).abs() < 1e-12, "{target} {word}: {got} vs {want}");
        }
    }
    let (code, _, err) = run(&["convert", "four_state.hmm", "--to", "hqmm-pure", "-o", scratch("x").to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("not reversible"), "{err}");
    let (code, _, _) = run(&["convert", "two_state.hqmm", "--to", "hqmm-embed", "-o", scratch("y").to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn invalid_models_exit_with_one() {
    let text = bundled::text("even_process.hmm").unwrap().replace("[0.5, 0],", "[0.7, 0],");
    let path = scratch("bad.hmm");
    std::fs::write(&path, text).unwrap();
    let (code, _, err) = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("column 0"), "{err}");

    let (code, _, err) = run(&["validate", "no/such/file.hmm"]);
    assert_eq!(code, 1);
    assert!(err.contains("cannot read"), "{err}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["dist", "even_process.hmm"]).0, 2);
    assert_eq!(run(&["convert", "even_process.hmm", "--to", "classical", "-o", "x"]).0, 2);
    assert_eq!(run(&["wordprob", "even_process.hmm", "0a0"]).0, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("scan-entropy"));
}

#[test]
fn sampling_is_reproducible() {
    let (_, a, _) = run(&["sample", "four_state.hmm", "-n", "64", "--seed", "7"]);
    let (_, b, _) = run(&["sample", "four_state.hmm", "-n", "64", "--seed", "7"]);
    assert_eq!(a, b);
    assert_eq!(a.trim().len(), 64);
    let (_, e, _) = run(&["sample", "even_process.hmm", "-n", "0", "--seed", "1"]);
    assert_eq!(e, "\n");
}

#[test]
fn scan_entropy_csv() {
    let path = scratch("scan.csv");
    let (code, out, _) = run(&["scan-entropy", "--phi-steps", "5", "--xi-steps", "3", "-o", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("max H3 = 3.000000000000"), "{out}");
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("phi,xi,H3"));
    assert_eq!(lines.count(), 15);
    assert_eq!(run(&["scan-entropy", "--phi-steps", "0", "--xi-steps", "3", "-o", "x"]).0, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hqmm");
    let ok = Command::new(bin).args(["wordprob", "even_process.hmm", "010"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "0.000000000000\n");
    let usage = Command::new(bin).arg("frobnicate").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
