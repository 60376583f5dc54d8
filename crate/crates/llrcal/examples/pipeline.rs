//! The batch pipeline end to end, driven through the same entry point as
//! the `llrcal` binary: synth -> train -> apply -> eval -> compare.

use llrcal::cli::run;

fn sh(args: &[&str]) {
    let code = run(std::iter::once("llrcal").chain(args.iter().copied()));
    assert_eq!(code, 0, "command failed: {args:?}");
}

fn main() {
    let dir = std::env::temp_dir().join("llrcal_example_pipeline");
    std::fs::create_dir_all(&dir).unwrap();
    let p = |name: &str| dir.join(name).display().to_string();

    std::fs::write(
        dir.join("spec.json"),
        r#"{
  "seed": 1,
  "num_targets": 3000,
  "num_nontargets": 30000,
  "target": { "family": "student-t", "mu": 2.5, "sigma": 1.4, "nu": 5.0 },
  "nontarget": { "family": "student-t", "mu": 0.0, "sigma": 1.0, "nu": 8.0 }
}"#,
    )
    .unwrap();

    sh(&["synth", "--spec", &p("spec.json"), "--out", &p("scores.txt")]);
    for method in ["gauss-shared", "t", "pav"] {
        let model = p(&format!("model-{method}.json"));
        let llrs = p(&format!("llrs-{method}.txt"));
        sh(&["train", "--method", method, "--scores", &p("scores.txt"), "--out", &model]);
        sh(&["apply", "--model", &model, "--scores", &p("scores.txt"), "--out", &llrs]);
    }
    sh(&[
        "eval",
        "--llrs",
        &p("llrs-t.txt"),
        "--out",
        &p("curve-t.csv"),
        "--doddington",
    ]);
    sh(&[
        "compare",
        "--llrs",
        &p("llrs-gauss-shared.txt"),
        &p("llrs-t.txt"),
        &p("llrs-pav.txt"),
        "--out",
        &p("table.csv"),
    ]);

    let table = std::fs::read_to_string(dir.join("table.csv")).unwrap();
    println!("compare table header: {}", table.lines().next().unwrap());
    println!("{} grid rows", table.lines().count() - 1);
    println!("artifacts in {}", dir.display());
}
