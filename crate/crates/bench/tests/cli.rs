use std::path::PathBuf;
use std::process::{Command, Output};

use smk_bench::{run_sweep, write_csv, SourceSpec, SweepConfig, CSV_HEADER};
use smk_core::data::{build_instance, gen_er, CostModel, GeneratorSpec, ObjectiveKind, Source};
use smk_core::{AlgParams, Algorithm};

fn smk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smk"))
        .args(args)
        .env_remove("SMK_SEED")
        .output()
        .unwrap()
}

fn sample(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn without_wall_ms(csv: &str) -> Vec<String> {
    csv.lines()
        .map(|l| {
            let mut f: Vec<&str> = l.split(',').collect();
            f.remove(10);
            f.join(",")
        })
        .collect()
}

#[test]
fn golden_header() {
    assert_eq!(
        CSV_HEADER,
        "application,n,budget_fraction,budget,algorithm,seed,rep,stat,objective_value,query_count,wall_ms,epsilon"
    );
    let out = smk(&[
        "sweep",
        "--app",
        "maxcut",
        "--gen",
        "er",
        "--n",
        "30",
        "--algs",
        "la",
        "--budgets",
        "0.1",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap(), CSV_HEADER);
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn deterministic_sweep_repeats_except_wall_time() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2)
        .map(|i| dir.path().join(format!("run{i}.csv")))
        .collect();
    for p in &paths {
        let out = smk(&[
            "sweep",
            "--app",
            "maxcut",
            "--gen",
            "er",
            "--n",
            "60",
            "--algs",
            "la,dla,lar",
            "--budgets",
            "0.05,0.1",
            "--seeds",
            "3,4",
            "--reps",
            "3",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let a = std::fs::read_to_string(&paths[0]).unwrap();
    let b = std::fs::read_to_string(&paths[1]).unwrap();
    assert_eq!(without_wall_ms(&a), without_wall_ms(&b));
    // 2 budgets x (la, dla: 2 seeds; lar: 2 seeds x (3 reps + mean + std))
    assert_eq!(a.lines().count(), 1 + 2 * (2 + 2 + 2 * 5));
}

#[test]
fn sample_files_load() {
    let graph = sample("sample_graph.txt");
    let sims = sample("sample_similarity.csv");
    for (app, input) in [
        ("revenue", &graph),
        ("maxcut", &graph),
        ("summarization", &sims),
    ] {
        let out = smk(&[
            "sweep",
            "--app",
            app,
            "--input",
            input,
            "--algs",
            "la,baseline",
            "--budgets",
            "0.1",
        ]);
        assert!(
            out.status.success(),
            "{app}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 3);
    }
}

#[test]
fn validation_errors_exit_one() {
    let cases: [&[&str]; 8] = [
        &["sweep", "--app", "maxcut", "--gen", "er", "--budgets", ""],
        &[
            "sweep",
            "--app",
            "maxcut",
            "--gen",
            "er",
            "--budgets",
            "1.5",
        ],
        &[
            "sweep", "--app", "maxcut", "--gen", "er", "--algs", "fantom",
        ],
        &["sweep", "--app", "nope", "--gen", "er"],
        &["sweep", "--app", "maxcut"],
        &[
            "sweep",
            "--app",
            "maxcut",
            "--input",
            "/nonexistent/file.txt",
        ],
        &["sweep", "--app", "summarization", "--gen", "er"],
        &["verify", "--n", "30"],
    ];
    for args in cases {
        let out = smk(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(smk(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(smk(&["--help"]).status.code(), Some(0));
}

#[test]
fn seed_from_environment() {
    let run = |env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_smk"));
        cmd.args([
            "sweep",
            "--app",
            "maxcut",
            "--gen",
            "er",
            "--n",
            "40",
            "--algs",
            "lar",
            "--budgets",
            "0.1",
            "--reps",
            "1",
        ]);
        match env {
            Some(v) => cmd.env("SMK_SEED", v),
            None => cmd.env_remove("SMK_SEED"),
        };
        let out = cmd.output().unwrap();
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    let seeded = run(Some("17"));
    assert!(seeded.lines().nth(1).unwrap().contains(",lar,17,"));
    assert!(run(None).lines().nth(1).unwrap().contains(",lar,0,"));
}

#[test]
fn verify_passes_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.csv");
    let out = smk(&[
        "verify",
        "--instances",
        "15",
        "--n",
        "8",
        "--seeds",
        "0..10",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let text = std::fs::read_to_string(report).unwrap();
    assert_eq!(text.lines().count(), 1 + 15 * 4);
}

#[test]
fn dla_dominates_la_in_emitted_csv() {
    let mut config = SweepConfig::new(
        ObjectiveKind::MaxCut,
        SourceSpec::Er {
            n: 200,
            edge_prob: 0.2,
            seed: 1,
        },
    );
    config.algorithms = vec![
        Algorithm::La,
        Algorithm::Lar,
        Algorithm::Dla,
        Algorithm::Rla,
        Algorithm::Baseline,
    ];
    config.repetitions = 3;
    let mut buf = Vec::new();
    write_csv(&run_sweep(&config).unwrap(), &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let value = |alg: &str, fraction: &str| -> f64 {
        text.lines()
            .map(|l| l.split(',').collect::<Vec<_>>())
            .find(|f| f[4] == alg && f[2] == fraction && f[7] == "run")
            .unwrap()[8]
            .parse()
            .unwrap()
    };
    for fraction in ["0.02", "0.04", "0.06", "0.08", "0.1", "0.12"] {
        assert!(
            value("dla", fraction) >= value("la", fraction),
            "{fraction}"
        );
    }
}

#[test]
fn reported_queries_match_direct_runs() {
    let mut config = SweepConfig::new(
        ObjectiveKind::MaxCut,
        SourceSpec::Er {
            n: 80,
            edge_prob: 0.2,
            seed: 4,
        },
    );
    config.algorithms = vec![Algorithm::La, Algorithm::Dla, Algorithm::Baseline];
    config.budget_fractions = vec![0.1];
    let rows = run_sweep(&config).unwrap();

    let source = Source::Graph(std::sync::Arc::new(
        gen_er(&GeneratorSpec::er(80, 0.2, 4)).unwrap(),
    ));
    let inst = build_instance(
        ObjectiveKind::MaxCut,
        &source,
        &CostModel::Uniform01 { seed: 4 },
        0.1,
    )
    .unwrap();
    let direct: u64 = config
        .algorithms
        .iter()
        .map(|a| a.run(&inst, &AlgParams::default()).unwrap().query_count)
        .sum();
    let swept: f64 = rows.iter().map(|r| r.query_count).sum();
    assert_eq!(swept, direct as f64);
}
