use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fairpath::format::parse_graph;
use tempfile::TempDir;

fn fairpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fairpath"))
        .args(args)
        .env_remove("FAIRPATH_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn generated(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let out = fairpath(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    write(dir, name, &stdout(&out))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn figure_one_balance_with_dp_and_fpt() {
    let dir = TempDir::new().unwrap();
    let fig = generated(&dir, "fig1.fp", &["generate", "figure-one"]);
    for solver in ["dp", "fpt"] {
        let out = fairpath(&["solve", s(&fig), "--variant", "balance", "--solver", solver]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        assert!(text.starts_with("result yes\n"), "{text}");
        assert!(text.contains("\ncounts 5 5\n"));
        assert!(text.contains("\nlength 9\n"));
        assert!(text.contains(&format!("meta solver={solver}")));
    }
}

#[test]
fn unreachable_target_exits_one() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.fp", "p fairpath 3 1 1\nv 1 1\nv 2 1\nv 3 1\na 1 2 1\n");
    let out = fairpath(&["solve", s(&g), "--source", "1", "--target", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("result no\n"));
    assert!(text.contains("\nreason unreachable\n"));
}

#[test]
fn errors_exit_two_with_line_numbers() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.fp", "p fairpath 2 1 1\nv 1 1\nv 2 7\na 1 2 1\n");
    let out = fairpath(&["solve", s(&bad), "--source", "1", "--target", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let fig = generated(&dir, "fig1.fp", &["generate", "figure-one"]);
    let out = fairpath(&["solve", s(&fig), "--solver", "dp", "--ell", "11"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dist(s, t)"));

    let out = fairpath(&["solve", s(&fig), "--solver", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn random_generation_is_byte_stable() {
    let a = fairpath(&["generate", "random", "--seed", "7"]);
    let b = fairpath(&["generate", "random", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = fairpath(&["generate", "random", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn seed_falls_back_to_environment() {
    let dir = TempDir::new().unwrap();
    let fig = generated(&dir, "fig1.fp", &["generate", "figure-one"]);
    let out = Command::new(env!("CARGO_BIN_EXE_fairpath"))
        .args(["solve", s(&fig), "--solver", "fpt", "--no-time"])
        .env("FAIRPATH_SEED", "42")
        .output()
        .unwrap();
    assert!(stdout(&out).contains("seed=42"));
}

#[test]
fn solve_output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = generated(
        &dir,
        "r.fp",
        &["generate", "random", "--seed", "3", "--n", "12", "--c", "3"],
    );
    let run = || {
        fairpath(&[
            "solve",
            s(&g),
            "--solver",
            "fpt",
            "--ell",
            "12",
            "--seed",
            "5",
            "--no-time",
        ])
        .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn reductions_of_figure_two() {
    let dir = TempDir::new().unwrap();
    let mcc = generated(&dir, "fig2.mcc", &["generate", "figure-two"]);

    let w1 = fairpath(&["generate", "reduce-w1", s(&mcc)]);
    assert!(w1.status.success());
    let parsed = parse_graph(&stdout(&w1)).unwrap();
    assert_eq!(parsed.graph.num_colors(), 13);
    let w1_file = write(&dir, "w1.fp", &stdout(&w1));
    let out = fairpath(&["solve", s(&w1_file), "--variant", "balance", "--solver", "dp"]);
    assert_eq!(out.status.code(), Some(0));

    let eth = fairpath(&["generate", "reduce-eth", s(&mcc)]);
    assert!(eth.status.success());
    let parsed = parse_graph(&stdout(&eth)).unwrap();
    assert_eq!(parsed.graph.num_colors(), 7);
    let eth_file = write(&dir, "eth.fp", &stdout(&eth));
    let out = fairpath(&["solve", s(&eth_file), "--variant", "balance", "--solver", "dp"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\ncounts 8 8 8 8 8 8 8\n"));
}

#[test]
fn reduce_eth_rejects_small_parameters() {
    let dir = TempDir::new().unwrap();
    let mcc = generated(&dir, "k2.mcc", &["generate", "clique", "--k", "2", "--eta", "4"]);
    let out = fairpath(&["generate", "reduce-eth", s(&mcc)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("reduction needs"));
}

#[test]
fn auto_matches_forced_solvers_on_random_instances() {
    let dir = TempDir::new().unwrap();
    for seed in 0..100 {
        let seed = seed.to_string();
        let g = generated(
            &dir,
            "r.fp",
            &[
                "generate",
                "random",
                "--seed",
                &seed,
                "--n",
                "9",
                "--c",
                "2",
                "--max-weight",
                "2",
            ],
        );
        // the file's hint sets ell to the planted path length
        let auto = fairpath(&["solve", s(&g), "--no-time"]);
        let code = auto.status.code();
        assert!(matches!(code, Some(0 | 1)), "{}", String::from_utf8_lossy(&auto.stderr));
        let text = stdout(&auto);
        let forced = if text.contains("solver=dp") { "dp" } else { "fpt" };
        let other = fairpath(&["solve", s(&g), "--solver", forced, "--no-time"]);
        assert_eq!(other.status.code(), code, "seed {seed}");
        let oracle = fairpath(&["solve", s(&g), "--solver", "oracle", "--no-time"]);
        assert_eq!(oracle.status.code(), code, "seed {seed}");
    }
}
