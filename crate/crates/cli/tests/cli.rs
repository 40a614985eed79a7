use std::path::Path;
use std::process::{Command, Output};

fn chibound(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chibound"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn grotzsch_needs_four_colors() {
    let dir = tempfile::tempdir().unwrap();
    let gen = chibound(&["gen", "--family", "grotzsch", "-o", "g.g6"], dir.path());
    assert!(gen.status.success());
    let chi = chibound(&["chi", "g.g6"], dir.path());
    assert_eq!(chi.status.code(), Some(0));
    assert_eq!(stdout(&chi).trim(), "4");
    let omega = chibound(&["omega", "g.g6"], dir.path());
    assert_eq!(stdout(&omega).trim(), "2");
}

#[test]
fn schlafli_complement_is_k4_free() {
    let dir = tempfile::tempdir().unwrap();
    chibound(&["gen", "--family", "k4", "-o", "schlafli.g6"], dir.path());
    let out = chibound(&["member", "--class", "k4free", "schlafli.g6"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "member");
}

#[test]
fn coloring_c5_as_c5_free_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("c5.col"),
        "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n",
    )
    .unwrap();
    let out = chibound(&["color", "--class", "c5free", "c5.col"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("pattern=C5"), "{text}");
    assert!(text.contains("embedding=0->0"), "{text}");
}

#[test]
fn color_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    chibound(&["gen", "--named", "grotzsch", "-o", "g.col"], dir.path());
    let out = chibound(
        &[
            "color",
            "--class",
            "kitefree",
            "g.col",
            "--audit-out",
            "audit.txt",
            "--coloring-out",
            "c.txt",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("palette=4"));
    let audit = std::fs::read_to_string(dir.path().join("audit.txt")).unwrap();
    assert!(audit.lines().all(|l| l.contains("verdict=holds")));
    let ok = chibound(&["verify", "--coloring", "c.txt", "g.col"], dir.path());
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok).trim(), "proper palette=4");

    std::fs::write(dir.path().join("bad.txt"), "0\n".repeat(11)).unwrap();
    let bad = chibound(&["verify", "--coloring", "bad.txt", "g.col"], dir.path());
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).starts_with("conflict"));
}

#[test]
fn detect_reports_presence_and_absence() {
    let dir = tempfile::tempdir().unwrap();
    chibound(&["gen", "--named", "kite", "-o", "kite.g6"], dir.path());
    let found = chibound(&["detect", "--pattern", "diamond", "kite.g6"], dir.path());
    assert_eq!(found.status.code(), Some(0));
    assert!(stdout(&found).starts_with("found pattern=diamond"));
    let absent = chibound(&["detect", "--pattern", "K4", "kite.g6"], dir.path());
    assert_eq!(absent.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(chibound(&["chi"], dir.path()).status.code(), Some(2));
    assert_eq!(chibound(&["chi", "missing.g6"], dir.path()).status.code(), Some(2));
    assert_eq!(
        chibound(&["member", "--class", "nosuch", "x.g6"], dir.path())
            .status
            .code(),
        Some(2)
    );
    std::fs::write(dir.path().join("g.txt"), "D?{\n").unwrap();
    let unknown_ext = chibound(&["chi", "g.txt"], dir.path());
    assert_eq!(unknown_ext.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown_ext.stderr).contains("--format"));
    let forced = chibound(&["chi", "g.txt", "--format", "graph6"], dir.path());
    assert_eq!(forced.status.code(), Some(0));
}

#[test]
fn tiny_budget_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    chibound(&["gen", "--family", "k4", "-o", "s.g6"], dir.path());
    let out = chibound(&["chi", "s.g6", "--budget", "5"], dir.path());
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains(".."));
}

#[test]
fn suite_report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "suite",
        "--class",
        "hammerfree",
        "--n",
        "10",
        "--count",
        "50",
        "--seed",
        "3",
    ];
    let a = chibound(&args, dir.path());
    let b = chibound(&args, dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(
        text.starts_with("# class=hammerfree n=10 count=50 seed=3 pass=50"),
        "{text}"
    );
    assert_eq!(text.lines().filter(|l| l.contains("verdict=pass")).count(), 50);

    let table = chibound(
        &["suite", "--class", "k4free", "--n", "12", "--count", "50", "--table"],
        dir.path(),
    );
    assert_eq!(table.status.code(), Some(0));
    assert!(stdout(&table).lines().next().unwrap().contains("f(w)"));
}

#[test]
fn hunt_from_witness() {
    let dir = tempfile::tempdir().unwrap();
    let out = chibound(
        &[
            "hunt",
            "--class",
            "k4free",
            "--start",
            "schlafli_complement",
            "--budget",
            "20",
            "--seed",
            "2",
            "-o",
            "best.g6",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let chi: usize = text
        .split_whitespace()
        .find_map(|kv| kv.strip_prefix("chi="))
        .unwrap()
        .parse()
        .unwrap();
    assert!((6..=9).contains(&chi));
    let check = chibound(&["member", "--class", "k4free", "best.g6"], dir.path());
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn gen_class_samples_write_a_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let out = chibound(
        &["gen", "--class", "c5free", "--n", "9", "--count", "5", "--seed", "1"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 5);
    let dimacs = chibound(
        &[
            "gen", "--class", "c5free", "--n", "9", "--count", "2", "--format", "dimacs",
        ],
        dir.path(),
    );
    assert_eq!(dimacs.status.code(), Some(2));
}
