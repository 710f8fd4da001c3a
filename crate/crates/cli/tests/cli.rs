use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn mal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write_star4(dir: &TempDir) -> std::path::PathBuf {
    let p = dir.path().join("star4.graph");
    fs::write(&p, "# warehouse and three cities\n4 3\n0 1\n0 2\n0 3\n").unwrap();
    p
}

#[test]
fn exact_solve_on_star_uses_five_labels() {
    let dir = TempDir::new().unwrap();
    let g = write_star4(&dir);
    let out = mal(&["solve", path_str(&g), "--age", "3", "--algo", "exact"]);
    assert_eq!(code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["labelCount"], 5);
    assert_eq!(report["feasible"], true);
    assert_eq!(report["optimalityFlag"], "exact");
    assert!(dir.path().join("star4.labeling.json").exists());
}

#[test]
fn verify_third_schedule() {
    let dir = TempDir::new().unwrap();
    let g = write_star4(&dir);
    let l = dir.path().join("schedule.json");
    fs::write(
        &l,
        r#"{"edges":[{"u":0,"v":1,"labels":[1,3]},{"u":0,"v":2,"labels":[2]},{"u":0,"v":3,"labels":[1,3]}]}"#,
    )
    .unwrap();
    let out = mal(&["verify", path_str(&g), path_str(&l), "--age", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["labelCount"], 5);
    let out = mal(&["verify", path_str(&g), path_str(&l), "--age", "2"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["feasible"], false);
}

#[test]
fn age_below_diameter_exits_three() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("p5.graph");
    fs::write(&g, "5 4\n0 1\n1 2\n2 3\n3 4\n").unwrap();
    for algo in ["trivial", "three-half", "exact", "via-dcss:tree"] {
        let out = mal(&["solve", path_str(&g), "--age", "3", "--algo", algo]);
        assert_eq!(code(&out), 3, "{algo}");
    }
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("bad.graph");
    fs::write(&g, "3 2\n0 1\n").unwrap();
    assert_eq!(code(&mal(&["stats", path_str(&g)])), 2);
    assert_eq!(code(&mal(&["stats", "/nonexistent/graph"])), 2);
    let good = write_star4(&dir);
    assert_eq!(
        code(&mal(&[
            "solve",
            path_str(&good),
            "--age",
            "3",
            "--algo",
            "magic"
        ])),
        2
    );
    assert_eq!(code(&mal(&["bogus"])), 2);
}

#[test]
fn exact_budget_exceeded_exits_four() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("k6.graph");
    let out = mal(&[
        "gen",
        "random-connected",
        "6",
        "15",
        "1",
        "--out",
        path_str(&g),
    ]);
    assert_eq!(code(&out), 0);
    let out = mal(&["solve", path_str(&g), "--age", "5", "--algo", "exact"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn stats_reports_metrics() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("c4.graph");
    assert_eq!(code(&mal(&["gen", "cycle", "4", "--out", path_str(&g)])), 0);
    let out = mal(&["stats", path_str(&g)]);
    assert_eq!(code(&out), 0);
    let s = stdout_json(&out);
    assert_eq!(
        (s["n"].clone(), s["D"].clone(), s["R"].clone()),
        (4.into(), 2.into(), 2.into())
    );
    assert_eq!(s["c4"], true);
}

#[test]
fn gadget_generation_writes_roles() {
    let dir = TempDir::new().unwrap();
    let sc = dir.path().join("sc.json");
    fs::write(&sc, r#"{"universeSize": 2, "sets": [[0], [1], [0, 1]]}"#).unwrap();
    let g = dir.path().join("gadget.graph");
    let roles = dir.path().join("gadget.roles");
    let out = mal(&[
        "gen",
        "sc-mal",
        path_str(&sc),
        "--out",
        path_str(&g),
        "--roles",
        path_str(&roles),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(fs::read_to_string(&roles).unwrap().lines().count(), 14);
    let s = stdout_json(&mal(&["stats", path_str(&g)]));
    assert_eq!(s["D"], 2);

    let out = mal(&["gen", "sc-dcss", path_str(&sc), "5", "--out", path_str(&g)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&mal(&["stats", path_str(&g)]))["D"], 5);
    assert_eq!(code(&mal(&["gen", "sc-dcss", path_str(&sc), "4"])), 3);

    let mr = dir.path().join("mr.json");
    fs::write(
        &mr,
        r#"{"groupsA": [[0]], "groupsB": [[0]], "edges": [[0, 0]]}"#,
    )
    .unwrap();
    let out = mal(&["gen", "minrep-dcss", path_str(&mr), "--out", path_str(&g)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&mal(&["stats", path_str(&g)]))["D"], 3);
}

#[test]
fn conversions() {
    let dir = TempDir::new().unwrap();
    let g = write_star4(&dir);
    let l = dir.path().join("full.json");
    let out = mal(&[
        "convert",
        "dcss-to-mal",
        path_str(&g),
        path_str(&g),
        "2",
        "--out",
        path_str(&l),
    ]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&mal(&["verify", path_str(&g), path_str(&l), "--age", "2"]));
    assert_eq!(v["labelCount"], 6);

    let out = mal(&["convert", "mal-to-dcss", path_str(&g), path_str(&l)]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "4 3\n0 1\n0 2\n0 3\n"
    );

    let out = mal(&["convert", "bidirect", path_str(&g)]);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("4 6 directed\n"));
}

#[test]
fn bench_writes_csv() {
    let dir = TempDir::new().unwrap();
    write_star4(&dir);
    let g = dir.path().join("rand.graph");
    assert_eq!(
        code(&mal(&[
            "gen",
            "random-connected",
            "12",
            "20",
            "3",
            "--out",
            path_str(&g)
        ])),
        0
    );
    let out = mal(&["bench", path_str(dir.path()), "--age-rule", "2R1"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "instance,n,m,D,R,algorithm,labels,lifetime,feasible,ms"
    );
    assert_eq!(lines.count(), 14);
    assert_eq!(
        code(&mal(&["bench", path_str(dir.path()), "--age-rule", "nope"])),
        2
    );
}

#[test]
fn sequential_flag_gives_same_report() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("rand.graph");
    mal(&[
        "gen",
        "random-connected",
        "40",
        "80",
        "7",
        "--out",
        path_str(&g),
    ]);
    let a = stdout_json(&mal(&[
        "solve",
        path_str(&g),
        "--age",
        "20",
        "--algo",
        "three-half",
    ]));
    let b = stdout_json(&mal(&[
        "--sequential",
        "solve",
        path_str(&g),
        "--age",
        "20",
        "--algo",
        "three-half",
    ]));
    assert_eq!(a["labelCount"], b["labelCount"]);
}
