//! End-to-end checks of the command-line interface and file formats.

use std::process::Command;

fn oricone() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oricone"))
}

fn run_ok(args: &[&str]) -> String {
    let out = oricone().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "oricone {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn generate_then_dual_round_trips() {
    let dir = std::env::temp_dir().join(format!("oricone-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let hfile = dir.join("qmet3.ine");
    let vfile = dir.join("qmet3.ext");

    run_ok(&["generate", "qmet", "--n", "3", "-o", hfile.to_str().unwrap()]);
    let text = std::fs::read_to_string(&hfile).unwrap();
    assert!(text.starts_with("H-representation\nbegin\n 12 7 rational\n"));

    run_ok(&["dual", hfile.to_str().unwrap(), "-o", vfile.to_str().unwrap()]);
    let text = std::fs::read_to_string(&vfile).unwrap();
    assert!(text.starts_with("V-representation"));
    assert!(text.contains(" 12 7 rational"));

    // dualizing the rays brings back the 12 inequalities
    let out = run_ok(&["dual", vfile.to_str().unwrap()]);
    assert!(out.contains(" 12 7 rational"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn orbits_report_of_omcut4() {
    let dir = std::env::temp_dir().join(format!("oricone-cli-orb-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let vfile = dir.join("omcut4.ext");
    run_ok(&["generate", "omcut", "--n", "4", "-o", vfile.to_str().unwrap()]);
    let out = run_ok(&["orbits", vfile.to_str().unwrap()]);
    assert!(out.contains("74 rows in 5 orbits"), "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn report_table1_matches_published_rows() {
    let out = run_ok(&["report", "table1", "--n-max", "4"]);
    let expect = [
        "OMCUT_3\t6\t12(2)\t12(2)\t2; 2",
        "OMCUT_4\t12\t74(5)\t72(4)\t2; 2",
        "QMET_4\t12\t164(10)\t36(2)\t3; 2",
    ];
    for row in expect {
        assert!(out.contains(row), "missing row {row:?} in:\n{out}");
    }
}

#[test]
fn skeleton_report_omcut3() {
    let out = run_ok(&["skeleton", "omcut", "--n", "3", "--matrix", "--diameter"]);
    assert!(out.contains("skeleton graph of OMCUT_3: 12 nodes"), "{out}");
    assert!(out.contains("diameter\t2"), "{out}");
    let md = run_ok(&["ridge", "omcut", "--n", "3", "--matrix", "--md"]);
    assert!(md.contains("| Orbit |"), "{md}");
}

#[test]
fn verify_exit_codes() {
    // a passing check exits 0
    let ok = oricone()
        .args(["verify", "multicuts-extreme", "--n", "3"])
        .output()
        .unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stdout).contains("[pass]"));

    // an unknown subcommand exits 2 with usage text
    let unknown = oricone().args(["frobnicate"]).output().unwrap();
    assert_eq!(unknown.status.code(), Some(2));

    // verify all at n = 3 covers the fast checks and exits 0
    let all = oricone().args(["verify", "all", "--n", "3"]).output().unwrap();
    assert!(
        all.status.success(),
        "{}",
        String::from_utf8_lossy(&all.stdout)
    );
}

#[test]
fn adjdecomp_on_a_generated_file() {
    let dir = std::env::temp_dir().join(format!("oricone-cli-ad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let vfile = dir.join("omcut4.ext");
    run_ok(&["generate", "omcut", "--n", "4", "-o", vfile.to_str().unwrap()]);
    let out = run_ok(&[
        "adjdecomp",
        vfile.to_str().unwrap(),
        "--checkpoint",
        dir.join("state.ck").to_str().unwrap(),
        "--jobs",
        "2",
    ]);
    assert!(out.contains("# 72 facets in 4 orbits (complete: true)"), "{out}");
    assert!(out.contains("(1, 48, 43, 12)"), "{out}");
    assert!(std::fs::read_to_string(dir.join("state.ck"))
        .unwrap()
        .lines()
        .all(|l| l.starts_with("P\t")));
    std::fs::remove_dir_all(&dir).unwrap();
}
