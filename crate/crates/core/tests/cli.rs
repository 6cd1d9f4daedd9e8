//! End-to-end checks of the `kntab` binary.

use std::process::{Command, Output};

fn kntab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kntab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn insert_prints_the_worked_example() {
    let out = kntab(&["insert", "2 3 -2 -3 1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 1 -1 / 3 / -3");

    let out = kntab(&["insert", "2 3 -2 -3 1", "--shapes"]);
    let text = stdout(&out);
    assert!(text.contains("(1,1,1)") && text.contains("(3,1,1)"), "{text}");
}

#[test]
fn rectify_accepts_skew_input() {
    let out = kntab(&["rectify", ". 2 / 1 3 / 2 -1", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2 2 / 3 3 / -3");
}

#[test]
fn keys_of_the_example_tableau() {
    let out = kntab(&["key", "--right", "1 3 -1 / 3 -3 / -3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3 3 -1 / -2 -1 / -1");

    let out = kntab(&["key", "--left", "1 3 -1 / 3 -3 / -3"]);
    assert_eq!(stdout(&out).trim(), "1 1 2 / 2 2 / -3");
}

#[test]
fn demazure_atom_lists_two_tableaux() {
    let out = kntab(&["demazure", "atom", "--vector", "1,-2", "--n", "2", "--format", "text"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.contains(&"1 -2 / 2") && lines.contains(&"1 -2 / -2"));

    let out = kntab(&["demazure", "char", "--vector", "1,-2", "--n", "2"]);
    let poly = stdout(&out);
    assert!(poly.contains("x1^2*x2") && poly.contains("x1*x2^-2"), "{poly}");
}

#[test]
fn bruhat_and_coset_commands() {
    let out = kntab(&["bruhat", "cmp", "[1 -2 -5 3 4]", "[-4 -1 2 3 5]"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("leq: true"));

    let out = kntab(&["coset", "minrep", "--vector", "1,0,-3,3,-5", "--lambda", "5,3,3,1,0"]);
    assert_eq!(stdout(&out).trim(), "[-5 4 -3 1 2]");

    let out = kntab(&["coset", "reduce", "--vector", "1,0,-3,3,-5"]);
    assert_eq!(stdout(&out).trim(), "(1,0,-2,2,-3)");
}

#[test]
fn evacuate_both_methods_agree() {
    for method in ["insert", "jdt"] {
        let out = kntab(&["evacuate", "1 3 -1 / 3 -3 / -3", "--method", method]);
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), "1 2 -2 / 3 -1 / -3", "method {method}");
    }
}

#[test]
fn crystal_dot_output() {
    let out = kntab(&["crystal", "--shape", "1", "--n", "2", "--format", "dot"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 3);

    let out = kntab(&["crystal", "--shape", "2,1", "--n", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 16);
}

#[test]
fn exit_codes() {
    // Domain error: the column [1 -1] is not admissible.
    let out = kntab(&["key", "--right", "1 2 / -1"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("NotAdmissible"), "{err}");

    // Parse error.
    let out = kntab(&["insert", "2 x 3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = kntab(&["verify", "--criterion", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("criterion 1: PASS"));
}

#[test]
fn pretty_rendering_uses_overbars() {
    let out = kntab(&["insert", "2 3 -2 -3 1", "--pretty"]);
    let text = stdout(&out);
    assert!(text.contains('\u{0304}'), "{text}");
}
