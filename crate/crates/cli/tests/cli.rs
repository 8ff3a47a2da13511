use std::process::{Command, Output};

const EXAMPLE: &str = r#"{"phi_d":{"exppoly":[{"base":"-1","poly":["0","1"]}]},"phi_c":{"exppoly":[]}}"#;

fn loopvir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopvir")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = loopvir(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out).trim_end().to_string()
}

#[test]
fn verma_test_on_worked_example() {
    assert_eq!(ok(&["verma-test", "--phi", EXAMPLE]), "reducible, P = t^2+2t+1");
    assert_eq!(ok(&["hc-test", "--phi", EXAMPLE]), "t^2+2t+1");
    let generic = r#"{"phi_d":{"exppoly":[{"base":"1","poly":["1/3"]}]}}"#;
    assert_eq!(ok(&["verma-test", "--phi", generic]), "reducible, P = t-1");
    assert_eq!(ok(&["hc-test", "--phi", r#"{"phi_d":{"finite":{"0":"1"}}}"#]), "not Harish-Chandra");
    assert_eq!(ok(&["verma-test", "--phi", r#"{"phi_d":{"finite":{"0":"1"}}}"#]), "irreducible");
}

#[test]
fn char_table_csv() {
    let csv = ok(&["char", "--phi", EXAMPLE, "--depth", "3", "--format", "csv"]);
    assert_eq!(csv, "depth,pbw_dim,j_dim,irreducible_dim\n0,1,0,1\n1,2,0,2\n2,5,0,5\n3,10,0,10");
    let redundant = ok(&["char", "--phi", EXAMPLE, "--depth", "3", "--format", "csv", "--all-degrees"]);
    assert_eq!(csv, redundant);
}

#[test]
fn bracket_examples() {
    assert_eq!(ok(&["bracket", "d(3,5)", "c(2)"]), "0");
    assert_eq!(ok(&["bracket", "d(2,1)", "d(-2,3)"]), "-4*d(0,4) + 1/2*c(4)");
    assert_eq!(ok(&["bracket", "d(1, 0)", "2*d(-1,0) + c(1)"]), "-4*d(0,0)");
    assert_eq!(ok(&["bracket", "d(1,0)", "d(1,1)", "--mod", "t+1"]), "0");
}

#[test]
fn checks_report_zero_violations() {
    let j = ok(&["jacobi", "--deg-window", "-2..2", "--loop-window", "-1..1", "--mod", "t^2+2t+1"]);
    assert!(j.ends_with("violations: 0"), "{j}");
    let r = ok(&["intseries-verify", "B(0)@-1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r).unwrap();
    assert_eq!(v["functional_equation"]["violations"], serde_json::json!([]));
    assert_eq!(v["module_axiom"]["violations"], serde_json::json!([]));
    assert!(ok(&["tensor-check", "--phi", r#"{"phi_d":[{"base":"2","poly":["1"]},{"base":"5","poly":["3"]}]}"#, "--depth", "3"])
        .ends_with("match"));
}

#[test]
fn kinds_and_annihilators() {
    assert_eq!(ok(&["dual", "A(3)"]), "B(3)");
    assert_eq!(ok(&["dual", "A(3)@5"]), "B(3)@5");
    assert_eq!(ok(&["canonical", "V(4/3,2/5)"]), "V(1/3,2/5)");
    assert_eq!(ok(&["annihilator", "--seq", r#"{"finite":{"2":"1"}}"#]), "none");
    assert_eq!(ok(&["annihilator", "--seq", r#"{"finite":{}}"#]), "1");
    assert_eq!(ok(&["annihilator", "--seq", r#"[{"base":"2","poly":["1","1"]}]"#]), "t^2-4t+4");
}

#[test]
fn json_output_round_trips_and_is_deterministic() {
    let cases: [&[&str]; 4] = [
        &["char", "--phi", EXAMPLE, "--depth", "3", "--format", "json"],
        &["hc-test", "--phi", EXAMPLE, "--format", "json"],
        &["intseries-verify", "V'(0,0)@2", "--format", "json"],
        &["tensor-check", "--phi", r#"{"phi_d":[{"base":"2","poly":["1"]},{"base":"3","poly":["1","1"]}]}"#, "--depth", "3", "--format", "json"],
    ];
    for args in cases {
        let first = ok(args);
        assert_eq!(first, ok(args), "{args:?} not deterministic");
        let parsed: serde_json::Value = serde_json::from_str(&first).unwrap();
        assert_eq!(serde_json::to_string(&parsed).unwrap(), first, "{args:?} does not round-trip");
    }
}

#[test]
fn functional_from_file() {
    let path = std::env::temp_dir().join(format!("loopvir-phi-{}.json", std::process::id()));
    std::fs::write(&path, EXAMPLE).unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(ok(&["hc-test", "--phi", &arg]), "t^2+2t+1");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn usage_errors_exit_2_and_name_the_token() {
    let cases: [(&[&str], &str); 7] = [
        (&["annihilator", "--seq", r#"{"finite":{"0":"1/0"}}"#], "1/0"),
        (&["bracket", "d(3,5", "c(2)"], "d(3,5"),
        (&["jacobi", "--deg-window", "2..x"], "2..x"),
        (&["char", "--phi", EXAMPLE, "--depth", "20"], "--depth-cap"),
        (&["char", "--phi", EXAMPLE, "--depth", "2", "--mod", "t-1"], "t-1"),
        (&["hc-test", "--phi", r#"{"phi_x":[]}"#], "phi_x"),
        (&["dual", "C(1)"], "C(1)"),
    ];
    for (args, token) in cases {
        let out = loopvir(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(token), "{args:?}: `{err}` should mention `{token}`");
    }
    assert_eq!(loopvir(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(loopvir(&["bracket", "d(1,0)", "d(0,0)", "--format", "csv"]).status.code(), Some(2));
}

#[test]
fn depth_cap_can_be_raised() {
    let phi = r#"{"phi_d":{"exppoly":[]}}"#;
    let out = ok(&["char", "--phi", phi, "--depth", "13", "--depth-cap", "13", "--format", "csv"]);
    assert_eq!(out.lines().count(), 15);
}
