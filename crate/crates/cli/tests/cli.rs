use std::process::{Command, Output};

fn weakid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weakid")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn verify_exit_codes() {
    assert_eq!(weakid(&["verify", "--group", "Zn:5", "--suite", "lemma6"]).status.code(), Some(0));
    assert_eq!(weakid(&["verify", "--group", "Dn:4", "e0(x1)*e0(x2)-e0(x2)*e0(x1)"]).status.code(), Some(0));
    let o = weakid(&["verify", "--group", "Zn:3", "x1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("entry (1,1): a1"));
    assert_eq!(weakid(&["verify", "--group", "A4", "--suite", "lemma13", "--seed", "7", "--trials", "2"]).status.code(), Some(0));
    assert_eq!(weakid(&["verify", "--group", "Zn:2"]).status.code(), Some(0));
}

#[test]
fn verify_json_report() {
    let o = weakid(&["verify", "--group", "Dn:3", "--suite", "lemma9", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ok"], true);
    assert!(v["results"].as_array().unwrap().iter().any(|r| r["tag"] == "dih.1"));
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(weakid(&["certify", "--group", "Dn:2", "--degree", "2"]).status.code(), Some(2));
    assert_eq!(weakid(&["normalize", "--group", "Zn:3", "e1(x1"]).status.code(), Some(2));
    assert_eq!(weakid(&["normalize", "--group", "Zn:3", "eps11(x1)"]).status.code(), Some(2));
    assert_eq!(weakid(&["verify", "--group", "Zn:3", "--suite", "lemma9"]).status.code(), Some(2));
    assert_eq!(weakid(&["verify", "--group", "Zn:3", "--suite", "nosuch"]).status.code(), Some(2));
    assert_eq!(weakid(&["oracle", "--group", "Zn:3", "--multidegree", "0,1"]).status.code(), Some(2));
}

#[test]
fn budget_errors() {
    let o = weakid(&["normalize", "--group", "Zn:3", "--step-budget", "1", "g(x1)*g(x2)*g(x3)"]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(weakid(&["oracle", "--group", "A5", "--multidegree", "1,2,3,4,5"]).status.code(), Some(4));
}

#[test]
fn normalize_outputs() {
    let run = |g: &str, e: &str| stdout(&weakid(&["normalize", "--group", g, e]));
    assert_eq!(run("Zn:3", "x1"), "e0(x1) + e1(x1) + e-1(x1)");
    assert_eq!(run("Zn:3", "e1(x1)*e1(x2)"), "0");
    assert_eq!(run("A4", "eps21(x1)*eps32(x2)*eps23(x3)"), "eps11(x1)*eps12(x2)*eps23(x3)");
    for (g, e) in [("Zn:5", "g(x2)*g^2(x1)*x3"), ("Dn:4", "h(x1)*hg(x2)"), ("S4", "g(x1)*h(x2)")] {
        let nf = run(g, e);
        assert_eq!(run(g, &nf), nf, "{g}: {e}");
    }
}

#[test]
fn enumerate_and_oracle() {
    let o = weakid(&["enumerate", "--group", "Zn:3", "--multidegree", "1,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 9);
    assert_eq!(stdout(&weakid(&["oracle", "--group", "Zn:3", "--multidegree", "1,2"])), "9");
    assert_eq!(stdout(&weakid(&["oracle", "--group", "A4", "--multidegree", "1"])), "9");
}

#[test]
fn certificates() {
    let o = weakid(&["certify", "--group", "Zn:3", "--degree", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 7);
    for k in ["group", "conductor", "degree_bound", "identities", "multidegrees", "verdict", "runtime_ms"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    assert_eq!(v["verdict"], "pass");
    for r in v["multidegrees"].as_array().unwrap() {
        let r = r.as_object().unwrap();
        let mut ks: Vec<&str> = r.keys().map(|k| k.as_str()).collect();
        ks.sort();
        assert_eq!(ks, ["b_count", "degree", "oracle_dim", "rank", "spanning_ok"]);
    }
    for id in v["identities"].as_array().unwrap() {
        assert_eq!(id.as_object().unwrap().len(), 2);
    }

    let path = std::env::temp_dir().join(format!("weakid-cert-{}.json", std::process::id()));
    let o = weakid(&["certify", "--group", "S4", "--degree", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with(")") && stdout(&o).contains("verdict: pass"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["group"], "S4");
    std::fs::remove_file(path).ok();
}
