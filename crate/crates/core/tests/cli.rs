use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hypersum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypersum")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hypersum-{name}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn help_and_usage_errors() {
    assert_eq!(hypersum(&["--help"]).status.code(), Some(0));
    assert_eq!(hypersum(&["--version"]).status.code(), Some(0));
    for args in [
        &["frobnicate"][..],
        &["check", "ID99"],
        &["check", "ID01", "--n-max", "ten"],
        &["wz", "thm7"],
        &["wz", "thm1", "--mutate", "flip-exp:99"],
        &["suite", "--format", "yaml"],
    ] {
        let o = hypersum(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn check_id16_small_grid() {
    let o = hypersum(&["check", "ID16", "--n-max", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row = text.lines().find(|l| l.contains(" n=2 ")).expect("row for n=2");
    assert!(row.starts_with("pass"), "{row}");
    assert!(row.contains("lhs=3/2 rhs=3/2"), "{row}");
}

#[test]
fn check_is_case_insensitive_and_json_has_schema() {
    let o = hypersum(&["check", "id24", "--n-max", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["suite"].is_string());
    assert_eq!(v["seed"], 0);
    let results = v["results"].as_array().unwrap();
    assert!(!results.is_empty());
    for r in results {
        for key in ["id", "params", "n", "lhs", "rhs", "status"] {
            assert!(r.get(key).is_some(), "missing {key} in {r}");
        }
        assert_eq!(r["status"], "pass");
    }
    let pass = v["summary"]["pass"].as_u64().unwrap();
    assert_eq!(pass as usize, results.len());
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["summary"]["skipped"], 0);
    let n2 = results.iter().find(|r| r["id"] == "ID24" && r["n"] == 2).unwrap();
    assert_eq!(n2["lhs"], "11/2");
}

#[test]
fn negative_controls_exit_1() {
    let o = hypersum(&["check", "ID24", "--n-max", "3", "--mutate", "flip-h2n-sign"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| l.starts_with("fail")));

    for m in ["scale-cert:3/2", "flip-orientation", "add-cert:1/(n+1)"] {
        let o = hypersum(&["wz", "thm3", "--n-max", "4", "--samples", "2", "--mutate", m]);
        assert_eq!(o.status.code(), Some(1), "{m}");
    }
}

#[test]
fn wz_pair_passes_and_json_is_stable() {
    let args = ["wz", "thm2", "--n-max", "6", "--samples", "3", "--seed", "11", "--format", "json"];
    let a = hypersum(&args);
    let b = hypersum(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 11);
    assert_eq!(v["results"][0]["id"], "thm2/symbolic");
    assert_eq!(v["results"][0]["lhs"], "0");
}

#[test]
fn seed_changes_draws() {
    let a = hypersum(&["check", "ID06", "--n-max", "2", "--samples", "2", "--seed", "1"]);
    let b = hypersum(&["check", "ID06", "--n-max", "2", "--samples", "2", "--seed", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = scratch_dir("config");
    let cfg = dir.join("cfg.json");
    fs::write(&cfg, r#"{"n_max": 1, "samples": 1, "format": "json"}"#).unwrap();
    let cfg = cfg.to_str().unwrap();

    let o = hypersum(&["check", "ID06", "--config", cfg]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 2);

    let o = hypersum(&["check", "ID06", "--config", cfg, "--n-max", "2", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(serde_json::from_str::<Value>(&text).is_err());
    assert!(text.lines().any(|l| l.contains(" n=2 ")));

    let bad = dir.join("bad.json");
    fs::write(&bad, r#"{"n_max": 1, "colour": "red"}"#).unwrap();
    let o = hypersum(&["check", "ID06", "--config", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = hypersum(&["check", "ID06", "--config", dir.join("absent.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    fs::remove_dir_all(dir).ok();
}

#[test]
fn fixtures_directory_overrides_builtin_pairs() {
    let dir = scratch_dir("fixtures");
    let builtin = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/wz/thm2.wz");
    let text = fs::read_to_string(builtin).unwrap();
    fs::write(dir.join("thm2.wz"), &text).unwrap();
    let d = dir.to_str().unwrap();
    let o = hypersum(&["wz", "thm2", "--fixtures", d, "--n-max", "3", "--samples", "2"]);
    assert_eq!(o.status.code(), Some(0));

    let broken = text.replace("k*(t + k)", "2*k*(t + k)");
    fs::write(dir.join("thm2.wz"), broken).unwrap();
    let o = hypersum(&["wz", "thm2", "--fixtures", d, "--n-max", "3", "--samples", "2"]);
    assert_eq!(o.status.code(), Some(1));

    fs::write(dir.join("thm2.wz"), "name: thm2\nterm: binom(n,\n").unwrap();
    let o = hypersum(&["wz", "thm2", "--fixtures", d]);
    assert_eq!(o.status.code(), Some(2));
    fs::remove_dir_all(dir).ok();
}

#[test]
fn list_names_every_entry() {
    let o = hypersum(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for id in ["ID01", "ID05S", "ID18G", "ID26", "thm1", "thm2", "thm3"] {
        assert!(text.contains(id), "{id}");
    }
}
