use super::*;

fn config(checks: &[&str]) -> RunConfig {
    RunConfig {
        checks: checks.iter().map(|s| s.to_string()).collect(),
        sample_count: 10,
        ..RunConfig::default()
    }
}

#[test]
fn catalog_shape() {
    let cat = list_checks();
    assert!(cat.len() >= 15);
    let ck = cat.iter().find(|c| c.name == "char_kill").unwrap();
    assert_eq!(ck.anchor, "Thm. tsc1(iii)");
    let mut names: Vec<&str> = cat.iter().map(|c| c.name).collect();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), cat.len());
}

#[test]
fn unknown_checks_rejected_before_work() {
    let err = run(&config(&["dim_check", "no_such_check"])).unwrap_err();
    assert_eq!(err, CliError::UnknownCheck("no_such_check".into()));
    let bad = RunConfig {
        algebra: "/nonexistent/algebra.json".into(),
        ..config(&["dim_check"])
    };
    assert!(matches!(run(&bad), Err(CliError::Algebra(_))));
    assert!(matches!(
        run(&RunConfig { jobs: 0, ..config(&[]) }),
        Err(CliError::Config(_))
    ));
}

#[test]
fn single_dim_record() {
    let rep = run(&config(&["dim_check"])).unwrap();
    assert_eq!(rep.records.len(), 1);
    let r = &rep.records[0];
    assert_eq!(r.computed["krull_dim"], 4);
    assert_eq!(r.status, Status::Passed);
    assert_eq!(rep.exit_code(), 0);
}

#[test]
fn records_sorted_and_summarized() {
    let rep = run(&RunConfig {
        jobs: 3,
        ..config(&["v_rank", "char_kill", "structure_axioms"])
    })
    .unwrap();
    let keys: Vec<(String, usize)> = rep.records.iter().map(|r| (r.check.clone(), r.index)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let s = &rep.summary;
    assert_eq!(s.passed + s.failed + s.skipped, rep.records.len());
    assert_eq!(s.failed, 0);
    let json: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    for field in ["check", "theorem_anchor", "algebra", "point", "status", "expected", "computed", "witness", "elapsed_ms"] {
        assert!(json["records"][0].get(field).is_some(), "{field}");
    }
}

#[test]
fn heavy_checks_skip_without_flag() {
    let rep = run(&RunConfig {
        algebra: "sl3".into(),
        ..config(&["resolution"])
    })
    .unwrap();
    assert_eq!(rep.records[0].status, Status::Skipped);
    assert_eq!(rep.exit_code(), 0);
}

#[test]
fn gc_on_empty_and_missing_dirs() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(cache_gc(dir.path()).unwrap().removed, 0);
    assert_eq!(cache_gc(&dir.path().join("absent")).unwrap().removed, 0);
}

#[test]
fn cache_dir_resolution() {
    let explicit = PathBuf::from("/tmp/x");
    assert_eq!(resolve_cache_dir(Some(explicit.clone())), Some(explicit));
}
