//! End-to-end acceptance run. Each criterion prints one line:
//! `criterion N: pass|fail (<seconds> s, budget <seconds> s) <detail>`.

use commvar::cli::{run, Record, Report, RunConfig, Status};
use serde_json::{json, Value};
use std::process::ExitCode;
use std::time::{Duration, Instant};

fn report(algebra: &str, checks: &[&str], samples: usize) -> Report {
    let config = RunConfig {
        algebra: algebra.into(),
        sample_count: samples,
        checks: checks.iter().map(|c| c.to_string()).collect(),
        ..RunConfig::default()
    };
    run(&config).expect("valid configuration")
}

fn symbolic<'a>(rep: &'a Report, check: &str) -> Result<&'a Record, String> {
    rep.records
        .iter()
        .find(|r| r.check == check && r.point == "symbolic")
        .ok_or_else(|| format!("{} {check}: no symbolic record", rep.config.algebra))
}

fn all_passed(rep: &Report, check: &str) -> Result<usize, String> {
    let mut passed = 0;
    for r in rep.records_for(check) {
        match r.status {
            Status::Passed => passed += 1,
            Status::Skipped => {}
            Status::Failed => {
                return Err(format!("{} {check} failed at {}: {}", r.algebra, r.point, r.computed));
            }
        }
    }
    if passed == 0 {
        return Err(format!("{} {check}: no passing record", rep.config.algebra));
    }
    Ok(passed)
}

fn expect(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn criterion(n: usize, budget: Duration, body: impl FnOnce() -> Result<String, String>) -> bool {
    let started = Instant::now();
    let result = body();
    let elapsed = started.elapsed();
    let in_budget = elapsed <= budget;
    let ok = result.is_ok() && in_budget;
    let detail = match result {
        Ok(d) if in_budget => d,
        Ok(d) => format!("{d}; over budget"),
        Err(e) => e,
    };
    println!(
        "criterion {n}: {} ({:.2} s, budget {} s) {detail}",
        if ok { "pass" } else { "fail" },
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    ok
}

fn structural_axioms() -> Result<String, String> {
    let mut sums = Vec::new();
    for (alg, b) in [("sl2", 2), ("sl3", 5)] {
        let rep = report(alg, &["structure_axioms"], 1);
        let r = symbolic(&rep, "structure_axioms")?;
        expect(r.status == Status::Passed, || format!("{alg}: {}", r.computed))?;
        expect(r.computed["sum_degrees"] == json!(b), || format!("{alg}: sum of degrees {}", r.computed))?;
        sums.push(format!("{alg} sum d_i = {b}"));
    }
    Ok(sums.join(", "))
}

fn kostant_identities() -> Result<String, String> {
    for alg in ["sl2", "sl3"] {
        let rep = report(alg, &["kostant_gradient"], 1);
        let r = symbolic(&rep, "kostant_gradient")?;
        expect(r.status == Status::Passed, || format!("{alg}: {}", r.computed))?;
    }
    Ok("centralizer and pairing defects vanish for sl2 and sl3".into())
}

fn mf_commutativity() -> Result<String, String> {
    let mut parts = Vec::new();
    for (alg, functions, pairs) in [("sl2", 2, 3), ("sl3", 5, 15)] {
        let rep = report(alg, &["mf_commutativity"], 1);
        let r = symbolic(&rep, "mf_commutativity")?;
        expect(r.status == Status::Passed, || format!("{alg}: {}", r.computed))?;
        expect(r.computed["functions"] == json!(functions), || format!("{alg}: {}", r.computed))?;
        expect(r.witness["pairs"] == json!(pairs), || format!("{alg}: {}", r.witness))?;
        parts.push(format!("{alg} {pairs} brackets zero"));
    }
    Ok(parts.join(", "))
}

fn char_kill() -> Result<String, String> {
    for alg in ["sl2", "sl3"] {
        let rep = report(alg, &["char_kill"], 1);
        let r = symbolic(&rep, "char_kill")?;
        expect(r.status == Status::Passed, || format!("{alg}: {}", r.computed))?;
    }
    Ok("every <eps_i^(m), [x, y]> is zero for sl2 and sl3".into())
}

fn rank_laws() -> Result<String, String> {
    let checks = ["v_rank", "c_rank", "bracket_spaces", "orthocomplement"];
    let mut parts = Vec::new();
    for alg in ["sl2", "sl3"] {
        let rep = report(alg, &checks, 100);
        let mut counts = Vec::new();
        for c in checks {
            counts.push(all_passed(&rep, c)?);
        }
        let points = rep.records_for("v_rank").count();
        expect(points == 100, || format!("{alg}: {points} points"))?;
        parts.push(format!("{alg} passed {counts:?} of 100"));
    }
    Ok(parts.join(", "))
}

fn complex_identities() -> Result<String, String> {
    let rep = report("sl2", &["d_squared", "subcomplex", "offvariety_homotopy"], 100);
    all_passed(&rep, "d_squared")?;
    all_passed(&rep, "subcomplex")?;
    let off = all_passed(&rep, "offvariety_homotopy")?;
    expect(off >= 10, || format!("only {off} off-variety points"))?;
    Ok(format!("sl2 d^2 = 0, subcomplex, homotopy at {off} points"))
}

fn sl2_ideal() -> Result<String, String> {
    let rep = report("sl2", &["dim_check", "resolution", "radical_prime_rank1"], 1);
    let d = symbolic(&rep, "dim_check")?;
    expect(d.status == Status::Passed && d.computed["krull_dim"] == json!(4), || {
        format!("dimension {}", d.computed)
    })?;
    let r = symbolic(&rep, "resolution")?;
    expect(r.status == Status::Passed, || format!("resolution {}", r.computed))?;
    expect(r.computed["betti"] == json!([1, 3, 2]), || format!("betti {}", r.computed["betti"]))?;
    expect(r.computed["projdim_ideal"] == json!(1), || format!("projdim {}", r.computed))?;
    let p = symbolic(&rep, "radical_prime_rank1")?;
    expect(p.status == Status::Passed, || format!("minors {}", p.computed))?;
    Ok("dim 4, Betti (1,3,2), projdim I = 1, I = minors ideal".into())
}

fn sl3_ideal() -> Result<String, String> {
    let rep = report("sl3", &["dim_check", "radical_samples"], 1);
    let d = symbolic(&rep, "dim_check")?;
    if d.status == Status::Skipped {
        return Ok(format!("dimension skipped: {}", d.witness));
    }
    expect(d.status == Status::Passed && d.computed["krull_dim"] == json!(10), || {
        format!("dimension {}", d.computed)
    })?;
    let r = symbolic(&rep, "radical_samples")?;
    if r.status == Status::Skipped {
        return Ok(format!("dim 10, radical samples skipped: {}", r.witness));
    }
    expect(r.status == Status::Passed && r.computed["in_radical"] == json!(50), || {
        format!("radical samples {}", r.computed)
    })?;
    Ok("dim 10, 50 radical samples".into())
}

fn strip_timing(text: &str) -> Value {
    let mut v: Value = serde_json::from_str(text).expect("report is JSON");
    for r in v["records"].as_array_mut().expect("records") {
        r.as_object_mut().expect("record object").remove("elapsed_ms");
    }
    v
}

fn determinism() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cache = dir.path().join("gb");
    let mut texts = Vec::new();
    for _ in 0..2 {
        if cache.exists() {
            std::fs::remove_dir_all(&cache).map_err(|e| e.to_string())?;
        }
        let config = RunConfig {
            algebra: "sl2".into(),
            seed: 0,
            checks: vec!["all".into()],
            cache_dir: Some(cache.clone()),
            ..RunConfig::default()
        };
        let rep = run(&config).map_err(|e| e.to_string())?;
        texts.push(rep.to_json());
    }
    let (a, b) = (strip_timing(&texts[0]), strip_timing(&texts[1]));
    let (sa, sb) = (serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    expect(sa == sb, || "reports differ".into())?;
    Ok(format!("{} records identical", a["records"].as_array().map_or(0, Vec::len)))
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let results = [
        criterion(1, secs(1), structural_axioms),
        criterion(2, secs(10), kostant_identities),
        criterion(3, secs(60), mf_commutativity),
        criterion(4, secs(30), char_kill),
        criterion(5, secs(60), rank_laws),
        criterion(6, secs(30), complex_identities),
        criterion(7, secs(5), sl2_ideal),
        criterion(8, secs(600), sl3_ideal),
        criterion(9, secs(600), determinism),
    ];
    let failed: Vec<usize> = (1..=9).filter(|&n| !results[n - 1]).collect();
    if failed.is_empty() {
        println!("acceptance: all 9 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
