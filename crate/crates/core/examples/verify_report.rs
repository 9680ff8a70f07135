//! A batch run through the driver and a look at the JSON report.

use commvar::cli::{list_checks, run, RunConfig, Status};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("{} checks available", list_checks().len());
    let config = RunConfig {
        algebra: "sl2".into(),
        sample_count: 5,
        checks: vec!["dim_check".into(), "v_rank".into(), "resolution".into()],
        jobs: 2,
        ..RunConfig::default()
    };
    let report = run(&config)?;
    for r in &report.records {
        let status = match r.status {
            Status::Passed => "passed",
            Status::Failed => "failed",
            Status::Skipped => "skipped",
        };
        println!("{:<12} {:<16} {status}", r.check, r.point);
    }
    let s = &report.summary;
    println!("passed {}, failed {}, skipped {}; exit code {}", s.passed, s.failed, s.skipped, report.exit_code());
    println!("{}", &report.to_json()[..200]);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
