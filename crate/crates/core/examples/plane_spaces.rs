//! The spaces V_{x,y} and C_{x,y} at sample pairs, and the
//! characteristic-module identity <eps_i^(m)(x, y), [x, y]> = 0.

use commvar::invariants::generators;
use commvar::liealg::make_sl;
use commvar::shiftfam::{build_family, c_space, char_kill, dim_v, in_omega, sample_points, sc_identity_suite};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let l = make_sl(3)?;
    let fam = build_family(&l, &generators(&l)?)?;
    for (i, m) in fam.eps_indices() {
        println!("<eps{}^({m}), [x, y]> = {}", i + 1, char_kill(&fam, i, m)?);
    }
    let points = sample_points(0, 5, l.dim());
    for pt in &points {
        println!(
            "{}: dim V = {}, dim C = {}, in Omega: {}",
            pt.label(),
            dim_v(&fam, pt)?,
            c_space(&fam, pt)?.rank(),
            in_omega(&fam, pt)?
        );
    }
    let rep = sc_identity_suite(&fam, &points)?;
    println!("identity suite: {} points, {} failed, {} skipped", rep.points.len(), rep.failed, rep.skipped);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
