//! The argument-shift family and Poisson commutativity of its members.

use commvar::invariants::generators;
use commvar::liealg::make_sl;
use commvar::shiftfam::{build_family, mf_commutativity_check, poisson, MfMode};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in [2, 3] {
        let l = make_sl(n)?;
        let fam = build_family(&l, &generators(&l)?)?;
        let names: Vec<String> = fam.mf_family().into_iter().map(|f| f.0).collect();
        println!("sl{n} family: {names:?}");
        let rep = mf_commutativity_check(&fam, &MfMode::Symbolic)?;
        println!("  {} brackets, all zero: {}", rep.pairs.len(), rep.passed());
    }

    let l = make_sl(2)?;
    let fam = build_family(&l, &generators(&l)?)?;
    let family = fam.mf_family();
    let ring = fam.ring();
    let ye = commvar::poly::MPoly::var(ring, l.dim());
    println!("{{y_e, {}}} = {}", family[0].0, poisson(&l, &ye, &family[0].1)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
