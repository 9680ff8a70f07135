//! The generators g_k of I_g, the differential on the exterior algebra,
//! the top form eps and the homotopy off the commuting variety.

use commvar::commuting::{
    differential, eps_top, ig_generators, offvariety_exactness, subcomplex_check, ExtElem,
};
use commvar::invariants::generators;
use commvar::liealg::make_sl;
use commvar::rational::rat;
use commvar::shiftfam::{build_family, PlanePair};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let l = make_sl(2)?;
    let fam = build_family(&l, &generators(&l)?)?;
    let ideal = ig_generators(&l)?;
    for (k, g) in ideal.gens().iter().enumerate() {
        println!("g_{} = {g}", l.basis_labels()[k]);
    }

    let top = ExtElem::basis(ideal.ring(), 3, &[0, 1, 2])?;
    let d = differential(&ideal, &top)?;
    println!("d(e^h^f) = {d}");
    println!("d(d(e^h^f)) = 0: {}", differential(&ideal, &d)?.is_zero());

    let eps = eps_top(&fam)?;
    println!("eps = {eps}");
    let sub = subcomplex_check(&ideal, &fam)?;
    println!("d(eps) = 0: {}, subcomplex identity: {}", sub.eps_closed, sub.passed());

    let pt = PlanePair::new(vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(0), rat(1)]);
    let rep = offvariety_exactness(&ideal, &fam, &pt)?;
    println!("at (e, f): homotopy through v = {}, <v, [x, y]> = {}, passed: {}", rep.v, rep.pairing, rep.passed());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
