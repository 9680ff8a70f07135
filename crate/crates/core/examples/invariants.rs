//! Basic invariants of sl_n and their gradient maps eps_i.

use commvar::invariants::{
    centralizer_defect, epsilons, generators, invariance_defect, kostant_regularity_check, pairing_defect,
};
use commvar::liealg::make_sl;
use commvar::rational::rat;
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in [2, 3] {
        let l = make_sl(n)?;
        let inv = generators(&l)?;
        println!("sl{n}: degrees {:?}", inv.degrees());
        for (i, p) in inv.polys().iter().enumerate() {
            let invariant = (0..l.dim()).all(|k| invariance_defect(&l, p, k).is_ok_and(|d| d.is_zero()));
            println!("  p{} = {p} (ad-invariant: {invariant})", i + 1);
        }
        for e in epsilons(&l, &inv)? {
            let central = centralizer_defect(&l, &e)?.is_zero();
            let paired = pairing_defect(&l, &inv, &e)?.is_zero();
            println!("  eps{}: [x, eps(x)] = 0: {central}, pairing identity: {paired}", e.index + 1);
        }
    }

    let l = make_sl(2)?;
    let eps = epsilons(&l, &generators(&l)?)?;
    let samples = vec![vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(0)], vec![rat(0); 3]];
    for p in kostant_regularity_check(&l, &eps, &samples)?.points {
        println!("x = {:?}: regular {}, eps independent {}", p.point, p.regular, p.independent);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
