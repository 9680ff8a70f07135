//! Dimension, minimal resolution and primality of the commuting ideal of
//! sl2, and dimension plus radical samples for sl3.

use commvar::commuting::{dim_check, ig_generators, radical_prime_check_rank1, radical_spot_checks, resolution_check};
use commvar::groebner::cache::GbCache;
use commvar::groebner::Limits;
use commvar::liealg::make_sl;
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cache = GbCache::disabled();
    let limits = Limits::default();

    let sl2 = ig_generators(&make_sl(2)?)?;
    let d = dim_check(&sl2, &cache, &limits)?;
    println!("sl2: dim S/I = {:?} (expected {})", d.computed, d.expected);
    let res = resolution_check(&sl2, 6, &cache, &limits)?;
    println!("sl2: Betti {:?}, projdim I = {}, depth {}", res.betti, res.projdim_ideal, res.depth);
    let prime = radical_prime_check_rank1(&sl2, &limits)?;
    println!("sl2: I = (2x2 minors): {}", prime.ig_in_minors && prime.minors_in_ig);

    let sl3 = ig_generators(&make_sl(3)?)?;
    let d = dim_check(&sl3, &cache, &limits)?;
    println!("sl3: dim S/I = {:?} (expected {})", d.computed, d.expected);
    let spot = radical_spot_checks(&sl3, 10, 0, &cache, &limits)?;
    println!("sl3: {}/{} sampled elements of I lie in its radical", spot.passed, spot.samples);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
