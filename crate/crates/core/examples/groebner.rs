//! Reduced Gröbner bases, ideal membership, Krull dimension, radical
//! membership and the on-disk basis cache.

use commvar::groebner::cache::GbCache;
use commvar::groebner::{buchberger, free_resolution, krull_dim, radical_member, Limits};
use commvar::poly::{MPoly, MonomialOrder, Ring};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = Ring::new(["x", "y", "z"], MonomialOrder::DegRevLex);
    let gens = vec![MPoly::parse(&r, "x*y - z^2")?, MPoly::parse(&r, "y^2 - x*z")?];
    let limits = Limits::default();
    let gb = buchberger(&gens, &limits)?;
    for g in gb.generators() {
        println!("gb: {g}");
    }
    println!("x^2*y - x*z^2 in I: {}", gb.ideal_member(&MPoly::parse(&r, "x^2*y - x*z^2")?)?);
    println!("Krull dimension of S/I: {:?}", krull_dim(&gb));

    let square = vec![MPoly::parse(&r, "x^2")?, MPoly::parse(&r, "y^3")?];
    println!("x in rad(x^2, y^3): {}", radical_member(&MPoly::var(&r, 0), &square, &limits)?);
    println!("z in rad(x^2, y^3): {}", radical_member(&MPoly::var(&r, 2), &square, &limits)?);

    let res = free_resolution(&gens, 4, &limits)?;
    println!("Betti numbers of S/I: {:?}", res.betti());

    let dir = tempfile::tempdir()?;
    let cache = GbCache::new(dir.path());
    let (_, hit) = cache.get_or_compute(&gens, &limits)?;
    let (again, hit2) = cache.get_or_compute(&gens, &limits)?;
    assert_eq!(again, gb);
    println!("cache: first lookup hit = {hit}, second = {hit2}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
