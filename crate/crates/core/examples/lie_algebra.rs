//! Structure constants, brackets and the invariant form of sl2 and sl3.

use commvar::liealg::{make_sl, parse_json, to_json};
use commvar::rational::{rat, rat_to_string, Rat};
use std::error::Error;

fn show(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(rat_to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sl2 = make_sl(2)?;
    sl2.validate()?;
    println!("{sl2}");
    let (e, h, f) = (sl2.basis_vector(0), sl2.basis_vector(1), sl2.basis_vector(2));
    println!("[e, f] = {}", show(&sl2.bracket(&e, &f)?));
    println!("[h, e] = {}", show(&sl2.bracket(&h, &e)?));
    println!("<e, f> = {}, <h, h> = {}", sl2.form(&e, &f)?, sl2.form(&h, &h)?);
    println!("r = {}, b = {}, n = {}", sl2.rank(), sl2.b(), sl2.n_small());

    let x = vec![rat(1), rat(1), rat(0)];
    println!("e + h regular: {}", sl2.is_regular(&x)?);
    println!("e regular: {}", sl2.is_regular(&e)?);

    let sl3 = make_sl(3)?;
    sl3.validate()?;
    println!("sl3: N = {}, degrees {:?}", sl3.dim(), sl3.degrees());
    let back = parse_json(&to_json(&sl3))?;
    assert_eq!(back.constants(), sl3.constants());
    println!("sl3 survives a JSON round trip");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
