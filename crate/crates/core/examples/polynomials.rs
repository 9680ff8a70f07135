//! Sparse polynomials over Q: parsing, arithmetic and argument-shift
//! expansion.

use commvar::poly::{shift_expand, MPoly, MonomialOrder, Ring};
use commvar::rational::ratio;
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = Ring::new(["a", "b", "c"], MonomialOrder::DegRevLex);
    let p = MPoly::parse(&r, "a^2 - 3*a*b + 1/2*c")?;
    let q = MPoly::parse(&r, "a + b")?;
    println!("p = {p}");
    println!("p * q = {}", p.try_mul(&q)?);
    println!("dp/da = {}", p.partial(0)?);
    println!("p(1, 2, 4) = {}", p.eval(&[ratio(1, 1), ratio(2, 1), ratio(4, 1)])?);
    println!("leading term under degrevlex: {:?}", p.leading_monomial().map(|m| m.exponents().to_vec()));

    let lex = r.with_order(MonomialOrder::Lex);
    println!("same poly under lex: {}", p.reorder(&lex));

    // p(x + t y) = sum_m p^(m)(x, y) t^m in the doubled ring.
    let xy = Ring::new(["x1", "x2", "y1", "y2"], MonomialOrder::DegRevLex);
    let det = MPoly::parse(&Ring::new(["x1", "x2"], MonomialOrder::DegRevLex), "x1^2 + x1*x2")?;
    for (m, part) in shift_expand(&det, &xy, 2)?.iter().enumerate() {
        println!("p^({m}) = {part}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
