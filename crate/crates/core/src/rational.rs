//! Exact rational scalars.
//!
//! [`Rat`] is `num_rational::BigRational`: always reduced, positive
//! denominator, zero stored as `0/1`. Text form is `p` for integers and `p/q`
//! otherwise, which is what both `Display` and [`parse_rat`] use.

use num_bigint::BigInt;
use num_traits::Zero;

pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q`. Returns `None` on a zero denominator or junk.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rat::new(num, den))
}

pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_canonical() {
        let r = ratio(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat_to_string(&r), "-3/2");
        assert_eq!(rat_to_string(&ratio(0, 7)), "0");
        assert_eq!(ratio(0, 7).denom(), &BigInt::from(1));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "5", "-5", "3/7", "-12/5"] {
            assert_eq!(rat_to_string(&parse_rat(s).unwrap()), s);
        }
        assert_eq!(parse_rat("4/6").unwrap(), ratio(2, 3));
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
    }
}
