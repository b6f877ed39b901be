//! Arbitrary-precision rationals in canonical form (coprime, positive
//! denominator). `num_rational::BigRational` already maintains exactly that
//! invariant, so we use it directly and add a few constructors.

use num_bigint::BigInt;
pub use num_rational::BigRational as Rat;
use num_traits::{One, Signed, Zero};

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Fraction `n/d` in canonical form. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Render without a `/1` suffix for integers.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `a` or `a/b`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// A crude size measure (digit count) used by pivot heuristics.
pub fn rat_size(r: &Rat) -> usize {
    r.numer().abs().to_string().len() + r.denom().to_string().len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = ratio(6, -4);
        assert_eq!(fmt_rat(&r), "-3/2");
        assert!(r.denom() > &BigInt::from(0));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["5", "-7/3", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(fmt_rat(&r), s);
        }
        assert!(parse_rat("1/0").is_none());
    }
}
