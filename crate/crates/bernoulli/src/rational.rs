//! Small helpers on top of `rug::Rational`/`rug::Integer`.
//!
//! `rug::Rational` already maintains the canonical-form invariant we need
//! (positive denominator, gcd(|num|, den) = 1 after every operation), and its
//! `Display` prints `num/den` with the denominator omitted when it is 1 —
//! exactly the serialization format used throughout.

use rug::ops::Pow;
use rug::{Integer, Rational};

/// `n!` as an exact integer.
pub fn factorial(n: u32) -> Integer {
    Integer::factorial(n).into()
}

/// Binomial coefficient `C(n, k)` as an exact integer; 0 when `k > n`.
pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::new();
    }
    Integer::from(n).binomial(k)
}

pub fn rat_i(n: i64) -> Rational {
    Rational::from(n)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::from((num, den))
}

/// `q^k` for possibly negative `k` (errors on 0^negative).
pub fn rat_pow(q: &Rational, k: i32) -> Rational {
    q.clone().pow(k)
}

pub fn is_integer(q: &Rational) -> bool {
    *q.denom() == 1
}

/// Parse "num/den" (or "num") into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    Rational::parse(s.trim()).ok().map(|v| Rational::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_row() {
        let row: Vec<_> = (0..=4).map(|k| binomial(4, k)).collect();
        assert_eq!(row, vec![1, 4, 6, 4, 1]);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn display_omits_unit_denominator() {
        assert_eq!(rat(5, 66).to_string(), "5/66");
        assert_eq!(rat(-7, 1).to_string(), "-7");
        assert_eq!(rat(4, 6).to_string(), "2/3");
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(parse_rational("-3/2"), Some(rat(-3, 2)));
        assert_eq!(parse_rational("17"), Some(rat_i(17)));
        assert_eq!(parse_rational("x"), None);
    }
}
