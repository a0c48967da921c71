//! Floating-point plumbing: explicit-precision constants, directed-rounding
//! conversions, decimal formatting, and the strict-inequality checker with
//! precision escalation.

use rug::float::{Constant, Round};
use rug::ops::{AssignRound, Pow};
use rug::{Float, Rational};

use crate::{Error, Result, MAX_PREC};

/// `pi` correctly rounded to nearest at `prec` bits.
pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

/// Directed-rounding enclosure of `pi`.
pub fn pi_pair(prec: u32) -> (Float, Float) {
    let mut lo = Float::new(prec);
    lo.assign_round(Constant::Pi, Round::Down);
    let mut hi = Float::new(prec);
    hi.assign_round(Constant::Pi, Round::Up);
    (lo, hi)
}

/// `ln 2` correctly rounded to nearest.
pub fn ln2(prec: u32) -> Float {
    Float::with_val(prec, Constant::Log2)
}

pub fn float_from_rat(prec: u32, q: &Rational) -> Float {
    Float::with_val(prec, q)
}

/// Exact conversion of a finite float to a rational.
pub fn rat_from_float(x: &Float) -> Rational {
    x.to_rational().expect("finite float")
}

/// One unit in the last place of `x` at its own precision (0 for zero `x`).
pub fn ulp(x: &Float) -> Float {
    let prec = x.prec();
    match x.get_exp() {
        Some(e) => Float::with_val(prec, Float::i_exp(1, e - prec as i32)),
        None => Float::new(prec),
    }
}

/// `|a - b| <= k` ulps of the larger operand.
pub fn within_ulps(a: &Float, b: &Float, k: u32) -> bool {
    if a == b {
        return true;
    }
    let diff = Float::with_val(a.prec().max(b.prec()), a - b).abs();
    let scale = if a.clone().abs() > b.clone().abs() { a } else { b };
    diff <= ulp(scale) * k
}

/// `2^e` at precision `prec`.
pub fn pow2(prec: u32, e: i32) -> Float {
    Float::with_val(prec, Float::i_exp(1, e))
}

/// Decimal string with `digits` significant digits (round to nearest).
pub fn dec(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let (sign, mantissa, exp) = x.to_sign_string_exp(10, Some(digits));
    // exp is the position of the decimal point relative to the mantissa start
    let exp = exp.unwrap_or(0);
    let s = if sign { "-" } else { "" };
    let m = mantissa.trim_end_matches('0');
    let m = if m.is_empty() { "0" } else { m };
    if exp <= 0 {
        format!("{s}0.{}{m}", "0".repeat((-exp) as usize))
    } else if (exp as usize) >= m.len() {
        format!("{s}{m}{}", "0".repeat(exp as usize - m.len()))
    } else {
        format!("{s}{}.{}", &m[..exp as usize], &m[exp as usize..])
    }
}

/// Decimal string with exactly `frac` digits after the point, rounded.
pub fn dec_fixed(x: &Float, frac: usize) -> String {
    let scale = rug::Integer::from(10).pow(frac as u32);
    let mut scaled = Float::with_val(x.prec(), x * Float::with_val(x.prec(), scale));
    scaled.round_mut();
    let int = scaled.to_integer().expect("finite float in dec_fixed");
    let neg = int < 0;
    let digits = int.clone().abs().to_string();
    let digits = if digits.len() <= frac {
        format!("{}{}", "0".repeat(frac + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (head, tail) = digits.split_at(digits.len() - frac);
    format!("{}{}.{}", if neg { "-" } else { "" }, head, tail)
}

/// Outcome of a strict-inequality verification.
#[derive(Debug, Clone)]
pub struct Margin {
    /// Smallest distance from the boundary, as an `f64` snapshot.
    pub value: f64,
    /// Precision at which the check concluded.
    pub prec: u32,
}

/// Verifies `lhs < rhs` where both sides are recomputed by `mk` at a given
/// precision. Requires a margin of at least `2^{-prec/2}`; otherwise doubles
/// the precision (up to [`MAX_PREC`]) before declaring failure.
pub fn strict_less<F>(what: &str, base_prec: u32, mk: F) -> Result<Margin>
where
    F: Fn(u32) -> (Float, Float),
{
    let mut prec = base_prec;
    loop {
        let (lhs, rhs) = mk(prec);
        let margin = Float::with_val(prec, &rhs - &lhs);
        let threshold = pow2(prec, -(prec as i32) / 2);
        if margin > threshold {
            return Ok(Margin {
                value: margin.to_f64(),
                prec,
            });
        }
        if prec >= MAX_PREC {
            return Err(Error::SandwichViolation {
                what: what.into(),
                detail: format!(
                    "margin {} at {} bits (needed > {})",
                    margin.to_f64(),
                    prec,
                    threshold.to_f64()
                ),
            });
        }
        prec = (prec * 2).min(MAX_PREC);
    }
}

/// Verifies `lo < x < hi` (all three recomputed per precision), requiring the
/// escalation margin on both sides. Returns the smaller of the two margins.
pub fn strict_inside<F>(what: &str, base_prec: u32, mk: F) -> Result<Margin>
where
    F: Fn(u32) -> (Float, Float, Float),
{
    let lower = strict_less(what, base_prec, |p| {
        let (lo, x, _) = mk(p);
        (lo, x)
    })?;
    let upper = strict_less(what, base_prec, |p| {
        let (_, x, hi) = mk(p);
        (x, hi)
    })?;
    Ok(Margin {
        value: lower.value.min(upper.value),
        prec: lower.prec.max(upper.prec),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn pi_is_consistent_with_sine() {
        let p = pi(256);
        let s = p.sin();
        assert!(s.clone().abs() < pow2(256, -250), "sin(pi) = {:e}", s.to_f64());
    }

    #[test]
    fn pi_enclosures_nest() {
        let (lo64, hi64) = pi_pair(64);
        let (lo128, hi128) = pi_pair(128);
        assert!(lo64 <= lo128 && hi128 <= hi64);
        assert!(lo128 < hi128);
        // directed rounding nests under precision reduction
        let (trunc, _) = Float::with_val_round(64, &lo128, Round::Down);
        assert_eq!(trunc, lo64);
    }

    #[test]
    fn decimal_formatting() {
        let x = float_from_rat(128, &rat(1, 4));
        assert_eq!(dec(&x, 10), "0.25");
        assert_eq!(dec_fixed(&x, 10), "0.2500000000");
        let y = float_from_rat(128, &rat(69, 120));
        assert_eq!(dec_fixed(&y, 10), "0.5750000000");
        let z = float_from_rat(128, &rat(-7, 12));
        assert_eq!(dec_fixed(&z, 4), "-0.5833");
        assert_eq!(dec(&float_from_rat(64, &rat(1234, 1)), 10), "1234");
    }

    #[test]
    fn ulp_measure() {
        let one = Float::with_val(64, 1);
        assert_eq!(ulp(&one), pow2(64, -63));
        let mut close = Float::with_val(64, 1);
        close += pow2(64, -60);
        assert!(within_ulps(&one, &close, 8));
        assert!(!within_ulps(&one, &close, 7));
    }

    #[test]
    fn strict_checks_escalate() {
        // 1 < 1 + 2^-200 cannot be seen at 64 bits but resolves at 256
        let ok = strict_less("tiny gap", 64, |p| {
            let one = Float::with_val(p, 1);
            let big = one.clone() + pow2(p, -200);
            (one, big)
        });
        assert!(ok.is_ok());
        assert!(ok.unwrap().prec >= 512);
        let bad = strict_less("equal sides", 64, |p| {
            (Float::with_val(p, 1), Float::with_val(p, 1))
        });
        assert!(bad.is_err());
    }
}
